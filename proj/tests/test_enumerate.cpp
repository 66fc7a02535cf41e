#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tribuild/enumerate.hpp"

using namespace tribuild;

namespace {

bool has_prefix(const Labeling& lab, const std::vector<int>& prefix) {
  return std::equal(prefix.begin(), prefix.end(), lab.row_label.begin());
}

}  // namespace

TEST_CASE("pruned enumeration counts") {
  const auto& e = fixtures::pruned_all();
  std::uint64_t tf = 0, torsion = 0;
  for (const auto& p : e.presentations) (has_torsion(p.presentation) ? torsion : tf)++;
  CHECK(tf == fixtures::kPrunedTorsionFree);
  CHECK(torsion == fixtures::kPrunedTorsion);
  CHECK(e.stats.multiple_cover_labelings == fixtures::kMultipleCovers);
  CHECK(e.stats.by_diagonal[0] == tf);
  CHECK(e.stats.by_diagonal[3] + e.stats.by_diagonal[6] == torsion);
  CHECK(e.stats.covers == e.presentations.size());
  CHECK(std::is_sorted(e.presentations.begin(), e.presentations.end(),
                       [](const auto& a, const auto& b) { return a.labeling < b.labeling; }));
}

TEST_CASE("every enumerated labeling carries its unique presentation") {
  for (const auto& p : fixtures::pruned_all().presentations) {
    CHECK(p.labeling.is_permutation());
    CHECK((p.labeling.row_label[0] == 0 || p.labeling.row_label[3] == 0));
    CHECK(validate(p.presentation));
    const auto lab = induced_labeling(p.presentation);
    REQUIRE(lab.has_value());
    CHECK(*lab == p.labeling);
    const int d = p.presentation.diagonal_count();
    CHECK((d == 0 || d == 3 || d == 6));
  }
}

TEST_CASE("slot-driven search agrees with the row-order reference on sampled prefixes") {
  const auto& e = fixtures::pruned_all();
  std::mt19937 rng(424242);
  std::vector<std::vector<int>> prefixes;
  std::vector<std::size_t> rows0;
  for (std::size_t i = 0; i < e.presentations.size(); ++i)
    if (e.presentations[i].labeling.row_label[0] == 0) rows0.push_back(i);
  REQUIRE(!rows0.empty());
  for (int i = 0; i < 6; ++i) {
    const auto& lab = e.presentations[rows0[rng() % rows0.size()]].labeling;
    prefixes.emplace_back(lab.row_label.begin(), lab.row_label.begin() + 5 + i % 2);
  }
  for (int i = 0; i < 4; ++i) {
    std::vector<int> rest{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14};
    std::shuffle(rest.begin(), rest.end(), rng);
    std::vector<int> prefix{0};
    prefix.insert(prefix.end(), rest.begin(), rest.begin() + 5);
    prefixes.push_back(prefix);
  }
  for (const auto& prefix : prefixes) {
    const auto ref = oracle::row_order_enumerate(prefix);
    std::vector<const EnumeratedPresentation*> mine;
    for (const auto& p : e.presentations)
      if (has_prefix(p.labeling, prefix)) mine.push_back(&p);
    REQUIRE(mine.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(mine[i]->labeling.row_label == ref[i].row_label);
      std::vector<std::array<int, 3>> ts;
      for (const auto& t : mine[i]->presentation.triples()) ts.push_back(t.entries());
      CHECK(ts == ref[i].triples);
    }
  }
}

TEST_CASE("output does not depend on the worker count") {
  const auto one = enumerate({Mode::TorsionFree, 1, true});
  const auto three = enumerate({Mode::TorsionFree, 3, true});
  REQUIRE(one.presentations.size() == three.presentations.size());
  CHECK(one.presentations.size() == fixtures::kPrunedTorsionFree);
  for (std::size_t i = 0; i < one.presentations.size(); ++i) {
    CHECK(one.presentations[i].labeling == three.presentations[i].labeling);
    CHECK(one.presentations[i].presentation == three.presentations[i].presentation);
  }
  CHECK(one.stats.nodes == three.stats.nodes);
}

TEST_CASE("mode names") {
  CHECK(parse_mode("torsion-free") == Mode::TorsionFree);
  CHECK(parse_mode("torsion") == Mode::Torsion);
  CHECK(parse_mode("all") == Mode::All);
  CHECK(to_string(Mode::Torsion) == "torsion");
  CHECK_THROWS_AS(parse_mode("some"), std::invalid_argument);
  CHECK(matches(Mode::Torsion, fixtures::t24()));
  CHECK_FALSE(matches(Mode::TorsionFree, fixtures::t24()));
  CHECK(matches(Mode::All, fixtures::t24()));
}
