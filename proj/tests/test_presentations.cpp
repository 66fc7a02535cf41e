#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tribuild/geometry.hpp"
#include "tribuild/presentations.hpp"

using namespace tribuild;

namespace {

std::vector<std::array<int, 3>> entries(const TrianglePresentation& k) {
  std::vector<std::array<int, 3>> out;
  for (const auto& t : k.triples()) out.push_back(t.entries());
  return out;
}

// Every slot (a, b) with b on y_a is covered exactly once.
bool covers_slots_once(const TrianglePresentation& k, const Labeling& lab) {
  const auto y = lab.line_masks();
  std::map<std::pair<int, int>, int> hits;
  for (const auto& t : k.triples()) {
    std::set<std::pair<int, int>> s{{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}};
    for (auto slot : s) ++hits[slot];
  }
  int slots = 0;
  for (int a = 0; a < kPoints; ++a)
    for (int b = 0; b < kPoints; ++b)
      if (y[a] >> b & 1u) {
        ++slots;
        if (hits[{a, b}] != 1) return false;
      }
  return slots == kSlots && static_cast<int>(hits.size()) == kSlots;
}

}  // namespace

TEST_CASE("identity labeling has no cover") {
  CHECK(std::holds_alternative<NoCover>(triples_from_labeling(Labeling::identity())));
  CHECK(oracle::exact_covers(Labeling::identity().row_label).empty());
}

TEST_CASE("derivation agrees with the exact-cover oracle on random labelings") {
  std::mt19937 rng(11);
  int seen_cover = 0;
  std::vector<Labeling> labs;
  for (int i = 0; i < 300; ++i) {
    Labeling lab = Labeling::identity();
    std::shuffle(lab.row_label.begin(), lab.row_label.end(), rng);
    labs.push_back(lab);
  }
  for (const auto& e : appendix_entries()) labs.push_back(e.labeling);
  for (const auto& lab : labs) {
    const auto d = triples_from_labeling(lab);
    const auto ref = oracle::exact_covers(lab.row_label, 3);
    if (ref.empty()) {
      CHECK(std::holds_alternative<NoCover>(d));
    } else if (ref.size() == 1) {
      REQUIRE(std::holds_alternative<TrianglePresentation>(d));
      CHECK(entries(std::get<TrianglePresentation>(d)) == ref[0]);
      ++seen_cover;
    } else {
      CHECK(std::holds_alternative<MultipleCovers>(d));
    }
  }
  CHECK(seen_cover >= 168);
}

TEST_CASE("table entries are valid torsion presentations") {
  const auto& all = appendix_entries();
  REQUIRE(all.size() == 168);
  CHECK(all.front().id == "T24");
  CHECK(all.back().id == "T191");
  std::set<std::string> ids;
  for (const auto& e : all) {
    ids.insert(e.id);
    CHECK((e.building == 1 || e.building == 2));
    const auto d = triples_from_labeling(e.labeling);
    REQUIRE(std::holds_alternative<TrianglePresentation>(d));
    const auto& k = std::get<TrianglePresentation>(d);
    CHECK(validate(k));
    CHECK(has_torsion(k));
    CHECK(covers_slots_once(k, e.labeling));
    CHECK((k.diagonal_count() == 3 || k.diagonal_count() == 6));
    CHECK(k.size() == 15 + 2 * k.diagonal_count() / 3);
    const auto back = induced_labeling(k);
    REQUIRE(back.has_value());
    CHECK(*back == e.labeling);
  }
  CHECK(ids.size() == 168);
}

TEST_CASE("validation rejects broken presentations") {
  const auto& k = fixtures::t24();
  auto ts = k.triples();
  ts.pop_back();
  CHECK_FALSE(validate(TrianglePresentation(ts)));
  ts = k.triples();
  ts.push_back(Triple(0, 0, 0));
  ts.push_back(Triple(0, 0, 0));
  CHECK(validate(TrianglePresentation(ts)));  // repeats are merged
  ts.push_back(Triple(2, 2, 2));
  CHECK_FALSE(validate(TrianglePresentation(ts)));
  CHECK_FALSE(validate(TrianglePresentation{}));
  CHECK_FALSE(induced_labeling(TrianglePresentation{}).has_value());
}

TEST_CASE("triples are stored as minimal rotations") {
  const Triple t(5, 1, 3);
  CHECK(t.entries() == std::array<int, 3>{1, 3, 5});
  CHECK(Triple(3, 5, 1) == t);
  CHECK(Triple(1, 5, 3) != t);
  CHECK(Triple(4, 4, 4).diagonal());
}

TEST_CASE("slot candidates follow their definition") {
  const auto lab = appendix_entries()[5].labeling;
  const auto y = lab.line_masks();
  for (int a = 0; a < kPoints; ++a)
    for (int b = 0; b < kPoints; ++b) {
      if (!(y[a] >> b & 1u)) continue;
      std::vector<int> expect;
      for (int c = 0; c < kPoints; ++c)
        if ((y[b] >> c & 1u) && (y[c] >> a & 1u)) expect.push_back(c);
      CHECK(slot_candidates(lab, a, b) == expect);
    }
}

TEST_CASE("labeling text round trip and parse errors") {
  for (const auto& e : appendix_entries()) {
    CHECK(parse_appendix_entry(emit_appendix_entry(e)).labeling == e.labeling);
    CHECK(parse_appendix_labeling(emit_labeling(e.labeling)) == e.labeling);
  }
  CHECK(parse_appendix(appendix_text()).size() == 168);
  CHECK_THROWS_AS(parse_appendix_labeling("y_1, y_2"), ParseError);
  CHECK_THROWS_AS(parse_appendix_labeling("y_1, y_1, y_3, y_4, y_5, y_6, y_7, y_8, y_9, y_10, y_11, y_12, y_13, y_14, y_15"),
                  ParseError);
  CHECK_THROWS_AS(parse_appendix_labeling("y_0, y_2, y_3, y_4, y_5, y_6, y_7, y_8, y_9, y_10, y_11, y_12, y_13, y_14, y_15"),
                  ParseError);
  CHECK_THROWS_AS(parse_appendix_labeling("x_1, y_2, y_3, y_4, y_5, y_6, y_7, y_8, y_9, y_10, y_11, y_12, y_13, y_14, y_15"),
                  ParseError);
  CHECK_THROWS_AS(parse_appendix_entry("24 (1) y_1"), ParseError);
  CHECK_THROWS_AS(parse_appendix_entry("T24 (1 y_1"), ParseError);
}

TEST_CASE("JSON triples are 1-based") {
  const TrianglePresentation k({Triple(0, 0, 0), Triple(0, 9, 1)});
  CHECK(triples_json(k) == "[[1,1,1],[1,10,2]]");
}
