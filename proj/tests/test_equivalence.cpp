#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "tribuild/equivalence.hpp"
#include "tribuild/geometry.hpp"

using namespace tribuild;

namespace {

std::vector<TrianglePresentation> pruned(bool torsion) {
  std::vector<TrianglePresentation> out;
  for (const auto& p : fixtures::pruned_all().presentations)
    if (has_torsion(p.presentation) == torsion) out.push_back(p.presentation);
  return out;
}

}  // namespace

TEST_CASE("group sizes") {
  CHECK(equivalence_group(EquivalenceVariant::ColorPreserving).size() == 720);
  CHECK(equivalence_group(EquivalenceVariant::WithDualities).size() == 1440);
  CHECK(parse_equivalence("color") == EquivalenceVariant::ColorPreserving);
  CHECK(parse_equivalence("dual") == EquivalenceVariant::WithDualities);
  CHECK(to_string(EquivalenceVariant::WithDualities) == "dual");
  CHECK_THROWS_AS(parse_equivalence("both"), std::invalid_argument);
}

TEST_CASE("collineations move the lines with the letters") {
  const auto& k = fixtures::t24();
  const auto lab = *induced_labeling(k);
  const auto y = lab.line_masks();
  for (const auto& phi : equivalence_group(EquivalenceVariant::ColorPreserving)) {
    const auto image = act(phi, k, EquivalenceVariant::ColorPreserving);
    const auto y2 = induced_labeling(image)->line_masks();
    for (int a = 0; a < kPoints; ++a) {
      unsigned moved = 0;
      for (int p = 0; p < kPoints; ++p)
        if (y[a] >> p & 1u) moved |= 1u << phi.point_map[p];
      CHECK(y2[phi.point_map[a]] == moved);
    }
  }
}

TEST_CASE("dualities act on presentations only in the dual variant") {
  const auto& k = fixtures::t24();
  const auto& all = equivalence_group(EquivalenceVariant::WithDualities);
  const auto it = std::find_if(all.begin(), all.end(), [](const auto& g) { return g.swaps_colors; });
  REQUIRE(it != all.end());
  CHECK_THROWS_AS(act(*it, k, EquivalenceVariant::ColorPreserving), ActionIncompatible);
  for (const auto& g : all)
    if (g.swaps_colors) {
      const auto image = act(g, k, EquivalenceVariant::WithDualities);
      CHECK(validate(image));
      CHECK(image.diagonal_count() == k.diagonal_count());
    }
}

TEST_CASE("canonical representatives are orbit invariants") {
  std::mt19937 rng(3);
  const auto& k = fixtures::t24();
  for (auto v : {EquivalenceVariant::ColorPreserving, EquivalenceVariant::WithDualities}) {
    const auto rep = canonical_rep(k, v);
    const auto& group = equivalence_group(v);
    for (int i = 0; i < 10; ++i) CHECK(canonical_rep(act(group[rng() % group.size()], k, v), v) == rep);
  }
}

TEST_CASE("class counts from the pruned search") {
  const auto tf = pruned(false);
  const auto tt = pruned(true);
  const auto a = reduce_to_classes(tf, EquivalenceVariant::ColorPreserving);
  const auto b = reduce_to_classes(tt, EquivalenceVariant::ColorPreserving);
  CHECK(a.representatives.size() == fixtures::kColorTorsionFreeClasses);
  CHECK(b.representatives.size() == fixtures::kColorTorsionClasses);
  const auto total = [](const ClassReduction& r) {
    return std::accumulate(r.orbit_sizes.begin(), r.orbit_sizes.end(), std::size_t{0});
  };
  CHECK(total(a) == fixtures::kByDiagonal[0]);
  CHECK(total(b) == fixtures::kByDiagonal[1] + fixtures::kByDiagonal[2]);
  for (std::size_t i = 0; i < tf.size(); ++i) CHECK(a.class_of[a.representatives[a.class_of[i]]] == a.class_of[i]);

  CHECK(reduce_to_classes(tf, EquivalenceVariant::WithDualities).representatives.size() ==
        fixtures::kDualTorsionFreeClasses);
  CHECK(reduce_to_classes(tt, EquivalenceVariant::WithDualities).representatives.size() ==
        fixtures::kDualTorsionClasses);
}

TEST_CASE("classes agree with canonical representatives") {
  const auto tf = pruned(false);
  const auto r = reduce_to_classes(tf, EquivalenceVariant::ColorPreserving);
  std::map<TrianglePresentation, std::size_t> by_rep;
  for (std::size_t i = 0; i < tf.size(); i += 17) {
    const auto rep = canonical_rep(tf[i], EquivalenceVariant::ColorPreserving);
    const auto [it, fresh] = by_rep.emplace(rep, r.class_of[i]);
    CHECK(it->second == r.class_of[i]);
  }
}
