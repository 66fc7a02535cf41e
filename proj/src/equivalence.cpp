#include "tribuild/equivalence.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace tribuild {

std::string_view to_string(EquivalenceVariant v) {
  return v == EquivalenceVariant::ColorPreserving ? "color" : "dual";
}

EquivalenceVariant parse_equivalence(std::string_view s) {
  if (s == "color") return EquivalenceVariant::ColorPreserving;
  if (s == "dual") return EquivalenceVariant::WithDualities;
  throw std::invalid_argument("unknown equivalence variant '" + std::string(s) + "'");
}

const std::vector<geometry::GraphAutomorphism>& equivalence_group(EquivalenceVariant v) {
  static const auto color = geometry::automorphism_group(geometry::build_gq22(), false);
  static const auto dual = geometry::automorphism_group(geometry::build_gq22(), true);
  return v == EquivalenceVariant::ColorPreserving ? color : dual;
}

TrianglePresentation act(const geometry::GraphAutomorphism& phi, const TrianglePresentation& k,
                         EquivalenceVariant v) {
  std::vector<Triple> out;
  out.reserve(k.triples().size());
  if (!phi.swaps_colors) {
    if (phi.point_map.size() != kPoints) throw ActionIncompatible("automorphism is not on 15 points");
    const auto& s = phi.point_map;
    for (const auto& t : k.triples()) out.emplace_back(s[t[0]], s[t[1]], s[t[2]]);
  } else {
    if (v == EquivalenceVariant::ColorPreserving)
      throw ActionIncompatible("a duality does not act on presentations in the color-preserving variant");
    const auto lab = induced_labeling(k);
    if (!lab) throw ActionIncompatible("presentation does not determine its lines");
    const auto rows = lab->label_row();
    std::array<int, kPoints> pi{};
    for (int x = 0; x < kPoints; ++x) pi[x] = phi.line_map[rows[x]];
    for (const auto& t : k.triples()) out.emplace_back(pi[t[2]], pi[t[1]], pi[t[0]]);
  }
  TrianglePresentation image(std::move(out));
  if (!validate(image)) throw ActionIncompatible("image is not a triangle presentation");
  return image;
}

TrianglePresentation canonical_rep(const TrianglePresentation& k, EquivalenceVariant v) {
  const auto& group = equivalence_group(v);
  TrianglePresentation best = k;
  for (const auto& g : group) {
    auto image = act(g, k, v);
    if (image < best) best = std::move(image);
  }
  return best;
}

namespace {

std::string encode(const TrianglePresentation& k) {
  std::string s;
  s.reserve(k.triples().size() * 3);
  for (const auto& t : k.triples())
    for (int i = 0; i < 3; ++i) s.push_back(static_cast<char>(t[i]));
  return s;
}

}  // namespace

ClassReduction reduce_to_classes(const std::vector<TrianglePresentation>& ks, EquivalenceVariant v) {
  const auto& group = equivalence_group(v);
  ClassReduction out;
  out.class_of.resize(ks.size());
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    auto it = seen.find(encode(ks[i]));
    if (it != seen.end()) {
      out.class_of[i] = it->second;
      continue;
    }
    const std::size_t cls = out.representatives.size();
    out.representatives.push_back(i);
    std::size_t orbit = 0;
    for (const auto& g : group)
      if (seen.emplace(encode(act(g, ks[i], v)), cls).second) ++orbit;
    out.orbit_sizes.push_back(orbit);
    out.class_of[i] = cls;
  }
  return out;
}

}  // namespace tribuild
