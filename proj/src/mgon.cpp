#include "tribuild/mgon.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tribuild/geometry.hpp"

namespace tribuild::mgon {

PatternWord PatternWord::parse(std::string_view letters) {
  std::string s(letters);
  for (char ch : s)
    if (ch < 'a' || ch > 'c') throw std::invalid_argument("pattern word uses letters other than a, b, c");
  if (s.size() < 3 || s.compare(0, 3, "abc") != 0) throw BadPrefix("pattern word must start with abc");
  for (std::size_t t = 0; t + 1 < s.size(); ++t)
    if (s[t] == s[t + 1]) throw ProperPower("pattern word repeats a letter at position " + std::to_string(t + 2));
  if (s.back() == 'a') throw ProperPower("pattern word ends with a");
  return PatternWord(std::move(s));
}

MTuplePresentation make_mgon(const TrianglePresentation& k, const PatternWord& w) {
  MTuplePresentation out;
  out.m = w.length();
  const auto expanded = polyhedra::expand_index3(k);
  for (auto t : expanded.triples()) {
    while (t[0].sup != 0) std::rotate(t.begin(), t.begin() + 1, t.end());
    polyhedra::SuperTuple tuple;
    for (int pos = 0; pos < out.m; ++pos) tuple.push_back({t[w.at(pos)].point, pos});
    out.tuples.push_back(polyhedra::min_rotation(std::move(tuple)));
  }
  std::sort(out.tuples.begin(), out.tuples.end());
  out.tuples.erase(std::unique(out.tuples.begin(), out.tuples.end()), out.tuples.end());
  return out;
}

std::string_view to_string(LinkType t) { return t == LinkType::G ? "G" : "G'"; }

int sign(int from, int to) {
  if (from == to) throw std::invalid_argument("sign of a repeated letter");
  return (to - from + 3) % 3 == 1 ? 1 : -1;
}

std::vector<LinkType> link_types(const PatternWord& w) {
  std::vector<LinkType> out;
  const int m = w.length();
  for (int t = 0; t < m; ++t) {
    const int next = t + 1 < m ? w.at(t + 1) : 0;
    out.push_back(sign(w.at(t), next) == 1 ? LinkType::G : LinkType::GPrime);
  }
  return out;
}

std::string MgonReport::to_json() const {
  nlohmann::ordered_json j;
  j["word"] = word;
  j["m"] = m;
  j["vertices"] = vertices;
  j["faces"] = faces;
  j["uniform_faces"] = uniform_faces;
  j["links"] = nlohmann::ordered_json::array();
  for (const auto& v : links)
    j["links"].push_back({{"vertex", v.vertex},
                          {"predicted", std::string(mgon::to_string(v.predicted))},
                          {"measured", v.measured},
                          {"quadrangle", v.quadrangle},
                          {"matches", v.matches}});
  j["ok"] = ok;
  return j.dump();
}

std::string MgonReport::to_text() const {
  std::ostringstream os;
  os << "word " << word << ": " << vertices << " vertices, " << faces << " faces of length " << m
     << (uniform_faces ? "" : " (non-uniform)") << '\n';
  for (const auto& v : links)
    os << "  vertex " << v.vertex << ": predicted " << mgon::to_string(v.predicted) << ", measured " << v.measured
       << (v.quadrangle ? "" : " (not a generalized quadrangle)") << (v.matches ? "" : "  MISMATCH") << '\n';
  os << (ok ? "OK" : "FAILED") << '\n';
  return os.str();
}

MgonReport verify_mgon(const TrianglePresentation& k, const PatternWord& w) {
  const auto lab = induced_labeling(k);
  if (!lab) throw std::invalid_argument("not a valid triangle presentation");
  const auto y = lab->line_masks();
  const int m = w.length();
  const auto mp = make_mgon(k, w);
  const auto x = polyhedra::build_polyhedron(mp.tuples, m);

  MgonReport r;
  r.word = w.letters();
  r.m = m;
  r.vertices = x.vertex_count();
  r.faces = x.face_count();
  r.uniform_faces = std::all_of(x.faces().begin(), x.faces().end(),
                                [&](const auto& f) { return static_cast<int>(f.size()) == m; });

  auto fail = [&](const std::string& why) {
    r.ok = false;
    throw VerificationFailed(why, r);
  };
  if (r.faces != 45 || !r.uniform_faces) fail("expected 45 faces of length " + std::to_string(m));
  if (r.vertices != m) fail("expected " + std::to_string(m) + " vertices, found " + std::to_string(r.vertices));

  std::set<std::pair<int, int>> g_flags, gp_flags;  // (outgoing point q, incoming point p)
  for (int p = 0; p < kPoints; ++p)
    for (int q = 0; q < kPoints; ++q) {
      if (y[p] >> q & 1u) g_flags.insert({q, p});
      if (y[q] >> p & 1u) gp_flags.insert({q, p});
    }

  const auto predicted = link_types(w);
  for (int t = 0; t < m; ++t) {
    VertexReport v;
    v.vertex = t + 1;
    v.predicted = predicted[t];
    // The vertex after position t is where letters of superscript t + 1 end.
    int vertex = -1;
    for (int p = 0; p < kPoints && vertex < 0; ++p) {
      const int l = polyhedra::super_letter_id({p, t}, m);
      if (x.thickness(l) > 0) vertex = x.end(l);
    }
    if (vertex < 0) fail("no letter at position " + std::to_string(t + 1));
    const auto link = polyhedra::vertex_link(x, vertex);
    v.quadrangle = geometry::is_generalized_m_gon(link.graph, 4);
    std::set<std::pair<int, int>> flags;
    bool shaped = true;
    for (auto [pi, li] : link.graph.flags()) {
      const int q_letter = link.point_letter[pi], p_letter = link.line_letter[li];
      if (q_letter % m != (t + 1) % m || p_letter % m != t) shaped = false;
      flags.insert({q_letter / m, p_letter / m});
    }
    if (shaped && flags.size() == link.graph.flags().size() && flags == g_flags)
      v.measured = "G";
    else if (shaped && flags.size() == link.graph.flags().size() && flags == gp_flags)
      v.measured = "G'";
    else
      v.measured = "other";
    v.matches = v.quadrangle && v.measured == mgon::to_string(v.predicted);
    r.links.push_back(v);
    if (!v.matches) fail("link at vertex " + std::to_string(t + 1) + " is " + v.measured + ", predicted " +
                         std::string(mgon::to_string(v.predicted)));
  }
  r.ok = true;
  return r;
}

}  // namespace tribuild::mgon
