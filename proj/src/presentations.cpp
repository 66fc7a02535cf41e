#include "tribuild/presentations.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <sstream>

#include "tribuild/geometry.hpp"

namespace tribuild {

Labeling Labeling::identity() {
  Labeling l;
  for (int r = 0; r < kPoints; ++r) l.row_label[r] = r;
  return l;
}

bool Labeling::is_permutation() const {
  unsigned seen = 0;
  for (int x : row_label) {
    if (x < 0 || x >= kPoints || (seen >> x & 1u)) return false;
    seen |= 1u << x;
  }
  return true;
}

std::array<int, kPoints> Labeling::label_row() const {
  std::array<int, kPoints> out{};
  for (int r = 0; r < kPoints; ++r) out[row_label[r]] = r;
  return out;
}

std::array<unsigned, kPoints> Labeling::line_masks() const {
  const auto& rows = geometry::gq22_lines();
  std::array<unsigned, kPoints> out{};
  for (int r = 0; r < kPoints; ++r)
    for (int p : rows[r]) out[row_label[r]] |= 1u << p;
  return out;
}

Triple::Triple(int a, int b, int c) {
  std::array<int, 3> r0{a, b, c}, r1{b, c, a}, r2{c, a, b};
  v_ = std::min({r0, r1, r2});
}

TrianglePresentation::TrianglePresentation(std::vector<Triple> triples) : triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
}

int TrianglePresentation::diagonal_count() const {
  return static_cast<int>(std::count_if(triples_.begin(), triples_.end(),
                                        [](const Triple& t) { return t.diagonal(); }));
}

// ------------------------------------------------------------ derivation --

std::vector<int> slot_candidates(const Labeling& lab, int a, int b) {
  const auto y = lab.line_masks();
  std::vector<int> out;
  if (!(y[a] >> b & 1u)) return out;
  for (int c = 0; c < kPoints; ++c)
    if ((y[b] >> c & 1u) && (y[c] >> a & 1u)) out.push_back(c);
  return out;
}

namespace {

// Slot (a, b) of a labeling, numbered 0..44 by label then point.
struct SlotIndex {
  std::array<std::array<int, kPoints>, kPoints> id;
  explicit SlotIndex(const std::array<unsigned, kPoints>& y) {
    int k = 0;
    for (int a = 0; a < kPoints; ++a)
      for (int b = 0; b < kPoints; ++b) id[a][b] = (y[a] >> b & 1u) ? k++ : -1;
  }
};

std::uint64_t slot_mask(const SlotIndex& s, const Triple& t) {
  const int a = t[0], b = t[1], c = t[2];
  return (1ULL << s.id[a][b]) | (1ULL << s.id[b][c]) | (1ULL << s.id[c][a]);
}

void cover_search(const std::vector<Triple>& cand, const std::vector<std::uint64_t>& masks,
                  const std::vector<std::vector<int>>& by_slot, std::uint64_t covered,
                  std::vector<Triple>& chosen, std::vector<TrianglePresentation>& out) {
  constexpr std::uint64_t kAll = (1ULL << kSlots) - 1;
  if (covered == kAll) {
    out.emplace_back(chosen);
    return;
  }
  const int slot = std::countr_one(covered);
  for (int i : by_slot[slot]) {
    if (masks[i] & covered) continue;
    chosen.push_back(cand[i]);
    cover_search(cand, masks, by_slot, covered | masks[i], chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

Derivation triples_from_labeling(const Labeling& lab) {
  if (!lab.is_permutation()) throw std::invalid_argument("labeling is not a permutation");
  const auto y = lab.line_masks();
  const SlotIndex slots(y);

  std::vector<Triple> cand;
  for (int a = 0; a < kPoints; ++a)
    for (int b = 0; b < kPoints; ++b)
      if (y[a] >> b & 1u)
        for (int c : slot_candidates(lab, a, b)) cand.emplace_back(a, b, c);
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::vector<std::uint64_t> masks;
  std::vector<std::vector<int>> by_slot(kSlots);
  for (std::size_t i = 0; i < cand.size(); ++i) {
    masks.push_back(slot_mask(slots, cand[i]));
    for (std::uint64_t m = masks.back(); m; m &= m - 1) by_slot[std::countr_zero(m)].push_back(static_cast<int>(i));
  }

  std::vector<Triple> chosen;
  std::vector<TrianglePresentation> covers;
  cover_search(cand, masks, by_slot, 0, chosen, covers);
  if (covers.empty()) return NoCover{};
  if (covers.size() > 1) {
    std::sort(covers.begin(), covers.end());
    return MultipleCovers{std::move(covers)};
  }
  return std::move(covers.front());
}

// ------------------------------------------------------------ validation --

namespace {

// Slot multiplicities: count[a][b] is the number of triples covering (a, b).
std::optional<std::array<std::array<int, kPoints>, kPoints>> slot_counts(const TrianglePresentation& k) {
  std::array<std::array<int, kPoints>, kPoints> count{};
  for (const auto& t : k.triples()) {
    for (int i = 0; i < 3; ++i)
      if (t[i] < 0 || t[i] >= kPoints) return std::nullopt;
    if (t.diagonal()) {
      ++count[t[0]][t[0]];
      continue;
    }
    std::array<std::pair<int, int>, 3> s{{{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}}};
    std::sort(s.begin(), s.end());
    if (s[0] == s[1] || s[1] == s[2]) return std::nullopt;  // a triple covering one slot twice
    for (auto [a, b] : s) ++count[a][b];
  }
  return count;
}

}  // namespace

std::optional<Labeling> induced_labeling(const TrianglePresentation& k) {
  const auto count = slot_counts(k);
  if (!count) return std::nullopt;
  const auto& rows = geometry::gq22_lines();
  Labeling lab;
  lab.row_label.fill(-1);
  for (int a = 0; a < kPoints; ++a) {
    std::array<int, 3> pts{};
    int n = 0;
    for (int b = 0; b < kPoints; ++b) {
      if ((*count)[a][b] > 1) return std::nullopt;
      if ((*count)[a][b] == 1) {
        if (n == 3) return std::nullopt;
        pts[n++] = b;
      }
    }
    if (n != 3) return std::nullopt;
    auto it = std::find(rows.begin(), rows.end(), pts);
    if (it == rows.end()) return std::nullopt;
    const int r = static_cast<int>(it - rows.begin());
    if (lab.row_label[r] != -1) return std::nullopt;
    lab.row_label[r] = a;
  }
  return lab;
}

bool validate(const TrianglePresentation& k) { return induced_labeling(k).has_value(); }

bool has_torsion(const TrianglePresentation& k) { return k.diagonal_count() > 0; }

// ------------------------------------------------------------- text forms --

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.empty() || s.size() > 6) throw ParseError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  int v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("bad " + std::string(what) + ": '" + std::string(s) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace

Labeling parse_appendix_labeling(std::string_view line) {
  line = trim(line);
  Labeling lab;
  int n = 0;
  while (!line.empty()) {
    const auto comma = line.find(',');
    std::string_view item = trim(line.substr(0, comma));
    line = comma == std::string_view::npos ? std::string_view{} : line.substr(comma + 1);
    if (item.size() < 3 || item[0] != 'y' || item[1] != '_') throw ParseError("expected y_<n>, got '" + std::string(item) + "'");
    const int label = parse_int(item.substr(2), "label");
    if (n == kPoints) throw ParseError("more than 15 labels");
    if (label < 1 || label > kPoints) throw ParseError("label out of range: " + std::to_string(label));
    lab.row_label[n++] = label - 1;
  }
  if (n != kPoints) throw ParseError("expected 15 labels, got " + std::to_string(n));
  if (!lab.is_permutation()) throw ParseError("labels are not a permutation of 1..15");
  return lab;
}

std::string emit_labeling(const Labeling& lab) {
  std::string s;
  for (int r = 0; r < kPoints; ++r) {
    if (r) s += ", ";
    s += "y_" + std::to_string(lab.row_label[r] + 1);
  }
  return s;
}

AppendixEntry parse_appendix_entry(std::string_view line) {
  line = trim(line);
  AppendixEntry e;
  const auto space = line.find(' ');
  if (space == std::string_view::npos || line.empty() || line[0] != 'T') throw ParseError("expected T<n> id");
  e.id = std::string(line.substr(0, space));
  parse_int(std::string_view(e.id).substr(1), "id");
  line = trim(line.substr(space));
  if (line.empty() || line[0] != '(') throw ParseError("expected (tag) after id");
  const auto close = line.find(')');
  if (close == std::string_view::npos) throw ParseError("unterminated tag");
  e.building = parse_int(line.substr(1, close - 1), "tag");
  e.labeling = parse_appendix_labeling(line.substr(close + 1));
  return e;
}

std::string emit_appendix_entry(const AppendixEntry& e) {
  return e.id + " (" + std::to_string(e.building) + ") " + emit_labeling(e.labeling);
}

std::vector<AppendixEntry> parse_appendix(std::string_view text) {
  std::vector<AppendixEntry> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (trim(line).empty()) continue;
    try {
      out.push_back(parse_appendix_entry(line));
    } catch (const ParseError& err) {
      throw ParseError("line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  return out;
}

const std::vector<AppendixEntry>& appendix_entries() {
  static const auto entries = parse_appendix(appendix_text());
  return entries;
}

std::string triples_json(const TrianglePresentation& k) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < k.triples().size(); ++i) {
    const auto& t = k.triples()[i];
    os << (i ? "," : "") << '[' << t[0] + 1 << ',' << t[1] + 1 << ',' << t[2] + 1 << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace tribuild
