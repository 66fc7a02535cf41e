#include "tribuild/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "tribuild/building.hpp"
#include "tribuild/canon.hpp"
#include "tribuild/polyhedra.hpp"

namespace tribuild::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

template <class F>
void parallel_for(std::size_t n, int workers, F&& body) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) body(i);
  };
  if (std::max(1, workers) == 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(work);
}

ordered_json labels_json(const Labeling& lab) {
  ordered_json a = ordered_json::array();
  for (int x : lab.row_label) a.push_back(x + 1);
  return a;
}

ordered_json triples_to_json(const TrianglePresentation& k) {
  ordered_json a = ordered_json::array();
  for (const auto& t : k.triples()) a.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
  return a;
}

}  // namespace

// --------------------------------------------------------------- records --

std::string to_json_line(const PresentationRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["labels"] = labels_json(r.labeling);
  j["triples"] = triples_to_json(r.presentation);
  j["diagonal"] = r.presentation.diagonal_count();
  j["torsion"] = has_torsion(r.presentation);
  if (!r.appendix_id.empty()) j["appendix_id"] = r.appendix_id;
  return j.dump();
}

PresentationRecord parse_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw InvalidRecord(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidRecord("record is not an object");
  PresentationRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    const auto labels = j.at("labels").get<std::vector<int>>();
    if (labels.size() != kPoints) throw InvalidRecord("labels must have 15 entries");
    for (int i = 0; i < kPoints; ++i) r.labeling.row_label[i] = labels[i] - 1;
    if (j.contains("appendix_id")) r.appendix_id = j.at("appendix_id").get<std::string>();
  } catch (const json::exception& e) {
    throw InvalidRecord(std::string("bad field: ") + e.what());
  }
  if (!r.labeling.is_permutation()) throw InvalidRecord(r.id + ": labels are not a permutation of 1..15");
  auto d = triples_from_labeling(r.labeling);
  if (!std::holds_alternative<TrianglePresentation>(d))
    throw InvalidRecord(r.id + ": labeling has no unique triangle presentation");
  r.presentation = std::get<TrianglePresentation>(std::move(d));
  try {
    if (j.contains("triples")) {
      std::vector<Triple> ts;
      for (const auto& t : j.at("triples")) {
        const auto v = t.get<std::vector<int>>();
        if (v.size() != 3) throw InvalidRecord(r.id + ": triple of wrong length");
        ts.emplace_back(v[0] - 1, v[1] - 1, v[2] - 1);
      }
      if (TrianglePresentation(std::move(ts)) != r.presentation)
        throw InvalidRecord(r.id + ": triples do not match the labeling");
    }
    if (j.contains("diagonal") && j.at("diagonal").get<int>() != r.presentation.diagonal_count())
      throw InvalidRecord(r.id + ": diagonal count does not match");
    if (j.contains("torsion") && j.at("torsion").get<bool>() != has_torsion(r.presentation))
      throw InvalidRecord(r.id + ": torsion flag does not match");
  } catch (const json::exception& e) {
    throw InvalidRecord(std::string("bad field: ") + e.what());
  }
  return r;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

std::vector<PresentationRecord> read_records(const fs::path& path) {
  const std::string text = read_file(path);
  std::vector<PresentationRecord> out;
  std::istringstream in(text);
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_record(line));
    } catch (const InvalidRecord& e) {
      throw InvalidRecord(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out << content;
    out.close();
    if (!out) throw IoError("error writing " + tmp.string());
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename onto " + path.string());
  }
}

// ----------------------------------------------------------------- cache --

ResultsCache::ResultsCache(fs::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}

std::string ResultsCache::key(const TrianglePresentation& k) {
  const std::string enc = triples_json(k);
  return canon::Certificate(std::vector<std::uint8_t>(enc.begin(), enc.end())).digest();
}

std::optional<json> ResultsCache::get(const TrianglePresentation& k) const {
  if (!enabled_) return std::nullopt;
  const fs::path p = dir_ / (key(k) + ".json");
  std::error_code ec;
  if (!fs::exists(p, ec)) return std::nullopt;
  try {
    json j = json::parse(read_file(p));
    if (j.value("triples", std::string{}) != triples_json(k)) return std::nullopt;
    return j;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed and overwritten
  }
}

void ResultsCache::put(const TrianglePresentation& k, const json& fields) {
  if (!enabled_) return;
  json doc = get(k).value_or(json::object());
  doc["triples"] = triples_json(k);
  for (auto it = fields.begin(); it != fields.end(); ++it) doc[it.key()] = it.value();
  write_file(dir_ / (key(k) + ".json"), doc.dump());
}

// -------------------------------------------------------------- enumerate --

namespace {

struct Classes {
  std::vector<PresentationRecord> records;
  Enumeration enumeration;
  ClassReduction reduction;
};

Classes enumerate_classes(const RunConfig& config, Mode mode) {
  Classes c;
  c.enumeration = enumerate({mode, config.workers, config.symmetry_pruning});
  std::vector<TrianglePresentation> ks;
  ks.reserve(c.enumeration.presentations.size());
  for (const auto& e : c.enumeration.presentations) ks.push_back(e.presentation);
  c.reduction = reduce_to_classes(ks, config.equivalence);

  std::map<TrianglePresentation, std::size_t> class_by_rep;
  std::vector<std::size_t> canon_needed;
  int tf = 0, tt = 0;
  for (std::size_t cls = 0; cls < c.reduction.representatives.size(); ++cls) {
    const auto& e = c.enumeration.presentations[c.reduction.representatives[cls]];
    PresentationRecord r;
    r.id = has_torsion(e.presentation) ? "TT" + std::to_string(++tt) : "TF" + std::to_string(++tf);
    r.labeling = e.labeling;
    r.presentation = e.presentation;
    if (has_torsion(e.presentation)) class_by_rep[canonical_rep(e.presentation, config.equivalence)] = cls;
    c.records.push_back(std::move(r));
  }
  if (!class_by_rep.empty())
    for (const auto& entry : appendix_entries()) {
      const auto d = triples_from_labeling(entry.labeling);
      if (!std::holds_alternative<TrianglePresentation>(d)) continue;
      auto it = class_by_rep.find(canonical_rep(std::get<TrianglePresentation>(d), config.equivalence));
      if (it != class_by_rep.end() && c.records[it->second].appendix_id.empty())
        c.records[it->second].appendix_id = entry.id;
    }
  return c;
}

}  // namespace

EnumerateOutput cmd_enumerate(const RunConfig& config) {
  auto c = enumerate_classes(config, config.mode);
  EnumerateOutput out;
  out.raw_count = c.enumeration.presentations.size();
  out.stats = c.enumeration.stats;
  for (const auto& r : c.records) (has_torsion(r.presentation) ? out.torsion_classes : out.torsion_free_classes)++;
  for (auto s : c.reduction.orbit_sizes) out.orbit_size_total += s;

  std::string lines;
  for (const auto& r : c.records) lines += to_json_line(r) + "\n";
  const std::string mode(to_string(config.mode));
  out.records_path = config.output_dir / ("presentations-" + mode + ".jsonl");
  write_file(out.records_path, lines);

  ordered_json s;
  s["mode"] = mode;
  s["equivalence"] = std::string(to_string(config.equivalence));
  s["symmetry_pruning"] = config.symmetry_pruning;
  s["raw_labelings"] = out.raw_count;
  s["raw_by_diagonal"] = {{"0", out.stats.by_diagonal[0]}, {"3", out.stats.by_diagonal[3]}, {"6", out.stats.by_diagonal[6]}};
  s["multiple_cover_labelings"] = out.stats.multiple_cover_labelings;
  s["search_nodes"] = out.stats.nodes;
  s["classes"] = {{"torsion_free", out.torsion_free_classes}, {"torsion", out.torsion_classes}};
  s["orbit_size_total"] = out.orbit_size_total;
  out.summary = s.dump(2) + "\n";
  out.summary_path = config.output_dir / ("enumerate-" + mode + ".json");
  write_file(out.summary_path, out.summary);
  out.records = std::move(c.records);
  return out;
}

// --------------------------------------------------------------- classify --

namespace {

std::vector<canon::Certificate> dual_certificates(const RunConfig& config,
                                                  const std::vector<TrianglePresentation>& ks) {
  ResultsCache cache(config.output_dir / "cache", config.cache);
  std::vector<canon::Certificate> certs(ks.size());
  std::vector<char> fresh(ks.size(), 0);
  parallel_for(ks.size(), config.workers, [&](std::size_t i) {
    if (auto hit = cache.get(ks[i]); hit && hit->contains("dual_certificate")) {
      certs[i] = canon::Certificate::from_hex(hit->at("dual_certificate").get<std::string>());
      return;
    }
    const auto g = polyhedra::dual_graph(polyhedra::expand_index3(ks[i]));
    certs[i] = canon::canonical_form(g.to_colored_graph());
    fresh[i] = 1;
  });
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (fresh[i]) cache.put(ks[i], {{"dual_certificate", certs[i].hex()}});
  return certs;
}

std::vector<std::string> ball_digests(const RunConfig& config, const std::vector<TrianglePresentation>& ks) {
  ResultsCache cache(config.output_dir / "cache", config.cache);
  std::vector<std::string> digests(ks.size());
  std::vector<char> fresh(ks.size(), 0);
  parallel_for(ks.size(), config.workers, [&](std::size_t i) {
    if (auto hit = cache.get(ks[i]); hit && hit->contains("ball_certificate")) {
      digests[i] = hit->at("ball_certificate").get<std::string>();
      return;
    }
    digests[i] = building::building_invariant(building::develop_two_ball(ks[i])).digest();
    fresh[i] = 1;
  });
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (fresh[i]) cache.put(ks[i], {{"ball_certificate", digests[i]}});
  return digests;
}

std::vector<int> name_buildings(const std::vector<std::string>& digests) {
  const std::string one = building::class_one_invariant().digest();
  std::vector<int> out(digests.size());
  std::set<std::string> others;
  std::vector<std::size_t> surplus;
  for (std::size_t i = 0; i < digests.size(); ++i) {
    if (digests[i] == one) {
      out[i] = 1;
      continue;
    }
    out[i] = 2;
    if (others.insert(digests[i]).second && others.size() > 1) surplus.push_back(i);
  }
  if (!surplus.empty())
    throw building::MoreThanTwoClasses("building invariant takes more than two values; surplus value first at input " +
                                           std::to_string(surplus.front()),
                                       surplus);
  return out;
}

std::vector<TrianglePresentation> presentations_of(const std::vector<PresentationRecord>& records) {
  std::vector<TrianglePresentation> ks;
  ks.reserve(records.size());
  for (const auto& r : records) ks.push_back(r.presentation);
  return ks;
}

}  // namespace

ClassifyOutput cmd_classify(const RunConfig& config, const std::vector<PresentationRecord>& records,
                            const std::string& name) {
  const auto certs = dual_certificates(config, presentations_of(records));
  std::map<canon::Certificate, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) groups[certs[i]].push_back(i);

  ClassifyOutput out;
  std::string jsonl, csv = "id,class\n";
  std::vector<int> class_of(records.size());
  int k = 0;
  for (const auto& [cert, members] : groups) {
    ++k;
    DualClass dc;
    dc.certificate_hex = cert.hex();
    for (auto i : members) {
      dc.members.push_back(records[i].id);
      class_of[i] = k;
    }
    ordered_json j;
    j["class"] = k;
    j["size"] = dc.members.size();
    j["representative"] = dc.members.front();
    j["members"] = dc.members;
    j["certificate"] = dc.certificate_hex;
    jsonl += j.dump() + "\n";
    out.classes.push_back(std::move(dc));
  }
  for (std::size_t i = 0; i < records.size(); ++i) csv += records[i].id + "," + std::to_string(class_of[i]) + "\n";
  out.records_path = config.output_dir / ("classes-" + name + ".jsonl");
  out.csv_path = config.output_dir / ("classes-" + name + ".csv");
  write_file(out.records_path, jsonl);
  write_file(out.csv_path, csv);
  return out;
}

// -------------------------------------------------------------- buildings --

BuildingsOutput cmd_buildings(const RunConfig& config, const std::vector<PresentationRecord>& records,
                              const std::string& name) {
  const auto ks = presentations_of(records);
  BuildingsOutput out;
  out.ball_digest = ball_digests(config, ks);
  out.building = name_buildings(out.ball_digest);

  ResultsCache cache(config.output_dir / "cache", config.cache);
  std::string jsonl, csv = "id,building\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    (out.building[i] == 1 ? out.class_one : out.class_two)++;
    ordered_json j;
    j["id"] = records[i].id;
    j["building"] = out.building[i];
    j["ball_certificate"] = out.ball_digest[i];
    jsonl += j.dump() + "\n";
    csv += records[i].id + "," + std::to_string(out.building[i]) + "\n";
    cache.put(ks[i], {{"building", out.building[i]}});
  }
  out.records_path = config.output_dir / ("buildings-" + name + ".jsonl");
  out.csv_path = config.output_dir / ("buildings-" + name + ".csv");
  write_file(out.records_path, jsonl);
  write_file(out.csv_path, csv);
  return out;
}

// ------------------------------------------------------- verify-appendix --

std::string AppendixReport::to_text() const {
  std::ostringstream os;
  os << "entries: " << entries << '\n'
     << "valid torsion presentations: " << valid_torsion << '\n'
     << "presentation classes among entries: " << presentation_classes << '\n'
     << "dual-graph classes among entries: " << dual_graph_classes << '\n'
     << "entries matching one enumerated class: " << matched_enumerated << '\n'
     << "enumerated torsion dual-graph classes: " << enumerated_dual_classes << '\n'
     << "dual-graph classes correspond one-to-one: " << (dual_bijection ? "yes" : "no") << '\n'
     << "building tags matching: " << tags_matching << '\n';
  for (const auto& p : problems) os << "MISMATCH " << p << '\n';
  os << (ok() ? "OK" : "FAILED") << '\n';
  return os.str();
}

std::string AppendixReport::to_json() const {
  ordered_json j;
  j["entries"] = entries;
  j["valid_torsion"] = valid_torsion;
  j["presentation_classes"] = presentation_classes;
  j["dual_graph_classes"] = dual_graph_classes;
  j["matched_enumerated"] = matched_enumerated;
  j["enumerated_dual_classes"] = enumerated_dual_classes;
  j["dual_bijection"] = dual_bijection;
  j["tags_matching"] = tags_matching;
  j["problems"] = problems;
  j["ok"] = ok();
  return j.dump();
}

AppendixReport cmd_verify_appendix(const RunConfig& config, std::string_view dataset,
                                   std::vector<PresentationRecord> enumerated) {
  AppendixReport rep;
  std::vector<AppendixEntry> entries;
  try {
    entries = parse_appendix(dataset);
  } catch (const ParseError& e) {
    rep.problems.push_back(std::string("parse error: ") + e.what());
    return rep;
  }
  rep.entries = entries.size();

  std::vector<TrianglePresentation> ks;
  std::vector<std::size_t> entry_of;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto d = triples_from_labeling(entries[i].labeling);
    if (!std::holds_alternative<TrianglePresentation>(d)) {
      rep.problems.push_back(entries[i].id + ": labeling has no unique triangle presentation");
      continue;
    }
    const auto& k = std::get<TrianglePresentation>(d);
    if (!validate(k) || !has_torsion(k)) {
      rep.problems.push_back(entries[i].id + ": not a valid torsion presentation");
      continue;
    }
    ks.push_back(k);
    entry_of.push_back(i);
  }
  rep.valid_torsion = ks.size();

  // Pairwise inequivalent.
  const auto red = reduce_to_classes(ks, config.equivalence);
  rep.presentation_classes = red.representatives.size();
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (red.representatives[red.class_of[i]] != i)
      rep.problems.push_back(entries[entry_of[i]].id + ": equivalent to " +
                             entries[entry_of[red.representatives[red.class_of[i]]]].id);

  // Pairwise non-isomorphic dual graphs.
  const auto certs = dual_certificates(config, ks);
  std::map<canon::Certificate, std::size_t> first_with;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    auto [it, inserted] = first_with.emplace(certs[i], i);
    if (!inserted)
      rep.problems.push_back(entries[entry_of[i]].id + ": dual graph isomorphic to that of " +
                             entries[entry_of[it->second]].id);
  }
  rep.dual_graph_classes = first_with.size();

  // Against the enumerated torsion classes.
  if (enumerated.empty()) enumerated = enumerate_classes(config, Mode::Torsion).records;
  std::erase_if(enumerated, [](const auto& r) { return !has_torsion(r.presentation); });
  std::map<TrianglePresentation, std::size_t> enumerated_class;
  for (std::size_t c = 0; c < enumerated.size(); ++c)
    enumerated_class.emplace(canonical_rep(enumerated[c].presentation, config.equivalence), c);
  if (enumerated_class.size() != enumerated.size())
    rep.problems.push_back("enumerated records contain equivalent presentations");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (enumerated_class.count(canonical_rep(ks[i], config.equivalence)))
      ++rep.matched_enumerated;
    else
      rep.problems.push_back(entries[entry_of[i]].id + ": not in any enumerated class");
  }
  const auto enumerated_certs = dual_certificates(config, presentations_of(enumerated));
  std::set<canon::Certificate> enum_dual(enumerated_certs.begin(), enumerated_certs.end());
  std::set<canon::Certificate> entry_dual(certs.begin(), certs.end());
  rep.enumerated_dual_classes = enum_dual.size();
  rep.dual_bijection = enum_dual == entry_dual && entry_dual.size() == ks.size();
  if (!rep.dual_bijection)
    rep.problems.push_back("entries' dual graphs (" + std::to_string(entry_dual.size()) +
                           " classes) do not correspond one-to-one to the enumerated dual-graph classes (" +
                           std::to_string(enum_dual.size()) + ")");

  // Building tags.
  const auto buildings = name_buildings(ball_digests(config, ks));
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const auto& e = entries[entry_of[i]];
    if (buildings[i] == e.building)
      ++rep.tags_matching;
    else
      rep.problems.push_back(e.id + ": building " + std::to_string(buildings[i]) + ", tagged " +
                             std::to_string(e.building));
  }
  return rep;
}

// ------------------------------------------------------------ mgon, group --

std::optional<TrianglePresentation> find_presentation(const std::string& id,
                                                      const std::vector<PresentationRecord>& records) {
  for (const auto& r : records)
    if (r.id == id) return r.presentation;
  for (const auto& e : appendix_entries())
    if (e.id == id) {
      auto d = triples_from_labeling(e.labeling);
      if (std::holds_alternative<TrianglePresentation>(d)) return std::get<TrianglePresentation>(std::move(d));
    }
  return std::nullopt;
}

mgon::MgonReport cmd_mgon(const RunConfig& config, const std::string& id, const TrianglePresentation& k,
                         const std::string& word) {
  const auto w = mgon::PatternWord::parse(word);
  const fs::path path = config.output_dir / ("mgon-" + id + "-" + word + ".json");
  try {
    auto report = mgon::verify_mgon(k, w);
    write_file(path, report.to_json() + "\n");
    return report;
  } catch (const mgon::VerificationFailed& e) {
    write_file(path, e.report.to_json() + "\n");
    throw;
  }
}

std::string cmd_export_group(const std::string& id, const TrianglePresentation& k, const std::string& format) {
  const auto g = polyhedra::group_presentation(k);
  if (format == "text") return g.to_text() + "\n";
  const auto ab = polyhedra::abelianization(g);
  ordered_json j;
  j["id"] = id;
  j["generators"] = g.generator_count;
  j["relators"] = g.relators.size();
  j["presentation"] = g.to_text();
  std::vector<std::string> divisors;
  for (const auto& d : ab.divisors) divisors.push_back(d.str());
  j["abelianization"] = {{"divisors", divisors}, {"free_rank", ab.free_rank}, {"group", ab.to_string()}};
  if (format == "json") return j.dump() + "\n";
  if (format == "csv") return "id,generators,relators,abelianization\n" + id + "," + std::to_string(g.generator_count) +
                              "," + std::to_string(g.relators.size()) + "," + ab.to_string() + "\n";
  throw std::invalid_argument("unknown format '" + format + "'");
}

}  // namespace tribuild::pipeline
