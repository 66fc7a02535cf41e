#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "fixtures.hpp"
#include "tribuild/pipeline.hpp"

using namespace tribuild;
namespace pl = tribuild::pipeline;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("tribuild-test-" + name + "-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  return dir;
}

pl::RunConfig config(const fs::path& out, int workers = 1) {
  pl::RunConfig c;
  c.mode = Mode::TorsionFree;
  c.workers = workers;
  c.output_dir = out;
  c.cache = false;
  c.symmetry_pruning = true;
  return c;
}

pl::PresentationRecord t24_record() {
  pl::PresentationRecord r;
  r.id = "X1";
  r.presentation = fixtures::t24();
  r.labeling = *induced_labeling(r.presentation);
  r.appendix_id = "T24";
  return r;
}

}  // namespace

TEST_CASE("record JSON round trip and validation") {
  const auto r = t24_record();
  const auto line = pl::to_json_line(r);
  const auto back = pl::parse_record(line);
  CHECK(back.id == r.id);
  CHECK(back.labeling == r.labeling);
  CHECK(back.presentation == r.presentation);
  CHECK(back.appendix_id == "T24");

  auto j = nlohmann::json::parse(line);
  CHECK(j["diagonal"] == r.presentation.diagonal_count());
  CHECK(j["torsion"] == true);
  j["diagonal"] = 6;
  CHECK_THROWS_AS(pl::parse_record(j.dump()), pl::InvalidRecord);
  j = nlohmann::json::parse(line);
  j["triples"][0][0] = 2;
  CHECK_THROWS_AS(pl::parse_record(j.dump()), pl::InvalidRecord);
  j = nlohmann::json::parse(line);
  j["labels"][0] = j["labels"][1];
  CHECK_THROWS_AS(pl::parse_record(j.dump()), pl::InvalidRecord);
  j = nlohmann::json::parse(line);
  j["labels"] = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  j.erase("triples");
  CHECK_THROWS_AS(pl::parse_record(j.dump()), pl::InvalidRecord);  // no cover
  CHECK_THROWS_AS(pl::parse_record("{"), pl::InvalidRecord);
  CHECK_THROWS_AS(pl::parse_record("[1]"), pl::InvalidRecord);
}

TEST_CASE("file helpers") {
  const auto dir = scratch_dir("files");
  pl::write_file(dir / "a" / "b.txt", "hello\n");
  CHECK(pl::read_file(dir / "a" / "b.txt") == "hello\n");
  CHECK_THROWS_AS(pl::read_file(dir / "missing"), pl::IoError);
  CHECK_THROWS_AS(pl::read_records(dir / "missing.jsonl"), pl::IoError);
  pl::write_file(dir / "bad.jsonl", pl::to_json_line(t24_record()) + "\nnot json\n");
  try {
    pl::read_records(dir / "bad.jsonl");
    FAIL("expected InvalidRecord");
  } catch (const pl::InvalidRecord& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("results cache") {
  const auto dir = scratch_dir("cache");
  pl::ResultsCache cache(dir, true);
  const auto& k = fixtures::t24();
  CHECK_FALSE(cache.get(k).has_value());
  cache.put(k, {{"a", 1}});
  cache.put(k, {{"b", 2}});
  const auto doc = cache.get(k);
  REQUIRE(doc.has_value());
  CHECK((*doc)["a"] == 1);
  CHECK((*doc)["b"] == 2);
  CHECK(pl::ResultsCache::key(k).size() == 64);
  pl::ResultsCache off(dir, false);
  CHECK_FALSE(off.get(k).has_value());
  fs::remove_all(dir);
}

TEST_CASE("enumerate, classify and buildings on the torsion-free part") {
  const auto a = scratch_dir("tf1");
  const auto b = scratch_dir("tf3");
  const auto ea = pl::cmd_enumerate(config(a, 1));
  const auto eb = pl::cmd_enumerate(config(b, 3));
  CHECK(ea.records.size() == fixtures::kColorTorsionFreeClasses);
  CHECK(ea.torsion_free_classes == fixtures::kColorTorsionFreeClasses);
  CHECK(ea.torsion_classes == 0);
  CHECK(ea.orbit_size_total == fixtures::kByDiagonal[0]);
  CHECK(pl::read_file(ea.records_path) == pl::read_file(eb.records_path));
  CHECK(pl::read_file(ea.summary_path) == pl::read_file(eb.summary_path));
  const auto summary = nlohmann::json::parse(ea.summary);
  CHECK(summary["mode"] == "torsion-free");
  for (const auto& r : ea.records) {
    CHECK(r.id.rfind("TF", 0) == 0);
    CHECK(r.appendix_id.empty());
  }

  const auto ca = pl::cmd_classify(config(a, 1), ea.records, "torsion-free");
  const auto cb = pl::cmd_classify(config(b, 3), eb.records, "torsion-free");
  CHECK(ca.classes.size() == fixtures::kDualTorsionFreeClasses);
  CHECK(pl::read_file(ca.records_path) == pl::read_file(cb.records_path));
  CHECK(pl::read_file(ca.csv_path) == pl::read_file(cb.csv_path));

  const auto ba = pl::cmd_buildings(config(a, 1), ea.records, "torsion-free");
  const auto bb = pl::cmd_buildings(config(b, 3), eb.records, "torsion-free");
  CHECK(ba.class_one + ba.class_two == ea.records.size());
  CHECK(ba.class_one > 0);
  CHECK(ba.class_two > 0);
  CHECK(pl::read_file(ba.records_path) == pl::read_file(bb.records_path));
  // one building per dual-graph class
  std::map<std::string, int> of_id;
  for (std::size_t i = 0; i < ea.records.size(); ++i) of_id[ea.records[i].id] = ba.building[i];
  for (const auto& c : ca.classes)
    for (const auto& m : c.members) CHECK(of_id[m] == of_id[c.members[0]]);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("buildings reuse cached ball digests") {
  const auto dir = scratch_dir("ballcache");
  auto c = config(dir);
  c.cache = true;
  std::vector<pl::PresentationRecord> recs{t24_record()};
  const auto first = pl::cmd_buildings(c, recs, "one");
  const auto second = pl::cmd_buildings(c, recs, "one");
  CHECK(first.ball_digest == second.ball_digest);
  CHECK(first.building[0] == 1);
  fs::remove_all(dir);
}

TEST_CASE("lookups, m-gon and group export") {
  const auto dir = scratch_dir("misc");
  const auto k = pl::find_presentation("T24", {});
  REQUIRE(k.has_value());
  CHECK(*k == fixtures::t24());
  CHECK_FALSE(pl::find_presentation("T999", {}).has_value());
  CHECK(pl::find_presentation("X1", {t24_record()}).has_value());

  const auto rep = pl::cmd_mgon(config(dir), "T24", *k, "abcb");
  CHECK(rep.ok);
  CHECK(fs::exists(dir / "mgon-T24-abcb.json"));
  CHECK_THROWS_AS(pl::cmd_mgon(config(dir), "T24", *k, "acb"), mgon::BadPrefix);

  CHECK(pl::cmd_export_group("T24", *k, "text").rfind("<x1,", 0) == 0);
  const auto j = nlohmann::json::parse(pl::cmd_export_group("T24", *k, "json"));
  CHECK(j["abelianization"]["group"] == "Z/12");
  CHECK(pl::cmd_export_group("T24", *k, "csv").find("T24,15,17,Z/12") != std::string::npos);
  CHECK_THROWS_AS(pl::cmd_export_group("T24", *k, "xml"), std::invalid_argument);
  fs::remove_all(dir);
}

TEST_CASE("appendix verification reports damaged datasets") {
  const auto dir = scratch_dir("appendix");
  auto c = config(dir);
  c.mode = Mode::Torsion;
  const auto& e = appendix_entries();
  std::vector<pl::PresentationRecord> enumerated;
  const auto d0 = std::get<TrianglePresentation>(triples_from_labeling(e[0].labeling));
  enumerated.push_back({"E1", e[0].labeling, d0, "T24"});

  // a dataset repeating the first entry under a second name
  auto copy = e[0];
  copy.id = "T999";
  const std::string text = emit_appendix_entry(e[0]) + "\n" + emit_appendix_entry(copy) + "\n";
  const auto rep = pl::cmd_verify_appendix(c, text, enumerated);
  CHECK(rep.entries == 2);
  CHECK(rep.valid_torsion == 2);
  CHECK(rep.presentation_classes == 1);
  CHECK(rep.dual_graph_classes == 1);
  CHECK_FALSE(rep.dual_bijection);
  CHECK_FALSE(rep.ok());

  const auto bad = pl::cmd_verify_appendix(c, "T24 (1) y_1, y_2\n", enumerated);
  CHECK_FALSE(bad.ok());
  CHECK(bad.entries == 0);

  const auto single = pl::cmd_verify_appendix(c, emit_appendix_entry(e[0]) + "\n", enumerated);
  CHECK(single.matched_enumerated == 1);
  CHECK(single.dual_bijection);
  CHECK(single.tags_matching == 1);
  CHECK(single.ok());
  fs::remove_all(dir);
}
