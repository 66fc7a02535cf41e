// tribuild: enumerate and classify triangle presentations over GQ(2,2).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tribuild/building.hpp"
#include "tribuild/geometry.hpp"
#include "tribuild/pipeline.hpp"

namespace {

using namespace tribuild;
namespace pl = tribuild::pipeline;

struct Options {
  std::string mode = "all";
  int workers = 1;
  std::string equivalence = "color";
  std::string out = "out";
  bool no_cache = false;
  bool symmetry_pruning = false;
  std::string format = "text";
  std::string input;
  std::string dataset;
  std::string id;
  std::string word;
};

pl::RunConfig make_config(const Options& o) {
  pl::RunConfig c;
  c.mode = parse_mode(o.mode);
  c.workers = o.workers;
  c.equivalence = parse_equivalence(o.equivalence);
  c.output_dir = o.out;
  c.cache = !o.no_cache;
  c.symmetry_pruning = o.symmetry_pruning;
  return c;
}

std::string stem_name(const std::string& path) {
  std::string s = std::filesystem::path(path).stem().string();
  const std::string prefix = "presentations-";
  if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
  return s.empty() ? "input" : s;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--equivalence", o.equivalence, "Equivalence group")->check(CLI::IsMember({"color", "dual"}));
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_flag("--no-cache", o.no_cache, "Do not read or write the results cache");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv", "text", "dot"}));
}

int run_enumerate(const Options& o) {
  const auto out = pl::cmd_enumerate(make_config(o));
  if (o.format == "json") {
    std::cout << out.summary;
  } else {
    std::cout << "raw labelings: " << out.raw_count << "\n"
              << "torsion-free classes: " << out.torsion_free_classes << "\n"
              << "torsion classes: " << out.torsion_classes << "\n"
              << "records: " << out.records_path.string() << "\n";
  }
  return pl::exit_code::kOk;
}

int run_classify(const Options& o) {
  const auto records = pl::read_records(o.input);
  const auto out = pl::cmd_classify(make_config(o), records, stem_name(o.input));
  std::cout << "dual-graph classes: " << out.classes.size() << "\n"
            << "records: " << out.records_path.string() << "\n";
  return pl::exit_code::kOk;
}

int run_buildings(const Options& o) {
  const auto records = pl::read_records(o.input);
  const auto out = pl::cmd_buildings(make_config(o), records, stem_name(o.input));
  std::cout << "building 1: " << out.class_one << "\n"
            << "building 2: " << out.class_two << "\n"
            << "records: " << out.records_path.string() << "\n";
  return pl::exit_code::kOk;
}

int run_verify_appendix(const Options& o) {
  auto config = make_config(o);
  const std::string text = o.dataset.empty() ? std::string(appendix_text()) : pl::read_file(o.dataset);
  std::vector<pl::PresentationRecord> enumerated;
  if (!o.input.empty()) enumerated = pl::read_records(o.input);
  const auto rep = pl::cmd_verify_appendix(config, text, std::move(enumerated));
  pl::write_file(config.output_dir / "verify-appendix.json", rep.to_json() + "\n");
  std::cout << (o.format == "json" ? rep.to_json() + "\n" : rep.to_text());
  return rep.ok() ? pl::exit_code::kOk : pl::exit_code::kAppendixMismatch;
}

std::optional<TrianglePresentation> lookup(const Options& o) {
  std::vector<pl::PresentationRecord> records;
  if (!o.input.empty()) records = pl::read_records(o.input);
  return pl::find_presentation(o.id, records);
}

int run_mgon(const Options& o) {
  const auto k = lookup(o);
  if (!k) {
    std::cerr << "unknown presentation id " << o.id << "\n";
    return pl::exit_code::kUsage;
  }
  try {
    const auto rep = pl::cmd_mgon(make_config(o), o.id, *k, o.word);
    std::cout << (o.format == "json" ? rep.to_json() + "\n" : rep.to_text());
    return pl::exit_code::kOk;
  } catch (const mgon::VerificationFailed& e) {
    std::cout << (o.format == "json" ? e.report.to_json() + "\n" : e.report.to_text());
    std::cerr << "verification failed: " << e.what() << "\n";
    return pl::exit_code::kVerificationFailed;
  }
}

int run_export_group(const Options& o) {
  const auto k = lookup(o);
  if (!k) {
    std::cerr << "unknown presentation id " << o.id << "\n";
    return pl::exit_code::kUsage;
  }
  std::cout << pl::cmd_export_group(o.id, *k, o.format == "dot" ? "text" : o.format);
  return pl::exit_code::kOk;
}

int run_export_gq(const Options& o) {
  const auto g = geometry::build_gq22();
  std::cout << (o.format == "dot" ? geometry::to_dot(g, "GQ22") : geometry::to_edge_list(g));
  return pl::exit_code::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and classify triangle presentations over GQ(2,2)"};
  app.require_subcommand(1);
  Options o;

  auto* en = app.add_subcommand("enumerate", "Enumerate presentations and reduce to equivalence classes");
  add_common(en, o);
  en->add_option("--mode", o.mode, "torsion-free, torsion or all")->check(CLI::IsMember({"torsion-free", "torsion", "all"}));
  en->add_flag("--symmetry-pruning", o.symmetry_pruning, "Restrict the search to one row choice per point-stabilizer orbit");

  auto* cl = app.add_subcommand("classify", "Partition presentations by dual-graph isomorphism");
  add_common(cl, o);
  cl->add_option("--input", o.input, "Presentation records (JSON lines)")->required();

  auto* bu = app.add_subcommand("buildings", "Assign building classes from radius-2 balls");
  add_common(bu, o);
  bu->add_option("--input", o.input, "Presentation records (JSON lines)")->required();

  auto* va = app.add_subcommand("verify-appendix", "Check the embedded table of torsion labelings");
  add_common(va, o);
  va->add_option("--dataset", o.dataset, "Dataset in table format (default: embedded)");
  va->add_option("--input", o.input, "Enumerated torsion records (default: enumerate now)");

  auto* mg = app.add_subcommand("mgon", "Build and check an m-gonal presentation");
  add_common(mg, o);
  mg->add_option("--id", o.id, "Presentation id (table id or record id)")->required();
  mg->add_option("--word", o.word, "Pattern word over a, b, c")->required();
  mg->add_option("--input", o.input, "Presentation records to resolve ids from");

  auto* eg = app.add_subcommand("export-group", "Print the group presentation");
  add_common(eg, o);
  eg->add_option("--id", o.id, "Presentation id (table id or record id)")->required();
  eg->add_option("--input", o.input, "Presentation records to resolve ids from");

  auto* gq = app.add_subcommand("export-gq", "Print GQ(2,2) as an edge list or DOT");
  add_common(gq, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : pl::exit_code::kUsage;
  }

  try {
    if (*en) return run_enumerate(o);
    if (*cl) return run_classify(o);
    if (*bu) return run_buildings(o);
    if (*va) return run_verify_appendix(o);
    if (*mg) return run_mgon(o);
    if (*eg) return run_export_group(o);
    if (*gq) return run_export_gq(o);
  } catch (const pl::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return pl::exit_code::kIo;
  } catch (const pl::InvalidRecord& e) {
    std::cerr << "invalid record: " << e.what() << "\n";
    return pl::exit_code::kInvalidRecord;
  } catch (const building::MoreThanTwoClasses& e) {
    std::cerr << e.what() << "\n";
    return pl::exit_code::kMoreThanTwoClasses;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return pl::exit_code::kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return pl::exit_code::kIo;
  }
  return pl::exit_code::kUsage;
}
