#pragma once

// Command implementations behind the tribuild CLI: JSON-lines records, the
// results cache and the enumerate / classify / buildings / verify-appendix /
// mgon / export-group steps.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tribuild/enumerate.hpp"
#include "tribuild/equivalence.hpp"
#include "tribuild/mgon.hpp"
#include "tribuild/presentations.hpp"

namespace tribuild::pipeline {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kIo = 2;
inline constexpr int kInvalidRecord = 3;
inline constexpr int kMoreThanTwoClasses = 4;
inline constexpr int kAppendixMismatch = 5;
inline constexpr int kVerificationFailed = 6;
}  // namespace exit_code

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidRecord : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Mode mode = Mode::All;
  int workers = 1;
  EquivalenceVariant equivalence = EquivalenceVariant::ColorPreserving;
  std::filesystem::path output_dir = "out";
  bool cache = true;
  bool symmetry_pruning = false;
};

// --------------------------------------------------------------- records --

struct PresentationRecord {
  std::string id;
  Labeling labeling;
  TrianglePresentation presentation;
  std::string appendix_id;  // empty when the class has no table entry
};

/// `{"id":..,"labels":[..],"triples":[[..],..],"diagonal":n,"torsion":b}`
/// with 1-based indices, plus "appendix_id" when set.
std::string to_json_line(const PresentationRecord& r);
/// Requires id and labels; triples, diagonal and torsion are checked
/// against the labeling when present.  Throws InvalidRecord.
PresentationRecord parse_record(std::string_view line);
/// Throws IoError or InvalidRecord (with the line number).
std::vector<PresentationRecord> read_records(const std::filesystem::path& path);

/// Writes via a temporary file and rename.  Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);
std::string read_file(const std::filesystem::path& path);

// ----------------------------------------------------------------- cache --

/// JSON documents under <dir>/<sha256 of the triple encoding>.json.
class ResultsCache {
 public:
  ResultsCache(std::filesystem::path dir, bool enabled);

  static std::string key(const TrianglePresentation& k);
  std::optional<nlohmann::json> get(const TrianglePresentation& k) const;
  /// Merges `fields` into the stored document.
  void put(const TrianglePresentation& k, const nlohmann::json& fields);
  bool enabled() const { return enabled_; }

 private:
  std::filesystem::path dir_;
  bool enabled_;
};

// -------------------------------------------------------------- commands --

struct EnumerateOutput {
  std::vector<PresentationRecord> records;  // one per class
  std::size_t raw_count = 0;
  std::size_t torsion_free_classes = 0;
  std::size_t torsion_classes = 0;
  std::size_t orbit_size_total = 0;
  EnumerationStats stats;
  std::filesystem::path records_path;
  std::filesystem::path summary_path;
  std::string summary;  // JSON
};

/// Writes presentations-<mode>.jsonl and enumerate-<mode>.json.
EnumerateOutput cmd_enumerate(const RunConfig& config);

struct DualClass {
  std::vector<std::string> members;  // record ids, input order
  std::string certificate_hex;
};

struct ClassifyOutput {
  std::vector<DualClass> classes;  // ordered by certificate bytes
  std::filesystem::path records_path;
  std::filesystem::path csv_path;
};

/// Dual graphs partitioned by isomorphism.  Writes classes-<name>.jsonl and
/// classes-<name>.csv.
ClassifyOutput cmd_classify(const RunConfig& config, const std::vector<PresentationRecord>& records,
                            const std::string& name);

struct BuildingsOutput {
  std::vector<int> building;            // per record
  std::vector<std::string> ball_digest;  // SHA-256 of the ball certificate
  std::size_t class_one = 0, class_two = 0;
  std::filesystem::path records_path;
  std::filesystem::path csv_path;
};

/// Writes buildings-<name>.jsonl and buildings-<name>.csv.  Throws
/// building::MoreThanTwoClasses.
BuildingsOutput cmd_buildings(const RunConfig& config, const std::vector<PresentationRecord>& records,
                              const std::string& name);

struct AppendixReport {
  std::size_t entries = 0;
  std::size_t valid_torsion = 0;
  std::size_t presentation_classes = 0;   // among the entries
  std::size_t dual_graph_classes = 0;     // among the entries
  std::size_t matched_enumerated = 0;     // entries in exactly one enumerated class
  std::size_t enumerated_dual_classes = 0;
  bool dual_bijection = false;            // entry dual classes = enumerated dual classes
  std::size_t tags_matching = 0;
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
  std::string to_text() const;
  std::string to_json() const;
};

/// Checks a dataset in the embedded table's format against the enumerated
/// torsion classes (computed when `enumerated` is empty).
AppendixReport cmd_verify_appendix(const RunConfig& config, std::string_view dataset,
                                   std::vector<PresentationRecord> enumerated = {});

/// Resolves a table id (T24) or a record id from `records`.
std::optional<TrianglePresentation> find_presentation(const std::string& id,
                                                      const std::vector<PresentationRecord>& records);

/// Writes mgon-<id>-<word>.json.  Throws mgon::VerificationFailed.
mgon::MgonReport cmd_mgon(const RunConfig& config, const std::string& id, const TrianglePresentation& k,
                         const std::string& word);

/// Group presentation text, or JSON with the abelianization.
std::string cmd_export_group(const std::string& id, const TrianglePresentation& k, const std::string& format);

}  // namespace tribuild::pipeline
