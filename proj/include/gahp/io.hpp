#ifndef GAHP_IO_HPP
#define GAHP_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gahp/errors.hpp"
#include "gahp/montecarlo.hpp"

namespace gahp {

// File formats used by the command-line tool.
//
// Panel file (JSON):
//   { "n": 4, "experts": [ { "id": "e1", "matrix": [[1, 2, ...], ...] }, ... ] }
// Full matrices are accepted when every pair satisfies |c_ij c_ji - 1| <= 1e-2
// (printed data is usually rounded) and are then rebuilt from their upper
// triangle so computation runs on exactly reciprocal matrices.

/// Malformed input: bad JSON, a missing field, a value of the wrong type.
struct ParseError : Error {
    using Error::Error;
};

/// A file could not be read or written.
struct IoError : Error {
    using Error::Error;
};

inline constexpr double kFileReciprocityTolerance = 1e-2;

struct PanelFile {
    std::vector<std::string> ids;
    ExpertPanel panel;
};

PanelFile parse_panel(std::string_view json_text,
                      double reciprocity_tol = kFileReciprocityTolerance);
PanelFile read_panel(const std::filesystem::path& path,
                     double reciprocity_tol = kFileReciprocityTolerance);

std::string format_panel(const ExpertPanel& panel, std::span<const std::string> ids);
void write_panel(const std::filesystem::path& path, const ExpertPanel& panel,
                 std::span<const std::string> ids);

/// Everything a batch run needs. Every key of the config file is optional.
struct RunConfig {
    CorpusConfig corpus{};
    ExperimentConfig experiment{};
    SummaryConfig summary{};
    int workers = 0;  // 0 leaves the OpenMP default
};

RunConfig parse_config(std::string_view json_text);
RunConfig read_config(const std::filesystem::path& path);

Method parse_method(std::string_view name);

/// Six significant digits, "all" for the whole-corpus bucket.
std::string format_number(double x);

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);
void write_records_csv(std::ostream& out, std::span<const Experiment1Record> records);
void write_records_csv(std::ostream& out, std::span<const Experiment2Record> records);

/// One JSON object per line: id, base_id, alpha, mean_ci, base_vector, panel.
void write_corpus_jsonl(std::ostream& out, std::span<const Scenario> scenarios);

} // namespace gahp

#endif
