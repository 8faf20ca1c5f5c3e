#ifndef RDOS_IO_HPP
#define RDOS_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdos/core.hpp"
#include "rdos/neighbors.hpp"
#include "rdos/rdos.hpp"

// Dataset and result serialization. All numbers use '.' as the decimal
// separator regardless of locale. Dataset files are comma-separated
// rectangular numeric tables with an optional header row; a final column
// named `label` holds 0 (inlier) / 1 (outlier).

namespace rdos {

// Malformed input data; the CLI maps this to exit code 3.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses a dataset CSV. Errors name the offending 1-based row (counting
// the header) and column.
Dataset load_csv(const std::filesystem::path& path);
Dataset load_csv(std::istream& in, const std::string& origin);

// Writes points (and labels when present) with shortest round-trip
// formatting, so loading the file reproduces the matrix bit for bit.
void save_dataset_csv(const Dataset& data, const std::filesystem::path& path);
void save_dataset_csv(const Dataset& data, std::ostream& out);

// Shortest decimal that parses back to exactly `value`.
std::string format_roundtrip(double value);
// Fixed 9 significant digits, for score output.
std::string format_score(double value);

struct ScoreRow {
    int index = 0;
    double score = 0.0;
    std::optional<double> density;
    std::optional<bool> flag;
};

// `index,score[,density][,flag]` with a header naming the present columns.
void write_score_csv(const std::vector<ScoreRow>& rows, std::ostream& out);

// One `src dst distance` line per outbound edge, in vertex then rank order.
void write_edge_list(const KnnGraph& graph, std::ostream& out);

}  // namespace rdos

#endif  // RDOS_IO_HPP
