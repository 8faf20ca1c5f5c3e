#include "rdos/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace rdos {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_commas(std::string_view line,
                                           std::vector<std::string_view>& cells) {
    cells.clear();
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            cells.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return cells;
}

bool parse_double(std::string_view cell, double& value) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    return ec == std::errc() && ptr == end && !cell.empty();
}

[[noreturn]] void cell_error(const std::string& origin, std::size_t row, std::size_t col,
                             const std::string& what) {
    throw DataError(origin + ": " + what + " at row " + std::to_string(row) +
                    ", column " + std::to_string(col));
}

}  // namespace

Dataset load_csv(std::istream& in, const std::string& origin) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    // trailing blank lines are tolerated, interior ones are not
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) throw DataError(origin + ": file is empty");
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) {
            throw DataError(origin + ": blank line at row " + std::to_string(i + 1));
        }
    }

    std::vector<std::string_view> cells;
    split_commas(lines[0], cells);
    const std::size_t n_cols = cells.size();

    // header: a first row with any non-numeric cell
    bool has_header = false;
    for (const auto cell : cells) {
        double ignored;
        if (!parse_double(cell, ignored)) {
            has_header = true;
            break;
        }
    }

    std::vector<std::string> names;
    bool has_label_column = false;
    if (has_header) {
        for (const auto cell : cells) names.emplace_back(cell);
        has_label_column = !names.empty() && names.back() == "label";
        if (has_label_column) names.pop_back();
    }

    const std::size_t first_data_row = has_header ? 1 : 0;
    const std::size_t n_rows = lines.size() - first_data_row;
    const std::size_t n_features = n_cols - (has_label_column ? 1 : 0);
    if (n_rows == 0) throw DataError(origin + ": no data rows");
    if (n_features == 0) throw DataError(origin + ": no feature columns");

    Dataset data;
    data.points.resize(static_cast<Eigen::Index>(n_rows),
                       static_cast<Eigen::Index>(n_features));
    if (has_label_column) data.labels.reserve(n_rows);
    data.feature_names = std::move(names);

    for (std::size_t r = 0; r < n_rows; ++r) {
        const std::size_t file_row = first_data_row + r + 1;  // 1-based, incl. header
        split_commas(lines[first_data_row + r], cells);
        if (cells.size() != n_cols) {
            throw DataError(origin + ": ragged row " + std::to_string(file_row) + " has " +
                            std::to_string(cells.size()) + " cells, expected " +
                            std::to_string(n_cols));
        }
        for (std::size_t c = 0; c < n_features; ++c) {
            double value;
            if (!parse_double(cells[c], value)) {
                cell_error(origin, file_row, c + 1, "non-numeric cell");
            }
            data.points(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = value;
        }
        if (has_label_column) {
            const auto cell = cells[n_cols - 1];
            if (cell == "0") {
                data.labels.push_back(Label::inlier);
            } else if (cell == "1") {
                data.labels.push_back(Label::outlier);
            } else {
                cell_error(origin, file_row, n_cols, "label must be 0 or 1");
            }
        }
    }

    try {
        validate_dataset(data);
    } catch (const std::invalid_argument& e) {
        throw DataError(origin + ": " + e.what());
    }
    return data;
}

Dataset load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    return load_csv(in, path.string());
}

std::string format_roundtrip(double value) {
    std::array<char, 32> buf;
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return {buf.data(), ptr};
}

std::string format_score(double value) {
    std::array<char, 40> buf;
    const int n = std::snprintf(buf.data(), buf.size(), "%.9g", value);
    return {buf.data(), static_cast<std::size_t>(n)};
}

void save_dataset_csv(const Dataset& data, std::ostream& out) {
    const Eigen::Index d = data.dimension();
    for (Eigen::Index j = 0; j < d; ++j) {
        if (j) out << ',';
        if (!data.feature_names.empty()) {
            out << data.feature_names[static_cast<std::size_t>(j)];
        } else {
            out << 'x' << (j + 1);
        }
    }
    if (data.has_labels()) out << ",label";
    out << '\n';

    for (Eigen::Index i = 0; i < data.size(); ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            if (j) out << ',';
            out << format_roundtrip(data.points(i, j));
        }
        if (data.has_labels()) {
            out << ',' << (data.labels[static_cast<std::size_t>(i)] == Label::outlier ? '1' : '0');
        }
        out << '\n';
    }
}

void save_dataset_csv(const Dataset& data, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    save_dataset_csv(data, out);
}

void write_score_csv(const std::vector<ScoreRow>& rows, std::ostream& out) {
    const bool with_density = !rows.empty() && rows.front().density.has_value();
    const bool with_flag = !rows.empty() && rows.front().flag.has_value();
    out << "index,score";
    if (with_density) out << ",density";
    if (with_flag) out << ",flag";
    out << '\n';
    for (const auto& row : rows) {
        out << row.index << ',' << format_score(row.score);
        if (with_density) out << ',' << format_score(*row.density);
        if (with_flag) out << ',' << (*row.flag ? '1' : '0');
        out << '\n';
    }
}

void write_edge_list(const KnnGraph& graph, std::ostream& out) {
    for (Eigen::Index p = 0; p < graph.size(); ++p) {
        for (int j = 0; j < graph.k; ++j) {
            out << p << ' ' << graph.neighbors(p, j) << ' '
                << format_roundtrip(graph.distances(p, j)) << '\n';
        }
    }
}

}  // namespace rdos
