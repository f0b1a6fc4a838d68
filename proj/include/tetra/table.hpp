#pragma once
// Tabular datasets written as CSV or as a {"meta", "rows"} JSON object.

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tetra {

using Cell = std::variant<std::int64_t, double, bool, std::string, std::complex<double>, std::vector<double>>;

/// 17 significant digits ("%.17g"); non-finite values as nan/inf.
[[nodiscard]] std::string format_double(double x);
/// "re+imj" / "re-imj".
[[nodiscard]] std::string format_complex(std::complex<double> z);
/// Parses "re", "imj", "re+imj", "re-imj" (also with i). Throws std::invalid_argument.
[[nodiscard]] std::complex<double> parse_complex(const std::string& text);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::pair<std::string, Cell>> meta;
    // CSV-only trailer lines, written after the rows prefixed with "# "
    std::vector<std::string> trailer;

    void add_row(std::vector<Cell> row);
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
};

}  // namespace tetra
