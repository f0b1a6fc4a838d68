#include "tetra/table.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace tetra {

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex(std::complex<double> z) {
    std::string im = format_double(z.imag());
    if (im.front() != '-') im = "+" + im;
    return format_double(z.real()) + im + "j";
}

std::complex<double> parse_complex(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex literal");

    const char last = s.back();
    const auto to_double = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument("bad number '" + t + "' in '" + raw + "'");
        return v;
    };
    if (last != 'j' && last != 'i') return {to_double(s), 0.0};

    const std::string body = s.substr(0, s.size() - 1);
    // split at the last sign that is not part of an exponent and not leading
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {0.0, to_double(body)};
    return {to_double(body.substr(0, split)), to_double(body.substr(split))};
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::logic_error("Table::add_row: column count mismatch");
    rows.push_back(std::move(row));
}

namespace {

std::string csv_cell(const Cell& c) {
    struct V {
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const {
            if (v.find_first_of(",\"\n") == std::string::npos) return v;
            std::string out = "\"";
            for (char ch : v) {
                if (ch == '"') out += '"';
                out += ch;
            }
            return out + "\"";
        }
        std::string operator()(std::complex<double> v) const { return format_complex(v); }
        std::string operator()(const std::vector<double>& v) const {
            std::string out;
            for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + format_double(v[i]);
            return out;
        }
    };
    return std::visit(V{}, c);
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

std::string json_cell(const Cell& c) {
    struct V {
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return json_number(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& v) const { return json_string(v); }
        std::string operator()(std::complex<double> v) const { return "[" + json_number(v.real()) + ", " + json_number(v.imag()) + "]"; }
        std::string operator()(const std::vector<double>& v) const {
            std::string out = "[";
            for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + json_number(v[i]);
            return out + "]";
        }
    };
    return std::visit(V{}, c);
}

}  // namespace

void Table::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
    for (const auto& line : trailer) os << "# " << line << '\n';
}

void Table::write_json(std::ostream& os) const {
    os << "{\n  \"meta\": {";
    for (std::size_t i = 0; i < meta.size(); ++i) {
        os << (i ? ", " : "") << json_string(meta[i].first) << ": " << json_cell(meta[i].second);
    }
    os << "},\n  \"rows\": [";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        os << (r ? ",\n    {" : "\n    {");
        for (std::size_t i = 0; i < columns.size(); ++i) {
            os << (i ? ", " : "") << json_string(columns[i]) << ": " << json_cell(rows[r][i]);
        }
        os << "}";
    }
    os << (rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
}

}  // namespace tetra
