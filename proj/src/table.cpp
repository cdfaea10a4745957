#include "roc/table.hpp"

#include <cstdio>

#include "roc/errors.hpp"

namespace roc {

Cell Cell::str(std::string s) {
    Cell c;
    c.kind = Kind::text;
    c.text = std::move(s);
    return c;
}

Cell Cell::num(double v) {
    Cell c;
    c.kind = Kind::real;
    c.real = v;
    return c;
}

Cell Cell::count(std::int64_t v) {
    Cell c;
    c.kind = Kind::integer;
    c.integer = v;
    return c;
}

void OutputTable::add_row(std::vector<Cell> cells) {
    if (cells.size() != header.size())
        throw ValidationError("row width does not match header");
    rows.push_back(std::move(cells));
}

std::string fmt_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell& c) {
    switch (c.kind) {
        case Cell::Kind::text: return c.text;
        case Cell::Kind::real: return fmt_real(c.real);
        case Cell::Kind::integer: return std::to_string(c.integer);
    }
    return {};
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out.push_back(ch);
        }
    }
    return out;
}

}  // namespace

std::string to_csv(const OutputTable& t) {
    std::string out;
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) out.push_back(',');
        out += t.header[i];
    }
    out.push_back('\n');
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out.push_back(',');
            out += cell_text(row[i]);
        }
        out.push_back('\n');
    }
    return out;
}

std::string to_json(const OutputTable& t) {
    std::string out = "[\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += "  {";
        for (std::size_t i = 0; i < t.header.size(); ++i) {
            if (i) out += ", ";
            out.push_back('"');
            out += json_escape(t.header[i]);
            out += "\": ";
            const Cell& c = t.rows[r][i];
            if (c.kind == Cell::Kind::text) {
                out.push_back('"');
                out += json_escape(c.text);
                out.push_back('"');
            } else {
                out += cell_text(c);
            }
        }
        out.push_back('}');
        if (r + 1 < t.rows.size()) out.push_back(',');
        out.push_back('\n');
    }
    out += "]\n";
    return out;
}

}  // namespace roc
