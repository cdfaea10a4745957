#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace roc {

// A typed cell so CSV and JSON can serialize the same table consistently
// (reals always with 12 significant digits).
struct Cell {
    enum class Kind { text, real, integer };
    Kind kind = Kind::text;
    std::string text;
    double real = 0.0;
    std::int64_t integer = 0;

    static Cell str(std::string s);
    static Cell num(double v);
    static Cell count(std::int64_t v);
};

struct OutputTable {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells);
};

// %.12g rendering shared by both formats.
std::string fmt_real(double v);

std::string to_csv(const OutputTable& t);
std::string to_json(const OutputTable& t);

}  // namespace roc
