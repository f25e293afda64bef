#pragma once

#include <string>
#include <vector>

namespace sddm::app {

// Six significant digits; infinities print as "inf"/"-inf".
std::string fmt6(double v);

struct Cell {
    static Cell number(double v) { return {true, v, {}}; }
    static Cell text(std::string t) { return {false, 0.0, std::move(t)}; }

    bool is_number = false;
    double num = 0.0;
    std::string txt;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

std::string table_csv(const Table& t);

// Array of row objects; non-finite numbers are emitted as strings since
// JSON has no infinity literal.
std::string table_json(const Table& t);

}  // namespace sddm::app
