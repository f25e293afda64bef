#include "app/table.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace sddm::app {

std::string fmt6(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string table_csv(const Table& t) {
    std::ostringstream out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out << ',';
        out << t.columns[i];
    }
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << (row[i].is_number ? fmt6(row[i].num) : row[i].txt);
        }
        out << '\n';
    }
    return out.str();
}

std::string table_json(const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj;
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
            if (row[i].is_number && std::isfinite(row[i].num)) {
                obj[t.columns[i]] = row[i].num;
            } else if (row[i].is_number) {
                obj[t.columns[i]] = fmt6(row[i].num);
            } else {
                obj[t.columns[i]] = row[i].txt;
            }
        }
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

}  // namespace sddm::app
