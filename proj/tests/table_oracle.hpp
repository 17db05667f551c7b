#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

namespace gaaf::testing {

// The reference 8x8 multiplication table of G(R^3) in the display basis
// {1, γ1, γ2, γ3, γ12, γ23, γ31, I}, row = left factor.
inline const std::array<std::array<const char*, 8>, 8>& reference_cayley_g3() {
    static const std::array<std::array<const char*, 8>, 8> table = {{
        {"1", "γ1", "γ2", "γ3", "γ12", "γ23", "γ31", "I"},
        {"γ1", "1", "γ12", "-γ31", "γ2", "I", "-γ3", "γ23"},
        {"γ2", "-γ12", "1", "γ23", "-γ1", "γ3", "I", "γ31"},
        {"γ3", "γ31", "-γ23", "1", "I", "-γ2", "γ1", "γ12"},
        {"γ12", "-γ2", "γ1", "I", "-1", "-γ31", "γ23", "-γ3"},
        {"γ23", "I", "-γ3", "γ2", "γ31", "-1", "-γ12", "-γ1"},
        {"γ31", "γ3", "I", "-γ1", "-γ23", "γ12", "-1", "-γ2"},
        {"I", "γ23", "γ31", "γ12", "-γ3", "-γ1", "-γ2", "-1"},
    }};
    return table;
}

// Splits rendered table text into whitespace-separated cells, dropping
// the header row and column.
inline std::vector<std::vector<std::string>> parse_table_cells(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    bool header = true;
    while (std::getline(lines, line)) {
        if (line.empty()) continue;
        std::istringstream cells(line);
        std::vector<std::string> row;
        std::string cell;
        while (cells >> cell) row.push_back(cell);
        if (header) {
            header = false;
            continue;
        }
        row.erase(row.begin());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace gaaf::testing
