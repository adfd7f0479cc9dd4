#include "kzq/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kzq/errors.hpp"

namespace kzq {

CsvWriter::CsvWriter(std::vector<std::string> columns)
    : width_(columns.size()) {
    if (columns.empty()) throw domain_error("CsvWriter: no columns");
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += columns[i];
    }
    buf_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != width_)
        throw domain_error("CsvWriter: row width does not match header");
    char cell[32];
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) buf_ += ',';
        std::snprintf(cell, sizeof cell, "%.16e", values[i]);
        buf_ += cell;
    }
    buf_ += '\n';
}

int CsvTable::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<int>(i);
    return -1;
}

CsvTable read_csv_text(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cur;
        for (char ch : line) {
            if (ch == ',') {
                cells.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        cells.push_back(cur);
        if (header) {
            t.columns = cells;
            header = false;
            continue;
        }
        std::vector<double> row;
        row.reserve(cells.size());
        for (const auto& c : cells) {
            char* end = nullptr;
            row.push_back(std::strtod(c.c_str(), &end));
            if (end == c.c_str())
                throw domain_error("read_csv: non-numeric cell '" + c + "'");
        }
        if (row.size() != t.columns.size())
            throw domain_error("read_csv: ragged row");
        t.rows.push_back(std::move(row));
    }
    if (t.columns.empty()) throw domain_error("read_csv: empty input");
    return t;
}

CsvTable read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("read_csv: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_csv_text(buf.str());
}

}  // namespace kzq
