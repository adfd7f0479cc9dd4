#pragma once

#include <string>
#include <vector>

namespace kzq {

// Numeric CSV with a header row. Cells are written as %.16e so files
// round-trip doubles exactly and diffs are meaningful.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> columns);

    void row(const std::vector<double>& values);

    const std::string& text() const { return buf_; }

  private:
    std::size_t width_;
    std::string buf_;
};

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    // -1 when absent.
    int column_index(const std::string& name) const;
};

CsvTable read_csv_file(const std::string& path);
CsvTable read_csv_text(const std::string& text);

}  // namespace kzq
