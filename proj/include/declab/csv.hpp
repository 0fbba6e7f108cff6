#pragma once

#include <string>
#include <vector>

namespace declab {

// CSV dialect: comma-separated, header row, decimal point, 17 significant
// digits for reals. Writes are atomic enough for the lab: full buffer, one
// file, deterministic byte output for identical inputs.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);

    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);

    const std::string& buffer() const { return buf_; }
    void write_file(const std::string& path) const;

    static std::string format(double v);

  private:
    std::size_t columns_;
    std::string buf_;
};

} // namespace declab
