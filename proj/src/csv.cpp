#include "declab/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace declab {

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += header[i];
    }
    buf_ += '\n';
}

std::string CsvWriter::format(double v) {
    char tmp[40];
    std::snprintf(tmp, sizeof tmp, "%.17g", v);
    return tmp;
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != columns_) throw std::invalid_argument("csv: column mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += format(values[i]);
    }
    buf_ += '\n';
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw std::invalid_argument("csv: column mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += cells[i];
    }
    buf_ += '\n';
}

void CsvWriter::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("csv: cannot open " + path);
    out << buf_;
}

} // namespace declab
