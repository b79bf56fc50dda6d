// csv.hpp — deterministic CSV output: one header line, ',' separator,
// '.' decimal point, 17 significant digits (round-trip exact doubles).

#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

namespace su11 {

inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& columns)
        : out_(path), columns_(columns.size()) {
        if (!out_) throw std::runtime_error("cannot open '" + path + "' for writing");
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) out_ << ',';
            out_ << columns[i];
        }
        out_ << '\n';
    }

    void row(const std::vector<std::string>& cells) {
        if (cells.size() != columns_)
            throw std::logic_error("csv row width mismatch");
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
    std::size_t columns_;
};

} // namespace su11
