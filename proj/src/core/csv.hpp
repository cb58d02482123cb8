#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace xyq::detail {

// Floating-point values are printed with 12 significant digits.
inline std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline void csv_comment(std::ostream& out, const std::string& text) {
    out << "# " << text << '\n';
}

inline void csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out << ',';
        out << cells[i];
    }
    out << '\n';
}

}  // namespace xyq::detail
