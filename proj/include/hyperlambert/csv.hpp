#pragma once

#include <charconv>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "holder.hpp"
#include "lambert.hpp"

namespace hyperlambert {

/// Locale-independent decimal with 15 significant digits.
inline std::string format_number(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 15);
    return std::string(buf, res.ptr);
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(std::initializer_list<std::string_view> names) {
        bool first = true;
        for (auto n : names) {
            if (!first) out_ << ',';
            out_ << n;
            first = false;
        }
        out_ << '\n';
    }

    /// Row of cells; numbers go through format_number, strings verbatim.
    template <class... Cells>
    void row(const Cells&... cells) {
        bool first = true;
        ((emit(cells, first)), ...);
        out_ << '\n';
    }

private:
    void emit(double v, bool& first) { sep(first); out_ << format_number(v); }
    void emit(int v, bool& first) { sep(first); out_ << v; }
    void emit(std::string_view v, bool& first) { sep(first); out_ << v; }
    void emit(const char* v, bool& first) { emit(std::string_view(v), first); }
    void emit(const std::string& v, bool& first) { emit(std::string_view(v), first); }
    void sep(bool& first) {
        if (!first) out_ << ',';
        first = false;
    }

    std::ostream& out_;
};

inline void write_sweep_header(CsvWriter& w) {
    w.header({"r", "d1", "d2", "d3", "d4", "product", "sum", "product_bound", "sum_lower", "sum_upper"});
}

inline void write_sweep_row(CsvWriter& w, const SweepRow& row) {
    w.row(row.r, row.d1, row.d2, row.d3, row.d4, row.product, row.sum, row.product_bound,
          row.sum_lower, row.sum_upper);
}

/// VerificationReport as the 10-column sweep CSV.
inline void write_report(std::ostream& out, const VerificationReport& rep) {
    CsvWriter w(out);
    write_sweep_header(w);
    for (const auto& row : rep.rows) write_sweep_row(w, row);
}

/// Region-map row: p, q, class, c_of_p (empty outside (-2, 0)).
inline void write_region_row(CsvWriter& w, double p, double q, ConvexityClass c) {
    if (p > -2.0 && p < 0.0)
        w.row(p, q, to_string(c), critical_curve_C(p));
    else
        w.row(p, q, to_string(c), "");
}

}  // namespace hyperlambert
