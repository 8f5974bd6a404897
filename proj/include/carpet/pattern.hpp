#pragma once

#include "carpet/rational.hpp"
#include "carpet/similitude.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace carpet {

struct Digit {
    int i = 0;  // column, 0 <= i < n
    int j = 0;  // row, 0 <= j < m

    friend auto operator<=>(const Digit&, const Digit&) = default;
};

std::string to_string(const Digit& d);

// Digit data (n, m, Lambda) of the carpet K(n, m, Lambda), the attractor of
// phi_{i,j}(x, y) = ((x + i) / n, (y + j) / m) over (i, j) in Lambda.
class CarpetPattern {
public:
    // Largest accepted base; keeps grid coordinates in machine words.
    static constexpr int kMaxBase = 1 << 16;

    // Validates and derives I, J, I_j, J_i, N. Throws ValidationError naming
    // the violated rule: "base-order" (n >= m >= 2), "base-range",
    // "digit-range", "duplicate-digit", "digit-count" (1 < #Lambda < n*m).
    // allow_full admits #Lambda == n*m (the whole square).
    static CarpetPattern create(int n, int m, std::vector<Digit> digits, bool allow_full = false);

    int n() const noexcept { return n_; }
    int m() const noexcept { return m_; }
    bool self_similar() const noexcept { return n_ == m_; }
    // Sorted by (i, j).
    const std::vector<Digit>& digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool has(int i, int j) const {
        return i >= 0 && i < n_ && j >= 0 && j < m_ && table_[static_cast<std::size_t>(j) * n_ + i];
    }
    bool has(const Digit& d) const { return has(d.i, d.j); }

    const std::vector<int>& columns() const noexcept { return I_; }  // I
    const std::vector<int>& rows() const noexcept { return J_; }     // J
    const std::vector<int>& row(int j) const { return rows_.at(static_cast<std::size_t>(j)); }       // I_j
    const std::vector<int>& column(int i) const { return columns_.at(static_cast<std::size_t>(i)); }  // J_i
    std::size_t row_count(int j) const { return row(j).size(); }
    std::size_t max_row_count() const noexcept { return N_; }  // N

    // (i / (n - 1), j / (m - 1)), the fixed point of phi_{i,j}.
    Point2 fixed_point(const Digit& d) const;

    friend bool operator==(const CarpetPattern& a, const CarpetPattern& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.digits_ == b.digits_;
    }

private:
    CarpetPattern() = default;

    int n_ = 0;
    int m_ = 0;
    std::vector<Digit> digits_;
    std::vector<char> table_;
    std::vector<int> I_;
    std::vector<int> J_;
    std::vector<std::vector<int>> rows_;
    std::vector<std::vector<int>> columns_;
    std::size_t N_ = 0;
};

// Pattern file: '#' starts a comment, blank lines are ignored, the first
// remaining line is "n m" and every further line is "i j". ParseError carries
// the 1-based line number; ValidationError is raised for invariant failures.
CarpetPattern parse_pattern(std::string_view text, bool allow_full = false);
CarpetPattern load_pattern(const std::string& path, bool allow_full = false);
std::string format_pattern(const CarpetPattern& pattern);

// The square (n == m) pattern with rows and columns exchanged.
CarpetPattern transpose(const CarpetPattern& pattern);

// phi_{i,j}. For n > m the result is a diagonal-affine map, flagged as not
// a similitude. DomainError if the digit is not in the pattern.
RationalSimilitude cylinder_map(const CarpetPattern& pattern, const Digit& digit);

// phi_{w_1} o phi_{w_2} o ... o phi_{w_k}
RationalSimilitude cylinder_word(const CarpetPattern& pattern, const std::vector<Digit>& word);

// Fixed point of the composed word map: the point with periodic address w w w ...
Point2 word_fixed_point(const CarpetPattern& pattern, const std::vector<Digit>& word);

struct PatternClassification {
    bool self_similar = false;
    bool log_ratio_rational = false;
    bool line_supported = false;
    bool has_vacant_row = false;
    bool has_full_row = false;
    std::size_t max_row_count = 0;
};

PatternClassification classify(const CarpetPattern& pattern);

// True iff all fixed points are collinear.
bool line_supported(const CarpetPattern& pattern);

}  // namespace carpet
