#include "carpet/pattern.hpp"

#include "carpet/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace carpet {

std::string to_string(const Digit& d) { return "(" + std::to_string(d.i) + "," + std::to_string(d.j) + ")"; }

CarpetPattern CarpetPattern::create(int n, int m, std::vector<Digit> digits, bool allow_full) {
    if (m < 2 || n < m) {
        throw ValidationError("base-order", "need n >= m >= 2, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    }
    if (n > kMaxBase) throw ValidationError("base-range", "base n=" + std::to_string(n) + " is too large");

    CarpetPattern p;
    p.n_ = n;
    p.m_ = m;
    p.table_.assign(static_cast<std::size_t>(n) * m, 0);
    for (const Digit& d : digits) {
        if (d.i < 0 || d.i >= n || d.j < 0 || d.j >= m) {
            throw ValidationError("digit-range", "digit " + to_string(d) + " outside 0<=i<" + std::to_string(n) +
                                                     ", 0<=j<" + std::to_string(m));
        }
        char& slot = p.table_[static_cast<std::size_t>(d.j) * n + d.i];
        if (slot) throw ValidationError("duplicate-digit", "digit " + to_string(d) + " listed twice");
        slot = 1;
    }
    const std::size_t full = static_cast<std::size_t>(n) * m;
    if (digits.size() <= 1 || (digits.size() >= full && !allow_full)) {
        throw ValidationError("digit-count", "need 1 < #digits < n*m = " + std::to_string(full) + ", got " +
                                                 std::to_string(digits.size()));
    }

    std::sort(digits.begin(), digits.end());
    p.digits_ = std::move(digits);
    p.rows_.assign(static_cast<std::size_t>(m), {});
    p.columns_.assign(static_cast<std::size_t>(n), {});
    for (const Digit& d : p.digits_) {
        p.columns_[static_cast<std::size_t>(d.i)].push_back(d.j);
        p.rows_[static_cast<std::size_t>(d.j)].push_back(d.i);
    }
    for (int i = 0; i < n; ++i) {
        if (!p.columns_[static_cast<std::size_t>(i)].empty()) p.I_.push_back(i);
    }
    for (int j = 0; j < m; ++j) {
        auto& r = p.rows_[static_cast<std::size_t>(j)];
        std::sort(r.begin(), r.end());
        if (!r.empty()) p.J_.push_back(j);
        p.N_ = std::max(p.N_, r.size());
    }
    return p;
}

Point2 CarpetPattern::fixed_point(const Digit& d) const { return {Rational(d.i, n_ - 1), Rational(d.j, m_ - 1)}; }

// ---------------------------------------------------------------------------
// text format

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
        if (end > pos) out.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

int parse_int(std::string_view tok, std::size_t line) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

CarpetPattern parse_pattern(std::string_view text, bool allow_full) {
    int n = 0;
    int m = 0;
    bool have_header = false;
    std::vector<Digit> digits;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw ParseError(line_no, "expected two integers, got " + std::to_string(tokens.size()) + " fields");
        }
        const int a = parse_int(tokens[0], line_no);
        const int b = parse_int(tokens[1], line_no);
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
        } else {
            digits.push_back({a, b});
        }
    }
    if (!have_header) throw ParseError(0, "missing 'n m' header line");
    return CarpetPattern::create(n, m, std::move(digits), allow_full);
}

CarpetPattern load_pattern(const std::string& path, bool allow_full) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open pattern file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern(buf.str(), allow_full);
}

std::string format_pattern(const CarpetPattern& pattern) {
    std::string out = std::to_string(pattern.n()) + " " + std::to_string(pattern.m()) + "\n";
    for (const Digit& d : pattern.digits()) out += std::to_string(d.i) + " " + std::to_string(d.j) + "\n";
    return out;
}

CarpetPattern transpose(const CarpetPattern& pattern) {
    if (!pattern.self_similar()) throw DomainError("transpose needs n == m");
    std::vector<Digit> t;
    for (const Digit& d : pattern.digits()) t.push_back({d.j, d.i});
    return CarpetPattern::create(pattern.n(), pattern.m(), std::move(t), true);
}

// ---------------------------------------------------------------------------
// maps

RationalSimilitude cylinder_map(const CarpetPattern& pattern, const Digit& digit) {
    if (!pattern.has(digit)) throw DomainError("digit " + to_string(digit) + " is not in the pattern");
    const Point2 t{Rational(digit.i, pattern.n()), Rational(digit.j, pattern.m())};
    if (pattern.self_similar()) {
        return RationalSimilitude(ScaleValue::from_rational(Rational(1, pattern.n())), RationalOrthogonal::identity(), t);
    }
    return RationalSimilitude::diagonal_affine(Rational(1, pattern.n()), Rational(1, pattern.m()),
                                               RationalOrthogonal::identity(), t);
}

RationalSimilitude cylinder_word(const CarpetPattern& pattern, const std::vector<Digit>& word) {
    RationalSimilitude f;
    for (const Digit& d : word) f = compose(f, cylinder_map(pattern, d));
    return f;
}

Point2 word_fixed_point(const CarpetPattern& pattern, const std::vector<Digit>& word) {
    if (word.empty()) throw DomainError("word_fixed_point needs a non-empty word");
    BigInt x = 0;
    BigInt y = 0;
    for (const Digit& d : word) {
        if (!pattern.has(d)) throw DomainError("digit " + to_string(d) + " is not in the pattern");
        x = x * pattern.n() + d.i;
        y = y * pattern.m() + d.j;
    }
    const auto k = static_cast<unsigned>(word.size());
    return {Rational(x, ipow(BigInt(pattern.n()), k) - 1), Rational(y, ipow(BigInt(pattern.m()), k) - 1)};
}

// ---------------------------------------------------------------------------

bool line_supported(const CarpetPattern& pattern) {
    const auto& ds = pattern.digits();
    const Point2 a = pattern.fixed_point(ds.front());
    std::optional<Point2> dir;
    for (std::size_t k = 1; k < ds.size(); ++k) {
        const Point2 v = pattern.fixed_point(ds[k]) - a;
        if (!dir) {
            dir = v;  // digits are distinct, so v != 0
        } else if (cross(*dir, v) != 0) {
            return false;
        }
    }
    return true;
}

PatternClassification classify(const CarpetPattern& pattern) {
    PatternClassification c;
    c.self_similar = pattern.self_similar();
    c.log_ratio_rational = log_commensurable(ScaleValue::from_rational(Rational(pattern.n())),
                                             ScaleValue::from_rational(Rational(pattern.m())))
                               .has_value();
    c.line_supported = line_supported(pattern);
    c.has_vacant_row = pattern.rows().size() < static_cast<std::size_t>(pattern.m());
    c.max_row_count = pattern.max_row_count();
    c.has_full_row = c.max_row_count == static_cast<std::size_t>(pattern.n());
    return c;
}

}  // namespace carpet
