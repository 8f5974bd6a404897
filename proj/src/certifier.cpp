#include "carpet/certifier.hpp"

#include "carpet/errors.hpp"
#include "carpet/hull.hpp"
#include "carpet/membership.hpp"
#include "carpet/parallel.hpp"

#include <array>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

namespace carpet {

namespace {

bool in_unit_square(const Point2& z) { return z.x >= 0 && z.x <= 1 && z.y >= 0 && z.y <= 1; }

bool in_carpet(const CarpetPattern& pattern, const Point2& z) {
    return in_unit_square(z) && contains_point(pattern, z);
}

std::optional<Digit> as_digit(const CarpetPattern& pattern, const Point2& z) {
    if (!is_integer(z.x) || !is_integer(z.y)) return std::nullopt;
    const BigInt i = numerator(z.x);
    const BigInt j = numerator(z.y);
    if (i < 0 || j < 0 || i >= pattern.n() || j >= pattern.m()) return std::nullopt;
    const Digit d{i.convert_to<int>(), j.convert_to<int>()};
    if (!pattern.has(d.i, d.j)) return std::nullopt;
    return d;
}

// Words over the sorted digit list of the given length, lexicographic.
template <typename F>
bool for_each_word(const CarpetPattern& pattern, unsigned len, F&& visit) {
    const auto& ds = pattern.digits();
    std::vector<std::size_t> idx(len, 0);
    std::vector<Digit> word(len);
    while (true) {
        for (unsigned t = 0; t < len; ++t) word[t] = ds[idx[t]];
        if (visit(word)) return true;
        unsigned t = len;
        while (t > 0 && ++idx[t - 1] == ds.size()) idx[--t] = 0;
        if (t == 0) return false;
    }
}

std::optional<Witness> try_witness(const CarpetPattern& pattern, const RationalSimilitude& f,
                                   const std::vector<Digit>& word, const std::vector<Digit>& tail) {
    Point2 src = word_fixed_point(pattern, tail);
    if (!word.empty()) src = cylinder_word(pattern, word).apply(src);
    const Point2 img = f.apply(src);
    if (in_carpet(pattern, img)) return std::nullopt;
    return Witness{src, img, word, tail};
}

// n^-h as a rational.
Rational inv_pow(int base, unsigned h) { return Rational(1) / Rational(ipow(BigInt(base), h)); }

// exponent e with 1/s == base^e, if any
std::optional<unsigned> inverse_power_exponent(const Rational& s, int base) {
    if (s <= 0 || s > 1) return std::nullopt;
    const Rational inv = 1 / s;
    if (!is_integer(inv)) return std::nullopt;
    BigInt v = numerator(inv);
    unsigned e = 0;
    while (v > 1) {
        if (v % base != 0) return std::nullopt;
        v /= base;
        ++e;
    }
    return e;
}

bool denominator_divides_power(const Rational& q, int base) {
    BigInt d = denominator(q);
    while (d > 1) {
        const BigInt g = gcd(d, BigInt(base));
        if (g == 1) return false;
        d /= g;
    }
    return true;
}

}  // namespace

RationalSimilitude SymmetryCertificate::map() const { return {ScaleValue(), orthogonal, global_translation}; }

std::optional<SymmetryCertificate> digit_symmetry_check(const CarpetPattern& pattern, const RationalOrthogonal& o,
                                                        const Point2& c) {
    if (!pattern.self_similar()) throw UnsupportedError("digit symmetries need a common base (n == m)");
    SymmetryCertificate cert;
    std::set<Digit> hit;
    for (const Digit& d : pattern.digits()) {
        const Point2 z = o.apply({Rational(d.i), Rational(d.j)});
        const auto image = as_digit(pattern, {z.x + c.x, z.y + c.y});
        if (!image || !hit.insert(*image).second) return std::nullopt;
        cert.permutation.emplace(d, *image);
    }
    cert.orthogonal = o;
    cert.per_digit_offset = c;
    const Rational k(pattern.n() - 1);
    cert.global_translation = {c.x / k, c.y / k};
    return cert;
}

Point2 digit_centroid(const CarpetPattern& pattern) {
    Point2 mu{Rational(0), Rational(0)};
    for (const Digit& d : pattern.digits()) {
        mu.x += d.i;
        mu.y += d.j;
    }
    const Rational count(static_cast<long>(pattern.digits().size()));
    return {mu.x / count, mu.y / count};
}

std::vector<SymmetryCertificate> symmetry_search(const CarpetPattern& pattern, int max_hypotenuse) {
    if (!pattern.self_similar()) throw UnsupportedError("symmetry search needs n == m");
    if (line_supported(pattern)) throw DegenerateError("pattern is supported on a line");
    const auto candidates = enumerate_rational_orthogonals(max_hypotenuse);
    const Point2 mu = digit_centroid(pattern);
    std::vector<std::optional<SymmetryCertificate>> found(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t k) {
        const Point2 om = candidates[k].apply(mu);
        found[k] = digit_symmetry_check(pattern, candidates[k], {mu.x - om.x, mu.y - om.y});
    });
    std::vector<SymmetryCertificate> out;
    for (auto& c : found) {
        if (c) out.push_back(std::move(*c));
    }
    return out;
}

std::string format_certificate(const SymmetryCertificate& cert) {
    std::ostringstream os;
    os << "orthogonal: " << cert.orthogonal.a().str() << " " << cert.orthogonal.b().str() << " "
       << (cert.orthogonal.is_rotation() ? "rotation" : "reflection") << "\n";
    os << "per-digit-offset: " << cert.per_digit_offset.x.str() << " " << cert.per_digit_offset.y.str() << "\n";
    os << "global-translation: " << cert.global_translation.x.str() << " " << cert.global_translation.y.str() << "\n";
    os << "permutation:\n";
    for (const auto& [from, to] : cert.permutation) os << "  " << to_string(from) << " -> " << to_string(to) << "\n";
    return os.str();
}

std::string to_string(ContainmentStatus s) {
    switch (s) {
        case ContainmentStatus::certified: return "certified";
        case ContainmentStatus::refuted: return "refuted";
        case ContainmentStatus::unknown: return "unknown";
    }
    return "?";
}

// The question "is v + diag(n^-hx, m^-hy) K' inside K?" where K' is the
// carpet of the permuted digits psi(d) = O (d - c) + c, c the grid centre.
// A state whose box is grid-aligned and fits in one level-1 cell zooms into
// that cell; any other state splits along the source digits. The explored
// states being closed under both moves proves containment.
ContainmentVerdict grid_containment_certify(const CarpetPattern& pattern, const RationalSimilitude& f,
                                            std::size_t budget) {
    const int n = pattern.n();
    const int m = pattern.m();
    const char* redirect = "; use refute_embedding for general maps";
    if (!f.scale().is_rational()) throw PreconditionError(std::string("irrational scale") + redirect);
    const auto M = f.linear_matrix();

    // M = diag(sx, sy) * P with P a signed permutation
    std::array<int, 4> P{};
    Rational sx, sy;
    auto sign = [](const Rational& q) { return q > 0 ? 1 : -1; };
    if (M[1] == 0 && M[2] == 0) {
        sx = abs(M[0]);
        sy = abs(M[3]);
        P = {sign(M[0]), 0, 0, sign(M[3])};
    } else if (M[0] == 0 && M[3] == 0) {
        if (n != m) throw PreconditionError(std::string("swapping the axes needs n == m") + redirect);
        sx = abs(M[1]);
        sy = abs(M[2]);
        P = {0, sign(M[1]), sign(M[2]), 0};
    } else {
        throw PreconditionError(std::string("map is not axis-aligned") + redirect);
    }
    const auto p = inverse_power_exponent(sx, n);
    const auto q = inverse_power_exponent(sy, m);
    if (!p || !q)
        throw PreconditionError("scales " + sx.str() + ", " + sy.str() + " are not n^-p, m^-q" + redirect);
    const Point2& t = f.translation();
    if (!denominator_divides_power(t.x, n) || !denominator_divides_power(t.y, m))
        throw PreconditionError(std::string("translation is off the grid") + redirect);

    // 2 psi(d) = P (2d - e) + e with e = (n - 1, m - 1)
    const auto& ds = pattern.digits();
    std::vector<std::pair<Rational, Rational>> psi;
    for (const Digit& d : ds) {
        const int ux = 2 * d.i - (n - 1);
        const int uy = 2 * d.j - (m - 1);
        psi.emplace_back(Rational(P[0] * ux + P[1] * uy + (n - 1), 2), Rational(P[2] * ux + P[3] * uy + (m - 1), 2));
    }
    // O z = s + z' with s = P (1/2, 1/2) - (1/2, 1/2)
    const Rational s_x((P[0] + P[1] - 1), 2);
    const Rational s_y((P[2] + P[3] - 1), 2);

    struct State {
        Rational vx, vy;
        unsigned hx, hy;
        auto key() const { return std::tie(vx, vy, hx, hy); }
        bool operator<(const State& o) const { return key() < o.key(); }
    };
    struct Node {
        State state;
        std::size_t parent;
        std::optional<std::size_t> digit;  // source digit of a split edge
    };
    std::vector<Node> nodes;
    std::map<State, std::size_t> index;
    std::deque<std::size_t> queue;

    ContainmentVerdict verdict;
    auto visit = [&](State st, std::size_t parent, std::optional<std::size_t> digit) {
        if (index.count(st)) return true;
        if (nodes.size() >= budget) return false;
        verdict.depth = std::max(verdict.depth, st.hx);
        index.emplace(st, nodes.size());
        queue.push_back(nodes.size());
        nodes.push_back({std::move(st), parent, digit});
        return true;
    };
    visit({t.x + sx * s_x, t.y + sy * s_y, *p, *q}, 0, std::nullopt);

    std::optional<std::size_t> failed;
    std::string failure;
    bool exhausted = false;
    while (!queue.empty() && !failed && !exhausted) {
        const std::size_t id = queue.front();
        queue.pop_front();
        const State st = nodes[id].state;
        const Rational wx = inv_pow(n, st.hx);
        const Rational wy = inv_pow(m, st.hy);
        const bool aligned = is_integer(st.vx / wx) && is_integer(st.vy / wy);
        if (aligned) {
            if (st.vx < 0 || st.vx + wx > 1 || st.vy < 0 || st.vy + wy > 1) {
                failed = id;
                failure = "image leaves the unit square";
                break;
            }
            if (st.hx >= 1 && st.hy >= 1) {
                const BigInt a = floor(st.vx * n);
                const BigInt b = floor(st.vy * m);
                if (!pattern.has(a.convert_to<int>(), b.convert_to<int>())) {
                    failed = id;
                    failure = "image meets the unselected cell (" + a.str() + "," + b.str() + ")";
                    break;
                }
                exhausted = !visit({st.vx * n - a, st.vy * m - b, st.hx - 1, st.hy - 1}, id, std::nullopt);
                continue;
            }
        }
        const Rational cx = wx / n;
        const Rational cy = wy / m;
        for (std::size_t k = 0; k < psi.size() && !exhausted; ++k) {
            exhausted = !visit({st.vx + psi[k].first * cx, st.vy + psi[k].second * cy, st.hx + 1, st.hy + 1}, id, k);
        }
    }
    verdict.state_count = nodes.size();

    if (!failed && !exhausted) {
        verdict.status = ContainmentStatus::certified;
        return verdict;
    }
    if (exhausted) {
        verdict.note = "state budget " + std::to_string(budget) + " exhausted";
        return verdict;
    }

    // A failing state is only evidence; look for an exact witness.
    if (auto w = refute_embedding(pattern, f, 3)) {
        verdict.status = ContainmentStatus::refuted;
        verdict.witness = std::move(w);
        verdict.note = failure;
        return verdict;
    }
    std::vector<Digit> word;
    for (std::size_t id = *failed; id != 0; id = nodes[id].parent) {
        if (nodes[id].digit) word.insert(word.begin(), ds[*nodes[id].digit]);
    }
    for (unsigned len = 1; len <= 3; ++len) {
        std::optional<Witness> w;
        for_each_word(pattern, len, [&](const std::vector<Digit>& tail) {
            w = try_witness(pattern, f, word, tail);
            return w.has_value();
        });
        if (w) {
            verdict.status = ContainmentStatus::refuted;
            verdict.witness = std::move(w);
            verdict.note = failure;
            return verdict;
        }
    }
    verdict.note = failure + ", but no witness point was found";
    return verdict;
}

std::optional<Witness> refute_embedding(const CarpetPattern& pattern, const RationalSimilitude& f, unsigned depth) {
    if (!f.scale().is_rational()) throw UnsupportedError("irrational scale " + f.scale().str() + " cannot act on points");
    std::optional<Witness> out;
    for (unsigned len = 1; len <= depth && !out; ++len) {
        for_each_word(pattern, len, [&](const std::vector<Digit>& tail) {
            out = try_witness(pattern, f, {}, tail);
            return out.has_value();
        });
    }
    return out;
}

PrefilterReport embedding_prefilter(const CarpetPattern& pattern, const RationalSimilitude& f,
                                    unsigned separation_depth) {
    PrefilterReport r;
    const bool genuine = f.is_similitude();
    const bool flat = line_supported(pattern);
    const int n = pattern.n();
    const int m = pattern.m();
    r.isometry = genuine && f.scale().is_one();

    PrefilterCheck oblique{"non-obliqueness"};
    if (n > m && !flat && genuine) {
        oblique.applicable = true;
        oblique.ruled_out = is_oblique(f);
        oblique.detail = oblique.ruled_out ? "oblique map into a carpet with n > m not on a line"
                                           : "map is not oblique";
    } else {
        oblique.detail = n <= m ? "needs n > m" : flat ? "pattern is line-supported" : "map is not a similitude";
    }
    r.checks.push_back(oblique);

    PrefilterCheck commensurate{"log-commensurability"};
    const auto base = ScaleValue::power(BigInt(n), Rational(1));
    const bool dependent = n > m && log_commensurable(ScaleValue::power(BigInt(m), Rational(1)), base).has_value();
    if (dependent && !flat && genuine) {
        commensurate.applicable = true;
        const auto r_exp = log_commensurable(f.scale(), base);
        commensurate.ruled_out = !r_exp.has_value();
        commensurate.detail = r_exp ? "log(scale)/log(n) = " + r_exp->str()
                                    : "log(" + f.scale().str() + ")/log(" + std::to_string(n) + ") is irrational";
    } else {
        commensurate.detail = !dependent ? "needs n > m with log m/log n rational"
                              : flat     ? "pattern is line-supported"
                                         : "map is not a similitude";
    }
    r.checks.push_back(commensurate);

    PrefilterCheck angle{"rotation-angle (Niven)"};
    const auto& o = f.orthogonal();
    if (n != m) {
        angle.detail = "needs n == m";
    } else if (!genuine || !o.is_rotation() || !is_oblique(f)) {
        angle.detail = "map is not an oblique rotation";
    } else if (!strong_separation(pattern, separation_depth).verified) {
        angle.detail = "strong separation not verified at depth " + std::to_string(separation_depth);
    } else {
        angle.applicable = true;
        angle.ruled_out = abs(o.a()) != abs(o.b());
        angle.detail = "tan = " + (o.b() / o.a()).str();
    }
    r.checks.push_back(angle);

    for (const auto& c : r.checks) {
        if (c.ruled_out && !r.ruled_out) {
            r.ruled_out = true;
            r.verdict = "ruled out by " + c.name;
        }
    }
    if (!r.ruled_out) r.verdict = "passes prefilter";
    return r;
}

std::string format_prefilter(const PrefilterReport& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        os << c.name << ": " << (!c.applicable ? "not applicable" : c.ruled_out ? "rules out" : "passes") << " ("
           << c.detail << ")\n";
    }
    os << "isometry: " << (report.isometry ? "yes" : "no") << "\n";
    os << "verdict: " << report.verdict << "\n";
    return os.str();
}

}  // namespace carpet
