#include "carpet/certifier.hpp"
#include "carpet/errors.hpp"
#include "carpet/membership.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace carpet;
using namespace carpet::testing;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

RationalOrthogonal refl(long a, long b, long h) { return RationalOrthogonal::reflection(q(a, h), q(b, h)); }
RationalOrthogonal rot(long a, long b, long h) { return RationalOrthogonal::rotation(q(a, h), q(b, h)); }

std::vector<CarpetPattern> square_patterns() {
    return {ex51(), full22(), l_shape(), sierpinski33(), parse_pattern("3 3\n0 0\n2 0\n0 2\n2 2\n"),
            parse_pattern("5 5\n0 0\n4 1\n2 4\n1 2\n3 3\n")};
}

}  // namespace

TEST_CASE("digit_symmetry_check examples") {
    const auto p = ex51();
    const auto cert = digit_symmetry_check(p, refl(3, -4, 5), {q(9, 5), q(18, 5)});
    REQUIRE(cert);
    CHECK(cert->permutation == std::map<Digit, Digit>{{{0, 1}, {1, 3}}, {{1, 3}, {0, 1}}, {{2, 0}, {3, 2}}, {{3, 2}, {2, 0}}});
    CHECK(cert->global_translation == Point2{q(3, 5), q(6, 5)});
    CHECK(cert->orthogonal.matrix() == std::array<Rational, 4>{q(3, 5), q(-4, 5), q(-4, 5), q(-3, 5)});

    const auto id = digit_symmetry_check(p, RationalOrthogonal::identity(), {q(0), q(0)});
    REQUIRE(id);
    for (const auto& [a, b] : id->permutation) CHECK(a == b);

    const auto half = digit_symmetry_check(p, rot(-1, 0, 1), {q(3), q(3)});
    REQUIRE(half);
    CHECK(half->permutation == std::map<Digit, Digit>{{{0, 1}, {3, 2}}, {{1, 3}, {2, 0}}, {{2, 0}, {1, 3}}, {{3, 2}, {0, 1}}});

    CHECK_FALSE(digit_symmetry_check(p, RationalOrthogonal::identity(), {q(1), q(0)}));
    CHECK_FALSE(digit_symmetry_check(p, rot(3, 4, 5), {q(3, 5), q(6, 5)}));
    CHECK_THROWS_AS(digit_symmetry_check(p32(), RationalOrthogonal::identity(), {q(0), q(0)}), UnsupportedError);
}

TEST_CASE("symmetry_search examples and exhaustive oracle") {
    const auto ex = symmetry_search(ex51(), 5);
    // the pinwheel is invariant under quarter turns too: 4 rotations, 4 reflections
    REQUIRE(ex.size() == 8);
    std::vector<RationalOrthogonal> os;
    for (const auto& c : ex) os.push_back(c.orthogonal);
    CHECK(std::count(os.begin(), os.end(), RationalOrthogonal::identity()) == 1);
    CHECK(std::count(os.begin(), os.end(), rot(-1, 0, 1)) == 1);
    CHECK(std::count(os.begin(), os.end(), rot(0, 1, 1)) == 1);
    CHECK(std::count(os.begin(), os.end(), rot(0, -1, 1)) == 1);
    CHECK(std::count(os.begin(), os.end(), refl(4, 3, 5)) == 1);
    CHECK(std::count(os.begin(), os.end(), refl(-4, -3, 5)) == 1);
    CHECK(std::count(os.begin(), os.end(), refl(3, -4, 5)) == 1);
    CHECK(std::count(os.begin(), os.end(), refl(-3, 4, 5)) == 1);
    for (const auto& c : ex) {
        if (c.orthogonal == refl(3, -4, 5)) CHECK(c.per_digit_offset == Point2{q(9, 5), q(18, 5)});
    }

    CHECK(symmetry_search(full22(), 1).size() == 8);
    CHECK(symmetry_search(full22(), 5).size() == 8);
    const auto l = symmetry_search(l_shape(), 5);
    REQUIRE(l.size() == 2);
    // enumeration order: (a, b) = (0, 1) sorts before (1, 0)
    CHECK(l[0].orthogonal.matrix() == std::array<Rational, 4>{q(0), q(1), q(1), q(0)});
    CHECK(l[0].permutation.at({0, 1}) == Digit{1, 0});
    CHECK(l[1].orthogonal.is_identity());

    for (const auto& p : square_patterns()) {
        const auto found = symmetry_search(p, 13);
        const auto brute = brute_symmetries(p, 13);
        REQUIRE(found.size() == brute.size());
        for (std::size_t k = 0; k < found.size(); ++k) {
            CHECK(found[k].orthogonal == brute[k].first);
            CHECK(found[k].permutation == brute[k].second);
        }
        // centroid necessity
        const Point2 mu = digit_centroid(p);
        for (const auto& c : found) {
            const Point2 om = c.orthogonal.apply(mu);
            CHECK(c.per_digit_offset == Point2{mu.x - om.x, mu.y - om.y});
        }
    }
    CHECK_THROWS_AS(symmetry_search(diagonal22(), 5), DegenerateError);
    CHECK_THROWS_AS(symmetry_search(p32(), 5), UnsupportedError);
}

TEST_CASE("certificates act on addresses") {
    for (const auto& p : square_patterns()) {
        for (const auto& cert : symmetry_search(p, 5)) {
            const auto f = cert.map();
            // f o phi_d == phi_sigma(d) o f, so f permutes level-k cylinders
            for (const auto& [d, e] : cert.permutation) {
                CHECK(compose(f, cylinder_map(p, d)) == compose(cylinder_map(p, e), f));
            }
            for (unsigned k = 1; k <= 4; ++k) {
                const auto all = brute_cells(p, k);
                std::set<std::pair<std::uint64_t, std::uint64_t>> image;
                const auto& ds = p.digits();
                std::vector<std::size_t> idx(k, 0);
                while (true) {
                    std::uint64_t x = 0, y = 0;
                    for (unsigned t = 0; t < k; ++t) {
                        const Digit e = cert.permutation.at(ds[idx[t]]);
                        x = x * static_cast<std::uint64_t>(p.n()) + static_cast<std::uint64_t>(e.i);
                        y = y * static_cast<std::uint64_t>(p.m()) + static_cast<std::uint64_t>(e.j);
                    }
                    image.insert({x, y});
                    unsigned t = k;
                    while (t > 0 && ++idx[t - 1] == ds.size()) idx[--t] = 0;
                    if (t == 0) break;
                }
                CHECK(image == all);
            }
            CHECK_FALSE(refute_embedding(p, f, p.digits().size() > 4 ? 3 : 4));
        }
    }
}

TEST_CASE("grid_containment_certify examples") {
    const auto p = ex51();
    CHECK(grid_containment_certify(p, cylinder_map(p, {0, 1})).status == ContainmentStatus::certified);
    const auto two = compose(cylinder_map(p, {0, 1}), cylinder_map(p, {1, 3}));
    CHECK(two.scale() == ScaleValue::from_rational(q(1, 16)));
    CHECK(grid_containment_certify(p, two).status == ContainmentStatus::certified);

    const auto shift = parse_similitude("t=1/4,0");
    const auto v = grid_containment_certify(p, shift);
    CHECK(v.status == ContainmentStatus::refuted);
    REQUIRE(v.witness);
    CHECK(v.witness->image == Point2{q(1, 4), q(1, 3)});
    CHECK(v.witness->source == Point2{q(0), q(1, 3)});
    CHECK(contains_point(p, v.witness->source));
    CHECK(brute_disproves(p, v.witness->image, 4));

    // 180 degree rotation about the centre
    CHECK(grid_containment_certify(p, parse_similitude("rot=-1,0 t=1,1")).status == ContainmentStatus::certified);
    // the square contains every grid-aligned shrunken copy of itself
    CHECK(grid_containment_certify(full22(), parse_similitude("scale=1/2 t=1/4,1/4")).status ==
          ContainmentStatus::certified);
    CHECK(grid_containment_certify(full22(), parse_similitude("scale=1/4 refl=0,1 t=3/8,5/8")).status ==
          ContainmentStatus::certified);
    CHECK(grid_containment_certify(full22(), parse_similitude("scale=1/2 t=5/8,0")).status ==
          ContainmentStatus::refuted);

    // n > m: affine cylinder maps, and a map onto an unselected cell
    const auto b = bm42();
    for (const auto& d : b.digits()) CHECK(grid_containment_certify(b, cylinder_map(b, d)).status == ContainmentStatus::certified);
    const auto off = RationalSimilitude::diagonal_affine(q(1, 4), q(1, 2), RationalOrthogonal::identity(), {q(0), q(1, 2)});
    const auto w = grid_containment_certify(b, off);
    CHECK(w.status == ContainmentStatus::refuted);
    REQUIRE(w.witness);
    CHECK(brute_disproves(b, w.witness->image, 5));
    // horizontal flip of a pattern symmetric under i -> n - 1 - i
    const auto sym = parse_pattern("4 2\n0 0\n3 0\n1 1\n2 1\n");
    CHECK(grid_containment_certify(sym, parse_similitude("refl=-1,0 t=1,0")).status == ContainmentStatus::certified);
    CHECK(grid_containment_certify(b, parse_similitude("refl=-1,0 t=1,0")).status == ContainmentStatus::refuted);

    CHECK_THROWS_AS(grid_containment_certify(p, parse_similitude("refl=3/5,-4/5 t=3/5,6/5")), PreconditionError);
    CHECK_THROWS_AS(grid_containment_certify(p, parse_similitude("scale=1/3")), PreconditionError);
    CHECK_THROWS_AS(grid_containment_certify(p, parse_similitude("t=1/3,0")), PreconditionError);
    CHECK_THROWS_AS(grid_containment_certify(p, parse_similitude("scale=2^1/2")), PreconditionError);
    CHECK_THROWS_AS(grid_containment_certify(b, parse_similitude("refl=0,1")), PreconditionError);
}

TEST_CASE("grid_containment_certify agrees with sampling on random grid maps") {
    std::mt19937 rng(5);
    std::vector<CarpetPattern> pats = square_patterns();
    pats.push_back(p32());
    pats.push_back(bm42());
    pats.push_back(bm93());
    std::size_t certified = 0, refuted = 0;
    for (const auto& p : pats) {
        const auto& ds = p.digits();
        for (int trial = 0; trial < 40; ++trial) {
            std::uniform_int_distribution<std::size_t> pick(0, ds.size() - 1);
            // a cylinder word, then possibly a small grid shift
            std::vector<Digit> word;
            for (int t = 0, len = 1 + static_cast<int>(rng() % 2); t < len; ++t) word.push_back(ds[pick(rng)]);
            auto f = cylinder_word(p, word);
            if (rng() % 2) {
                const int sx = static_cast<int>(rng() % 3) - 1;
                const int sy = static_cast<int>(rng() % 3) - 1;
                const Rational dx = Rational(sx) / Rational(p.n() * p.n() * p.n());
                const Rational dy = Rational(sy) / Rational(p.m() * p.m() * p.m());
                f = compose(RationalSimilitude({}, RationalOrthogonal::identity(), {dx, dy}), f);
            }
            const auto v = grid_containment_certify(p, f);
            CHECK(v.status != ContainmentStatus::unknown);
            if (v.status == ContainmentStatus::certified) {
                ++certified;
                CHECK_FALSE(refute_embedding(p, f, 3));
            } else if (v.status == ContainmentStatus::refuted) {
                ++refuted;
                REQUIRE(v.witness);
                CHECK(contains_point(p, v.witness->source));
                CHECK(brute_disproves(p, v.witness->image, 6));
            }
        }
    }
    CHECK(certified > 50);
    CHECK(refuted > 50);
}

TEST_CASE("refute_embedding") {
    const auto p = ex51();
    CHECK_FALSE(refute_embedding(p, RationalSimilitude(), 4));
    CHECK_FALSE(refute_embedding(p, parse_similitude("refl=3/5,-4/5 t=3/5,6/5"), 4));
    const auto w = refute_embedding(p, parse_similitude("rot=3/5,4/5 t=3/5,6/5"), 3);
    REQUIRE(w);
    CHECK(contains_point(p, w->source));
    CHECK(brute_disproves(p, w->image, 4));
    CHECK(w->tail.size() <= 3);
    for (const auto& pat : valid_patterns()) CHECK_FALSE(refute_embedding(pat, RationalSimilitude(), 3));
    CHECK_THROWS_AS(refute_embedding(p, parse_similitude("scale=2^1/2"), 2), UnsupportedError);
}

TEST_CASE("embedding_prefilter") {
    const auto a = embedding_prefilter(p32(), parse_similitude("scale=1/3 rot=3/5,4/5"));
    CHECK(a.ruled_out);
    CHECK(a.verdict == "ruled out by non-obliqueness");
    CHECK_FALSE(a.checks[1].applicable);

    const auto b = embedding_prefilter(bm42(), parse_similitude("scale=1/6"));
    CHECK(b.ruled_out);
    CHECK(b.verdict == "ruled out by log-commensurability");
    CHECK_FALSE(embedding_prefilter(bm42(), parse_similitude("scale=1/8")).ruled_out);
    CHECK_FALSE(embedding_prefilter(bm42(), parse_similitude("scale=2^-1/3")).ruled_out);

    const auto c = embedding_prefilter(ex51(), parse_similitude("rot=4/5,3/5"));
    CHECK(c.ruled_out);
    CHECK(c.verdict == "ruled out by rotation-angle (Niven)");
    // the same rotation on a carpet without verified separation is not filtered
    CHECK_FALSE(embedding_prefilter(sierpinski33(), parse_similitude("rot=4/5,3/5")).ruled_out);
    CHECK_FALSE(embedding_prefilter(ex51(), parse_similitude("refl=4/5,3/5")).ruled_out);
    CHECK(embedding_prefilter(ex51(), RationalSimilitude()).isometry);

    // no filter rules out a true symmetry
    for (const auto& p : square_patterns()) {
        for (const auto& cert : symmetry_search(p, 13)) CHECK_FALSE(embedding_prefilter(p, cert.map()).ruled_out);
    }
    for (const auto& p : valid_patterns()) {
        for (const auto& d : p.digits()) {
            if (p.self_similar()) CHECK_FALSE(embedding_prefilter(p, cylinder_map(p, d)).ruled_out);
        }
    }
}
