#include "carpet/errors.hpp"
#include "carpet/pattern.hpp"
#include "carpet/similitude.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace carpet;

namespace {

Rational q(long a, long b = 1) { return Rational(a, b); }

// Independent matrix model: (M, t) with z -> M z + t.
struct Affine {
    std::array<Rational, 4> m;
    Point2 t;
};

Affine affine_of(const RationalSimilitude& f) { return {f.linear_matrix(), f.translation()}; }

Affine mul(const Affine& f, const Affine& g) {
    const auto& a = f.m;
    const auto& b = g.m;
    Affine r;
    r.m = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    r.t = {a[0] * g.t.x + a[1] * g.t.y + f.t.x, a[2] * g.t.x + a[3] * g.t.y + f.t.y};
    return r;
}

bool same(const Affine& f, const Affine& g) { return f.m == g.m && f.t == g.t; }

RationalSimilitude random_similitude(std::mt19937& rng, const std::vector<RationalOrthogonal>& pool) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    std::uniform_int_distribution<int> small(-6, 6);
    std::uniform_int_distribution<int> den(1, 7);
    const Rational s(std::abs(small(rng)) + 1, den(rng));
    return RationalSimilitude(ScaleValue::from_rational(s), pool[static_cast<std::size_t>(pick(rng))],
                              {Rational(small(rng), den(rng)), Rational(small(rng), den(rng))});
}

}  // namespace

TEST_CASE("compose: identity is neutral") {
    const auto f = parse_similitude("scale=2/7 refl=3/5,-4/5 t=1/3,-2");
    CHECK(compose(RationalSimilitude(), f) == f);
    CHECK(compose(f, RationalSimilitude()) == f);
}

TEST_CASE("compose: two cylinder maps of the 4x4 pattern") {
    const auto p = parse_pattern("4 4\n0 1\n1 3\n2 0\n3 2\n");
    const auto f = compose(cylinder_map(p, {0, 1}), cylinder_map(p, {1, 3}));
    CHECK(f.scale().to_rational() == q(1, 16));
    CHECK(f.orthogonal().is_identity());
    CHECK(f.translation() == Point2{q(1, 16), q(7, 16)});
}

TEST_CASE("compose: 3-4-5 rotation squared") {
    const auto r = RationalOrthogonal::rotation(q(3, 5), q(4, 5));
    const auto r2 = r.compose(r);
    CHECK(r2 == RationalOrthogonal::rotation(q(-7, 25), q(24, 25)));
}

TEST_CASE("compose agrees with matrix multiplication; group laws") {
    std::mt19937 rng(7);
    const auto pool = enumerate_rational_orthogonals(25);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_similitude(rng, pool);
        const auto g = random_similitude(rng, pool);
        const auto h = random_similitude(rng, pool);
        const auto fg = compose(f, g);
        CHECK(same(affine_of(fg), mul(affine_of(f), affine_of(g))));
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
        CHECK(compose(f.inverse(), f) == RationalSimilitude());
        CHECK(compose(f, f.inverse()) == RationalSimilitude());
        const auto& o = fg.orthogonal();
        CHECK(o.a() * o.a() + o.b() * o.b() == 1);
    }
}

TEST_CASE("obliqueness survives scalings and translations") {
    std::mt19937 rng(11);
    const auto pool = enumerate_rational_orthogonals(13);
    for (const auto& o : pool) {
        const RationalSimilitude f(ScaleValue::from_rational(q(1, 3)), o, {q(1, 2), q(0)});
        const RationalSimilitude s(ScaleValue::from_rational(q(5, 2)), RationalOrthogonal::identity(), {q(-1, 7), q(2, 9)});
        CHECK(is_oblique(compose(f, s)) == is_oblique(f));
        CHECK(is_oblique(compose(s, f)) == is_oblique(f));
    }
}

TEST_CASE("is_oblique examples") {
    auto sim = [](const RationalOrthogonal& o) { return RationalSimilitude(ScaleValue(), o, {q(0), q(0)}); };
    CHECK(is_oblique(sim(RationalOrthogonal::rotation(q(3, 5), q(4, 5)))));
    CHECK_FALSE(is_oblique(sim(RationalOrthogonal::rotation(q(0), q(1)))));
    const auto refl = RationalOrthogonal::reflection(q(3, 5), q(-4, 5));
    CHECK(refl.matrix() == std::array<Rational, 4>{q(3, 5), q(-4, 5), q(-4, 5), q(-3, 5)});
    CHECK(is_oblique(sim(refl)));
    CHECK(refl.determinant() == -1);

    const auto p = parse_pattern("3 2\n0 0\n2 0\n1 1\n");
    CHECK_THROWS_AS(is_oblique(cylinder_map(p, {2, 0})), DomainError);
}

TEST_CASE("flagged diagonal maps reject oblique composition") {
    const auto p = parse_pattern("3 2\n0 0\n2 0\n1 1\n");
    const auto phi = cylinder_map(p, {2, 0});
    CHECK_FALSE(phi.is_similitude());
    CHECK(phi.translation() == Point2{q(2, 3), q(0)});
    const RationalSimilitude rot(ScaleValue(), RationalOrthogonal::rotation(q(3, 5), q(4, 5)), {q(0), q(0)});
    CHECK_THROWS_AS(compose(phi, rot), UnsupportedError);
    CHECK_THROWS_AS(compose(rot, phi), UnsupportedError);
    // quarter turns are fine and swap the diagonal factors
    const RationalSimilitude quarter(ScaleValue(), RationalOrthogonal::rotation(q(0), q(1)), {q(0), q(0)});
    const auto c = compose(quarter, phi);
    CHECK(c.diagonal() == std::make_pair(q(1, 2), q(1, 3)));
    CHECK(same(affine_of(c), mul(affine_of(quarter), affine_of(phi))));
}

TEST_CASE("log_commensurable examples") {
    const auto four = ScaleValue::from_rational(q(4));
    CHECK(log_commensurable(ScaleValue::from_rational(q(1, 8)), four) == q(-3, 2));
    CHECK_FALSE(log_commensurable(ScaleValue::from_rational(q(1, 6)), four).has_value());
    const auto cube_root_two = ScaleValue::from_exponents({{BigInt(2), q(1, 3)}});
    CHECK(log_commensurable(cube_root_two, ScaleValue::from_rational(q(2))) == q(1, 3));
    CHECK_THROWS_AS(log_commensurable(four, ScaleValue()), DomainError);
}

TEST_CASE("log_commensurable round trip") {
    const std::vector<ScaleValue> bases = {ScaleValue::from_rational(q(2)), ScaleValue::from_rational(q(6)),
                                           ScaleValue::from_rational(q(12)), ScaleValue::from_rational(q(9, 4))};
    const std::vector<Rational> exps = {q(1), q(-1), q(2, 3), q(-5, 7), q(0)};
    for (const auto& b : bases) {
        for (const auto& e : exps) {
            const auto lambda = b.pow(e);
            const auto r = log_commensurable(lambda, b);
            REQUIRE(r.has_value());
            CHECK(b.pow(*r) == lambda);
        }
    }
}

TEST_CASE("scale values") {
    const auto s = ScaleValue::from_rational(q(12, 5));
    CHECK(s.is_rational());
    CHECK(s.to_rational() == q(12, 5));
    CHECK(s.str() == "12/5");
    const auto r = ScaleValue::power(BigInt(4), q(1, 3));
    CHECK_FALSE(r.is_rational());
    CHECK(r.str() == "2^2/3");
    CHECK_THROWS_AS(r.to_rational(), UnsupportedError);
    CHECK((r * r * r).to_rational() == 4);
    CHECK_THROWS_AS(ScaleValue::from_rational(q(0)), DomainError);
    CHECK_THROWS_AS(ScaleValue::from_exponents({{BigInt(4), q(1)}}), DomainError);
    const double l = static_cast<double>(r.log(30));
    CHECK(l == doctest::Approx(std::log(4.0) / 3));
}

TEST_CASE("enumerate_rational_orthogonals") {
    const auto h1 = enumerate_rational_orthogonals(1);
    CHECK(h1.size() == 8);
    std::set<std::array<Rational, 4>> mats;
    for (const auto& o : h1) mats.insert(o.matrix());
    CHECK(mats.size() == 8);
    for (const auto& o : h1) CHECK(o.is_axis_aligned());

    const auto h5 = enumerate_rational_orthogonals(5);
    CHECK(h5.size() == 24);
    std::set<std::array<Rational, 4>> all;
    int rotations = 0;
    for (std::size_t k = 8; k < h5.size(); ++k) rotations += h5[k].is_rotation();
    CHECK(rotations == 8);
    for (const auto& o : h5) {
        CHECK(o.a() * o.a() + o.b() * o.b() == 1);
        all.insert(o.matrix());
    }
    CHECK(all.size() == 24);
    CHECK(enumerate_rational_orthogonals(5) == h5);
    // hypotenuses 10 and 15 have no primitive triples
    CHECK(enumerate_rational_orthogonals(16).size() == 24 + 16);
}

TEST_CASE("parse_similitude") {
    const auto f = parse_similitude("refl=3/5,-4/5 t=3/5,6/5 scale=1");
    CHECK(f.scale().is_one());
    CHECK(f.orthogonal() == RationalOrthogonal::reflection(q(3, 5), q(-4, 5)));
    CHECK(f.translation() == Point2{q(3, 5), q(6, 5)});
    const auto g = parse_similitude("scale=2^1/3*3^-2");
    CHECK(g.scale() == ScaleValue::from_exponents({{BigInt(2), q(1, 3)}, {BigInt(3), q(-2)}}));
    CHECK(parse_similitude("scale=1/6 t=0,0 diag=1,1").scale().to_rational() == q(1, 6));
    CHECK_THROWS_AS(parse_similitude("rot=1,1"), DomainError);
    CHECK_THROWS_AS(parse_similitude("spin=1"), ParseError);
    CHECK_THROWS_AS(parse_similitude("t=1"), ParseError);
    CHECK(parse_similitude(f.str()) == f);
}
