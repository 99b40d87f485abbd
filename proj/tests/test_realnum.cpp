// Certified arithmetic: grammar round trips, enclosure contracts, exact tie
// detection, and the nearest-integer distance <x>.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "littlewood/realnum.hpp"

using namespace littlewood;

namespace {

// Independent sqrt oracle: integer square root of d * 10^(2k) over GMP gives
// s/10^k <= sqrt(d) < (s+1)/10^k without touching the MPFR evaluation path.
std::pair<BigRat, BigRat> isqrt_enclosure(long d, int k) {
    BigInt scale = 1;
    for (int i = 0; i < k; ++i) scale *= 10;
    BigInt target = BigInt(d) * scale * scale;
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), target.get_mpz_t());
    return {make_rat(s, scale), make_rat(s + 1, scale)};
}

// Independent oracle for e: partial sums of sum 1/k! in exact rationals;
// tail < 2/(n+1)! for n >= 1.
std::pair<BigRat, BigRat> e_enclosure(int terms) {
    BigRat sum(0);
    BigInt fact(1);
    for (int k = 0; k <= terms; ++k) {
        if (k > 0) fact *= k;
        sum += make_rat(BigInt(1), fact);
    }
    BigRat tail = make_rat(BigInt(2), fact * (terms + 1));
    return {sum, sum + tail};
}

RealSpec random_spec(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    std::uniform_int_distribution<int> dix(0, 7);
    static const long ds[] = {2, 3, 5, 6, 7, 10, 11, 13};
    switch (kind(rng)) {
        case 0: return RealSpec::rational(num(rng), den(rng));
        case 1:
            return RealSpec::surd(make_rat(num(rng), den(rng)),
                                  make_rat(num(rng) == 0 ? 1 : num(rng), den(rng)),
                                  BigInt(ds[dix(rng)]));
        default: {
            long digits = std::abs(num(rng));
            std::string s = (num(rng) < 0 ? "-" : "") + std::to_string(digits / 1000) + "." +
                            std::to_string(digits % 1000);
            return parse_realspec(s);
        }
    }
}

}  // namespace

TEST_CASE("dyadic rationals evaluate exactly") {
    Real half = Real::from_rational(make_rat(1, 2));
    Ival e = half.eval(32);
    REQUIRE(e.is_point());
    REQUIRE(e.lo_d() == 0.5);
}

TEST_CASE("sqrt(2) enclosure against the integer-sqrt oracle") {
    Real r2 = Real::from_spec(RealSpec::surd(BigRat(0), BigRat(1), BigInt(2)));
    Ival e = r2.eval(64);
    auto [lo, hi] = isqrt_enclosure(2, 30);
    // interval overlaps the oracle enclosure and is far narrower than it
    REQUIRE(mpfr_cmp_q(e.lo(), hi.get_mpq_t()) <= 0);
    REQUIRE(mpfr_cmp_q(e.hi(), lo.get_mpq_t()) >= 0);
    REQUIRE(e.width_d() <= std::ldexp(2.0, -63));
}

TEST_CASE("finite decimals are exact rationals") {
    RealSpec d = parse_realspec("0.3335");
    auto& lit = std::get<RealSpec::DecimalLiteral>(d.v);
    REQUIRE(lit.value == make_rat(667, 2000));
    Ival e = Real::from_spec(d).eval(64);
    REQUIRE(e.contains_q(make_rat(667, 2000)));
}

TEST_CASE("parse/print round trip is exact") {
    for (const char* s : {"1/2", "5", "-3/4", "0.3335", "-12.5", "0+1*sqrt(2)",
                          "1/2+1/2*sqrt(5)", "3-2/7*sqrt(10)", "sqrt(3)"}) {
        RealSpec a = parse_realspec(s);
        RealSpec b = parse_realspec(print_realspec(a));
        REQUIRE(a == b);
    }
    std::mt19937_64 rng(20240811);
    for (int i = 0; i < 500; ++i) {
        RealSpec a = random_spec(rng);
        REQUIRE(parse_realspec(print_realspec(a)) == a);
    }
}

TEST_CASE("surd normalization keeps radicands square-free") {
    RealSpec s = parse_realspec("0+1*sqrt(8)");  // = 2*sqrt(2)
    auto& q = std::get<RealSpec::QuadraticSurd>(s.v);
    REQUIRE(q.d == 2);
    REQUIRE(q.b == 2);
    RealSpec r = parse_realspec("1+3*sqrt(4)");  // = 7, rational
    REQUIRE(r.is_rational_value());
    REQUIRE(std::get<RealSpec::Rational>(r.v).value == 7);
}

TEST_CASE("eval contains the exact value for random rationals") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000000L, 1000000000L);
    std::uniform_int_distribution<long> den(1, 1000000000L);
    std::uniform_int_distribution<int> precs(8, 200);
    for (int i = 0; i < 1000; ++i) {
        BigRat q = make_rat(num(rng), den(rng));
        Ival e = Real::from_rational(q).eval(precs(rng));
        REQUIRE(e.contains_q(q));
    }
}

TEST_CASE("refinement is monotone") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        RealSpec s = random_spec(rng);
        Real x = Real::from_spec(s);
        Real y = log(exp(x) + Real::from_long(1));  // force a non-exact tree
        std::uniform_int_distribution<int> precs(16, 160);
        mpfr_prec_t p = precs(rng);
        REQUIRE(y.eval(p + 16).subset_of(y.eval(p)));
        REQUIRE(x.eval(p + 16).subset_of(x.eval(p)));
    }
}

TEST_CASE("width contract") {
    // width <= 2^(1-p) * max(1, |x|)
    std::mt19937_64 rng(123);
    for (int i = 0; i < 200; ++i) {
        RealSpec s = random_spec(rng);
        Real x = Real::from_spec(s);
        for (mpfr_prec_t p : {16, 64, 128}) {
            Ival e = x.eval(p);
            double bound = std::ldexp(1.0, static_cast<int>(1 - p)) *
                           std::max(1.0, std::max(std::abs(e.lo_d()), std::abs(e.hi_d())));
            REQUIRE(e.width_d() <= bound);
        }
    }
}

TEST_CASE("compare resolves strict inequalities") {
    Real r2 = Real::from_spec(parse_realspec("sqrt(2)"));
    REQUIRE(compare(r2, Real::from_rational(make_rat(3, 2)), Rel::GT).is_false());
    REQUIRE(compare(r2, Real::from_rational(make_rat(3, 2)), Rel::LT).is_true());

    // e > 2.718, cross-checked against the series oracle
    auto [elo, ehi] = e_enclosure(20);
    REQUIRE(elo > make_rat(2718, 1000));
    Real e1 = exp(Real::from_long(1));
    REQUIRE(compare(e1, Real::from_rational(make_rat(2718, 1000)), Rel::GT).is_true());
    Ival ee = e1.eval(200);
    REQUIRE(mpfr_cmp_q(ee.lo(), elo.get_mpq_t()) >= 0);
    REQUIRE(mpfr_cmp_q(ee.hi(), ehi.get_mpq_t()) <= 0);
}

TEST_CASE("exact ties surface as Undecided(exact-tie) on strict relations") {
    Real x = Real::from_rational(make_rat(1, 3)) + Real::from_rational(make_rat(1, 6));
    Real y = Real::from_rational(make_rat(1, 2));
    Decision lt = compare(x, y, Rel::LT);
    REQUIRE(lt.undecided());
    REQUIRE(lt.exact_tie());
    REQUIRE(compare(x, y, Rel::LE).is_true());
    REQUIRE(compare(x, y, Rel::EQ).is_true());
    REQUIRE(compare(x, y, Rel::NE).is_false());
    // membership semantics: strict constraint on the boundary is violated
    REQUIRE(membership(lt) == Tri::False_);
}

TEST_CASE("surd ties are symbolically exact") {
    Real a = Real::from_spec(parse_realspec("1+1*sqrt(2)"));
    Real b = Real::from_spec(parse_realspec("sqrt(8)"));  // 2 sqrt2
    Real diff = b - a;  // sqrt2 - 1 > 0
    REQUIRE(compare(b, a, Rel::GT).is_true());
    Real twice = Real::from_spec(parse_realspec("sqrt(2)")) + Real::from_long(1);
    REQUIRE(compare(a, twice, Rel::EQ).is_true());
    (void)diff;
}

TEST_CASE("compare is antisymmetric on random pairs") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 300; ++i) {
        Real x = Real::from_spec(random_spec(rng));
        Real y = Real::from_spec(random_spec(rng));
        Decision xy = compare(x, y, Rel::LT);
        Decision yx = compare(y, x, Rel::LT);
        if (xy.is_true()) REQUIRE(yx.is_false());
        if (xy.exact_tie()) REQUIRE(yx.exact_tie());
    }
}

TEST_CASE("nearest integer basics") {
    NearestInt a = nearest_integer(Real::from_rational(make_rat(5, 4)));
    REQUIRE(a.k == 1);
    REQUIRE(a.dist.contains_q(make_rat(1, 4)));
    REQUIRE_FALSE(a.tie);

    NearestInt b = nearest_integer(Real::from_rational(make_rat(-7, 4)));
    REQUIRE(b.k == -2);
    REQUIRE(b.dist.contains_q(make_rat(1, 4)));

    // 5*sqrt(2) = 7.0710678...; distance checked against the integer-sqrt oracle
    Real fs = Real::from_long(5) * Real::from_spec(parse_realspec("sqrt(2)"));
    NearestInt c = nearest_integer(fs);
    REQUIRE(c.k == 7);
    auto [lo, hi] = isqrt_enclosure(2, 25);
    BigRat dlo = lo * 5 - 7, dhi = hi * 5 - 7;
    REQUIRE(mpfr_cmp_q(c.dist.lo(), dhi.get_mpq_t()) <= 0);
    REQUIRE(mpfr_cmp_q(c.dist.hi(), dlo.get_mpq_t()) >= 0);

    // exact half-integers: tie flag and smaller-|k| rule
    NearestInt t1 = nearest_integer(Real::from_rational(make_rat(3, 2)));
    REQUIRE(t1.tie);
    REQUIRE(t1.k == 1);
    REQUIRE(t1.dist.contains_q(make_rat(1, 2)));
    NearestInt t2 = nearest_integer(Real::from_rational(make_rat(-3, 2)));
    REQUIRE(t2.tie);
    REQUIRE(t2.k == -1);
}

TEST_CASE("<x> properties over random specs") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> shift(-50, 50);
    for (int i = 0; i < 300; ++i) {
        Real x = Real::from_spec(random_spec(rng));
        NearestInt n0 = nearest_integer(x);
        // 0 <= <x> <= 1/2
        REQUIRE(mpfr_sgn(n0.dist.lo()) >= 0);
        BigRat half = make_rat(1, 2);
        REQUIRE(mpfr_cmp_q(n0.dist.lo(), half.get_mpq_t()) <= 0);
        // <x + k> = <x>
        long k = shift(rng);
        NearestInt n1 = nearest_integer(x + Real::from_long(k));
        REQUIRE(n1.k == n0.k + k);
        REQUIRE(n1.tie == n0.tie);
        // <-x> = <x>
        NearestInt n2 = nearest_integer(-x);
        Real d0 = abs(x - Real::from_long(static_cast<long>(n0.k)));
        Real d2 = abs(-x - Real::from_long(static_cast<long>(n2.k)));
        REQUIRE(compare(d0, d2, Rel::EQ).is_true());
    }
}

TEST_CASE("log of certified-nonpositive input is a domain error") {
    REQUIRE_THROWS_AS(log(Real::from_long(-1)), std::domain_error);
    REQUIRE_THROWS_AS(log(Real::from_long(0)), std::domain_error);
}

TEST_CASE("division by exact zero is a domain error") {
    REQUIRE_THROWS_AS(Real::from_long(1) / Real::from_long(0), std::domain_error);
}

TEST_CASE("flow-entry folding keeps logs exact") {
    Real l2 = log(Real::from_long(2));
    Real l3 = log(Real::from_long(3));
    Real a = exp(-(l2 + l3));
    REQUIRE(a.is_exact());
    REQUIRE(a.exact_value().rational_value() == make_rat(1, 6));
    REQUIRE(exp(Real::from_long(0)).is_exact());
    REQUIRE(log(exp(Real::from_long(7))).is_exact());
}
