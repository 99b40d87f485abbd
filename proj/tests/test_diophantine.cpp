// Littlewood products and the counting set: brute force vs candidate scan,
// witness correctness, monotonicity, and the multiplication inequality.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>

#include "littlewood/diophantine.hpp"

using namespace littlewood;

namespace {

Real R(long n) { return Real::from_long(n); }
Real Rq(long n, long d) { return Real::from_rational(make_rat(n, d)); }
Real Rs(const char* s) { return Real::from_spec(parse_realspec(s)); }

std::set<long long> hit_set(const LambdaResult& r) {
    std::set<long long> s;
    for (const auto& h : r.hits) s.insert(h.n);
    return s;
}

}  // namespace

TEST_CASE("littlewood product: exact rational cases") {
    Ival p = littlewood_product(1, Rq(1, 2), Rq(1, 2));
    REQUIRE(p.contains_q(make_rat(1, 4)));
    REQUIRE(p.width_d() == 0.0);

    // n*alpha integral => <n alpha> = 0 => product exactly 0
    Ival z = littlewood_product(2, Rq(1, 2), Rs("sqrt(3)"));
    REQUIRE(z.contains_q(BigRat(0)));
    REQUIRE(z.width_d() == 0.0);
}

TEST_CASE("littlewood product: surd case against exact radical arithmetic") {
    // 5 <5 sqrt2><5 sqrt3> = 5 (5 sqrt2 - 7)(9 - 5 sqrt3) ~ 0.120726
    RadicalSum s2 = RadicalSum::surd(BigRat(1), BigInt(2));
    RadicalSum s3 = RadicalSum::surd(BigRat(1), BigInt(3));
    RadicalSum five = RadicalSum::from_long(5);
    RadicalSum expected = five * (five * s2 - RadicalSum::from_long(7)) *
                          (RadicalSum::from_long(9) - five * s3);
    REQUIRE(expected.sign() > 0);
    Ival want = expected.eval(160);

    Ival got = littlewood_product(5, Rs("sqrt(2)"), Rs("sqrt(3)"));
    REQUIRE(got.lo_d() <= want.hi_d());
    REQUIRE(got.hi_d() >= want.lo_d());
    REQUIRE(got.mid_d() == Catch::Approx(0.120726).margin(1e-5));
}

TEST_CASE("brute force: simple surd configuration") {
    // <sqrt2>^2 = (sqrt2 - 1)^2 = 3 - 2 sqrt2 ~ 0.1716 < 0.5: n = 1 is a hit
    LambdaResult r = lambda_bruteforce(Rs("sqrt(2)"), Rs("sqrt(2)"), 10, Rq(1, 2));
    REQUIRE(r.undecided.empty());
    REQUIRE(hit_set(r).count(1) == 1);
    RadicalSum exact = RadicalSum::from_long(3) -
                       RadicalSum::surd(BigRat(2), BigInt(2));
    REQUIRE(r.hits[0].product.lo_d() <= exact.eval(128).hi_d());
    REQUIRE(r.hits[0].product.hi_d() >= exact.eval(128).lo_d());
    for (const auto& h : r.hits) REQUIRE(h.m1 == h.m2);  // alpha == beta
}

TEST_CASE("strictness at an exact boundary") {
    // alpha = beta = 1/2: product(1) = 1/4 exactly
    Real half = Rq(1, 2), quarter = Rq(1, 4);
    LambdaResult strict = lambda_bruteforce(half, half, 1, quarter, true);
    REQUIRE(strict.hits.empty());
    REQUIRE(strict.undecided.empty());  // the tie is resolved, not punted
    LambdaResult loose = lambda_bruteforce(half, half, 1, quarter, false);
    REQUIRE(hit_set(loose) == std::set<long long>{1});
}

TEST_CASE("eps = 0 yields an empty strict set") {
    LambdaResult r = lambda_bruteforce(Rs("sqrt(2)"), Rs("sqrt(3)"), 100, R(0), true);
    REQUIRE(r.hits.empty());
    REQUIRE(r.undecided.empty());
}

TEST_CASE("two-tier scan against a plain floating-point oracle") {
    const double a = std::sqrt(2.0), b = std::sqrt(3.0), eps = 0.1;
    const long long N = 1000;
    Real alpha = Rs("sqrt(2)"), beta = Rs("sqrt(3)"), theta = Rq(1, 10);
    std::set<long long> oracle;
    for (long long n = 1; n <= N; ++n) {
        double d1 = std::abs(n * a - std::nearbyint(n * a));
        double d2 = std::abs(n * b - std::nearbyint(n * b));
        double p = static_cast<double>(n) * d1 * d2;
        if (std::abs(p - eps) < 1e-6 * eps) {
            // near-threshold: certified recheck at 128 bits
            Real prod = R(static_cast<long>(n)) * frac_distance(R(static_cast<long>(n)) * alpha) *
                        frac_distance(R(static_cast<long>(n)) * beta);
            if (compare(prod, theta, Rel::LT, 128).is_true()) oracle.insert(n);
        } else if (p < eps) {
            oracle.insert(n);
        }
    }
    LambdaResult r = lambda_bruteforce(alpha, beta, N, theta);
    REQUIRE(r.undecided.empty());
    REQUIRE(hit_set(r) == oracle);
}

TEST_CASE("candidate path equals brute force") {
    struct Config {
        const char *a, *b;
        long num, den;
        long long N;
    };
    const Config cfgs[] = {
        {"sqrt(2)", "sqrt(3)", 3, 10, 20000},
        {"1/2+1/2*sqrt(5)", "sqrt(2)", 1, 10, 20000},
        {"sqrt(2)", "sqrt(3)", 3, 100, 50000},
        {"1/10+1/100000*sqrt(2)", "1/10+1/100000*sqrt(3)", 1, 50, 20000},
        {"sqrt(7)", "1/2+1/2*sqrt(5)", 1, 1000, 50000},
    };
    for (const auto& c : cfgs) {
        Real alpha = Rs(c.a), beta = Rs(c.b), theta = Rq(c.num, c.den);
        for (bool strict : {true, false}) {
            LambdaResult bf = lambda_bruteforce(alpha, beta, c.N, theta, strict);
            FastOptions fo;
            fo.force_candidates = true;
            LambdaResult fast = lambda_fast_n(alpha, beta, c.N, theta, strict, fo);
            REQUIRE(bf.undecided.empty());
            REQUIRE(fast.undecided.empty());
            REQUIRE(hit_set(bf) == hit_set(fast));
        }
    }
}

TEST_CASE("large-threshold stress: no candidate missed when every n qualifies") {
    Real alpha = Rs("sqrt(2)"), beta = Rs("sqrt(3)");
    FastOptions fo;
    fo.force_candidates = true;
    LambdaResult bf = lambda_bruteforce(alpha, beta, 10000, Rq(3, 10));
    LambdaResult fast = lambda_fast_n(alpha, beta, 10000, Rq(3, 10), true, fo);
    REQUIRE(hit_set(bf) == hit_set(fast));
    REQUIRE(bf.hits.size() > 100);  // the threshold really is generous
}

TEST_CASE("golden ratio: one-sided small products sit exactly on the Fibonacci numbers") {
    // n <n phi> < 1/2 happens precisely at the convergent denominators
    FixedFrac phi(Rs("1/2+1/2*sqrt(5)"));
    std::set<long long> fib;
    for (long long a = 1, b = 2; b <= 100000; ) {
        fib.insert(b);
        long long t = a + b;
        a = b;
        b = t;
    }
    for (long long n = 1; n <= 100000; ++n) {
        FracDist d = phi.near(n);
        double lo = static_cast<double>(n) * std::ldexp(static_cast<double>(d.lo), -62);
        double hi = static_cast<double>(n) * std::ldexp(static_cast<double>(d.hi), -62);
        REQUIRE(hi - lo < 1e-6);  // resolution sanity
        bool small = hi < 0.5;
        if (!small) REQUIRE(lo > 0.5 - 1e-6);
        REQUIRE(small == (fib.count(n) == 1));
    }
}

TEST_CASE("set monotonicity in threshold and bound") {
    Real alpha = Rs("sqrt(2)"), beta = Rs("1/2+1/2*sqrt(5)");
    LambdaResult small = lambda_bruteforce(alpha, beta, 5000, Rq(3, 100));
    LambdaResult big = lambda_bruteforce(alpha, beta, 5000, Rq(3, 10));
    auto ss = hit_set(small), bs = hit_set(big);
    REQUIRE(std::includes(bs.begin(), bs.end(), ss.begin(), ss.end()));

    LambdaResult shorter = lambda_bruteforce(alpha, beta, 2000, Rq(3, 10));
    auto hs = hit_set(shorter);
    REQUIRE(std::includes(bs.begin(), bs.end(), hs.begin(), hs.end()));
}

TEST_CASE("hit witnesses are nearest integers") {
    Real alpha = Rs("sqrt(2)"), beta = Rs("sqrt(3)");
    LambdaResult r = lambda_bruteforce(alpha, beta, 3000, Rq(1, 10));
    REQUIRE_FALSE(r.hits.empty());
    for (const auto& h : r.hits) {
        REQUIRE(nearest_integer(R(static_cast<long>(h.n)) * alpha).k == -h.m1);
        REQUIRE(nearest_integer(R(static_cast<long>(h.n)) * beta).k == -h.m2);
        REQUIRE(h.product.lo_d() >= 0.0);
    }
}

TEST_CASE("multiplication inequality: product(kn) <= k^3 product(n)") {
    // from <k x> <= k <x>; this is the engine behind the witness chain
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long long> nd(1, 5000);
    std::uniform_int_distribution<long long> kd(2, 7);
    Real alpha = Rs("sqrt(2)"), beta = Rs("1/2+1/2*sqrt(5)");
    for (int i = 0; i < 50; ++i) {
        long long n = nd(rng), k = kd(rng);
        Real pn = R(static_cast<long>(n)) * frac_distance(R(static_cast<long>(n)) * alpha) *
                  frac_distance(R(static_cast<long>(n)) * beta);
        long long kn = k * n;
        Real pk = R(static_cast<long>(kn)) * frac_distance(R(static_cast<long>(kn)) * alpha) *
                  frac_distance(R(static_cast<long>(kn)) * beta);
        Real bound = R(static_cast<long>(k * k * k)) * pn;
        REQUIRE_FALSE(compare(pk, bound, Rel::GT).is_true());
    }
}

TEST_CASE("growth table") {
    Real alpha = Rs("sqrt(2)"), beta = Rs("sqrt(3)");
    // a tiny threshold gives zero counts at small N
    auto rows0 = growth_table(alpha, beta, Rq(1, 1000000), {16});
    REQUIRE(rows0[0].count == 0);
    REQUIRE(rows0[0].normalized == 0.0);

    auto rows = growth_table(alpha, beta, Rq(3, 100), {100, 1000, 10000});
    REQUIRE(rows.size() == 3);
    for (size_t i = 1; i < rows.size(); ++i) REQUIRE(rows[i].count >= rows[i - 1].count);
    for (const auto& r : rows) {
        REQUIRE(r.normalizer > 0.0);
        REQUIRE(r.normalized >= 0.0);
        REQUIRE(r.reference == Catch::Approx(2.0 * 0.03 * std::pow(std::log(r.N), 2)));
    }
    REQUIRE_THROWS_AS(growth_table(alpha, beta, Rq(1, 10), {15}), std::domain_error);
}

TEST_CASE("T-mode bound") {
    // e^{2T} for T = log(10): n < 100, and 100 itself is excluded
    REQUIRE(lambda_bound_from_T(log(R(10))) == 99);
    REQUIRE(lambda_bound_from_T(Rq(3, 2)) == 20);  // e^3 = 20.08...
}
