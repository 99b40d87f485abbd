// diophantine.hpp
//
// The counting set Lambda_{alpha,beta,T,eps} = {n : n < e^{2T},
// n<n alpha><n beta> below a threshold}, with two scanning routes:
//
//  * lambda_bruteforce -- visits every n in [1, N]; a fixed-point screen
//    decides almost all n and near-threshold cases escalate to the exact
//    certified path (symbolic for rational/surd inputs).
//  * lambda_fast       -- candidate-driven: a hit needs
//    min(<n a>, <n b>) <= sqrt(theta/n), so per dyadic block [A, 2A) every
//    admissible n of either rotation is enumerated through the planar
//    lattice scanner with the block-wide bound sqrt(theta/A) (a superset,
//    never a miss), then each candidate gets the same certified product test.
//
// Both produce identical hit sets; the acceptance suite enforces that.

#ifndef LITTLEWOOD_DIOPHANTINE_HPP
#define LITTLEWOOD_DIOPHANTINE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "littlewood/approx.hpp"
#include "littlewood/realnum.hpp"

namespace littlewood {

struct LambdaHit {
    long long n = 0;
    long long m1 = 0, m2 = 0;  // |n*alpha + m1| = <n alpha>, same for m2
    Ival product;              // certified enclosure of n <n alpha><n beta>
    bool strict = true;        // admitted under "<" (true) or "<=" (false)
};

struct LambdaResult {
    std::vector<LambdaHit> hits;       // sorted by n
    std::vector<long long> undecided;  // unresolvable at max precision
};

constexpr long long kFastPathCrossover = 1000000;

// Certified scan machinery for one (alpha, beta) pair and one threshold.
class PairScan {
public:
    PairScan(const Real& alpha, const Real& beta, const Real& threshold, bool strict,
             mpfr_prec_t max_prec = kDefaultMaxPrec)
        : alpha_(alpha), beta_(beta), theta_(threshold), strict_(strict),
          max_prec_(max_prec), fa_(alpha), fb_(beta),
          theta_d_(DIv::from_ival(threshold.eval(96))) {}

    const Real& alpha() const { return alpha_; }
    const Real& beta() const { return beta_; }
    const FixedFrac& frac_alpha() const { return fa_; }
    const FixedFrac& frac_beta() const { return fb_; }

    Real product_expr(long long n, long long m1, long long m2) const {
        Real nn = Real::from_long(static_cast<long>(n));
        return nn * abs(nn * alpha_ + Real::from_long(static_cast<long>(m1))) *
               abs(nn * beta_ + Real::from_long(static_cast<long>(m2)));
    }

    enum class Outcome : int8_t { Miss, Hit, Undecided };

    // certified test of one n; fills the hit record on success
    Outcome test(long long n, LambdaHit& hit) const {
        FracDist da = fa_.near(n);
        FracDist db = fb_.near(n);
        DIv pa = DIv::of(dops::down(static_cast<double>(da.lo)),
                         dops::up(static_cast<double>(da.hi)));
        DIv pb = DIv::of(dops::down(static_cast<double>(db.lo)),
                         dops::up(static_cast<double>(db.hi)));
        DIv prod = dops::mul(dops::mul(pa, pb), DIv::point(static_cast<double>(n)));
        prod = dops::mul(prod, DIv::point(std::ldexp(1.0, -2 * kFracBits)));
        if (prod.lo > theta_d_.hi) return Outcome::Miss;
        if (prod.hi < theta_d_.lo && da.k_certain && db.k_certain) {
            hit.n = n;
            hit.m1 = -da.k;
            hit.m2 = -db.k;
            hit.strict = strict_;
            hit.product = product_expr(n, hit.m1, hit.m2).eval(128);
            return Outcome::Hit;
        }
        return exact_test(n, hit);
    }

private:
    Real alpha_, beta_, theta_;
    bool strict_;
    mpfr_prec_t max_prec_;
    FixedFrac fa_, fb_;
    DIv theta_d_;

    Outcome exact_test(long long n, LambdaHit& hit) const {
        Real nn = Real::from_long(static_cast<long>(n));
        NearestInt ka = nearest_integer(nn * alpha_, max_prec_);
        NearestInt kb = nearest_integer(nn * beta_, max_prec_);
        long long m1 = -ka.k, m2 = -kb.k;
        Real prod = product_expr(n, m1, m2);
        Decision d = compare(prod, theta_, strict_ ? Rel::LT : Rel::LE, max_prec_);
        Tri t = strict_ ? membership(d) : d.value;
        if (t == Tri::Undecided) return Outcome::Undecided;
        if (t == Tri::False_) return Outcome::Miss;
        hit.n = n;
        hit.m1 = m1;
        hit.m2 = m2;
        hit.strict = strict_;
        hit.product = prod.eval(128);
        return Outcome::Hit;
    }
};

inline LambdaResult lambda_bruteforce(const Real& alpha, const Real& beta, long long N,
                                      const Real& threshold, bool strict = true,
                                      mpfr_prec_t max_prec = kDefaultMaxPrec) {
    if (N < 1) return {};
    PairScan scan(alpha, beta, threshold, strict, max_prec);
    LambdaResult out;
    LambdaHit hit;
    for (long long n = 1; n <= N; ++n) {
        switch (scan.test(n, hit)) {
            case PairScan::Outcome::Hit: out.hits.push_back(hit); break;
            case PairScan::Outcome::Undecided: out.undecided.push_back(n); break;
            case PairScan::Outcome::Miss: break;
        }
    }
    return out;
}

struct FastOptions {
    bool force_candidates = false;       // exercise the candidate path below the crossover
    long long crossover = kFastPathCrossover;
};

inline LambdaResult lambda_fast_n(const Real& alpha, const Real& beta, long long N,
                                  const Real& threshold, bool strict = true,
                                  FastOptions opt = {},
                                  mpfr_prec_t max_prec = kDefaultMaxPrec) {
    if (N < 1) return {};
    if (N <= opt.crossover && !opt.force_candidates)
        return lambda_bruteforce(alpha, beta, N, threshold, strict, max_prec);
    if (N > FixedFrac::max_n())
        throw std::domain_error("lambda_fast: bound exceeds the configured integer range");

    PairScan scan(alpha, beta, threshold, strict, max_prec);
    double th_hi = threshold.eval(96).hi_d();
    if (!(th_hi >= 0)) return {};

    std::vector<long long> cand;
    for (const FixedFrac* f : {&scan.frac_alpha(), &scan.frac_beta()}) {
        for (long long A = 1; A <= N; A *= 2) {
            long long B = std::min(N, 2 * A - 1);
            // block-wide admissibility bound sqrt(theta / A) >= sqrt(theta / n)
            double u_hi = dops::up(std::sqrt(dops::up(th_hi / static_cast<double>(A))));
            scan_admissible(*f, A, B, DIv::of(0.0, u_hi),
                            [&cand](const Admissible& a) { cand.push_back(a.n); });
        }
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    LambdaResult out;
    LambdaHit hit;
    for (long long n : cand) {
        switch (scan.test(n, hit)) {
            case PairScan::Outcome::Hit: out.hits.push_back(hit); break;
            case PairScan::Outcome::Undecided: out.undecided.push_back(n); break;
            case PairScan::Outcome::Miss: break;
        }
    }
    return out;
}

// bound given as T: n < e^{2T}
inline long long lambda_bound_from_T(const Real& T) {
    Real e2T = exp(Real::from_long(2) * T);
    return strict_floor(e2T);
}

inline LambdaResult lambda_fast(const Real& alpha, const Real& beta, const Real& T,
                                const Real& threshold, bool strict = true,
                                FastOptions opt = {},
                                mpfr_prec_t max_prec = kDefaultMaxPrec) {
    return lambda_fast_n(alpha, beta, lambda_bound_from_T(T), threshold, strict, opt, max_prec);
}

// auto-select: brute force below the crossover, candidates above
inline LambdaResult lambda_auto(const Real& alpha, const Real& beta, long long N,
                                const Real& threshold, bool strict = true,
                                mpfr_prec_t max_prec = kDefaultMaxPrec) {
    return lambda_fast_n(alpha, beta, N, threshold, strict, {}, max_prec);
}

// n <n alpha><n beta> as a certified interval (nearest-integer witnesses)
inline Ival littlewood_product(long long n, const Real& alpha, const Real& beta,
                               mpfr_prec_t prec = 128) {
    Real nn = Real::from_long(static_cast<long>(n));
    Real pa = frac_distance(nn * alpha);
    Real pb = frac_distance(nn * beta);
    return (nn * pa * pb).eval(prec);
}

// ---------------------------------------------------------------------------
// growth tabulation
// ---------------------------------------------------------------------------

struct GrowthRow {
    long long N = 0;
    long long count = 0;
    double normalizer = 0;  // (log log N)^2 / (log N)^2
    double normalized = 0;  // count * normalizer
    double reference = 0;   // 2 eps (log N)^2, the a.e. leading-order curve
};

inline std::vector<GrowthRow> growth_table(const Real& alpha, const Real& beta,
                                           const Real& eps, const std::vector<long long>& bounds,
                                           bool strict = true) {
    std::vector<GrowthRow> rows;
    double eps_d = eps.eval(64).mid_d();
    for (long long N : bounds) {
        if (N < 16) throw std::domain_error("growth_table: N must be >= 16");
        GrowthRow r;
        r.N = N;
        LambdaResult lr = lambda_auto(alpha, beta, N, eps, strict);
        if (!lr.undecided.empty())
            throw std::runtime_error("growth_table: undecided memberships");
        r.count = static_cast<long long>(lr.hits.size());
        double lg = std::log(static_cast<double>(N));
        double llg = std::log(lg);
        r.normalizer = (llg * llg) / (lg * lg);
        r.normalized = static_cast<double>(r.count) * r.normalizer;
        r.reference = 2.0 * eps_d * lg * lg;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace littlewood

#endif  // LITTLEWOOD_DIOPHANTINE_HPP
