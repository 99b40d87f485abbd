// interval.hpp
//
// Directed-rounding interval arithmetic on top of MPFR.
//
// An Ival is a pair of MPFR numbers [lo, hi] (each a dyadic rational)
// guaranteed to enclose the exact value.  All operations round lo down
// and hi up, so enclosures are preserved through arbitrary expression
// trees.  Precision is per-value; combining values of different
// precision rounds outward at the result precision.

#ifndef LITTLEWOOD_INTERVAL_HPP
#define LITTLEWOOD_INTERVAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace littlewood {

// RAII wrapper for a single mpfr_t. Value semantics: copy preserves
// precision and payload exactly (mpfr_set at the source precision is
// lossless when precisions match).
class MpReal {
public:
    explicit MpReal(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    MpReal(MpReal&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    MpReal& operator=(const MpReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

private:
    mpfr_t v_;
};

// Certified enclosure [lo, hi] with lo <= hi (enforced; lo may be -inf,
// hi may be +inf when an operation cannot bound one side).
class Ival {
public:
    Ival() : lo_(64), hi_(64) {}
    explicit Ival(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

    static Ival from_long(long x, mpfr_prec_t prec) {
        Ival r(prec);
        mpfr_set_si(r.lo_.get(), x, MPFR_RNDD);
        mpfr_set_si(r.hi_.get(), x, MPFR_RNDU);
        return r;
    }
    static Ival from_rational(const mpq_class& q, mpfr_prec_t prec) {
        Ival r(prec);
        mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static Ival from_double(double x, mpfr_prec_t prec) {
        Ival r(prec);
        mpfr_set_d(r.lo_.get(), x, MPFR_RNDD);
        mpfr_set_d(r.hi_.get(), x, MPFR_RNDU);
        return r;
    }
    static Ival from_endpoints_d(double lo, double hi, mpfr_prec_t prec) {
        Ival r(prec);
        mpfr_set_d(r.lo_.get(), lo, MPFR_RNDD);
        mpfr_set_d(r.hi_.get(), hi, MPFR_RNDU);
        return r;
    }
    // sqrt of a nonnegative integer radicand
    static Ival sqrt_of_z(const mpz_class& m, mpfr_prec_t prec) {
        Ival r(prec);
        MpReal t(prec + 8);
        mpfr_set_z(t.get(), m.get_mpz_t(), MPFR_RNDD);
        mpfr_sqrt(r.lo_.get(), t.get(), MPFR_RNDD);
        mpfr_set_z(t.get(), m.get_mpz_t(), MPFR_RNDU);
        mpfr_sqrt(r.hi_.get(), t.get(), MPFR_RNDU);
        return r;
    }
    static Ival entire(mpfr_prec_t prec) {
        Ival r(prec);
        mpfr_set_inf(r.lo_.get(), -1);
        mpfr_set_inf(r.hi_.get(), 1);
        return r;
    }

    mpfr_srcptr lo() const { return lo_.get(); }
    mpfr_srcptr hi() const { return hi_.get(); }
    mpfr_ptr lo() { return lo_.get(); }
    mpfr_ptr hi() { return hi_.get(); }
    mpfr_prec_t prec() const { return lo_.prec(); }

    double lo_d() const { return mpfr_get_d(lo_.get(), MPFR_RNDD); }
    double hi_d() const { return mpfr_get_d(hi_.get(), MPFR_RNDU); }
    double mid_d() const {
        double a = lo_d(), b = hi_d();
        if (std::isinf(a) && std::isinf(b)) return 0.0;
        if (std::isinf(a)) return b;
        if (std::isinf(b)) return a;
        return 0.5 * (a + b);
    }

    bool is_finite() const { return mpfr_number_p(lo_.get()) && mpfr_number_p(hi_.get()); }
    bool contains_zero() const {
        return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
    }
    // certified sign: -1, +1, or 0 when the enclosure straddles zero
    int sign() const {
        if (mpfr_sgn(lo_.get()) > 0) return 1;
        if (mpfr_sgn(hi_.get()) < 0) return -1;
        return 0;
    }
    bool is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()); }

    // hi - lo, rounded up
    double width_d() const {
        MpReal w(lo_.prec());
        mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        return mpfr_get_d(w.get(), MPFR_RNDU);
    }

    bool contains_q(const mpq_class& q) const {
        return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 &&
               mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
    }
    bool subset_of(const Ival& o) const {
        return mpfr_cmp(lo_.get(), o.lo_.get()) >= 0 &&
               mpfr_cmp(hi_.get(), o.hi_.get()) <= 0;
    }

    // intersection; valid whenever both enclose the same value
    void intersect_with(const Ival& o) {
        if (mpfr_cmp(o.lo_.get(), lo_.get()) > 0) mpfr_set(lo_.get(), o.lo_.get(), MPFR_RNDD);
        if (mpfr_cmp(o.hi_.get(), hi_.get()) < 0) mpfr_set(hi_.get(), o.hi_.get(), MPFR_RNDU);
        if (mpfr_cmp(lo_.get(), hi_.get()) > 0)
            throw std::logic_error("Ival::intersect_with: empty intersection");
    }

    std::string str() const {
        char* s1 = nullptr;
        char* s2 = nullptr;
        mpfr_asprintf(&s1, "%.20Rg", lo_.get());
        mpfr_asprintf(&s2, "%.20Rg", hi_.get());
        std::string r = std::string("[") + s1 + ", " + s2 + "]";
        mpfr_free_str(s1);
        mpfr_free_str(s2);
        return r;
    }

private:
    MpReal lo_, hi_;
};

namespace iops {

inline Ival neg(const Ival& a, mpfr_prec_t p) {
    Ival r(p);
    mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
    mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
    return r;
}

inline Ival add(const Ival& a, const Ival& b, mpfr_prec_t p) {
    Ival r(p);
    mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

inline Ival sub(const Ival& a, const Ival& b, mpfr_prec_t p) {
    Ival r(p);
    mpfr_sub(r.lo(), a.lo(), b.hi(), MPFR_RNDD);
    mpfr_sub(r.hi(), a.hi(), b.lo(), MPFR_RNDU);
    return r;
}

// min/max over the four endpoint products, each computed with the
// appropriate rounding; simple and safe (4 lg-scale mpfr ops per bound)
inline Ival mul(const Ival& a, const Ival& b, mpfr_prec_t p) {
    Ival r(p);
    MpReal t(p);
    mpfr_srcptr as[2] = {a.lo(), a.hi()};
    mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t.get(), as[i], bs[j], MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo()) < 0) mpfr_set(r.lo(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), as[i], bs[j], MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi()) > 0) mpfr_set(r.hi(), t.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

// Division: if b straddles zero the quotient is unbounded -> entire line.
inline Ival div(const Ival& a, const Ival& b, mpfr_prec_t p) {
    if (b.contains_zero()) return Ival::entire(p);
    Ival r(p);
    MpReal t(p);
    mpfr_srcptr as[2] = {a.lo(), a.hi()};
    mpfr_srcptr bs[2] = {b.lo(), b.hi()};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t.get(), as[i], bs[j], MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo()) < 0) mpfr_set(r.lo(), t.get(), MPFR_RNDD);
            mpfr_div(t.get(), as[i], bs[j], MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi()) > 0) mpfr_set(r.hi(), t.get(), MPFR_RNDU);
            first = false;
        }
    return r;
}

inline Ival abs(const Ival& a, mpfr_prec_t p) {
    Ival r(p);
    if (mpfr_sgn(a.lo()) >= 0) {
        mpfr_set(r.lo(), a.lo(), MPFR_RNDD);
        mpfr_set(r.hi(), a.hi(), MPFR_RNDU);
    } else if (mpfr_sgn(a.hi()) <= 0) {
        mpfr_neg(r.lo(), a.hi(), MPFR_RNDD);
        mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo(), 1);
        MpReal t(p);
        mpfr_neg(t.get(), a.lo(), MPFR_RNDU);
        if (mpfr_cmp(t.get(), a.hi()) > 0) mpfr_set(r.hi(), t.get(), MPFR_RNDU);
        else mpfr_set(r.hi(), a.hi(), MPFR_RNDU);
    }
    return r;
}

inline Ival exp(const Ival& a, mpfr_prec_t p) {
    Ival r(p);
    mpfr_exp(r.lo(), a.lo(), MPFR_RNDD);
    mpfr_exp(r.hi(), a.hi(), MPFR_RNDU);
    return r;
}

// log: requires hi > 0 (else domain error); if lo <= 0 the lower bound
// is -inf, which stays a valid enclosure and lets callers refine.
inline Ival log(const Ival& a, mpfr_prec_t p) {
    if (mpfr_sgn(a.hi()) <= 0)
        throw std::domain_error("log of a certified-nonpositive value");
    Ival r(p);
    if (mpfr_sgn(a.lo()) <= 0) mpfr_set_inf(r.lo(), -1);
    else mpfr_log(r.lo(), a.lo(), MPFR_RNDD);
    mpfr_log(r.hi(), a.hi(), MPFR_RNDU);
    return r;
}

inline Ival sqrt(const Ival& a, mpfr_prec_t p) {
    if (mpfr_sgn(a.hi()) < 0)
        throw std::domain_error("sqrt of a certified-negative value");
    Ival r(p);
    if (mpfr_sgn(a.lo()) < 0) mpfr_set_zero(r.lo(), 1);
    else mpfr_sqrt(r.lo(), a.lo(), MPFR_RNDD);
    mpfr_sqrt(r.hi(), a.hi(), MPFR_RNDU);
    return r;
}

inline Ival min(const Ival& a, const Ival& b, mpfr_prec_t p) {
    Ival r(p);
    mpfr_min(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_min(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

inline Ival max(const Ival& a, const Ival& b, mpfr_prec_t p) {
    Ival r(p);
    mpfr_max(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
    mpfr_max(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
    return r;
}

// Outward rounding to a target precision (always a superset).
inline Ival round_to(const Ival& a, mpfr_prec_t p) {
    Ival r(p);
    mpfr_set(r.lo(), a.lo(), MPFR_RNDD);
    mpfr_set(r.hi(), a.hi(), MPFR_RNDU);
    return r;
}

}  // namespace iops

}  // namespace littlewood

#endif  // LITTLEWOOD_INTERVAL_HPP
