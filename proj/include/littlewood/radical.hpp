// radical.hpp
//
// Exact arithmetic in real multi-quadratic fields Q(sqrt(m_1), ..., sqrt(m_k)).
//
// A RadicalSum is a finite sum  sum_i  q_i * sqrt(m_i)  with rational q_i and
// distinct square-free integer radicands m_i >= 1 (m = 1 is the rational part).
// Radicands of distinct square-free integers are linearly independent over Q,
// so equality testing reduces to coefficient comparison, and the class is an
// exact field: +, -, * are closed because sqrt(a)*sqrt(b) = g*sqrt(ab/g^2)
// for g = gcd(a,b), and inverses exist by iterated conjugation.
//
// This is what makes every tie in the membership predicates decidable for
// rational and quadratic-surd inputs.

#ifndef LITTLEWOOD_RADICAL_HPP
#define LITTLEWOOD_RADICAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "littlewood/interval.hpp"

namespace littlewood {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

// d = c^2 * m with m square-free; returns (c, m). Trial division up to
// cbrt/sqrt of d; intended for parse-time radicands (d <= ~10^12).
inline std::pair<BigInt, BigInt> squarefree_split(const BigInt& d) {
    if (d <= 0) throw std::domain_error("squarefree_split: radicand must be positive");
    BigInt c = 1, m = 1, rest = d;
    for (BigInt p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        for (int i = 0; i + 1 < e; i += 2) c *= p;
        if (e % 2 == 1) m *= p;
    }
    m *= rest;  // leftover prime (exponent 1)
    return {c, m};
}

class RadicalSum {
public:
    RadicalSum() = default;  // zero

    static RadicalSum from_rational(const BigRat& q) {
        RadicalSum r;
        if (q != 0) r.terms_[BigInt(1)] = q;
        return r;
    }
    static RadicalSum from_long(long v) { return from_rational(BigRat(v)); }

    // coeff * sqrt(d) for arbitrary positive integer d (normalized here)
    static RadicalSum surd(const BigRat& coeff, const BigInt& d) {
        RadicalSum r;
        if (coeff == 0) return r;
        auto [c, m] = squarefree_split(d);
        BigRat q = coeff * BigRat(c);
        r.add_term(m, q);
        return r;
    }

    // sqrt of a nonnegative rational: sqrt(p/q) = sqrt(p*q) / q
    static RadicalSum sqrt_rational(const BigRat& q) {
        if (q < 0) throw std::domain_error("sqrt of negative rational");
        if (q == 0) return RadicalSum();
        BigInt pq = q.get_num() * q.get_den();
        auto [c, m] = squarefree_split(pq);
        RadicalSum r;
        r.add_term(m, make_rat(c, q.get_den()));
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
    }
    BigRat rational_value() const {
        if (terms_.empty()) return BigRat(0);
        if (!is_rational()) throw std::logic_error("RadicalSum: not rational");
        return terms_.begin()->second;
    }

    friend RadicalSum operator+(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum r = a;
        for (const auto& [m, q] : b.terms_) r.add_term(m, q);
        return r;
    }
    friend RadicalSum operator-(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum r = a;
        for (const auto& [m, q] : b.terms_) r.add_term(m, -q);
        return r;
    }
    RadicalSum operator-() const {
        RadicalSum r;
        for (const auto& [m, q] : terms_) r.terms_[m] = -q;
        return r;
    }
    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
        RadicalSum r;
        for (const auto& [m1, q1] : a.terms_)
            for (const auto& [m2, q2] : b.terms_) {
                // sqrt(m1)*sqrt(m2) = g * sqrt((m1/g)*(m2/g)), g = gcd
                BigInt g;
                mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
                BigInt m = (m1 / g) * (m2 / g);
                r.add_term(m, q1 * q2 * BigRat(g));
            }
        return r;
    }
    friend RadicalSum operator/(const RadicalSum& a, const RadicalSum& b) {
        return a * b.inverse();
    }

    bool operator==(const RadicalSum& o) const { return terms_ == o.terms_; }

    // Inverse by conjugation: split u = A + sqrt(p)*B on a prime p of the
    // support, then 1/u = (A - sqrt(p)B) / (A^2 - p B^2); the denominator
    // lives in a strictly smaller field, so recursion terminates.
    RadicalSum inverse() const {
        if (is_zero()) throw std::domain_error("RadicalSum: division by zero");
        if (is_rational()) {
            RadicalSum r;
            r.terms_[BigInt(1)] = BigRat(1) / rational_value();
            return r;
        }
        BigInt p = pick_support_prime();
        RadicalSum A, B;
        for (const auto& [m, q] : terms_) {
            if (m % p == 0) B.add_term(m / p, q);
            else A.add_term(m, q);
        }
        RadicalSum D = A * A - RadicalSum::from_rational(BigRat(p)) * B * B;
        if (D.is_zero())
            throw std::logic_error("RadicalSum: conjugate norm vanished for nonzero element");
        RadicalSum conj = A - surd_times(B, p);
        return conj * D.inverse();
    }

    // Certified enclosure at the given precision.
    Ival eval(mpfr_prec_t prec) const {
        mpfr_prec_t wp = prec + 8;
        Ival acc = Ival::from_long(0, wp);
        for (const auto& [m, q] : terms_) {
            Ival t = Ival::from_rational(q, wp);
            if (m != 1) t = iops::mul(t, Ival::sqrt_of_z(m, wp), wp);
            acc = iops::add(acc, t, wp);
        }
        return iops::round_to(acc, prec);
    }

    // Exact sign: zero test first, then interval refinement (terminates,
    // since a nonzero element has nonzero value).
    int sign() const {
        if (is_zero()) return 0;
        if (is_rational()) return sgn(rational_value());
        for (mpfr_prec_t p = 64; p <= (mpfr_prec_t(1) << 16); p *= 2) {
            Ival e = eval(p);
            int s = e.sign();
            if (s != 0) return s;
        }
        throw std::logic_error("RadicalSum::sign: failed to separate nonzero value from 0");
    }

    RadicalSum abs() const { return sign() >= 0 ? *this : -*this; }

    // Exact floor via sign tests against integer candidates.
    BigInt floor() const {
        if (is_zero()) return BigInt(0);
        if (is_rational()) {
            BigInt f;
            mpz_fdiv_q(f.get_mpz_t(), rational_value().get_num().get_mpz_t(),
                       rational_value().get_den().get_mpz_t());
            return f;
        }
        for (mpfr_prec_t p = 64; p <= (mpfr_prec_t(1) << 16); p *= 2) {
            Ival e = eval(p);
            MpReal fl(e.prec());
            mpfr_floor(fl.get(), e.lo());
            BigInt cand;
            mpfr_get_z(cand.get_mpz_t(), fl.get(), MPFR_RNDD);
            // candidate correct iff cand <= x < cand+1; x irrational here, so
            // both comparisons resolve once the enclosure is narrow enough
            RadicalSum lo = *this - from_rational(BigRat(cand));
            RadicalSum hi = *this - from_rational(BigRat(cand + 1));
            if (lo.sign() >= 0 && hi.sign() < 0) return cand;
        }
        throw std::logic_error("RadicalSum::floor: no certified floor");
    }

    size_t term_count() const { return terms_.size(); }
    const std::map<BigInt, BigRat>& terms() const { return terms_; }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [m, q] : terms_) {
            if (!first) s += " + ";
            s += q.get_str();
            if (m != 1) s += "*sqrt(" + m.get_str() + ")";
            first = false;
        }
        return s;
    }

private:
    std::map<BigInt, BigRat> terms_;

    void add_term(const BigInt& m, const BigRat& q) {
        if (q == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = q;
        } else {
            it->second += q;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // smallest prime factor of the largest non-unit radicand
    BigInt pick_support_prime() const {
        BigInt m = terms_.rbegin()->first;  // largest radicand; >= 2 here
        for (BigInt p = 2; p * p <= m; p += (p == 2 ? 1 : 2))
            if (m % p == 0) return p;
        return m;
    }

    static RadicalSum surd_times(const RadicalSum& b, const BigInt& p) {
        // sqrt(p) * b where b has p-free radicands
        RadicalSum r;
        for (const auto& [m, q] : b.terms_) r.add_term(m * p, q);
        return r;
    }
};

}  // namespace littlewood

#endif  // LITTLEWOOD_RADICAL_HPP
