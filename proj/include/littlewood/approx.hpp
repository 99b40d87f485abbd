// approx.hpp
//
// Fast certified machinery for scans over n of the fractional distances
// <n*alpha>:
//
//  * FixedFrac -- a 62-bit fixed-point enclosure of alpha; int128 arithmetic
//    then gives certified enclosures of <n*alpha> and |n*alpha + m| for all
//    n up to ~2^33, costing a few integer ops per query.  Enclosure widths
//    grow like n * 2^-62 ulps, far below every threshold the scans compare
//    against; queries too close to a threshold escalate to the exact path.
//
//  * scan_admissible -- complete enumeration of {(n, m) : A <= n <= B,
//    |n*alpha + m| <= u} for one block.  Large blocks go through a
//    Lagrange-reduced basis of the planar lattice {(n, n*alpha + m)} with
//    integer coefficient ranges derived from the exact +-1 determinant, so
//    nothing is missed; small blocks use a direct per-n sweep.

#ifndef LITTLEWOOD_APPROX_HPP
#define LITTLEWOOD_APPROX_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "littlewood/realnum.hpp"
#include "littlewood/util.hpp"

namespace littlewood {

constexpr int kFracBits = 62;

struct FracDist {
    // <n*alpha> * 2^62 in [lo, hi]; k = nearest integer to n*alpha when
    // k_certain (|n*alpha + m| is minimized by m = -k)
    uint64_t lo = 0, hi = 0;
    long long k = 0;
    bool k_certain = false;
};

class FixedFrac {
public:
    explicit FixedFrac(const Real& x) : x_(x) {
        Ival e = x.eval(192);
        if (!e.is_finite() || std::abs(e.mid_d()) > 1.0e8)
            throw std::domain_error("FixedFrac: input out of range");
        MpReal t(256);
        mpfr_mul_2si(t.get(), e.lo(), kFracBits, MPFR_RNDD);
        mpfr_floor(t.get(), t.get());
        BigInt zlo;
        mpfr_get_z(zlo.get_mpz_t(), t.get(), MPFR_RNDD);
        mpfr_mul_2si(t.get(), e.hi(), kFracBits, MPFR_RNDU);
        mpfr_ceil(t.get(), t.get());
        BigInt zhi;
        mpfr_get_z(zhi.get_mpz_t(), t.get(), MPFR_RNDU);
        BigInt err = zhi - zlo;
        if (err < 0 || err > 8) throw std::logic_error("FixedFrac: bad enclosure");
        z_ = to_i128(zlo);
        err_ = static_cast<long long>(err.get_si());
        x_mid_ = std::ldexp(static_cast<double>(z_), -kFracBits);
    }

    double mid() const { return x_mid_; }
    const Real& value() const { return x_; }

    static constexpr long long max_n() { return (1LL << 33); }

    // certified enclosure of <n*x> (and the nearest integer when resolvable)
    FracDist near(long long n) const {
        if (n < 1 || n > max_n()) throw std::domain_error("FixedFrac: n out of range");
        const __int128 F = static_cast<__int128>(1) << kFracBits;
        __int128 tlo = static_cast<__int128>(n) * z_;
        __int128 w128 = static_cast<__int128>(n) * err_;
        uint64_t w = static_cast<uint64_t>(w128);

        __int128 q = floordiv(tlo, F);
        uint64_t r = static_cast<uint64_t>(tlo - q * F);  // in [0, F)

        FracDist out;
        const uint64_t Fu = static_cast<uint64_t>(1) << kFracBits;
        const uint64_t H = Fu >> 1;
        if (w >= Fu) {  // hopeless resolution; still a valid enclosure
            out.lo = 0;
            out.hi = H;
        } else if (r + w < Fu) {
            auto [dl, dh] = dist_range(r, r + w, Fu, H);
            out.lo = dl;
            out.hi = dh;
        } else {  // wraps through 0
            auto [dl1, dh1] = dist_range(r, Fu - 1, Fu, H);
            auto [dl2, dh2] = dist_range(0, r + w - Fu, Fu, H);
            out.lo = std::min(dl1, dl2);
            out.hi = std::max(dh1, dh2);
        }

        __int128 klo = floordiv(tlo + F / 2, F);
        __int128 khi = floordiv(tlo + w128 + F / 2, F);
        if (klo == khi && klo >= -(static_cast<__int128>(1) << 62) &&
            klo <= (static_cast<__int128>(1) << 62)) {
            out.k = static_cast<long long>(klo);
            out.k_certain = true;
        }
        return out;
    }

    // certified enclosure of (n*x + m) * 2^62 as doubles (outward)
    DIv value_fp(long long n, long long m) const {
        const __int128 F = static_cast<__int128>(1) << kFracBits;
        __int128 tlo = static_cast<__int128>(n) * z_ + static_cast<__int128>(m) * F;
        __int128 thi = tlo + static_cast<__int128>(n) * err_;
        return DIv::of(dops::down(static_cast<double>(tlo)), dops::up(static_cast<double>(thi)));
    }

private:
    Real x_;
    __int128 z_ = 0;       // x * 2^62 in [z, z + err]
    long long err_ = 0;
    double x_mid_ = 0;

    static __int128 to_i128(const BigInt& z) {
        bool neg = z < 0;
        BigInt a = neg ? BigInt(-z) : z;
        if (mpz_sizeinbase(a.get_mpz_t(), 2) > 100)
            throw std::domain_error("FixedFrac: fixed-point value too large");
        __int128 r = 0;
        for (int limb = static_cast<int>(mpz_size(a.get_mpz_t())) - 1; limb >= 0; --limb)
            r = (r << 64) | static_cast<unsigned long long>(mpz_getlimbn(a.get_mpz_t(), limb));
        return neg ? -r : r;
    }

    static __int128 floordiv(__int128 a, __int128 b) {
        __int128 q = a / b;
        if (a % b != 0 && ((a < 0) != (b < 0))) --q;
        return q;
    }

    // range of d(t) = min(t, F - t) over a <= t <= b (< F)
    static std::pair<uint64_t, uint64_t> dist_range(uint64_t a, uint64_t b, uint64_t F,
                                                    uint64_t H) {
        if (b <= H) return {a, b};
        if (a >= H) return {F - b, F - a};
        return {std::min(a, F - b), H};
    }
};

// fixed-point conversion of a nonnegative threshold, outward
struct FpThreshold {
    uint64_t lo = 0, hi = 0;  // saturated at 2^62

    static FpThreshold from(DIv u) {
        const double F = std::ldexp(1.0, kFracBits);
        FpThreshold t;
        double l = std::floor(dops::down(std::max(0.0, u.lo) * F)) - 1.0;
        double h = std::ceil(dops::up(std::max(0.0, u.hi) * F)) + 1.0;
        double cap = std::ldexp(1.0, kFracBits);
        t.lo = static_cast<uint64_t>(std::min(std::max(l, 0.0), cap));
        t.hi = static_cast<uint64_t>(std::min(std::max(h, 0.0), cap));
        return t;
    }
};

// one admissible pair: A <= n <= B with |n*alpha + m| <= u (possibly only
// up to fixed-point resolution when `certain` is false)
struct Admissible {
    long long n = 0;
    long long m = 0;
    bool certain = false;
};

namespace approx_detail {

struct Basis2 {
    // columns of the planar lattice {(n, n*x + m)}: col i has n-part X[i]
    // and m-part Y[i]; det = X0*Y1 - X1*Y0 = +-1
    long long X[2] = {1, 0};
    long long Y[2] = {0, 1};
};

inline Basis2 reduce_block_basis(double x_mid, double Bd, double u_hi) {
    Basis2 U;
    double b[2][2] = {{1.0 / Bd, x_mid / u_hi}, {0.0, 1.0 / u_hi}};
    auto n2 = [&](int i) { return b[i][0] * b[i][0] + b[i][1] * b[i][1]; };
    for (int it = 0; it < 64; ++it) {
        int lng = n2(0) >= n2(1) ? 0 : 1;
        int shrt = 1 - lng;
        double den = n2(shrt);
        if (!(den > 0)) break;
        double mu = std::nearbyint((b[lng][0] * b[shrt][0] + b[lng][1] * b[shrt][1]) / den);
        if (mu == 0 || !(std::abs(mu) < 1.0e15)) break;
        long long m = static_cast<long long>(mu);
        b[lng][0] -= mu * b[shrt][0];
        b[lng][1] -= mu * b[shrt][1];
        __int128 nx = static_cast<__int128>(U.X[lng]) - static_cast<__int128>(m) * U.X[shrt];
        __int128 ny = static_cast<__int128>(U.Y[lng]) - static_cast<__int128>(m) * U.Y[shrt];
        if (nx > (1LL << 40) || nx < -(1LL << 40) || ny > (1LL << 40) || ny < -(1LL << 40))
            break;
        U.X[lng] = static_cast<long long>(nx);
        U.Y[lng] = static_cast<long long>(ny);
    }
    return U;
}

}  // namespace approx_detail

// Complete scan of {(n, m) : A <= n <= B, |n*alpha + m| <= u}.  Every
// admissible pair is reported; pairs whose membership is clear only up to
// fixed-point resolution carry certain = false and must be re-checked by the
// caller's exact path.
inline void scan_admissible(const FixedFrac& f, long long A, long long B, DIv u,
                            const std::function<void(const Admissible&)>& sink) {
    if (B < A || u.hi < 0) return;
    FpThreshold th = FpThreshold::from(u);

    auto direct = [&](long long a, long long b) {
        for (long long n = a; n <= b; ++n) {
            FracDist d = f.near(n);
            if (d.lo > th.hi) continue;
            Admissible adm;
            adm.n = n;
            adm.certain = d.hi <= th.lo && d.k_certain;
            if (d.k_certain) adm.m = -d.k;
            else adm.certain = false;
            sink(adm);
        }
    };

    if (B - A <= 512) {
        direct(A, B);
        return;
    }

    using approx_detail::Basis2;
    Basis2 U = approx_detail::reduce_block_basis(f.mid(), static_cast<double>(B),
                                                 std::max(u.hi, 1e-300));
    long long detU = U.X[0] * U.Y[1] - U.X[1] * U.Y[0];
    if (detU != 1 && detU != -1) {  // reduction bailed; fall back
        direct(A, B);
        return;
    }

    // y-parts of the two columns, certified
    DIv y0 = f.value_fp(U.X[0], U.Y[0]);
    DIv y1 = f.value_fp(U.X[1], U.Y[1]);
    const double F = std::ldexp(1.0, kFracBits);
    DIv nIv = DIv::of(static_cast<double>(A), static_cast<double>(B));
    DIv yIv = DIv::of(-static_cast<double>(th.hi), static_cast<double>(th.hi));

    // [c0; c1] = det * [[y1, -X1], [-y0, X0]] [n; y]; the y columns here are
    // in fixed-point units, so the result carries a factor 2^kFracBits
    DIv c0r = dops::mul(dops::sub(dops::mul(y1, nIv), dops::mul_long(yIv, U.X[1])),
                        DIv::point(static_cast<double>(detU) / F));
    if (!std::isfinite(c0r.lo) || !std::isfinite(c0r.hi) ||
        std::abs(c0r.lo) > 9.0e17 || std::abs(c0r.hi) > 9.0e17) {
        direct(A, B);
        return;
    }
    long long c0_lo = static_cast<long long>(std::ceil(c0r.lo));
    long long c0_hi = static_cast<long long>(std::floor(c0r.hi));
    if (c0_hi - c0_lo > (B - A) + 8) {  // ranges degenerated; direct is cheaper
        direct(A, B);
        return;
    }

    for (long long c0 = c0_lo; c0 <= c0_hi; ++c0) {
        // conditional c1 range from the n-window, plus the y-window when usable
        double lo = -9.0e18, hi = 9.0e18;
        if (U.X[1] != 0) {
            double a = (static_cast<double>(A) - static_cast<double>(c0) * U.X[0]) / U.X[1];
            double b = (static_cast<double>(B) - static_cast<double>(c0) * U.X[0]) / U.X[1];
            lo = std::min(a, b) - 1e-9;
            hi = std::max(a, b) + 1e-9;
        }
        if (!y1.contains_zero()) {
            DIv rem = dops::sub(yIv, dops::mul_long(y0, c0));
            DIv q = dops::div(rem, y1);
            lo = std::max(lo, q.lo);
            hi = std::min(hi, q.hi);
        }
        if (!(lo <= hi)) continue;
        long long c1_lo = static_cast<long long>(std::ceil(lo));
        long long c1_hi = static_cast<long long>(std::floor(hi));
        if (c1_hi - c1_lo > (B - A) + 8) { c1_lo = 0; c1_hi = -1; }

        for (long long c1 = c1_lo; c1 <= c1_hi; ++c1) {
            __int128 n128 = static_cast<__int128>(c0) * U.X[0] + static_cast<__int128>(c1) * U.X[1];
            if (n128 < A || n128 > B) continue;
            long long n = static_cast<long long>(n128);
            __int128 m128 = static_cast<__int128>(c0) * U.Y[0] + static_cast<__int128>(c1) * U.Y[1];
            if (m128 > (1LL << 62) || m128 < -(1LL << 62)) continue;
            long long m = static_cast<long long>(m128);
            DIv y = f.value_fp(n, m);
            DIv ay = dops::abs(y);
            if (ay.lo > static_cast<double>(th.hi)) continue;
            Admissible adm;
            adm.n = n;
            adm.m = m;
            adm.certain = ay.hi <= static_cast<double>(th.lo);
            sink(adm);
        }
    }
}

}  // namespace littlewood

#endif  // LITTLEWOOD_APPROX_HPP
