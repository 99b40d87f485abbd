// util.hpp
//
// Small shared helpers: outward-rounded double intervals (a cheap certified
// screen in front of the MPFR paths), a deterministic parallel_for, and
// stable numeric formatting for file outputs.

#ifndef LITTLEWOOD_UTIL_HPP
#define LITTLEWOOD_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "littlewood/interval.hpp"

namespace littlewood {

// ---------------------------------------------------------------------------
// DIv: double interval with outward rounding.
//
// IEEE double ops round to nearest (<= 0.5 ulp error), so stepping one ulp
// outward after every operation preserves the enclosure property.  Overflow
// saturates to +-inf, which stays conservative.
// ---------------------------------------------------------------------------

struct DIv {
    double lo = 0.0, hi = 0.0;

    static DIv point(double x) { return {x, x}; }
    static DIv of(double lo, double hi) { return {lo, hi}; }
    static DIv from_ival(const Ival& v) { return {v.lo_d(), v.hi_d()}; }
    static DIv entire() {
        return {-std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity()};
    }

    bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
};

namespace dops {

inline double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

inline DIv add(DIv a, DIv b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }
inline DIv sub(DIv a, DIv b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }
inline DIv neg(DIv a) { return {-a.hi, -a.lo}; }

inline DIv mul(DIv a, DIv b) {
    double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    double lo = std::fmin(std::fmin(p1, p2), std::fmin(p3, p4));
    double hi = std::fmax(std::fmax(p1, p2), std::fmax(p3, p4));
    return {down(lo), up(hi)};
}

inline DIv div(DIv a, DIv b) {
    if (b.contains_zero()) return DIv::entire();
    double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    double lo = std::fmin(std::fmin(p1, p2), std::fmin(p3, p4));
    double hi = std::fmax(std::fmax(p1, p2), std::fmax(p3, p4));
    return {down(lo), up(hi)};
}

inline DIv abs(DIv a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return {-a.hi, -a.lo};
    return {0.0, std::fmax(-a.lo, a.hi)};
}

inline DIv mul_long(DIv a, long long k) {
    return mul(a, DIv::point(static_cast<double>(k)));
}

}  // namespace dops

// ---------------------------------------------------------------------------
// parallel_for: runs fn(i) for i in [0, n) on up to `threads` workers.
// Work is split into contiguous chunks so any per-index output written to a
// preallocated slot keeps a deterministic layout.
// ---------------------------------------------------------------------------

inline unsigned effective_threads(unsigned requested) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (requested == 0) requested = hw;
    return std::min(requested, hw);
}

inline void parallel_for(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
    threads = effective_threads(threads);
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t b = t * chunk, e = std::min(n, b + chunk);
        if (b >= e) break;
        pool.emplace_back([b, e, &fn] {
            for (std::size_t i = b; i < e; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Stable formatting (snprintf is locale-independent for %g with C locale)
// ---------------------------------------------------------------------------

inline std::string fmt_g(double x, int digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

inline std::string fmt_f(double x, int digits = 6) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

}  // namespace littlewood

#endif  // LITTLEWOOD_UTIL_HPP
