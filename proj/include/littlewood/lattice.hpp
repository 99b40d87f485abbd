// lattice.hpp
//
// Unimodular lattices g*Z^3 in R^3 over certified reals: the diagonal flow
// a_{s,t} = diag(e^{-s-t}, e^s, e^t), the shear tau_{alpha,beta}, complete
// lattice-point enumeration in boxes, sup-norm shortest vectors, and the
// thin-part membership test (some nonzero vector with sup-norm <= eps).
//
// Enumeration is exhaustive by construction: integer coefficient ranges come
// from certified outward bounds on the inverse basis, so no lattice point in
// the box is ever missed; near-boundary points that cannot be separated at
// max precision are reported in a separate boundary list.

#ifndef LITTLEWOOD_LATTICE_HPP
#define LITTLEWOOD_LATTICE_HPP

#include <array>
#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "littlewood/realnum.hpp"
#include "littlewood/util.hpp"

namespace littlewood {

// ---------------------------------------------------------------------------
// Matrices and lattices
// ---------------------------------------------------------------------------

struct Mat3 {
    std::array<Real, 9> e;  // row-major

    static Mat3 identity() {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) m.at(r, c) = Real::from_long(r == c ? 1 : 0);
        return m;
    }

    Real& at(int r, int c) { return e[3 * r + c]; }
    const Real& at(int r, int c) const { return e[3 * r + c]; }

    friend Mat3 operator*(const Mat3& a, const Mat3& b) {
        Mat3 m;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                Real s = Real::from_long(0);
                for (int k = 0; k < 3; ++k) s = s + a.at(r, k) * b.at(k, c);
                m.at(r, c) = s;
            }
        return m;
    }

    std::array<Real, 3> apply(const std::array<long long, 3>& v) const {
        std::array<Real, 3> out;
        for (int r = 0; r < 3; ++r) {
            Real s = Real::from_long(0);
            for (int k = 0; k < 3; ++k)
                s = s + at(r, k) * Real::from_long(static_cast<long>(v[k]));
            out[r] = s;
        }
        return out;
    }

    Real det() const {
        return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
               at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
               at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    }

    // adjugate / det; entries fold to exact values whenever the basis does
    Mat3 inverse() const {
        Mat3 adj;
        Real d = det();
        auto minor = [&](int r0, int c0, int r1, int c1) {
            return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
        };
        adj.at(0, 0) = minor(1, 1, 2, 2);
        adj.at(0, 1) = -(at(0, 1) * at(2, 2) - at(0, 2) * at(2, 1));
        adj.at(0, 2) = minor(0, 1, 1, 2);
        adj.at(1, 0) = -(at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0));
        adj.at(1, 1) = minor(0, 0, 2, 2);
        adj.at(1, 2) = -(at(0, 0) * at(1, 2) - at(0, 2) * at(1, 0));
        adj.at(2, 0) = minor(1, 0, 2, 1);
        adj.at(2, 1) = -(at(0, 0) * at(2, 1) - at(0, 1) * at(2, 0));
        adj.at(2, 2) = minor(0, 0, 1, 1);
        Mat3 inv;
        for (int i = 0; i < 9; ++i) inv.e[i] = adj.e[i] / d;
        return inv;
    }
};

// a_{s,t} = diag(e^{-s-t}, e^s, e^t); exp/log folding keeps entries exact
// when s and t are logarithms of exact values, and det folds to exactly 1.
inline Mat3 diag_flow(const Real& s, const Real& t) {
    Mat3 m = Mat3::identity();
    m.at(0, 0) = exp(-(s + t));
    m.at(1, 1) = exp(s);
    m.at(2, 2) = exp(t);
    return m;
}

// tau_{alpha,beta}: unipotent lower-triangular with (2,1) = alpha, (3,1) = beta
inline Mat3 shear(const Real& alpha, const Real& beta) {
    Mat3 m = Mat3::identity();
    m.at(1, 0) = alpha;
    m.at(2, 0) = beta;
    return m;
}

struct Lattice3 {
    Mat3 basis;
    std::string provenance;

    static Lattice3 integers() { return {Mat3::identity(), "Z^3"}; }
};

struct LatticeVector {
    std::array<long long, 3> coeff{};   // integer coordinates w.r.t. the basis
    std::array<Real, 3> coord;          // basis * coeff

    bool is_zero() const { return coeff[0] == 0 && coeff[1] == 0 && coeff[2] == 0; }
};

// Axis-aligned box; each face may be open or closed.
struct Box3 {
    std::array<Real, 3> lo, hi;
    std::array<bool, 3> lo_open{false, false, false};
    std::array<bool, 3> hi_open{false, false, false};

    static Box3 cube(const Real& halfside) {
        Box3 b;
        for (int i = 0; i < 3; ++i) {
            b.lo[i] = -halfside;
            b.hi[i] = halfside;
        }
        return b;
    }
};

struct EnumerationResult {
    std::vector<LatticeVector> inside;    // certified members
    std::vector<LatticeVector> boundary;  // undecided at max precision
};

// ---------------------------------------------------------------------------
// enumerate_in_box
// ---------------------------------------------------------------------------

namespace lattice_detail {

struct ReducedBasis {
    Mat3 basis;                            // original basis times U
    std::array<std::array<long long, 3>, 3> U;  // column j of reduced = sum U[i][j] * col_i
    std::array<std::array<DIv, 3>, 3> col_d;    // col_d[j][axis]: certified doubles
};

// A few sweeps of pairwise size reduction (subtract the rounded Gram
// projection).  Approximate Gram in doubles is fine: any integer unimodular
// transform preserves the lattice; only the range tightness is affected.
inline ReducedBasis size_reduce(const Mat3& B) {
    ReducedBasis rb;
    rb.basis = B;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rb.U[i][j] = (i == j) ? 1 : 0;

    auto refresh = [&rb]() {
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 3; ++r)
                rb.col_d[j][r] = DIv::from_ival(rb.basis.at(r, j).eval(64));
    };
    refresh();

    for (int sweep = 0; sweep < 4; ++sweep) {
        bool changed = false;
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) {
                if (i == j) continue;
                double num = 0, den = 0;
                for (int r = 0; r < 3; ++r) {
                    num += rb.col_d[j][r].mid() * rb.col_d[i][r].mid();
                    den += rb.col_d[i][r].mid() * rb.col_d[i][r].mid();
                }
                if (!(den > 0)) continue;
                double mu = std::nearbyint(num / den);
                if (mu == 0 || !(std::abs(mu) < 9.2e18)) continue;
                long long m = static_cast<long long>(mu);
                for (int r = 0; r < 3; ++r)
                    rb.basis.at(r, j) = rb.basis.at(r, j) -
                        Real::from_long(static_cast<long>(m)) * rb.basis.at(r, i);
                for (int r = 0; r < 3; ++r) rb.U[r][j] -= m * rb.U[r][i];
                changed = true;
                for (int r = 0; r < 3; ++r)
                    rb.col_d[j][r] = DIv::from_ival(rb.basis.at(r, j).eval(64));
            }
        if (!changed) break;
    }
    return rb;
}

inline bool int_range(DIv v, long long& lo, long long& hi) {
    if (!std::isfinite(v.lo) || !std::isfinite(v.hi)) return false;
    if (std::abs(v.lo) > 4.0e18 || std::abs(v.hi) > 4.0e18) return false;
    lo = static_cast<long long>(std::ceil(v.lo));
    hi = static_cast<long long>(std::floor(v.hi));
    if (hi >= lo && hi - lo > (1LL << 31))
        throw std::runtime_error("enumerate_in_box: coefficient range too large");
    return true;
}

}  // namespace lattice_detail

// Complete enumeration of the nonzero lattice vectors in the box.  Membership
// per face honors the open/closed flags; vectors whose membership cannot be
// certified at max_prec land in `boundary`.
inline EnumerationResult enumerate_in_box(const Lattice3& L, const Box3& box,
                                          mpfr_prec_t max_prec = kDefaultMaxPrec) {
    using namespace lattice_detail;
    ReducedBasis rb = size_reduce(L.basis);

    std::array<DIv, 3> blo, bhi;
    for (int r = 0; r < 3; ++r) {
        blo[r] = DIv::from_ival(box.lo[r].eval(64));
        bhi[r] = DIv::from_ival(box.hi[r].eval(64));
        if (blo[r].lo > bhi[r].hi) return {};
    }
    auto box_iv = [&](int r) { return DIv::of(blo[r].lo, bhi[r].hi); };

    // order columns by decreasing approximate norm: widest direction outermost
    std::array<int, 3> order{0, 1, 2};
    std::array<double, 3> nrm{};
    for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int r = 0; r < 3; ++r) s += rb.col_d[j][r].mid() * rb.col_d[j][r].mid();
        nrm[j] = s;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return nrm[a] > nrm[b]; });
    const int j0 = order[0], j1 = order[1], j2 = order[2];

    // inverse rows of the reduced basis -> global ranges for all coefficients
    Mat3 inv = rb.basis.inverse();
    std::array<std::array<DIv, 3>, 3> inv_d;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) inv_d[r][c] = DIv::from_ival(inv.at(r, c).eval(96));
    auto coeff_range = [&](int j) {
        DIv acc = DIv::point(0);
        for (int r = 0; r < 3; ++r) acc = dops::add(acc, dops::mul(inv_d[j][r], box_iv(r)));
        return acc;
    };

    EnumerationResult out;
    long long a_lo, a_hi;
    if (!int_range(coeff_range(j0), a_lo, a_hi)) return out;  // unbounded: empty box only

    // conditional range of c_{j1} given c_{j0}: solve the 2x2 subsystem on a
    // row pair where (col_{j1}, col_{j2}) is certifiably invertible
    int pr0 = -1, pr1 = -1;
    DIv det2;
    for (int r0 = 0; r0 < 3 && pr0 < 0; ++r0)
        for (int r1 = r0 + 1; r1 < 3 && pr0 < 0; ++r1) {
            DIv d = dops::sub(dops::mul(rb.col_d[j1][r0], rb.col_d[j2][r1]),
                              dops::mul(rb.col_d[j1][r1], rb.col_d[j2][r0]));
            if (!d.contains_zero()) { pr0 = r0; pr1 = r1; det2 = d; }
        }
    DIv c1_global = coeff_range(j1);

    for (long long a = a_lo; a <= a_hi; ++a) {
        // residual box after fixing c_{j0} = a
        std::array<DIv, 3> rlo, rhi;
        for (int r = 0; r < 3; ++r) {
            DIv shift = dops::mul_long(rb.col_d[j0][r], a);
            rlo[r] = dops::sub(blo[r], shift);
            rhi[r] = dops::sub(bhi[r], shift);
        }
        auto res_iv = [&](int r) { return DIv::of(rlo[r].lo, rhi[r].hi); };

        DIv c1r = c1_global;
        if (pr0 >= 0) {
            // c1 = (col_{j2}[r1]*x[r0] - col_{j2}[r0]*x[r1]) / det2
            DIv num = dops::sub(dops::mul(rb.col_d[j2][pr1], res_iv(pr0)),
                                dops::mul(rb.col_d[j2][pr0], res_iv(pr1)));
            c1r = dops::div(num, det2);
        }
        long long b_lo, b_hi;
        if (!int_range(c1r, b_lo, b_hi)) continue;

        for (long long b = b_lo; b <= b_hi; ++b) {
            // final interval for c_{j2}: every row with a nonvanishing entry
            // contributes a constraint (rows whose entry enclosure straddles 0
            // give no usable bound and are skipped -- still an over-cover)
            DIv c2r = DIv::entire();
            bool empty = false;
            for (int r = 0; r < 3; ++r) {
                if (rb.col_d[j2][r].contains_zero()) continue;
                DIv rem = dops::sub(res_iv(r), dops::mul_long(rb.col_d[j1][r], b));
                DIv q = dops::div(rem, rb.col_d[j2][r]);
                c2r.lo = std::max(c2r.lo, q.lo);
                c2r.hi = std::min(c2r.hi, q.hi);
                if (c2r.lo > c2r.hi) { empty = true; break; }
            }
            if (empty) continue;
            long long c_lo, c_hi;
            if (!int_range(c2r, c_lo, c_hi)) continue;

            for (long long c = c_lo; c <= c_hi; ++c) {
                std::array<long long, 3> cc{};
                cc[j0] = a; cc[j1] = b; cc[j2] = c;

                // cheap certified screen on double enclosures; only vectors
                // near a face fall through to the exact comparisons
                bool out_certain = false, in_certain = true;
                std::array<DIv, 3> cd;
                for (int r = 0; r < 3; ++r) {
                    DIv acc = dops::mul_long(rb.col_d[0][r], cc[0]);
                    acc = dops::add(acc, dops::mul_long(rb.col_d[1][r], cc[1]));
                    acc = dops::add(acc, dops::mul_long(rb.col_d[2][r], cc[2]));
                    cd[r] = acc;
                    if (acc.hi < blo[r].lo || acc.lo > bhi[r].hi) { out_certain = true; break; }
                    if (!(acc.lo > blo[r].hi && acc.hi < bhi[r].lo)) in_certain = false;
                }
                if (out_certain) continue;

                // back to original-basis coefficients
                std::array<long long, 3> orig{};
                for (int r = 0; r < 3; ++r)
                    orig[r] = rb.U[r][0] * cc[0] + rb.U[r][1] * cc[1] + rb.U[r][2] * cc[2];
                if (orig[0] == 0 && orig[1] == 0 && orig[2] == 0) continue;

                LatticeVector v;
                v.coeff = orig;
                v.coord = L.basis.apply(orig);
                if (in_certain) {
                    out.inside.push_back(std::move(v));
                    continue;
                }
                Tri m = Tri::True_;
                for (int r = 0; r < 3 && m != Tri::False_; ++r) {
                    Decision dl = compare(v.coord[r], box.lo[r],
                                          box.lo_open[r] ? Rel::GT : Rel::GE, max_prec);
                    m = tri_and(m, box.lo_open[r] ? membership(dl) : dl.value);
                    if (m == Tri::False_) break;
                    Decision dh = compare(v.coord[r], box.hi[r],
                                          box.hi_open[r] ? Rel::LT : Rel::LE, max_prec);
                    m = tri_and(m, box.hi_open[r] ? membership(dh) : dh.value);
                }
                if (m == Tri::True_) out.inside.push_back(std::move(v));
                else if (m == Tri::Undecided) out.boundary.push_back(std::move(v));
            }
        }
    }

    auto lex = [](const LatticeVector& x, const LatticeVector& y) {
        return x.coeff < y.coeff;
    };
    std::sort(out.inside.begin(), out.inside.end(), lex);
    std::sort(out.boundary.begin(), out.boundary.end(), lex);
    return out;
}

// ---------------------------------------------------------------------------
// shortest vector (sup norm) and the thin-part predicate
// ---------------------------------------------------------------------------

struct ShortestVector {
    Real norm;          // sup-norm of the witness, as an expression
    Ival length;        // certified enclosure of that norm
    LatticeVector witness;
};

inline Real supnorm_expr(const std::array<Real, 3>& v) {
    return max(max(abs(v[0]), abs(v[1])), abs(v[2]));
}

// deterministic witness choice: sign-normalize (first nonzero coefficient
// positive), then lexicographically smallest coefficient vector among ties
inline void sign_normalize(LatticeVector& v) {
    for (int i = 0; i < 3; ++i) {
        if (v.coeff[i] > 0) break;
        if (v.coeff[i] < 0) {
            for (int j = 0; j < 3; ++j) v.coeff[j] = -v.coeff[j];
            for (int j = 0; j < 3; ++j) v.coord[j] = -v.coord[j];
            break;
        }
    }
}

inline ShortestVector shortest_vector_supnorm(const Lattice3& L,
                                              mpfr_prec_t max_prec = kDefaultMaxPrec) {
    // upper bound: the smallest basis-column sup-norm (certified hi endpoint)
    Real ub = supnorm_expr(L.basis.apply({1, 0, 0}));
    for (auto cs : {std::array<long long, 3>{0, 1, 0}, std::array<long long, 3>{0, 0, 1}}) {
        Real n = supnorm_expr(L.basis.apply(cs));
        ub = min(ub, n);
    }
    double hi = ub.eval(96).hi_d();
    Real bound = Real::from_rational(BigRat(hi)) ;
    EnumerationResult er = enumerate_in_box(L, Box3::cube(bound), max_prec);

    std::vector<LatticeVector> cand = er.inside;
    for (const auto& b : er.boundary) cand.push_back(b);  // conservative: keep
    if (cand.empty()) throw std::logic_error("shortest_vector: empty candidate set");

    for (auto& v : cand) sign_normalize(v);
    std::sort(cand.begin(), cand.end(),
              [](const LatticeVector& x, const LatticeVector& y) { return x.coeff < y.coeff; });
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](const LatticeVector& x, const LatticeVector& y) {
                               return x.coeff == y.coeff;
                           }),
               cand.end());

    int best = 0;
    Real best_norm = supnorm_expr(cand[0].coord);
    for (size_t i = 1; i < cand.size(); ++i) {
        Real n = supnorm_expr(cand[i].coord);
        Decision d = compare(n, best_norm, Rel::LT, max_prec);
        if (d.is_true()) {
            best = static_cast<int>(i);
            best_norm = n;
        }
        // ties and undecideds keep the earlier (lex-smaller) witness
    }
    ShortestVector sv;
    sv.norm = best_norm;
    sv.length = best_norm.eval(128);
    sv.witness = cand[best];
    return sv;
}

// x in X_eps  <=>  the lattice meets the closed sup-norm ball of radius eps
// nontrivially  <=>  shortest sup-norm <= eps (non-strict).
inline Decision in_X_eps(const Lattice3& L, const Real& eps,
                         mpfr_prec_t max_prec = kDefaultMaxPrec) {
    ShortestVector sv = shortest_vector_supnorm(L, max_prec);
    return compare(sv.norm, eps, Rel::LE, max_prec);
}

}  // namespace littlewood

#endif  // LITTLEWOOD_LATTICE_HPP
