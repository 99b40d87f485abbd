// realnum.hpp
//
// Certified real arithmetic for the whole project.
//
//  * RealSpec  -- exact descriptions of input reals: rationals p/q,
//                 quadratic surds a + b*sqrt(d), and finite decimals
//                 (treated as exact rationals).  Textual grammar with a
//                 bit-exact print/parse round trip.
//  * Real      -- immutable expression DAG over RealSpec atoms with
//                 +, -, *, /, exp, log, sqrt, abs, min, max.  Subtrees whose
//                 value lies in a multi-quadratic field fold to an exact
//                 RadicalSum, so ties there are decided symbolically;
//                 everything else is evaluated by directed-rounding
//                 intervals at escalating precision.
//  * compare   -- three-valued certified comparison.  Exact ties on strict
//                 relations are reported as Undecided(exact_tie) and left
//                 to the caller's open/closed-boundary policy.
//  * nearest_integer -- <x> = min_k |x - k| with certified distance.

#ifndef LITTLEWOOD_REALNUM_HPP
#define LITTLEWOOD_REALNUM_HPP

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "littlewood/interval.hpp"
#include "littlewood/radical.hpp"

namespace littlewood {

constexpr mpfr_prec_t kDefaultMaxPrec = 256;
constexpr mpfr_prec_t kStartPrec = 64;

// ---------------------------------------------------------------------------
// Decision: three-valued comparison result
// ---------------------------------------------------------------------------

enum class Tri : int8_t { False_ = 0, True_ = 1, Undecided = 2 };

enum class Why : int8_t { None, MaxPrecision, ExactTie };

struct Decision {
    Tri value = Tri::Undecided;
    Why reason = Why::None;

    bool is_true() const { return value == Tri::True_; }
    bool is_false() const { return value == Tri::False_; }
    bool undecided() const { return value == Tri::Undecided; }
    bool exact_tie() const { return reason == Why::ExactTie; }

    static Decision yes() { return {Tri::True_, Why::None}; }
    static Decision no() { return {Tri::False_, Why::None}; }
    static Decision tie() { return {Tri::Undecided, Why::ExactTie}; }
    static Decision max_prec() { return {Tri::Undecided, Why::MaxPrecision}; }
};

enum class Rel : int8_t { LT, LE, GT, GE, EQ, NE };

// ---------------------------------------------------------------------------
// RealSpec: the exact input grammar
// ---------------------------------------------------------------------------

struct RealSpec {
    struct Rational {
        BigRat value;
        bool operator==(const Rational& o) const { return value == o.value; }
    };
    struct QuadraticSurd {
        BigRat a, b;   // a + b*sqrt(d), b != 0
        BigInt d;      // square-free, >= 2
        bool operator==(const QuadraticSurd& o) const {
            return a == o.a && b == o.b && d == o.d;
        }
    };
    struct DecimalLiteral {
        std::string digits;   // literal text, e.g. "-0.3335"
        long declared_precision_bits = 0;
        BigRat value;         // the exact rational the literal denotes
        bool operator==(const DecimalLiteral& o) const { return digits == o.digits; }
    };

    std::variant<Rational, QuadraticSurd, DecimalLiteral> v;

    bool operator==(const RealSpec& o) const { return v == o.v; }

    bool is_rational_value() const {
        return !std::holds_alternative<QuadraticSurd>(v);
    }

    RadicalSum to_radical() const {
        if (auto* r = std::get_if<Rational>(&v)) return RadicalSum::from_rational(r->value);
        if (auto* d = std::get_if<DecimalLiteral>(&v)) return RadicalSum::from_rational(d->value);
        const auto& s = std::get<QuadraticSurd>(v);
        return RadicalSum::from_rational(s.a) + RadicalSum::surd(s.b, s.d);
    }

    static RealSpec rational(const BigRat& q) { return RealSpec{Rational{q}}; }
    static RealSpec rational(long num, long den) { return rational(make_rat(num, den)); }

    static RealSpec surd(const BigRat& a, const BigRat& b, const BigInt& d) {
        if (d <= 0) throw std::domain_error("RealSpec: surd radicand must be positive");
        auto [c, m] = squarefree_split(d);
        BigRat bb = b * BigRat(c);
        if (m == 1) return rational(a + bb);
        if (bb == 0) return rational(a);
        RealSpec r;
        r.v = QuadraticSurd{a, bb, m};
        return r;
    }
};

// ---------------------------------------------------------------------------
// Real: immutable expression DAG
// ---------------------------------------------------------------------------

class Real {
public:
    enum class Kind : int8_t {
        Exact, Add, Sub, Mul, Div, Neg, Abs, Exp, Log, Sqrt, Min, Max
    };

    struct Node {
        Kind kind;
        RadicalSum exact;                 // Kind::Exact only
        std::shared_ptr<const Node> a, b;
    };

    Real() : n_(exact_node(RadicalSum())) {}

    static Real from_exact(RadicalSum s) {
        Real r;
        r.n_ = exact_node(std::move(s));
        return r;
    }
    static Real from_rational(const BigRat& q) { return from_exact(RadicalSum::from_rational(q)); }
    static Real from_long(long v) { return from_exact(RadicalSum::from_long(v)); }
    static Real from_spec(const RealSpec& s) { return from_exact(s.to_radical()); }

    bool is_exact() const { return n_->kind == Kind::Exact; }
    const RadicalSum& exact_value() const {
        if (!is_exact()) throw std::logic_error("Real: not exact");
        return n_->exact;
    }
    Kind kind() const { return n_->kind; }

    // Constructors fold a few identities so that quantities like flow-matrix
    // determinants and triangle legs stay symbolically exact:
    //   exact +-*/ exact, 0*x = 0, 1*x = x, 0+x = x, exp(a)*exp(b) = exp(a+b),
    //   log u + log v = log(uv), exp(log u) = u, log(exp u) = u.
    friend Real operator+(const Real& x, const Real& y) {
        if (x.is_exact() && y.is_exact())
            return from_exact(x.exact_value() + y.exact_value());
        if (x.is_exact() && x.exact_value().is_zero()) return y;
        if (y.is_exact() && y.exact_value().is_zero()) return x;
        if (x.kind() == Kind::Log && y.kind() == Kind::Log) {
            Real xa = Real(x.n_->a), ya = Real(y.n_->a);
            if (xa.is_exact() && ya.is_exact()) return log(xa * ya);
        }
        return make(Kind::Add, x, y);
    }
    friend Real operator-(const Real& x, const Real& y) {
        if (x.is_exact() && y.is_exact())
            return from_exact(x.exact_value() - y.exact_value());
        if (y.is_exact() && y.exact_value().is_zero()) return x;
        if (x.kind() == Kind::Log && y.kind() == Kind::Log) {
            Real xa = Real(x.n_->a), ya = Real(y.n_->a);
            if (xa.is_exact() && ya.is_exact()) return log(xa / ya);
        }
        return make(Kind::Sub, x, y);
    }
    friend Real operator*(const Real& x, const Real& y) {
        if (x.is_exact() && y.is_exact())
            return from_exact(x.exact_value() * y.exact_value());
        if (x.is_exact()) {
            if (x.exact_value().is_zero()) return from_long(0);
            if (x.exact_value().is_rational() && x.exact_value().rational_value() == 1) return y;
        }
        if (y.is_exact()) {
            if (y.exact_value().is_zero()) return from_long(0);
            if (y.exact_value().is_rational() && y.exact_value().rational_value() == 1) return x;
        }
        if (x.kind() == Kind::Exp && y.kind() == Kind::Exp)
            return exp(Real(x.n_->a) + Real(y.n_->a));
        return make(Kind::Mul, x, y);
    }
    friend Real operator/(const Real& x, const Real& y) {
        if (y.is_exact() && y.exact_value().is_zero())
            throw std::domain_error("Real: division by exact zero");
        if (x.is_exact() && y.is_exact())
            return from_exact(x.exact_value() / y.exact_value());
        if (x.is_exact() && x.exact_value().is_zero()) return from_long(0);
        if (y.is_exact() && y.exact_value().is_rational() && y.exact_value().rational_value() == 1)
            return x;
        if (x.kind() == Kind::Exp && y.kind() == Kind::Exp)
            return exp(Real(x.n_->a) - Real(y.n_->a));
        return make(Kind::Div, x, y);
    }
    Real operator-() const {
        if (is_exact()) return from_exact(-exact_value());
        if (kind() == Kind::Log) {
            Real a(n_->a);
            if (a.is_exact()) return log(from_exact(a.exact_value().inverse()));
        }
        return make1(Kind::Neg, *this);
    }

    friend Real abs(const Real& x) {
        if (x.is_exact()) return from_exact(x.exact_value().abs());
        return make1(Kind::Abs, x);
    }
    friend Real exp(const Real& x) {
        if (x.is_exact() && x.exact_value().is_zero()) return from_long(1);
        if (x.kind() == Kind::Log) return Real(x.n_->a);  // exp(log u) = u
        return make1(Kind::Exp, x);
    }
    friend Real log(const Real& x) {
        if (x.is_exact()) {
            const RadicalSum& v = x.exact_value();
            if (v.sign() <= 0) throw std::domain_error("log of a certified-nonpositive value");
            if (v.is_rational() && v.rational_value() == 1) return from_long(0);
        }
        if (x.kind() == Kind::Exp) return Real(x.n_->a);  // log(exp u) = u
        return make1(Kind::Log, x);
    }
    friend Real sqrt(const Real& x) {
        if (x.is_exact()) {
            const RadicalSum& v = x.exact_value();
            int s = v.sign();
            if (s < 0) throw std::domain_error("sqrt of a certified-negative value");
            if (s == 0) return from_long(0);
            // exact only for rationals with a factorable numerator*denominator
            if (v.is_rational()) {
                BigRat q = v.rational_value();
                if (q.get_num() * q.get_den() <= BigInt("1000000000000"))
                    return from_exact(RadicalSum::sqrt_rational(q));
            }
        }
        return make1(Kind::Sqrt, x);
    }
    friend Real min(const Real& x, const Real& y) {
        if (x.is_exact() && y.is_exact())
            return ((x.exact_value() - y.exact_value()).sign() <= 0) ? x : y;
        return make(Kind::Min, x, y);
    }
    friend Real max(const Real& x, const Real& y) {
        if (x.is_exact() && y.is_exact())
            return ((x.exact_value() - y.exact_value()).sign() >= 0) ? x : y;
        return make(Kind::Max, x, y);
    }

    // Certified enclosure. Uniform working precision (prec + guard bits)
    // and a final outward rounding; with nested rounding grids this makes
    // refinement monotone: eval(x, p') is a subset of eval(x, p) for p' > p.
    Ival eval(mpfr_prec_t prec) const {
        mpfr_prec_t wp = prec + 32;
        Ival w = eval_node(n_.get(), wp);
        return iops::round_to(w, prec);
    }

    bool same_node(const Real& o) const { return n_ == o.n_; }

    friend bool structurally_equal(const Real& x, const Real& y) {
        return node_equal(x.n_.get(), y.n_.get());
    }

private:
    std::shared_ptr<const Node> n_;

    explicit Real(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

    static std::shared_ptr<const Node> exact_node(RadicalSum s) {
        auto n = std::make_shared<Node>();
        n->kind = Kind::Exact;
        n->exact = std::move(s);
        return n;
    }
    static Real make(Kind k, const Real& a, const Real& b) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->a = a.n_;
        n->b = b.n_;
        return Real(std::move(n));
    }
    static Real make1(Kind k, const Real& a) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->a = a.n_;
        return Real(std::move(n));
    }

    static Ival eval_node(const Node* n, mpfr_prec_t wp) {
        switch (n->kind) {
            case Kind::Exact: return n->exact.eval(wp);
            case Kind::Add: return iops::add(eval_node(n->a.get(), wp), eval_node(n->b.get(), wp), wp);
            case Kind::Sub: return iops::sub(eval_node(n->a.get(), wp), eval_node(n->b.get(), wp), wp);
            case Kind::Mul: return iops::mul(eval_node(n->a.get(), wp), eval_node(n->b.get(), wp), wp);
            case Kind::Div: return iops::div(eval_node(n->a.get(), wp), eval_node(n->b.get(), wp), wp);
            case Kind::Neg: return iops::neg(eval_node(n->a.get(), wp), wp);
            case Kind::Abs: return iops::abs(eval_node(n->a.get(), wp), wp);
            case Kind::Exp: return iops::exp(eval_node(n->a.get(), wp), wp);
            case Kind::Log: return iops::log(eval_node(n->a.get(), wp), wp);
            case Kind::Sqrt: return iops::sqrt(eval_node(n->a.get(), wp), wp);
            case Kind::Min: return iops::min(eval_node(n->a.get(), wp), eval_node(n->b.get(), wp), wp);
            case Kind::Max: return iops::max(eval_node(n->a.get(), wp), eval_node(n->b.get(), wp), wp);
        }
        throw std::logic_error("Real: bad node kind");
    }

    static bool node_equal(const Node* x, const Node* y) {
        if (x == y) return true;
        if (x->kind != y->kind) return false;
        if (x->kind == Kind::Exact) return x->exact == y->exact;
        if (x->a && y->a) {
            if (!node_equal(x->a.get(), y->a.get())) return false;
        } else if (x->a || y->a) {
            return false;
        }
        if (x->b && y->b) return node_equal(x->b.get(), y->b.get());
        return !x->b && !y->b;
    }
};

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

inline Decision decision_from_sign(int s, Rel rel, bool tie_known_exact) {
    if (s == 0) {
        if (!tie_known_exact) return Decision::max_prec();
        switch (rel) {
            case Rel::LE: case Rel::GE: case Rel::EQ: return Decision::yes();
            case Rel::NE: return Decision::no();
            case Rel::LT: case Rel::GT: return Decision::tie();
        }
    }
    bool lt = s < 0;
    switch (rel) {
        case Rel::LT: case Rel::LE: return lt ? Decision::yes() : Decision::no();
        case Rel::GT: case Rel::GE: return lt ? Decision::no() : Decision::yes();
        case Rel::EQ: return Decision::no();
        case Rel::NE: return Decision::yes();
    }
    throw std::logic_error("bad Rel");
}

inline Decision compare(const Real& x, const Real& y, Rel rel,
                        mpfr_prec_t max_prec = kDefaultMaxPrec) {
    Real d = x - y;
    if (d.is_exact()) return decision_from_sign(d.exact_value().sign(), rel, true);
    if (structurally_equal(x, y)) return decision_from_sign(0, rel, true);
    for (mpfr_prec_t p = kStartPrec;; p *= 2) {
        if (p > max_prec) p = max_prec;
        int s = d.eval(p).sign();
        if (s != 0) return decision_from_sign(s, rel, false);
        if (p >= max_prec) break;
    }
    return Decision::max_prec();
}

inline Decision compare(const Real& x, const BigRat& y, Rel rel,
                        mpfr_prec_t max_prec = kDefaultMaxPrec) {
    return compare(x, Real::from_rational(y), rel, max_prec);
}

// Membership semantics for region predicates: a strict constraint whose two
// sides are provably equal is certainly violated (the point sits on the
// boundary of an open set), so an exact tie maps to False rather than
// Undecided.  Non-strict constraints already map ties to True.
inline Tri membership(const Decision& d) {
    if (d.exact_tie()) return Tri::False_;
    return d.value;
}

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::False_ || b == Tri::False_) return Tri::False_;
    if (a == Tri::Undecided || b == Tri::Undecided) return Tri::Undecided;
    return Tri::True_;
}

// ---------------------------------------------------------------------------
// nearest_integer
// ---------------------------------------------------------------------------

struct NearestInt {
    long long k = 0;
    Ival dist;      // certified enclosure of <x> = |x - k|, within [0, 1/2]
    bool tie = false;  // x exactly half-integral (k chosen by |k|, then k)
};

inline NearestInt nearest_integer(const Real& x, mpfr_prec_t max_prec = kDefaultMaxPrec) {
    if (x.is_exact()) {
        const RadicalSum& v = x.exact_value();
        BigInt f = v.floor();
        RadicalSum frac = v - RadicalSum::from_rational(BigRat(f));
        int c = (frac - RadicalSum::from_rational(make_rat(1, 2))).sign();
        NearestInt r;
        BigInt kz;
        if (c < 0) kz = f;
        else if (c > 0) kz = f + 1;
        else {
            // exact half: the two candidates are f and f+1
            r.tie = true;
            BigInt lo = f, hi = f + 1;
            BigInt alo = abs(lo), ahi = abs(hi);
            kz = (alo < ahi) ? lo : hi;  // consecutive integers never tie in |.|
        }
        if (!kz.fits_slong_p())
            throw std::domain_error("nearest_integer: value out of integer range");
        r.k = kz.get_si();
        RadicalSum dist = (v - RadicalSum::from_rational(BigRat(kz))).abs();
        r.dist = dist.eval(128);
        return r;
    }
    for (mpfr_prec_t p = kStartPrec;; p *= 2) {
        if (p > max_prec) p = max_prec;
        Ival e = x.eval(p);
        if (e.is_finite()) {
            double mid = e.mid_d();
            double kd = std::nearbyint(mid);
            if (std::abs(kd) < 4.4e15) {
                long long k = static_cast<long long>(kd);
                // certify |x - k| strictly inside (-1/2, 1/2)
                Real d = x - Real::from_long(static_cast<long>(k));
                Ival de = d.eval(p);
                BigRat half = make_rat(1, 2);
                BigRat mhalf = make_rat(-1, 2);
                if (mpfr_cmp_q(de.lo(), mhalf.get_mpq_t()) > 0 &&
                    mpfr_cmp_q(de.hi(), half.get_mpq_t()) < 0) {
                    NearestInt r;
                    r.k = k;
                    r.dist = iops::abs(de, de.prec());
                    return r;
                }
            }
        }
        if (p >= max_prec) break;
    }
    throw std::runtime_error("nearest_integer: not resolvable at max precision");
}

// <x> as an expression: |x - k| with the certified nearest k.
inline Real frac_distance(const Real& x, mpfr_prec_t max_prec = kDefaultMaxPrec) {
    NearestInt ni = nearest_integer(x, max_prec);
    return abs(x - Real::from_long(static_cast<long>(ni.k)));
}

// Largest integer strictly below x (so {n in N : n < x} = [1, strict_floor(x)]).
inline long long strict_floor(const Real& x, mpfr_prec_t max_prec = 2 * kDefaultMaxPrec) {
    if (x.is_exact()) {
        const RadicalSum& v = x.exact_value();
        BigInt f = v.floor();
        if (v.is_rational() && v.rational_value() == BigRat(f)) f -= 1;
        if (!f.fits_slong_p()) throw std::domain_error("strict_floor: out of integer range");
        return f.get_si();
    }
    for (mpfr_prec_t p = kStartPrec;; p *= 2) {
        if (p > max_prec) p = max_prec;
        Ival e = x.eval(p);
        if (e.is_finite()) {
            MpReal fl(e.prec());
            mpfr_floor(fl.get(), e.lo());
            BigInt k;
            mpfr_get_z(k.get_mpz_t(), fl.get(), MPFR_RNDD);
            // certified iff k < x < k+1
            BigRat klo{k}, khi{k + 1};
            if (mpfr_cmp_q(e.lo(), klo.get_mpq_t()) > 0 &&
                mpfr_cmp_q(e.hi(), khi.get_mpq_t()) < 0) {
                if (!k.fits_slong_p())
                    throw std::domain_error("strict_floor: out of integer range");
                return k.get_si();
            }
        }
        if (p >= max_prec) break;
    }
    throw std::runtime_error("strict_floor: not resolvable at max precision");
}

// ---------------------------------------------------------------------------
// RealSpec text grammar
//
//   real     := rational | decimal | surdexpr
//   rational := ['-'] digits ['/' digits]
//   decimal  := ['-'] digits '.' digits
//   surdexpr := term (('+'|'-') term)*     with exactly one sqrt term
//   term     := coeff ['*' 'sqrt(' digits ')'] | 'sqrt(' digits ')'
//
// print() emits the canonical forms "p/q" / "p", the original decimal
// literal, and "a+b*sqrt(d)"; parse(print(x)) == x exactly.
// ---------------------------------------------------------------------------

namespace detail {

// mpz_class(const char*) uses base 0, which reads a leading '0' as octal;
// always construct from digit strings in base 10
inline BigInt from_digits(const std::string& s) { return BigInt(s, 10); }

struct SpecParser {
    std::string s;
    size_t i = 0;

    explicit SpecParser(std::string in) {
        for (char c : in)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("RealSpec parse error at '" + s.substr(i) + "': " + why);
    }

    bool eof() const { return i >= s.size(); }
    char peek() const { return eof() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() == c) { ++i; return true; }
        return false;
    }
    bool eat_word(const char* w) {
        size_t n = std::string(w).size();
        if (s.compare(i, n, w) == 0) { i += n; return true; }
        return false;
    }

    std::string digits() {
        size_t b = i;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == b) fail("expected digits");
        return s.substr(b, i - b);
    }

    struct Num {
        BigRat value;
        bool is_decimal = false;
        std::string raw;
    };

    // unsigned number: digits [('/'|'.') digits]
    Num number() {
        size_t b = i;
        std::string intpart = digits();
        Num r;
        if (eat('/')) {
            std::string den = digits();
            BigRat q{from_digits(intpart), from_digits(den)};
            if (q.get_den() == 0) fail("zero denominator");
            q.canonicalize();
            r.value = q;
        } else if (peek() == '.') {
            ++i;
            std::string fracpart = digits();
            BigInt num = from_digits(intpart + fracpart);
            BigInt den = 1;
            for (size_t k = 0; k < fracpart.size(); ++k) den *= 10;
            r.value = make_rat(num, den);
            r.is_decimal = true;
        } else {
            r.value = BigRat(from_digits(intpart));
        }
        r.raw = s.substr(b, i - b);
        return r;
    }

    RealSpec parse() {
        BigRat a(0), b(0);
        BigInt d(0);
        bool saw_surd = false, saw_rat = false;
        bool single_decimal = false;
        std::string decimal_raw;
        int nterms = 0;

        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');

        for (;;) {
            ++nterms;
            if (eat_word("sqrt(")) {
                std::string ds = digits();
                if (!eat(')')) fail("expected ')'");
                if (saw_surd) fail("more than one sqrt term");
                saw_surd = true;
                b = BigRat(sign);
                d = from_digits(ds);
            } else {
                Num n = number();
                if (eat('*')) {
                    if (!eat_word("sqrt(")) fail("expected sqrt(");
                    std::string ds = digits();
                    if (!eat(')')) fail("expected ')'");
                    if (saw_surd) fail("more than one sqrt term");
                    saw_surd = true;
                    b = BigRat(sign) * n.value;
                    d = from_digits(ds);
                } else {
                    if (saw_rat) fail("more than one rational term");
                    saw_rat = true;
                    a = BigRat(sign) * n.value;
                    single_decimal = n.is_decimal;
                    decimal_raw = (sign < 0 ? "-" : "") + n.raw;
                }
            }
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
        }
        if (!eof()) fail("trailing input");

        if (saw_surd) {
            if (d <= 0) fail("sqrt radicand must be positive");
            if (d > BigInt("1000000000000")) fail("sqrt radicand too large");
            auto [c, m] = squarefree_split(d);
            b *= BigRat(c);
            if (m == 1) { a += b; saw_surd = false; }
            else if (b == 0) { saw_surd = false; }
            else {
                RealSpec r;
                r.v = RealSpec::QuadraticSurd{a, b, m};
                return r;
            }
        }
        if (single_decimal && nterms == 1) {
            RealSpec r;
            long bits = static_cast<long>(mpz_sizeinbase(a.get_num().get_mpz_t(), 2) +
                                          mpz_sizeinbase(a.get_den().get_mpz_t(), 2)) + 8;
            r.v = RealSpec::DecimalLiteral{decimal_raw, bits, a};
            return r;
        }
        return RealSpec::rational(a);
    }
};

inline std::string rat_str(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace detail

inline RealSpec parse_realspec(const std::string& text) {
    detail::SpecParser p(text);
    return p.parse();
}

inline std::string print_realspec(const RealSpec& r) {
    if (auto* q = std::get_if<RealSpec::Rational>(&r.v)) return detail::rat_str(q->value);
    if (auto* d = std::get_if<RealSpec::DecimalLiteral>(&r.v)) return d->digits;
    const auto& s = std::get<RealSpec::QuadraticSurd>(r.v);
    std::string out = detail::rat_str(s.a);
    if (s.b >= 0) out += "+" + detail::rat_str(s.b);
    else out += "-" + detail::rat_str(-s.b);
    out += "*sqrt(" + s.d.get_str() + ")";
    return out;
}

}  // namespace littlewood

#endif  // LITTLEWOOD_REALNUM_HPP
