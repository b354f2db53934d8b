#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drgq/rational.hpp"

namespace drgq {

// Dense univariate polynomial over Z, coefficients lowest degree first.
// Normalized form has no trailing zero coefficients; the zero polynomial
// is the empty vector.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
    static IntPoly constant(const Int& v) { return IntPoly({v}); }
    // den*x - num, the degree-1 minimal polynomial of num/den.
    static IntPoly linear_root(const Rat& r) { return IntPoly({-r.numerator(), r.denominator()}); }

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    const Int& lead() const { return c.back(); }

    Rat eval(const Rat& x) const;
    Int eval_int(const Int& x) const;
    int sign_at(const Rat& x) const { return eval(x).sign(); }

    bool operator==(const IntPoly& o) const { return c == o.c; }

    std::string str() const; // e.g. "x^2 - 2"
};

IntPoly derivative(const IntPoly& p);
IntPoly operator-(const IntPoly& p);
IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly mul_scalar(const IntPoly& p, const Int& s);

// gcd of coefficient magnitudes, positive; 0 for the zero polynomial.
Int content(const IntPoly& p);
// p / content(p); sign of the leading coefficient is preserved.
IntPoly primitive_keep_sign(const IntPoly& p);
// p / content(p) with leading coefficient made positive (canonical form).
IntPoly primitive_canonical(const IntPoly& p);

// Pseudo-remainder: lead(g)^(deg f - deg g + 1) * f = q*g + r.  Returns r and
// the sign of the multiplier, which callers need to keep Sturm-style chains
// sign-correct.
std::pair<IntPoly, int> pseudo_rem(const IntPoly& f, const IntPoly& g);

// Primitive-PRS gcd, canonical form (positive leading coefficient).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

// Exact quotient a / b; throws if b does not divide a over Q.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

// p / gcd(p, p'), canonical primitive.
IntPoly squarefree_part(const IntPoly& p);

// Yun's squarefree decomposition: p = lc * prod f_i^{m_i} with f_i squarefree,
// pairwise coprime, returned as (f_i, m_i) with m_i strictly increasing.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Power sums s_t = sum over all complex roots of p of root^t, t = 1..count,
// from Newton's identities. Exact rationals (p need not be monic).
std::vector<Rat> root_power_sums(const IntPoly& p, int count);

// Sturm chain of p. variations() counts sign alternations, zeros skipped.
// For p with nonvanishing values at both endpoints, variations(a)-variations(b)
// is the number of distinct real roots in (a, b).
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);

    int variations_at(const Rat& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;

    // Distinct real roots in the open interval; requires p(lo) != 0 != p(hi).
    int count_open(const Rat& lo, const Rat& hi) const;
    // Distinct real roots on all of R.
    int count_all() const;

    const std::vector<IntPoly>& chain() const { return chain_; }

private:
    std::vector<IntPoly> chain_;
};

// ---------------------------------------------------------------------------

// Dense univariate polynomial over Q, lowest degree first, normalized.
struct RatPoly {
    std::vector<Rat> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
    static RatPoly constant(const Rat& v) { return RatPoly({v}); }
    static RatPoly from_int(const IntPoly& p);

    void normalize();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Rat& lead() const { return c.back(); }
    Rat coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : Rat(0); }

    Rat eval(const Rat& x) const;

    bool operator==(const RatPoly& o) const { return c == o.c; }

    std::string str() const;
};

RatPoly operator-(const RatPoly& p);
RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly mul_scalar(const RatPoly& p, const Rat& s);
RatPoly derivative(const RatPoly& p);

// Euclidean division a = q*b + r with deg r < deg b; b nonzero.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);

// Remainder of a modulo the integer polynomial m (viewed over Q).
RatPoly mod_reduce(const RatPoly& a, const IntPoly& m);

// Clears denominators: returns primitive integer polynomial with the same
// roots and the same leading-coefficient sign.
IntPoly clear_denominators(const RatPoly& p);

// Closed rational interval, for enclosure arithmetic during refinement.
struct RatInterval {
    Rat lo, hi;

    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
    Rat width() const { return hi - lo; }
};

RatInterval iv_add(const RatInterval& a, const RatInterval& b);
RatInterval iv_mul(const RatInterval& a, const RatInterval& b);
RatInterval iv_scale(const RatInterval& a, const Rat& s);
// Horner evaluation of p over the interval x.
RatInterval iv_eval(const RatPoly& p, const RatInterval& x);

} // namespace drgq
