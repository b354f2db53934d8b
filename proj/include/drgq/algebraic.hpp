#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drgq/poly.hpp"

namespace drgq {

// A real algebraic number: a squarefree primitive integer polynomial together
// with a rational isolating interval containing exactly one of its real roots.
//
// Representation invariants:
//   - rational values are stored with the degree-1 polynomial den*x - num and
//     the point interval [v, v];
//   - irrational values have lo < hi, a minimal polynomial of degree >= 2 with
//     NO rational roots (rational roots are always split off at construction),
//     and sign(p(lo)) = -sign(p(hi)), both nonzero.
//
// The no-rational-roots invariant is what makes plain sign bisection valid:
// a bisection midpoint can never be a root of the minimal polynomial.
class AlgebraicNumber {
public:
    static AlgebraicNumber from_rational(const Rat& v);
    // Caller guarantees the invariants above (used by isolate_real_roots).
    static AlgebraicNumber from_isolated_root(IntPoly minpoly, Rat lo, Rat hi);

    bool is_rational() const { return lo_ == hi_; }
    const Rat& rational_value() const; // throws unless is_rational()

    const IntPoly& minpoly() const { return minpoly_; }
    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    RatInterval interval() const { return {lo_, hi_}; }

    // One bisection step (no-op for rational values).
    void refine_step();
    // Shrink the isolating interval to at most the given width (> 0).
    void refine_to(const Rat& width);
    AlgebraicNumber refined(const Rat& width) const;

    // Exact sign of the number itself.
    int sign() const;

    bool is_integer_valued() const { return is_rational() && lo_.is_integer(); }

    // Decimal approximation for display; exact arithmetic never uses this.
    double approx() const;

    std::string str() const;

private:
    AlgebraicNumber(IntPoly m, Rat lo, Rat hi)
        : minpoly_(std::move(m)), lo_(std::move(lo)), hi_(std::move(hi)) {}

    IntPoly minpoly_;
    Rat lo_, hi_;
};

// All distinct real roots of p, sorted ascending, pairwise-disjoint intervals.
// Rational roots come out with degree-1 minimal polynomials; the remaining
// irrational roots share the deflated squarefree factor as minimal polynomial.
// Constant p yields the empty list; zero p is an error.
std::vector<AlgebraicNumber> isolate_real_roots(const IntPoly& p);

// Exact sign of f(a) for a rational-coefficient polynomial f.
int sign_at(const AlgebraicNumber& a, const RatPoly& f);
int sign_at(const AlgebraicNumber& a, const IntPoly& f);

// Three-way exact comparison (-1, 0, +1 for a < b, a = b, a > b).
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

inline bool equal(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == 0; }

// scale*a + shift with scale != 0.
AlgebraicNumber affine_image(const AlgebraicNumber& a, const Rat& scale, const Rat& shift);

// The exact value rep(theta) as an algebraic number in its own right.
// rep is interpreted modulo theta's minimal polynomial. Works whether or not
// the stored minimal polynomial of theta is irreducible.
AlgebraicNumber algebraic_value(const AlgebraicNumber& theta, const RatPoly& rep);

// The value rep(theta) if it happens to be rational, nullopt otherwise.
std::optional<Rat> rational_value(const AlgebraicNumber& theta, const RatPoly& rep);

// Exact rational candidates r for num(theta)/den(theta); den(theta) must be
// nonzero. Every rational value of the ratio is among the returned candidates
// (callers verify via sign_at(theta, num - r*den)).
std::vector<Rat> rational_ratio_candidates(const AlgebraicNumber& theta, const RatPoly& num,
                                           const RatPoly& den);

// Rational number strictly outside [-B, B] for every root of p (Cauchy bound).
Rat root_bound(const IntPoly& p);

// Resultant of two integer polynomials (determinant of the Sylvester matrix,
// computed fraction-free). Zero iff the polynomials share a factor.
Int resultant(const IntPoly& a, const IntPoly& b);

} // namespace drgq
