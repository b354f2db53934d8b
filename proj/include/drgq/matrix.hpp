#pragma once

#include <optional>
#include <vector>

#include "drgq/algebraic.hpp"
#include "drgq/exec.hpp"
#include "drgq/poly.hpp"

namespace drgq {

// Dense symmetric matrix over Q. set() writes both (i,j) and (j,i) so the
// symmetry invariant holds by construction.
class SymRatMat {
public:
    explicit SymRatMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    int order() const { return n_; }
    const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, const Rat& v) {
        a_[static_cast<size_t>(i) * n_ + j] = v;
        a_[static_cast<size_t>(j) * n_ + i] = v;
    }

    static SymRatMat diagonal(const std::vector<Rat>& d);
    static SymRatMat identity(int n);

    bool zero_diagonal() const;
    // Row sum if constant across all rows, nullopt otherwise.
    std::optional<Rat> constant_row_sum() const;

private:
    int n_;
    std::vector<Rat> a_;
};

struct Inertia {
    long n_pos = 0;
    long n_zero = 0;
    long n_neg = 0;

    bool operator==(const Inertia&) const = default;
};

// det(xI - M), monic, exact. Division-free Berkowitz iteration on the
// denominator-cleared integer matrix; the inner Krylov products are the
// parallel kernel.
RatPoly charpoly(const SymRatMat& m, Exec ex = Exec::parallel);

// Same for a general (not necessarily symmetric) square matrix, used for the
// tridiagonal intersection matrix.
RatPoly charpoly_dense(const std::vector<std::vector<Rat>>& rows, Exec ex = Exec::parallel);

// Signs of the eigenvalues by symmetric congruence reduction (Sylvester's law
// of inertia). Pivoting: largest-magnitude diagonal entry first; if the whole
// trailing diagonal vanishes, a nonzero off-diagonal pair contributes one +1
// and one -1 (hyperbolic pair); an all-zero trailing block is n_zero.
Inertia inertia(const SymRatMat& m, Exec ex = Exec::parallel);

// Exact eigenvalue multiset, sorted descending. Multiplicities come from the
// squarefree decomposition of the characteristic polynomial.
std::vector<std::pair<AlgebraicNumber, long>> matrix_spectrum(const SymRatMat& m,
                                                              Exec ex = Exec::parallel);

// Number of distinct real roots (Sturm count over all of R).
long distinct_real_roots(const RatPoly& p);

// Exact LDL^T decomposition of a positive semidefinite matrix: unit lower
// triangular factor and a non-negative diagonal with G = L diag L^T. Returns
// nullopt if G is not PSD (negative pivot, or a zero pivot with a nonzero
// column below it).
struct PsdCertificate {
    std::vector<std::vector<Rat>> lower;
    std::vector<Rat> diag;
};
std::optional<PsdCertificate> psd_certificate(const SymRatMat& g);

} // namespace drgq
