#include "drgq/matrix.hpp"

#include <algorithm>
#include <cassert>

#include "drgq/error.hpp"

namespace drgq {

namespace {

constexpr int kParallelCutoff = 12;

} // namespace

SymRatMat SymRatMat::diagonal(const std::vector<Rat>& d) {
    SymRatMat m(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
    return m;
}

SymRatMat SymRatMat::identity(int n) {
    return diagonal(std::vector<Rat>(static_cast<size_t>(n), Rat(1)));
}

bool SymRatMat::zero_diagonal() const {
    for (int i = 0; i < n_; ++i)
        if (!at(i, i).is_zero()) return false;
    return true;
}

std::optional<Rat> SymRatMat::constant_row_sum() const {
    Rat first(0);
    for (int j = 0; j < n_; ++j) first += at(0, j);
    for (int i = 1; i < n_; ++i) {
        Rat s(0);
        for (int j = 0; j < n_; ++j) s += at(i, j);
        if (s != first) return std::nullopt;
    }
    return first;
}

namespace {

// Berkowitz iteration over Z: charpoly coefficients of the leading principal
// r x r submatrices, built up by Toeplitz products. Coefficients are stored
// highest degree first (index 0 is the monic leading 1).
std::vector<Int> berkowitz_int(const std::vector<Int>& a, int n, Exec ex) {
    std::vector<Int> p{Int(1), -a[0]};
    std::vector<Int> krylov, next, toeplitz, q;
    for (int r = 2; r <= n; ++r) {
        const int m = r - 1;
        // t_0 = 1, t_1 = -A[m][m], t_i = -(R . M^(i-2) . S)
        toeplitz.assign(static_cast<size_t>(r) + 1, Int(0));
        toeplitz[0] = 1;
        toeplitz[1] = -a[static_cast<size_t>(m) * n + m];
        krylov.assign(static_cast<size_t>(m), Int(0));
        for (int i = 0; i < m; ++i) krylov[i] = a[static_cast<size_t>(i) * n + m]; // S column
        for (int i = 2; i <= r; ++i) {
            Int dot(0);
            for (int j = 0; j < m; ++j) dot += a[static_cast<size_t>(m) * n + j] * krylov[j];
            toeplitz[i] = -dot;
            if (i == r) break;
            next.assign(static_cast<size_t>(m), Int(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (ex == Exec::parallel && m >= kParallelCutoff)
#endif
            for (int row = 0; row < m; ++row) {
                Int acc(0);
                const Int* arow = &a[static_cast<size_t>(row) * n];
                for (int j = 0; j < m; ++j) acc += arow[j] * krylov[j];
                next[row] = acc;
            }
            krylov.swap(next);
        }
        // p_r = T p_{r-1} with T Toeplitz lower triangular, first column t.
        q.assign(static_cast<size_t>(r) + 1, Int(0));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (ex == Exec::parallel && r >= kParallelCutoff)
#endif
        for (int i = 0; i <= r; ++i) {
            Int acc(0);
            for (int j = std::max(0, i - r); j < static_cast<int>(p.size()) && j <= i; ++j)
                acc += toeplitz[i - j] * p[j];
            q[i] = acc;
        }
        p.swap(q);
    }
    return p;
}

RatPoly charpoly_of_rows(const std::vector<Rat>& rows, int n, Exec ex) {
    if (n == 0) return RatPoly::constant(Rat(1));
    // Clear to an integer matrix N = d*M; charpoly_M(x) = d^-n charpoly_N(dx).
    Int d(1);
    for (const auto& v : rows) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.denominator().get_mpz_t());
    std::vector<Int> a(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        a[i] = rows[i].numerator() * (d / rows[i].denominator());
    std::vector<Int> coeffs = berkowitz_int(a, n, ex); // highest degree first
    std::vector<Rat> out(static_cast<size_t>(n) + 1);
    Int dk(1);
    for (int k = n; k >= 0; --k) { // coefficient of x^k is coeffs[n-k] * d^(k-n)
        out[k] = Rat(coeffs[n - k], dk);
        dk *= d;
    }
    return RatPoly(std::move(out));
}

} // namespace

RatPoly charpoly(const SymRatMat& m, Exec ex) {
    int n = m.order();
    std::vector<Rat> rows(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[static_cast<size_t>(i) * n + j] = m.at(i, j);
    return charpoly_of_rows(rows, n, ex);
}

RatPoly charpoly_dense(const std::vector<std::vector<Rat>>& rowvecs, Exec ex) {
    int n = static_cast<int>(rowvecs.size());
    std::vector<Rat> rows(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rowvecs[i].size()) != n)
            throw Error("NotSquare", "charpoly needs a square matrix");
        for (int j = 0; j < n; ++j) rows[static_cast<size_t>(i) * n + j] = rowvecs[i][j];
    }
    return charpoly_of_rows(rows, n, ex);
}

Inertia inertia(const SymRatMat& m, Exec ex) {
    int n = m.order();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    auto swap_sym = [&](int p, int q) {
        if (p == q) return;
        std::swap(a[p], a[q]);
        for (int i = 0; i < n; ++i) std::swap(a[i][p], a[i][q]);
    };

    Inertia out;
    int k = 0;
    while (k < n) {
        // largest-magnitude diagonal pivot in the trailing block
        int piv = -1;
        for (int i = k; i < n; ++i) {
            if (a[i][i].is_zero()) continue;
            if (piv < 0 || a[i][i].abs() > a[piv][piv].abs()) piv = i;
        }
        if (piv >= 0) {
            swap_sym(k, piv);
            const Rat pivot = a[k][k];
            out.n_pos += pivot.sign() > 0;
            out.n_neg += pivot.sign() < 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (ex == Exec::parallel && n - k >= kParallelCutoff)
#endif
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k].is_zero()) continue;
                Rat f = a[i][k] / pivot;
                for (int j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
            }
            ++k;
            continue;
        }
        // zero trailing diagonal: look for an off-diagonal hyperbolic pair
        int pi = -1, pj = -1;
        for (int i = k; i < n && pi < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (!a[i][j].is_zero()) { pi = i; pj = j; break; }
        if (pi < 0) {
            out.n_zero += n - k;
            break;
        }
        swap_sym(k, pi);
        swap_sym(k + 1, pj == k ? pi : pj);
        const Rat b = a[k][k + 1];
        out.n_pos += 1;
        out.n_neg += 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (ex == Exec::parallel && n - k >= kParallelCutoff)
#endif
        for (int r = k + 2; r < n; ++r) {
            Rat fr0 = a[r][k] / b, fr1 = a[r][k + 1] / b;
            if (fr0.is_zero() && fr1.is_zero()) continue;
            for (int s = k + 2; s < n; ++s)
                a[r][s] -= fr0 * a[k + 1][s] + fr1 * a[k][s];
        }
        k += 2;
    }
    return out;
}

std::vector<std::pair<AlgebraicNumber, long>> matrix_spectrum(const SymRatMat& m, Exec ex) {
    RatPoly cp = charpoly(m, ex);
    IntPoly p = clear_denominators(cp);
    std::vector<std::pair<AlgebraicNumber, long>> out;
    long total = 0;
    for (const auto& [factor, mult] : squarefree_decomposition(p)) {
        for (auto& root : isolate_real_roots(factor)) {
            out.emplace_back(std::move(root), mult);
            total += mult;
        }
    }
    if (total != m.order())
        throw Error("ComplexSpectrum", "symmetric matrix produced non-real roots");
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return compare(x.first, y.first) > 0; });
    return out;
}

long distinct_real_roots(const RatPoly& p) {
    if (p.is_zero()) throw Error("ZeroPolynomial", "root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    return SturmChain(clear_denominators(p)).count_all();
}

std::optional<PsdCertificate> psd_certificate(const SymRatMat& g) {
    int n = g.order();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = g.at(i, j);

    PsdCertificate cert;
    cert.diag.assign(static_cast<size_t>(n), Rat(0));
    cert.lower.assign(static_cast<size_t>(n), std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) cert.lower[i][i] = Rat(1);

    for (int k = 0; k < n; ++k) {
        const Rat pivot = a[k][k];
        if (pivot.sign() < 0) return std::nullopt;
        cert.diag[k] = pivot;
        if (pivot.is_zero()) {
            // PSD forces the whole pivot column to vanish
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) return std::nullopt;
            continue;
        }
        for (int i = k + 1; i < n; ++i) {
            Rat f = a[i][k] / pivot;
            cert.lower[i][k] = f;
            if (f.is_zero()) continue;
            for (int j = k + 1; j <= i; ++j) a[i][j] -= f * a[k][j];
            for (int j = k + 1; j < i; ++j) a[j][i] = a[i][j];
        }
    }
    return cert;
}

} // namespace drgq
