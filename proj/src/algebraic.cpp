#include "drgq/algebraic.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "drgq/error.hpp"

namespace drgq {

AlgebraicNumber AlgebraicNumber::from_rational(const Rat& v) {
    return AlgebraicNumber(IntPoly::linear_root(v), v, v);
}

AlgebraicNumber AlgebraicNumber::from_isolated_root(IntPoly minpoly, Rat lo, Rat hi) {
    assert(!minpoly.is_zero());
    return AlgebraicNumber(std::move(minpoly), std::move(lo), std::move(hi));
}

const Rat& AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw Error("NotRational", "algebraic number is irrational");
    return lo_;
}

void AlgebraicNumber::refine_step() {
    if (is_rational()) return;
    Rat mid = (lo_ + hi_) / Rat(2);
    int sm = minpoly_.sign_at(mid);
    assert(sm != 0); // minpoly of an irrational value has no rational roots
    if (sm == minpoly_.sign_at(lo_))
        lo_ = mid;
    else
        hi_ = mid;
}

void AlgebraicNumber::refine_to(const Rat& width) {
    if (width.sign() <= 0) throw Error("InvalidWidth", "refine width must be positive");
    while (hi_ - lo_ > width) refine_step();
}

AlgebraicNumber AlgebraicNumber::refined(const Rat& width) const {
    AlgebraicNumber t = *this;
    t.refine_to(width);
    return t;
}

int AlgebraicNumber::sign() const {
    if (is_rational()) return lo_.sign();
    AlgebraicNumber t = *this;
    // The value is irrational, in particular nonzero, so refinement separates
    // the interval from 0.
    while (t.lo_.sign() <= 0 && t.hi_.sign() >= 0) t.refine_step();
    return t.lo_.sign() > 0 ? 1 : -1;
}

double AlgebraicNumber::approx() const {
    if (is_rational()) return lo_.approx();
    AlgebraicNumber t = refined(Rat(1, 1000000000L));
    return ((t.lo_ + t.hi_) / Rat(2)).approx();
}

std::string AlgebraicNumber::str() const {
    if (is_rational()) return lo_.str();
    std::ostringstream os;
    os << "root of " << minpoly_.str() << " in [" << lo_.str() << ", " << hi_.str() << "]";
    return os.str();
}

Rat root_bound(const IntPoly& p) {
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) m = max(m, Rat(p.c[i]).abs());
    return Rat(1) + m / Rat(p.lead()).abs();
}

namespace {

struct IsolationState {
    std::vector<Rat> rational_roots;
    std::vector<RatInterval> candidates; // endpoints nonvanishing, one root strictly inside
};

// Bisection over [lo, hi] with P nonvanishing at both endpoints. var_* are the
// Sturm variation counts at the endpoints; their difference is the number of
// distinct roots inside.
void isolate_rec(const SturmChain& chain, const IntPoly& P, const Rat& lo, const Rat& hi,
                 int var_lo, int var_hi, IsolationState& out) {
    int nroots = var_lo - var_hi;
    if (nroots == 0) return;
    if (nroots == 1) {
        out.candidates.push_back({lo, hi});
        return;
    }
    Rat mid = (lo + hi) / Rat(2);
    if (P.sign_at(mid) == 0) {
        // exact rational root at the midpoint; carve out a window around it
        out.rational_roots.push_back(mid);
        Rat w = (hi - lo) / Rat(4);
        while (true) {
            Rat a = mid - w, b = mid + w;
            if (P.sign_at(a) != 0 && P.sign_at(b) != 0 && chain.count_open(a, b) == 1) break;
            w = w / Rat(2);
        }
        Rat a = mid - w, b = mid + w;
        isolate_rec(chain, P, lo, a, var_lo, chain.variations_at(a), out);
        isolate_rec(chain, P, b, hi, chain.variations_at(b), out);
        return;
    }
    int var_mid = chain.variations_at(mid);
    isolate_rec(chain, P, lo, mid, var_lo, var_mid, out);
    isolate_rec(chain, P, mid, hi, var_mid, var_hi, out);
}

} // namespace

std::vector<AlgebraicNumber> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw Error("ZeroPolynomial", "cannot isolate roots of the zero polynomial");
    if (p.degree() == 0) return {};
    IntPoly P = squarefree_part(p);

    SturmChain chain(P);
    Rat bound = root_bound(P);
    IsolationState st;
    isolate_rec(chain, P, -bound, bound, chain.variations_at(-bound), chain.variations_at(bound), st);

    // Decide rationality of each isolated candidate: a rational root u/v in
    // lowest terms has v | lead(P), so lead(P)*root is an integer. Refining
    // the interval below width 1/|lead| leaves at most one integer candidate.
    Rat lead = Rat(P.lead()).abs();
    std::vector<RatInterval> irrational;
    for (auto iv : st.candidates) {
        bool done = false;
        while ((iv.hi - iv.lo) * lead >= Rat(1)) {
            Rat mid = (iv.lo + iv.hi) / Rat(2);
            int sm = P.sign_at(mid);
            if (sm == 0) { // bisection landed on the root: rational after all
                st.rational_roots.push_back(mid);
                done = true;
                break;
            }
            if (sm == P.sign_at(iv.lo))
                iv.lo = mid;
            else
                iv.hi = mid;
        }
        if (done) continue;
        Int m = ((iv.lo * lead).floor() + 1); // smallest integer > lead*lo, or equal if exact
        if (Rat(m) == iv.lo * lead) m -= 1;
        Rat candidate = Rat(m, lead.numerator());
        if (candidate >= iv.lo && candidate <= iv.hi && P.sign_at(candidate) == 0)
            st.rational_roots.push_back(candidate);
        else
            irrational.push_back(iv);
    }

    // Deflate the rational roots so irrational values carry a minimal
    // polynomial with no rational roots at all.
    IntPoly Q = P;
    for (const auto& r : st.rational_roots) Q = exact_div(Q, IntPoly::linear_root(r));

    std::vector<AlgebraicNumber> roots;
    roots.reserve(st.rational_roots.size() + irrational.size());
    for (const auto& r : st.rational_roots) roots.push_back(AlgebraicNumber::from_rational(r));
    for (const auto& iv : irrational)
        roots.push_back(AlgebraicNumber::from_isolated_root(Q, iv.lo, iv.hi));

    std::sort(roots.begin(), roots.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (a.lo() != b.lo()) return a.lo() < b.lo();
        return a.hi() < b.hi();
    });

    // Separate touching intervals so the result is pairwise disjoint.
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        while (roots[i].hi() >= roots[i + 1].lo()) {
            roots[i].refine_step();
            roots[i + 1].refine_step();
        }
    }
    return roots;
}

int sign_at(const AlgebraicNumber& a, const RatPoly& f) {
    if (f.is_zero()) return 0;
    if (a.is_rational()) return f.eval(a.rational_value()).sign();
    IntPoly F = clear_denominators(f);
    IntPoly g = gcd(F, a.minpoly());
    if (g.degree() >= 1) {
        // g's roots are common roots of F and the minimal polynomial; the
        // only minimal-polynomial root in the interval is a itself, so a
        // Sturm count of 1 certifies f(a) = 0.
        SturmChain ch(g);
        if (ch.count_open(a.lo(), a.hi()) == 1) return 0;
    }
    // f(a) != 0: shrink the interval until it avoids every root of F; then
    // the sign of F is constant on it.
    SturmChain chF(F);
    AlgebraicNumber t = a;
    while (true) {
        int slo = F.sign_at(t.lo());
        if (slo != 0 && slo == F.sign_at(t.hi()) && chF.count_open(t.lo(), t.hi()) == 0)
            return slo;
        t.refine_step();
    }
}

int sign_at(const AlgebraicNumber& a, const IntPoly& f) { return sign_at(a, RatPoly::from_int(f)); }

namespace {

bool intervals_meet(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.lo() <= b.hi() && b.lo() <= a.hi();
}

// Index of the root of g (given as isolated roots) that equals a; a must be a
// root of g.
size_t locate_among(const std::vector<AlgebraicNumber>& roots, const AlgebraicNumber& a) {
    AlgebraicNumber t = a;
    while (true) {
        size_t match = roots.size();
        int count = 0;
        for (size_t j = 0; j < roots.size(); ++j) {
            if (intervals_meet(t, roots[j])) { match = j; ++count; }
        }
        if (count == 1) return match;
        t.refine_step();
    }
}

} // namespace

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational()) {
        const Rat &x = a.rational_value(), &y = b.rational_value();
        return x < y ? -1 : (x == y ? 0 : 1);
    }
    if (a.is_rational()) {
        RatPoly f({-a.rational_value(), Rat(1)}); // x - a
        return -sign_at(b, f);
    }
    if (b.is_rational()) {
        RatPoly f({-b.rational_value(), Rat(1)});
        return sign_at(a, f);
    }
    // Roots lie strictly inside their intervals, so touching endpoints still
    // separate.
    if (a.hi() <= b.lo()) return -1;
    if (b.hi() <= a.lo()) return 1;
    IntPoly g = gcd(a.minpoly(), b.minpoly());
    if (g.degree() >= 1) {
        SturmChain ch(g);
        bool a_root = ch.count_open(a.lo(), a.hi()) == 1;
        bool b_root = ch.count_open(b.lo(), b.hi()) == 1;
        if (a_root && b_root) {
            auto roots = isolate_real_roots(g);
            size_t ia = locate_among(roots, a);
            size_t ib = locate_among(roots, b);
            if (ia == ib) return 0;
            return ia < ib ? -1 : 1;
        }
    }
    // Provably distinct: refinement must separate the intervals.
    AlgebraicNumber x = a, y = b;
    while (true) {
        if (x.hi() <= y.lo()) return -1;
        if (y.hi() <= x.lo()) return 1;
        x.refine_step();
        y.refine_step();
    }
}

AlgebraicNumber affine_image(const AlgebraicNumber& a, const Rat& scale, const Rat& shift) {
    if (scale.is_zero()) throw Error("InvalidScale", "affine image needs nonzero scale");
    if (a.is_rational())
        return AlgebraicNumber::from_rational(scale * a.rational_value() + shift);
    // Compose the minimal polynomial with the inverse map x = (y - shift)/scale.
    RatPoly x_of_y({-shift / scale, scale.reciprocal()});
    RatPoly acc;
    for (int i = a.minpoly().degree(); i >= 0; --i)
        acc = acc * x_of_y + RatPoly::constant(Rat(a.minpoly().c[i]));
    IntPoly m = primitive_canonical(clear_denominators(acc));
    Rat p = scale * a.lo() + shift, q = scale * a.hi() + shift;
    if (scale.sign() < 0) std::swap(p, q);
    return AlgebraicNumber::from_isolated_root(std::move(m), std::move(p), std::move(q));
}

namespace {

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int bareiss_det(std::vector<std::vector<Int>> M) {
    int n = static_cast<int>(M.size());
    if (n == 0) return 1;
    int sign = 1;
    Int prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (M[i][k] != 0) { r = i; break; }
            if (r < 0) return 0;
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : Int(-M[n - 1][n - 1]);
}

RatPoly lagrange_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    RatPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis = RatPoly::constant(Rat(1));
        Rat denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = basis * RatPoly({-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + mul_scalar(basis, ys[i] / denom);
    }
    return acc;
}

// Res_x(Q, t*D - N) for enough good sample points t to interpolate the
// polynomial y -> Res_x(Q, y*D - N) of degree <= deg Q. Sample points where
// the x-degree of t*D - N drops below max(deg D, deg N) are skipped so the
// specialization agrees with the generic resultant.
IntPoly resultant_in_y(const IntPoly& Q, const IntPoly& D, const IntPoly& N) {
    int dstar = std::max(D.degree(), N.degree());
    int need = Q.degree() + 1;
    std::vector<Rat> xs, ys;
    for (long t = 0; static_cast<int>(xs.size()) < need; ++t) {
        IntPoly Bt = mul_scalar(D, Int(t)) - N;
        if (Bt.degree() < dstar) continue;
        xs.push_back(Rat(t));
        ys.push_back(Rat(resultant(Q, Bt)));
    }
    return clear_denominators(lagrange_interpolate(xs, ys));
}

} // namespace

Int resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    int m = a.degree(), n = b.degree();
    if (m == 0) return int_pow(a.c[0], static_cast<unsigned long>(n));
    if (n == 0) return int_pow(b.c[0], static_cast<unsigned long>(m));
    int dim = m + n;
    std::vector<std::vector<Int>> S(dim, std::vector<Int>(dim, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) S[i][i + j] = a.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) S[n + i][i + j] = b.c[n - j];
    return bareiss_det(std::move(S));
}

AlgebraicNumber algebraic_value(const AlgebraicNumber& theta, const RatPoly& rep) {
    if (theta.is_rational())
        return AlgebraicNumber::from_rational(rep.eval(theta.rational_value()));
    RatPoly r = mod_reduce(rep, theta.minpoly());
    if (r.degree() <= 0) return AlgebraicNumber::from_rational(r.coeff(0));

    // Candidate minimal polynomial: Res_x(Q(x), e*y - P(x)) with r = P/e has
    // the values of r at all roots of Q among its roots.
    Int e(1);
    for (const auto& v : r.c) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), v.denominator().get_mpz_t());
    std::vector<Int> pc(r.c.size());
    for (size_t i = 0; i < r.c.size(); ++i) pc[i] = r.c[i].numerator() * (e / r.c[i].denominator());
    IntPoly P(std::move(pc));
    IntPoly cand = resultant_in_y(theta.minpoly(), IntPoly::constant(e), P);

    auto roots = isolate_real_roots(cand);
    AlgebraicNumber th = theta;
    while (true) {
        RatInterval enc = iv_eval(r, th.interval());
        size_t match = roots.size();
        int count = 0;
        for (size_t j = 0; j < roots.size(); ++j) {
            if (roots[j].lo() <= enc.hi && enc.lo <= roots[j].hi()) { match = j; ++count; }
        }
        if (count == 1) return roots[match];
        th.refine_step();
    }
}

std::optional<Rat> rational_value(const AlgebraicNumber& theta, const RatPoly& rep) {
    AlgebraicNumber v = algebraic_value(theta, rep);
    if (v.is_rational()) return v.rational_value();
    return std::nullopt;
}

std::vector<Rat> rational_ratio_candidates(const AlgebraicNumber& theta, const RatPoly& num,
                                           const RatPoly& den) {
    if (theta.is_rational()) {
        Rat d = den.eval(theta.rational_value());
        if (d.is_zero()) throw Error("DivisionByZero", "ratio with zero denominator");
        return {num.eval(theta.rational_value()) / d};
    }
    IntPoly Q = theta.minpoly();
    IntPoly D = clear_denominators(mod_reduce(den, Q));
    IntPoly N = clear_denominators(mod_reduce(num, Q));
    if (D.is_zero()) throw Error("DivisionByZero", "ratio with zero denominator");
    // Common roots of N, D and Q would make the resultant vanish identically;
    // theta is not one of them (den(theta) != 0), so that factor can be
    // removed from the modulus.
    IntPoly h = gcd(Q, gcd(D, N));
    if (h.degree() >= 1) Q = exact_div(Q, h);
    if (Q.degree() == 0) return {};
    IntPoly cand = resultant_in_y(Q, D, N);
    if (cand.is_zero()) return {};
    std::vector<Rat> out;
    for (const auto& root : isolate_real_roots(cand))
        if (root.is_rational()) out.push_back(root.rational_value());
    return out;
}

} // namespace drgq
