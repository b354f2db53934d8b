#include "drgq/poly.hpp"

#include <algorithm>
#include <sstream>

namespace drgq {

void IntPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

Int IntPoly::eval_int(const Int& x) const {
    Int acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

static void append_term(std::ostringstream& os, bool first, const Int& coeff, int deg) {
    if (coeff == 0) return;
    Int a = coeff;
    if (first) {
        if (a < 0) { os << "-"; a = -a; }
    } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    if (deg == 0 || a != 1) os << a.get_str();
    if (deg >= 1) {
        if (a != 1) os << "*";
        os << "x";
        if (deg >= 2) os << "^" << deg;
    }
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        append_term(os, first, c[i], i);
        first = false;
    }
    return os.str();
}

IntPoly derivative(const IntPoly& p) {
    if (p.degree() <= 0) return IntPoly();
    std::vector<Int> d(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) d[i - 1] = p.c[i] * static_cast<long>(i);
    return IntPoly(std::move(d));
}

IntPoly operator-(const IntPoly& p) {
    std::vector<Int> d(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) d[i] = -p.c[i];
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> d(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) d[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) d[i] += b.c[i];
    return IntPoly(std::move(d));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> d(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) d[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(d));
}

IntPoly mul_scalar(const IntPoly& p, const Int& s) {
    if (s == 0) return IntPoly();
    std::vector<Int> d(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) d[i] = p.c[i] * s;
    return IntPoly(std::move(d));
}

Int content(const IntPoly& p) {
    Int g(0);
    for (const auto& v : p.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_keep_sign(const IntPoly& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (g == 1) return p;
    std::vector<Int> d(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) d[i] = p.c[i] / g;
    return IntPoly(std::move(d));
}

IntPoly primitive_canonical(const IntPoly& p) {
    IntPoly q = primitive_keep_sign(p);
    if (!q.is_zero() && q.lead() < 0) q = -q;
    return q;
}

std::pair<IntPoly, int> pseudo_rem(const IntPoly& f, const IntPoly& g) {
    // lead(g)^(deg f - deg g + 1) * f = q*g + r, computed in place.
    // Each of the deg f - deg g + 1 elimination steps scales the running
    // remainder by lead(g) exactly once, so the sign of the total multiplier
    // is sign(lead(g))^(deg f - deg g + 1).
    int df = f.degree(), dg = g.degree();
    if (df < dg) return {f, 1};
    const Int& lg = g.lead();
    std::vector<Int> r = f.c;
    for (int k = df; k >= dg; --k) {
        Int top = r[k];
        for (int i = 0; i < k; ++i) r[i] *= lg;
        for (int i = 0; i < dg; ++i) r[k - dg + i] -= top * g.c[i];
        r[k] = 0;
    }
    int mult_sign = (lg < 0 && (df - dg + 1) % 2 != 0) ? -1 : 1;
    return {IntPoly(std::move(r)), mult_sign};
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly f = primitive_keep_sign(a);
    IntPoly g = primitive_keep_sign(b);
    if (f.is_zero()) return primitive_canonical(g);
    if (g.is_zero()) return primitive_canonical(f);
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        auto [r, sign] = pseudo_rem(f, g);
        (void)sign; // gcd is insensitive to scaling
        f = std::move(g);
        g = primitive_keep_sign(r);
    }
    return primitive_canonical(f);
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    auto [q, r] = divrem(RatPoly::from_int(a), RatPoly::from_int(b));
    if (!r.is_zero()) throw Error("InexactDivision", "polynomial division not exact");
    std::vector<Int> d(q.c.size());
    for (size_t i = 0; i < q.c.size(); ++i) {
        if (!q.c[i].is_integer()) throw Error("InexactDivision", "non-integral quotient");
        d[i] = q.c[i].numerator();
    }
    return IntPoly(std::move(d));
}

IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 0) return primitive_canonical(p);
    IntPoly g = gcd(p, derivative(p));
    if (g.degree() == 0) return primitive_canonical(p);
    return primitive_canonical(exact_div(primitive_canonical(p), g));
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    // Yun's algorithm over the primitive part.
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = primitive_canonical(p);
    if (f.degree() <= 0) return out;
    IntPoly fp = derivative(f);
    IntPoly a = gcd(f, fp);
    IntPoly b = exact_div(f, a);
    IntPoly c = exact_div(fp, a);
    IntPoly d = c - derivative(b);
    for (int m = 1; b.degree() > 0; ++m) {
        IntPoly fi = gcd(b, d);
        if (fi.degree() > 0) out.emplace_back(fi, m);
        b = exact_div(b, fi);
        c = exact_div(d, fi);
        d = c - derivative(b);
    }
    return out;
}

std::vector<Rat> root_power_sums(const IntPoly& p, int count) {
    // Newton's identities:  s_t = -t*a_{n-t}/a_n - sum_{i=1..t-1} a_{n-i]/a_n * s_{t-i}.
    int n = p.degree();
    std::vector<Rat> s(static_cast<size_t>(count) + 1, Rat(0));
    Rat lead = Rat(p.lead());
    auto a = [&](int i) { return i >= 0 ? Rat(p.c[i]) : Rat(0); };
    for (int t = 1; t <= count; ++t) {
        Rat acc = a(n - t) / lead * Rat(t);
        for (int i = 1; i < t; ++i) acc += a(n - i) / lead * s[t - i];
        s[t] = -acc;
    }
    s.erase(s.begin());
    return s;
}

SturmChain::SturmChain(const IntPoly& p) {
    IntPoly s0 = primitive_keep_sign(p);
    if (s0.is_zero()) { chain_.push_back(s0); return; }
    chain_.push_back(s0);
    IntPoly s1 = primitive_keep_sign(derivative(s0));
    if (s1.is_zero()) return;
    chain_.push_back(s1);
    while (true) {
        const IntPoly& f = chain_[chain_.size() - 2];
        const IntPoly& g = chain_.back();
        auto [r, mult_sign] = pseudo_rem(f, g);
        if (r.is_zero()) break;
        // Sturm recurrence wants -rem(f, g) up to a positive factor; the
        // pseudo-remainder equals mult * rem with mult of known sign.
        IntPoly next = primitive_keep_sign(r);
        if (mult_sign > 0) next = -next;
        chain_.push_back(std::move(next));
        if (chain_.back().degree() == 0) break;
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int var = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

static int sign_at_infinity(const IntPoly& p, bool negative) {
    if (p.is_zero()) return 0;
    int s = sgn(p.lead());
    if (negative && p.degree() % 2 == 1) s = -s;
    return s;
}

int SturmChain::variations_neg_inf() const {
    int var = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = sign_at_infinity(p, true);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_pos_inf() const {
    int var = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = sign_at_infinity(p, false);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_open(const Rat& lo, const Rat& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_all() const { return variations_neg_inf() - variations_pos_inf(); }

// ---------------------------------------------------------------------------

void RatPoly::normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

RatPoly RatPoly::from_int(const IntPoly& p) {
    std::vector<Rat> d(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) d[i] = Rat(p.c[i]);
    return RatPoly(std::move(d));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string RatPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i].is_zero()) continue;
        Rat a = c[i];
        if (first) {
            if (a.sign() < 0) { os << "-"; a = -a; }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            a = a.abs();
        }
        bool unit = (a == Rat(1));
        if (i == 0 || !unit) os << a.str();
        if (i >= 1) {
            if (!unit) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

RatPoly operator-(const RatPoly& p) {
    std::vector<Rat> d(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) d[i] = -p.c[i];
    return RatPoly(std::move(d));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> d(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) d[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) d[i] += b.c[i];
    return RatPoly(std::move(d));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> d(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) d[i + j] += a.c[i] * b.c[j];
    return RatPoly(std::move(d));
}

RatPoly mul_scalar(const RatPoly& p, const Rat& s) {
    if (s.is_zero()) return RatPoly();
    std::vector<Rat> d(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) d[i] = p.c[i] * s;
    return RatPoly(std::move(d));
}

RatPoly derivative(const RatPoly& p) {
    if (p.degree() <= 0) return RatPoly();
    std::vector<Rat> d(p.c.size() - 1);
    for (size_t i = 1; i < p.c.size(); ++i) d[i - 1] = p.c[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(d));
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    std::vector<Rat> r = a.c;
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {RatPoly(), a};
    std::vector<Rat> q(static_cast<size_t>(dq) + 1, Rat(0));
    Rat inv_lead = b.lead().reciprocal();
    for (int k = a.degree(); k >= db; --k) {
        Rat f = r[k] * inv_lead;
        if (f.is_zero()) continue;
        q[k - db] = f;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= f * b.c[i];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly mod_reduce(const RatPoly& a, const IntPoly& m) {
    return divrem(a, RatPoly::from_int(m)).second;
}

IntPoly clear_denominators(const RatPoly& p) {
    if (p.is_zero()) return IntPoly();
    Int l(1);
    for (const auto& v : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
    std::vector<Int> d(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) d[i] = p.c[i].numerator() * (l / p.c[i].denominator());
    return primitive_keep_sign(IntPoly(std::move(d)));
}

RatInterval iv_add(const RatInterval& a, const RatInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {min(min(p1, p2), min(p3, p4)), max(max(p1, p2), max(p3, p4))};
}

RatInterval iv_scale(const RatInterval& a, const Rat& s) {
    return s.sign() >= 0 ? RatInterval{a.lo * s, a.hi * s} : RatInterval{a.hi * s, a.lo * s};
}

RatInterval iv_eval(const RatPoly& p, const RatInterval& x) {
    RatInterval acc{Rat(0), Rat(0)};
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = iv_mul(acc, x);
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

} // namespace drgq
