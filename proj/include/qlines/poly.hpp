#ifndef QLINES_POLY_HPP
#define QLINES_POLY_HPP

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "field.hpp"

namespace qlines {

struct BothZero : Error {
    BothZero() : Error("gcd of two zero polynomials") {}
};

// Dense univariate polynomial over a Field, low degree first.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(const Field* F) : F_(F) {}
    UniPoly(const Field* F, std::vector<FieldElem> c) : F_(F), c_(std::move(c)) { trim(); }
    static UniPoly constant(const FieldElem& a) { return UniPoly(a.F, {a}); }
    static UniPoly x(const Field* F) { return UniPoly(F, {F->zero(), F->one()}); }
    static UniPoly from_ints(const Field* F, std::initializer_list<i64> v) {
        std::vector<FieldElem> c;
        for (i64 n : v) c.push_back(F->from_int(n));
        return UniPoly(F, std::move(c));
    }

    const Field* field() const { return F_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && qlines::is_one(c_[0]); }
    const FieldElem& lc() const { return c_.back(); }
    FieldElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F_->zero(); }
    void set_coeff(std::size_t i, const FieldElem& a) {
        if (i >= c_.size()) c_.resize(i + 1, F_->zero());
        c_[i] = a;
        trim();
    }
    const std::vector<FieldElem>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), F_->zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return UniPoly(F_, std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const {
        std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), F_->zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
        return UniPoly(F_, std::move(r));
    }
    UniPoly operator-() const {
        std::vector<FieldElem> r(c_);
        for (auto& x : r) x = -x;
        return UniPoly(F_, std::move(r));
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly(F_);
        std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, F_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (qlines::is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return UniPoly(F_, std::move(r));
    }
    UniPoly operator*(const FieldElem& s) const {
        std::vector<FieldElem> r(c_);
        for (auto& x : r) x = x * s;
        return UniPoly(F_, std::move(r));
    }

    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw DivisionByZero();
        UniPoly r = *this;
        if (r.degree() < d.degree()) return {UniPoly(F_), r};
        std::vector<FieldElem> q(r.c_.size() - d.c_.size() + 1, F_->zero());
        FieldElem lcinv = F_->inv(d.lc());
        while (!r.is_zero() && r.c_.size() >= d.c_.size()) {
            FieldElem f = r.lc() * lcinv;
            std::size_t sh = r.c_.size() - d.c_.size();
            q[sh] = f;
            for (std::size_t j = 0; j + 1 < d.c_.size(); ++j) r.c_[sh + j] = r.c_[sh + j] - f * d.c_[j];
            r.c_.pop_back();
            r.trim();
        }
        return {UniPoly(F_, std::move(q)), r};
    }
    UniPoly operator/(const UniPoly& d) const { return divmod(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divmod(d).second; }
    bool divides(const UniPoly& f) const { return (f % *this).is_zero(); }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * F_->inv(lc());
    }
    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly(F_);
        std::vector<FieldElem> r(c_.size() - 1, F_->zero());
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F_->from_int(static_cast<i64>(i));
        return UniPoly(F_, std::move(r));
    }
    FieldElem eval(const FieldElem& a) const {
        FieldElem r = F_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
        return r;
    }
    UniPoly pow_mod(UniPoly base, u64 e, const UniPoly& m) const {
        UniPoly r = UniPoly::constant(F_->one());
        base = base % m;
        while (e) {
            if (e & 1) r = (r * base) % m;
            base = (base * base) % m;
            e >>= 1;
        }
        return r;
    }
    // base^(|F|^steps) mod m, exponent handled as repeated p-th powers
    UniPoly pow_q_mod(UniPoly base, unsigned steps, const UniPoly& m) const {
        for (unsigned s = 0; s < steps; ++s)
            for (unsigned i = 0; i < F_->k; ++i) base = pow_mod(base, F_->p, m);
        return base;
    }
    // coefficient-wise p-th root of f(x) = g(x^p)
    UniPoly pth_root() const {
        u64 p = F_->p;
        std::vector<FieldElem> r;
        for (std::size_t i = 0; i < c_.size(); i += p) {
            FieldElem a = c_[i];
            // a^(p^(k-1)) is the p-th root in GF(p^k)
            r.push_back(F_->frobenius(a, F_->k - 1));
        }
        return UniPoly(F_, std::move(r));
    }

  private:
    const Field* F_ = nullptr;
    std::vector<FieldElem> c_;
    void trim() {
        while (!c_.empty() && qlines::is_zero(c_.back())) c_.pop_back();
    }
};

inline UniPoly gcd(const UniPoly& a0, const UniPoly& b0) {
    if (a0.is_zero() && b0.is_zero()) throw BothZero();
    UniPoly a = a0, b = b0;
    while (!b.is_zero()) {
        UniPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// res(f, g) by the Euclidean remainder sequence.
inline FieldElem resultant(const UniPoly& f, const UniPoly& g) {
    const Field* F = f.field();
    if (f.is_zero() || g.is_zero()) return F->zero();
    if (f.degree() == 0) return F->pow(f.coeff(0), static_cast<u64>(g.degree()));
    if (g.degree() == 0) return F->pow(g.coeff(0), static_cast<u64>(f.degree()));
    if (f.degree() < g.degree()) {
        FieldElem r = resultant(g, f);
        if ((static_cast<u64>(f.degree()) * g.degree()) & 1) r = -r;
        return r;
    }
    UniPoly r = f % g;
    if (r.is_zero()) return F->zero();
    unsigned m = f.degree(), n = g.degree(), q = r.degree();
    FieldElem out = resultant(g, r);
    out = out * F->pow(g.lc(), m - q);
    if ((static_cast<u64>(m) * n) & 1) out = -out;
    return out;
}

// Value at a specialization of the *generic* resultant res_{M,N}, where the
// specialized degrees may have dropped to deg f <= M, deg g <= N. This is what
// interpolation of a resultant needs at nodes killing leading coefficients.
inline FieldElem resultant_generic(const UniPoly& f, const UniPoly& g, unsigned M, unsigned N) {
    const Field* F = f.field();
    if (M == 0 && N == 0) return F->one();
    if (f.is_zero() || g.is_zero()) return F->zero();
    unsigned m = static_cast<unsigned>(f.degree()), n = static_cast<unsigned>(g.degree());
    if (m == M && n == N) return resultant(f, g);
    if (m == M) return F->pow(f.lc(), N - n) * resultant(f, g);
    if (n == N) {
        FieldElem r = F->pow(g.lc(), M - m) * resultant(g, f);
        if ((static_cast<u64>(M) * N) & 1) r = -r;
        return r;
    }
    return F->zero(); // both leading blocks vanish: the Sylvester matrix has a zero column
}

struct FactoredUni {
    FieldElem unit;
    std::vector<std::pair<UniPoly, unsigned>> factors; // monic irreducible, multiplicity
};

// f = prod g_i^i with g_i squarefree, pairwise coprime (char-p aware).
inline std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f0) {
    if (f0.is_zero()) throw Error("squarefree decomposition of zero");
    std::vector<std::pair<UniPoly, unsigned>> out;
    UniPoly f = f0.monic();
    if (f.degree() < 1) return out;
    UniPoly fp = f.derivative();
    if (fp.is_zero()) {
        for (auto& [g, m] : squarefree_decomposition(f.pth_root()))
            out.emplace_back(g, m * static_cast<unsigned>(f.field()->p));
        return out;
    }
    UniPoly c = gcd(f, fp);
    UniPoly w = f / c;
    unsigned i = 1;
    while (!w.is_constant()) {
        UniPoly y = gcd(w, c);
        UniPoly z = w / y;
        if (!z.is_constant()) out.emplace_back(z.monic(), i);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_constant()) {
        for (auto& [g, m] : squarefree_decomposition(c.pth_root()))
            out.emplace_back(g, m * static_cast<unsigned>(f.field()->p));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

namespace detail {

inline u64 poly_hash(const UniPoly& f) {
    u64 h = 1469598103934665603ull;
    for (const auto& c : f.coeffs())
        for (u32 d : c.d) h = fnv1a(&d, sizeof d, h);
    return h;
}

// Equal-degree splitting of a product of degree-d irreducibles (Cantor-Zassenhaus;
// trace method in characteristic 2). Exponents stay in u64 via p-power chains.
inline void edf(const UniPoly& f, unsigned d, std::vector<UniPoly>& out, std::mt19937_64& rng) {
    const Field* F = f.field();
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f.monic());
        return;
    }
    UniPoly splitter(F);
    while (true) {
        // random polynomial of degree < deg f
        std::vector<FieldElem> rc;
        for (int i = 0; i < f.degree(); ++i) {
            Digits dd(F->k);
            for (auto& x : dd) x = static_cast<u32>(rng() % F->p);
            rc.push_back(F->make(std::move(dd)));
        }
        UniPoly a(F, std::move(rc));
        if (a.is_zero()) continue;
        unsigned kd = F->k * d;
        UniPoly s(F);
        if (F->p == 2) {
            UniPoly t = a % f;
            UniPoly acc = t;
            for (unsigned i = 1; i < kd; ++i) {
                t = (t * t) % f;
                acc = acc + t;
            }
            s = std::move(acc);
        } else {
            // a^((q^d-1)/2) = (prod_{i<kd} a^(p^i))^((p-1)/2)
            UniPoly t = a % f;
            UniPoly acc = UniPoly::constant(F->one());
            for (unsigned i = 0; i < kd; ++i) {
                acc = (acc * t) % f;
                if (i + 1 < kd) t = f.pow_mod(t, F->p, f);
            }
            s = f.pow_mod(acc, (F->p - 1) / 2, f) - UniPoly::constant(F->one());
        }
        UniPoly g = gcd(s.is_zero() ? f : s, f);
        if (g.is_constant() || g.degree() == f.degree()) continue;
        edf(g, d, out, rng);
        edf(f / g, d, out, rng);
        return;
    }
}

} // namespace detail

// Complete factorization into monic irreducibles over the coefficient field.
// Deterministic for a fixed seed.
inline FactoredUni factor_univariate(const UniPoly& f0, u64 seed = 0) {
    if (f0.is_zero()) throw Error("factorization of zero");
    const Field* F = f0.field();
    FactoredUni out{f0.lc(), {}};
    if (f0.degree() < 1) return out;
    std::mt19937_64 rng(seed ^ detail::poly_hash(f0) ^ 0x5851f42d4c957f2dull);
    for (auto& [sf, mult] : squarefree_decomposition(f0)) {
        // distinct-degree splitting of the squarefree part
        UniPoly f = sf;
        UniPoly h = UniPoly::x(F) % f;
        unsigned d = 0;
        while (f.degree() > 0 && 2 * (d + 1) <= static_cast<unsigned>(f.degree())) {
            ++d;
            h = f.pow_q_mod(h, 1, f);
            UniPoly g = gcd(h - UniPoly::x(F), f);
            if (g.degree() > 0) {
                std::vector<UniPoly> eq;
                detail::edf(g, d, eq, rng);
                for (auto& irr : eq) out.factors.emplace_back(irr, mult);
                f = f / g;
                h = h % f;
            }
        }
        if (f.degree() > 0) out.factors.emplace_back(f.monic(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = 0; i <= a.first.degree(); ++i) {
            const Digits &x = a.first.coeff(i).d, &y = b.first.coeff(i).d;
            if (x != y) return lex_less(x, y);
        }
        return a.second < b.second;
    });
    return out;
}

inline bool is_irreducible(const UniPoly& f, u64 seed = 0) {
    if (f.degree() < 1) return false;
    FactoredUni fac = factor_univariate(f, seed);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

// Distinct roots of f in its coefficient field.
inline std::vector<FieldElem> roots_in_field(const UniPoly& f) {
    detail::FPoly v(f.coeffs().begin(), f.coeffs().end());
    std::vector<FieldElem> r = detail::fp_roots(*f.field(), std::move(v));
    std::sort(r.begin(), r.end(), [](const FieldElem& a, const FieldElem& b) { return lex_less(a, b); });
    return r;
}

// Roots with multiplicities via the squarefree decomposition.
inline std::vector<std::pair<FieldElem, unsigned>> roots_with_multiplicity(const UniPoly& f) {
    std::vector<std::pair<FieldElem, unsigned>> out;
    for (auto& [g, m] : squarefree_decomposition(f))
        for (auto& r : roots_in_field(g)) out.emplace_back(r, m);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    return out;
}

// Newton interpolation through (nodes[i], values[i]); nodes pairwise distinct.
inline UniPoly interpolate(const std::vector<FieldElem>& nodes, const std::vector<FieldElem>& values) {
    const Field* F = nodes.at(0).F;
    std::size_t n = nodes.size();
    std::vector<FieldElem> dd(values); // divided differences, computed in place
    for (std::size_t lvl = 1; lvl < n; ++lvl)
        for (std::size_t i = n - 1; i >= lvl; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - lvl]);
    UniPoly r(F);
    for (std::size_t i = n; i-- > 0;) {
        r = r * (UniPoly::x(F) - UniPoly::constant(nodes[i])) + UniPoly::constant(dd[i]);
    }
    return r;
}

} // namespace qlines

#endif
