#ifndef QLINES_FIELD_HPP
#define QLINES_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "util.hpp"

namespace qlines {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct FieldMismatch : Error {
    FieldMismatch() : Error("elements belong to different fields") {}
};
struct NoEmbedding : Error {
    NoEmbedding() : Error("source degree does not divide target degree") {}
};

// Coefficient vector of an extension-field element, low degree first,
// entries in [0, p). Inline storage covers every degree the analysis hits.
using Digits = boost::container::small_vector<u32, 12>;

class Field;
class FieldTower;

struct FieldElem {
    const Field* F = nullptr;
    Digits d;

    FieldElem() = default;
    FieldElem(const Field* f, Digits v) : F(f), d(std::move(v)) {}

    bool operator==(const FieldElem& o) const { return F == o.F && d == o.d; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
};

// Low-first lexicographic order on digit vectors; the canonical order used
// for modulus selection, embedding roots and orbit representatives.
inline bool lex_less(const Digits& a, const Digits& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}
inline bool lex_less(const FieldElem& a, const FieldElem& b) { return lex_less(a.d, b.d); }

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

// GF(p^k). Immutable once constructed; built only through FieldTower.
class Field {
  public:
    u64 p = 0;
    unsigned k = 1;
    std::vector<u32> modulus; // size k+1, monic; meaningful for k >= 2
    const FieldTower* tower = nullptr;

    FieldElem zero() const { return FieldElem(this, Digits(k, 0)); }
    FieldElem one() const {
        Digits v(k, 0);
        v[0] = 1;
        return FieldElem(this, std::move(v));
    }
    // class of x in GF(p)[x]/(modulus); equals 1 for k == 1
    FieldElem gen() const {
        Digits v(k, 0);
        if (k >= 2)
            v[1] = 1;
        else
            v[0] = 1 % static_cast<u32>(p);
        return FieldElem(this, std::move(v));
    }
    FieldElem from_int(i64 n) const {
        i64 r = n % static_cast<i64>(p);
        if (r < 0) r += static_cast<i64>(p);
        Digits v(k, 0);
        v[0] = static_cast<u32>(r);
        return FieldElem(this, std::move(v));
    }
    FieldElem make(Digits v) const {
        v.resize(k, 0);
        for (auto& x : v) x = static_cast<u32>(x % p);
        return FieldElem(this, std::move(v));
    }

    bool is_zero(const FieldElem& a) const {
        for (u32 x : a.d)
            if (x) return false;
        return true;
    }
    bool is_one(const FieldElem& a) const {
        if (a.d[0] != 1) return false;
        for (unsigned i = 1; i < k; ++i)
            if (a.d[i]) return false;
        return true;
    }
    bool is_constant(const FieldElem& a) const {
        for (unsigned i = 1; i < k; ++i)
            if (a.d[i]) return false;
        return true;
    }

    FieldElem add(const FieldElem& a, const FieldElem& b) const {
        check(a, b);
        Digits r(k);
        for (unsigned i = 0; i < k; ++i) {
            u64 s = static_cast<u64>(a.d[i]) + b.d[i];
            r[i] = static_cast<u32>(s >= p ? s - p : s);
        }
        return FieldElem(this, std::move(r));
    }
    FieldElem sub(const FieldElem& a, const FieldElem& b) const {
        check(a, b);
        Digits r(k);
        for (unsigned i = 0; i < k; ++i) {
            u64 s = static_cast<u64>(a.d[i]) + p - b.d[i];
            r[i] = static_cast<u32>(s >= p ? s - p : s);
        }
        return FieldElem(this, std::move(r));
    }
    FieldElem neg(const FieldElem& a) const {
        check(a);
        Digits r(k);
        for (unsigned i = 0; i < k; ++i) r[i] = a.d[i] ? static_cast<u32>(p - a.d[i]) : 0;
        return FieldElem(this, std::move(r));
    }
    FieldElem mul(const FieldElem& a, const FieldElem& b) const {
        check(a, b);
        if (k == 1) return FieldElem(this, Digits{static_cast<u32>(static_cast<u64>(a.d[0]) * b.d[0] % p)});
        boost::container::small_vector<u64, 24> acc(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i) {
            if (!a.d[i]) continue;
            u64 ai = a.d[i];
            for (unsigned j = 0; j < k; ++j) acc[i + j] = (acc[i + j] + ai * b.d[j]) % p;
        }
        // reduce by the monic modulus: x^k = -(modulus[0] + ... + modulus[k-1] x^(k-1))
        for (std::size_t i = acc.size(); i-- > k;) {
            u64 c = acc[i];
            if (!c) continue;
            acc[i] = 0;
            for (unsigned j = 0; j < k; ++j) {
                if (!modulus[j]) continue;
                u64 m = static_cast<u64>(modulus[j]) * c % p;
                std::size_t t = i - k + j;
                acc[t] = (acc[t] + p - m) % p;
            }
        }
        Digits r(k);
        for (unsigned i = 0; i < k; ++i) r[i] = static_cast<u32>(acc[i]);
        return FieldElem(this, std::move(r));
    }
    // a^(-1) = (prod_{i>=1} a^(p^i)) / N with N = a * prod_{i>=1} a^(p^i) in GF(p)
    FieldElem inv(const FieldElem& a) const {
        check(a);
        if (is_zero(a)) throw DivisionByZero();
        if (k == 1) return FieldElem(this, Digits{static_cast<u32>(inv_mod_p(a.d[0]))});
        FieldElem b = one();
        FieldElem f = a;
        for (unsigned i = 1; i < k; ++i) {
            f = apply_frob(f);
            b = mul(b, f);
        }
        FieldElem n = mul(a, b); // the norm, a prime-field constant
        u64 ninv = inv_mod_p(n.d[0]);
        Digits r(k);
        for (unsigned i = 0; i < k; ++i) r[i] = static_cast<u32>(b.d[i] * ninv % p);
        return FieldElem(this, std::move(r));
    }
    FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }
    FieldElem pow(FieldElem a, u64 e) const {
        check(a);
        FieldElem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    // a^(p^i)
    FieldElem frobenius(const FieldElem& a, unsigned i = 1) const {
        check(a);
        if (k == 1) return a;
        i %= k;
        FieldElem r = a;
        for (unsigned t = 0; t < i; ++t) r = apply_frob(r);
        return r;
    }
    // minimal d | k with a in GF(p^d)
    unsigned element_degree(const FieldElem& a) const {
        check(a);
        for (unsigned d = 1; d < k; ++d) {
            if (k % d) continue;
            if (frobenius(a, d) == a) return d;
        }
        return k;
    }

    // odometer over all field elements starting from the zero vector
    bool next(Digits& v) const {
        for (unsigned i = 0; i < k; ++i) {
            if (++v[i] < p) return true;
            v[i] = 0;
        }
        return false;
    }
    // field size when it fits in u64, else 0
    u64 size_u64() const {
        u64 q = 1;
        for (unsigned i = 0; i < k; ++i) {
            if (q > (~0ull) / p) return 0;
            q *= p;
        }
        return q;
    }
    FieldElem from_index(u64 n) const {
        Digits v(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            v[i] = static_cast<u32>(n % p);
            n /= p;
        }
        return FieldElem(this, std::move(v));
    }
    u64 to_index(const FieldElem& a) const {
        u64 n = 0;
        for (unsigned i = k; i-- > 0;) n = n * p + a.d[i];
        return n;
    }

    u64 inv_mod_p(u64 a) const {
        u64 r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

  private:
    friend class FieldTower;
    Field() = default;

    std::vector<Digits> frob_cols_; // column j = digits of (g^j)^p

    void check(const FieldElem& a) const {
        if (a.F != this) throw FieldMismatch();
    }
    void check(const FieldElem& a, const FieldElem& b) const {
        if (a.F != this || b.F != this) throw FieldMismatch();
    }
    FieldElem apply_frob(const FieldElem& a) const {
        Digits r(k, 0);
        for (unsigned j = 0; j < k; ++j) {
            if (!a.d[j]) continue;
            u64 c = a.d[j];
            const Digits& col = frob_cols_[j];
            for (unsigned i = 0; i < k; ++i) r[i] = static_cast<u32>((r[i] + c * col[i]) % p);
        }
        return FieldElem(this, std::move(r));
    }
};

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) { return a.F->add(a, b); }
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a.F->sub(a, b); }
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) { return a.F->mul(a, b); }
inline FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a.F->div(a, b); }
inline FieldElem operator-(const FieldElem& a) { return a.F->neg(a); }
inline bool is_zero(const FieldElem& a) { return a.F->is_zero(a); }
inline bool is_one(const FieldElem& a) { return a.F->is_one(a); }

namespace detail {

// Minimal dense polynomial arithmetic over a Field, low degree first.
// Only what tower construction needs; the public engine lives in poly.hpp.
using FPoly = std::vector<FieldElem>;

inline void fp_trim(FPoly& f) {
    while (!f.empty() && is_zero(f.back())) f.pop_back();
}
inline int fp_deg(const FPoly& f) { return static_cast<int>(f.size()) - 1; }

inline FPoly fp_mul(const Field& F, const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    FPoly r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    }
    fp_trim(r);
    return r;
}

inline FPoly fp_mod(const Field& F, FPoly a, const FPoly& m) {
    fp_trim(a);
    FieldElem lcinv = F.inv(m.back());
    while (a.size() >= m.size() && !a.empty()) {
        FieldElem c = a.back() * lcinv;
        std::size_t sh = a.size() - m.size();
        if (!is_zero(c))
            for (std::size_t j = 0; j + 1 < m.size(); ++j) a[sh + j] = a[sh + j] - c * m[j];
        a.pop_back();
        fp_trim(a);
    }
    return a;
}

inline FPoly fp_sub(const Field& F, const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        FieldElem x = i < a.size() ? a[i] : F.zero();
        FieldElem y = i < b.size() ? b[i] : F.zero();
        r[i] = x - y;
    }
    fp_trim(r);
    return r;
}

inline FPoly fp_add(const Field& F, const FPoly& a, const FPoly& b) {
    FPoly r(std::max(a.size(), b.size()), F.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        FieldElem x = i < a.size() ? a[i] : F.zero();
        FieldElem y = i < b.size() ? b[i] : F.zero();
        r[i] = x + y;
    }
    fp_trim(r);
    return r;
}

inline FPoly fp_gcd(const Field& F, FPoly a, FPoly b) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FPoly r = fp_mod(F, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        FieldElem c = F.inv(a.back());
        for (auto& x : a) x = x * c;
    }
    return a;
}

inline FPoly fp_divexact(const Field& F, FPoly a, const FPoly& b) {
    FPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, F.zero());
    FieldElem lcinv = F.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
        FieldElem c = a.back() * lcinv;
        std::size_t sh = a.size() - b.size();
        q[sh] = c;
        for (std::size_t j = 0; j + 1 < b.size(); ++j) a[sh + j] = a[sh + j] - c * b[j];
        a.pop_back();
        fp_trim(a);
    }
    return q;
}

inline FPoly fp_pow_u64_mod(const Field& F, FPoly base, u64 e, const FPoly& m) {
    FPoly r{F.one()};
    base = fp_mod(F, std::move(base), m);
    while (e) {
        if (e & 1) r = fp_mod(F, fp_mul(F, r, base), m);
        base = fp_mod(F, fp_mul(F, base, base), m);
        e >>= 1;
    }
    return r;
}

// x^(|F|) mod f via k successive p-th powers (exponents stay inside u64)
inline FPoly fp_pow_q_mod(const Field& F, FPoly x, const FPoly& f) {
    for (unsigned i = 0; i < F.k; ++i) x = fp_pow_u64_mod(F, std::move(x), F.p, f);
    return x;
}

// All distinct roots of f in F (f need not be squarefree).
inline std::vector<FieldElem> fp_roots(const Field& F, FPoly f, u64 rng_seed = 0x9e3779b97f4a7c15ull) {
    fp_trim(f);
    std::vector<FieldElem> roots;
    if (fp_deg(f) < 1) return roots;
    FPoly x{F.zero(), F.one()};
    FPoly xq = fp_pow_q_mod(F, x, f);
    FPoly g = fp_gcd(F, fp_sub(F, xq, x), f);
    std::mt19937_64 rng(rng_seed);
    std::vector<FPoly> stack{std::move(g)};
    while (!stack.empty()) {
        FPoly h = std::move(stack.back());
        stack.pop_back();
        int d = fp_deg(h);
        if (d <= 0) continue;
        if (d == 1) {
            roots.push_back(F.neg(h[0] / h[1]));
            continue;
        }
        FPoly s;
        if (F.p == 2) {
            // trace splitting: T(cx) = sum_i (cx)^(2^i) mod h
            Digits cd(F.k);
            for (auto& v : cd) v = static_cast<u32>(rng() & 1);
            FieldElem c = F.make(std::move(cd));
            FPoly t = fp_mod(F, FPoly{F.zero(), c}, h);
            FPoly acc = t;
            for (unsigned i = 1; i < F.k; ++i) {
                t = fp_mod(F, fp_mul(F, t, t), h);
                acc = fp_add(F, acc, t);
            }
            s = std::move(acc);
        } else {
            // (x+delta)^((q-1)/2) - 1 with the exponent split as
            // ((p-1)/2) * (1 + p + ... + p^(k-1)) to stay in u64
            Digits cd(F.k);
            for (auto& v : cd) v = static_cast<u32>(rng() % F.p);
            FieldElem delta = F.make(std::move(cd));
            FPoly t = fp_mod(F, FPoly{delta, F.one()}, h);
            FPoly acc{F.one()};
            for (unsigned i = 0; i < F.k; ++i) {
                acc = fp_mod(F, fp_mul(F, acc, t), h);
                if (i + 1 < F.k) t = fp_pow_u64_mod(F, std::move(t), F.p, h);
            }
            s = fp_pow_u64_mod(F, std::move(acc), (F.p - 1) / 2, h);
            s = fp_sub(F, s, FPoly{F.one()});
        }
        FPoly g1 = fp_gcd(F, std::move(s), h);
        if (fp_deg(g1) <= 0 || fp_deg(g1) == fp_deg(h)) {
            stack.push_back(std::move(h)); // unlucky split, retry
            continue;
        }
        FPoly g2 = fp_divexact(F, h, g1);
        stack.push_back(std::move(g1));
        stack.push_back(std::move(g2));
    }
    return roots;
}

} // namespace detail

// Registry of the GF(p^k) for one p, with mutually compatible embeddings.
// A field is created only after all its divisor fields; each embedding from
// a divisor is fixed at creation time by choosing, among the roots of the
// divisor's modulus, the lex-least root consistent with the embeddings
// already fixed below it. That makes every embedding triangle commute and
// the whole system a deterministic function of p alone.
class FieldTower {
  public:
    explicit FieldTower(u64 p) : p_(p) {
        if (!is_prime_u64(p)) throw Error("characteristic must be prime: " + std::to_string(p));
        field(1);
    }
    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

    u64 p() const { return p_; }
    const Field* prime_field() const { return field(1); }

    const Field* field(unsigned k) const {
        if (k == 0) throw Error("extension degree must be positive");
        std::lock_guard<std::mutex> lk(mu_);
        return field_locked(k);
    }

    // Ring embedding GF(p^a) -> GF(p^b); requires a | b.
    FieldElem embed(const FieldElem& a, const Field* target) const {
        const Field* src = a.F;
        if (src == target) return a;
        if (target->k % src->k) throw NoEmbedding();
        if (src->k == 1) {
            Digits v(target->k, 0);
            v[0] = a.d[0];
            return FieldElem(target, std::move(v));
        }
        std::lock_guard<std::mutex> lk(mu_);
        field_locked(std::lcm(src->k, target->k));
        const Emb& e = embs_.at({src->k, target->k});
        Digits out(target->k, 0);
        for (unsigned j = 0; j < src->k; ++j) {
            if (!a.d[j]) continue;
            u64 c = a.d[j];
            for (unsigned i = 0; i < target->k; ++i)
                out[i] = static_cast<u32>((out[i] + c * e.powers[j].d[i]) % p_);
        }
        return FieldElem(target, std::move(out));
    }

    // Inverse of embed on its image; throws if the element is outside the subfield.
    FieldElem project(const FieldElem& a, const Field* target) const {
        const Field* src = a.F;
        if (src == target) return a;
        if (src->k % target->k) throw NoEmbedding();
        if (target->k == 1) {
            if (!src->is_constant(a)) throw Error("element does not lie in the prime field");
            return FieldElem(target, Digits{a.d[0]});
        }
        std::lock_guard<std::mutex> lk(mu_);
        const Emb& e = embs_.at({target->k, src->k});
        unsigned b = src->k, aa = target->k;
        // Gauss-Jordan row reduction of [M | a] where M_{ij} = powers[j].d[i]
        std::vector<std::vector<u64>> A(b, std::vector<u64>(aa + 1, 0));
        for (unsigned j = 0; j < aa; ++j)
            for (unsigned i = 0; i < b; ++i) A[i][j] = e.powers[j].d[i];
        for (unsigned i = 0; i < b; ++i) A[i][aa] = a.d[i];
        std::vector<unsigned> pivot(aa);
        std::vector<bool> rowused(b, false);
        for (unsigned j = 0; j < aa; ++j) {
            unsigned pr = b;
            for (unsigned i = 0; i < b; ++i)
                if (!rowused[i] && A[i][j]) {
                    pr = i;
                    break;
                }
            if (pr == b) throw Error("embedding matrix degenerate (impossible)");
            rowused[pr] = true;
            pivot[j] = pr;
            u64 inv = src->inv_mod_p(A[pr][j]);
            for (unsigned c = 0; c <= aa; ++c) A[pr][c] = A[pr][c] * inv % p_;
            for (unsigned i = 0; i < b; ++i) {
                if (i == pr || !A[i][j]) continue;
                u64 f = A[i][j];
                for (unsigned c = 0; c <= aa; ++c) A[i][c] = (A[i][c] + (p_ - f) * A[pr][c]) % p_;
            }
        }
        for (unsigned i = 0; i < b; ++i)
            if (!rowused[i] && A[i][aa]) throw Error("element does not lie in the requested subfield");
        Digits sol(aa, 0);
        for (unsigned j = 0; j < aa; ++j) sol[j] = static_cast<u32>(A[pivot[j]][aa]);
        return FieldElem(target, std::move(sol));
    }

    const Field* compositum(const Field* A, const Field* B) const { return field(std::lcm(A->k, B->k)); }

    // Rewrite a over its minimal field GF(p^d), d = element_degree(a).
    FieldElem minimize(const FieldElem& a) const {
        unsigned d = a.F->element_degree(a);
        if (d == a.F->k) return a;
        return project(a, field(d));
    }

  private:
    struct Emb {
        std::vector<FieldElem> powers; // r^0 .. r^(a-1) inside GF(p^b)
    };

    mutable std::mutex mu_;
    u64 p_;
    mutable std::map<unsigned, std::unique_ptr<Field>> fields_;
    mutable std::map<std::pair<unsigned, unsigned>, Emb> embs_;

    const Field* field_locked(unsigned k) const {
        auto it = fields_.find(k);
        if (it != fields_.end()) return it->second.get();
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) field_locked(d);
        auto f = std::unique_ptr<Field>(new Field());
        f->p = p_;
        f->k = k;
        f->tower = this;
        if (k >= 2) {
            f->modulus = smallest_irreducible(k);
            build_frobenius(*f);
        } else {
            f->modulus = {0, 1};
        }
        Field* raw = f.get();
        fields_.emplace(k, std::move(f));
        if (k >= 2) build_embeddings(raw);
        return raw;
    }

    // lexicographically smallest monic irreducible of degree k over GF(p),
    // coefficients (c0, ..., c_{k-1}) compared low-degree-first
    std::vector<u32> smallest_irreducible(unsigned k) const {
        std::vector<u32> c(k + 1, 0);
        c[k] = 1;
        while (true) {
            if (irreducible_over_prime(c)) return c;
            bool carried = false;
            for (unsigned i = k; i-- > 0;) {
                if (++c[i] < p_) {
                    carried = true;
                    break;
                }
                c[i] = 0;
            }
            if (!carried) throw Error("no irreducible polynomial found (impossible)");
        }
    }

    bool irreducible_over_prime(const std::vector<u32>& c) const {
        const Field* P = fields_.at(1).get();
        detail::FPoly f;
        f.reserve(c.size());
        for (u32 x : c) f.push_back(P->from_int(static_cast<i64>(x)));
        detail::fp_trim(f);
        unsigned n = static_cast<unsigned>(c.size()) - 1;
        if (detail::fp_deg(f) != static_cast<int>(n)) return false;
        if (c[0] == 0) return false; // divisible by x
        detail::FPoly x{P->zero(), P->one()};
        std::vector<detail::FPoly> powers(n + 1); // powers[i] = x^(p^i) mod f
        powers[0] = x;
        for (unsigned i = 1; i <= n; ++i) powers[i] = detail::fp_pow_u64_mod(*P, powers[i - 1], p_, f);
        if (detail::fp_deg(detail::fp_sub(*P, powers[n], x)) >= 0) return false;
        unsigned m = n;
        for (unsigned l = 2; l <= m; ++l) {
            if (m % l) continue;
            while (m % l == 0) m /= l;
            detail::FPoly g = detail::fp_gcd(*P, detail::fp_sub(*P, powers[n / l], x), f);
            if (detail::fp_deg(g) != 0) return false;
        }
        return true;
    }

    void build_frobenius(Field& f) const {
        // column j = digits of (g^p)^j, computed with field multiplication only
        FieldElem gp = f.pow(f.gen(), f.p);
        f.frob_cols_.resize(f.k);
        FieldElem cur = f.one();
        for (unsigned j = 0; j < f.k; ++j) {
            f.frob_cols_[j] = cur.d;
            if (j + 1 < f.k) cur = f.mul(cur, gp);
        }
    }

    void build_embeddings(Field* fb) const {
        unsigned b = fb->k;
        for (unsigned a = 2; a < b; ++a) {
            if (b % a) continue;
            const Field* fa = fields_.at(a).get();
            detail::FPoly ma;
            ma.reserve(a + 1);
            for (u32 x : fa->modulus) ma.push_back(fb->from_int(static_cast<i64>(x)));
            std::vector<FieldElem> roots = detail::fp_roots(*fb, ma);
            if (roots.size() != a) throw Error("embedding root count mismatch");
            std::vector<FieldElem> valid;
            for (const FieldElem& r : roots) {
                bool ok = true;
                for (unsigned d = 2; d < a && ok; ++d) {
                    if (a % d) continue;
                    const FieldElem& gda = embs_.at({d, a}).powers[1]; // image of g_d in GF(p^a)
                    const FieldElem& gdb = embs_.at({d, b}).powers[1]; // image of g_d in GF(p^b)
                    // evaluate gda, a polynomial in g_a with prime digits, at r
                    FieldElem val = fb->zero();
                    for (unsigned j = a; j-- > 0;) {
                        val = fb->mul(val, r);
                        if (gda.d[j]) val = fb->add(val, fb->from_int(gda.d[j]));
                    }
                    if (!(val == gdb)) ok = false;
                }
                if (ok) valid.push_back(r);
            }
            if (valid.empty()) throw Error("no compatible embedding root (impossible)");
            std::sort(valid.begin(), valid.end(),
                      [](const FieldElem& x, const FieldElem& y) { return lex_less(x, y); });
            Emb e;
            e.powers.resize(a);
            e.powers[0] = fb->one();
            for (unsigned j = 1; j < a; ++j) e.powers[j] = fb->mul(e.powers[j - 1], valid.front());
            embs_.emplace(std::make_pair(a, b), std::move(e));
        }
    }
};

} // namespace qlines

#endif
