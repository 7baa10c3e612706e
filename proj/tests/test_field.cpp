#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qlines/field.hpp"

using namespace qlines;

namespace {

FieldElem random_elem(const Field* F, std::mt19937_64& rng) {
    Digits d(F->k);
    for (auto& x : d) x = static_cast<u32>(rng() % F->p);
    return F->make(std::move(d));
}

} // namespace

TEST_CASE("prime field basics") {
    FieldTower tw(5);
    const Field* F = tw.prime_field();
    REQUIRE(F->from_int(2) + F->from_int(3) == F->zero());
    REQUIRE(F->from_int(1) / F->from_int(3) == F->from_int(2));
    REQUIRE(F->from_int(-1) == F->from_int(4));
    REQUIRE_THROWS_AS(F->inv(F->zero()), DivisionByZero);
}

TEST_CASE("tower rejects composite characteristic") {
    REQUIRE_THROWS_AS(FieldTower(4), Error);
    REQUIRE_THROWS_AS(FieldTower(1), Error);
    REQUIRE_NOTHROW(FieldTower(2));
}

TEST_CASE("deterministic moduli") {
    FieldTower tw7(7);
    const Field* F49 = tw7.field(2);
    // lex scan over (c0, c1): x^2 + 1 is the first irreducible over GF(7)
    REQUIRE(F49->modulus == std::vector<u32>{1, 0, 1});
    FieldElem g = F49->gen();
    REQUIRE(g * g == F49->from_int(-1));
    REQUIRE(g * g == F49->from_int(6));

    FieldTower tw2(2);
    const Field* F8 = tw2.field(3);
    REQUIRE(F8->modulus == std::vector<u32>{1, 0, 1, 1});
}

TEST_CASE("field axioms hold on random samples") {
    FieldTower tw(5);
    const Field* F = tw.field(3);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10000; ++i) {
        FieldElem a = random_elem(F, rng), b = random_elem(F, rng), c = random_elem(F, rng);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a * b) * c == a * (b * c));
        if (!is_zero(a)) REQUIRE(a * F->inv(a) == F->one());
        if (!is_zero(b)) REQUIRE((a / b) * b == a);
    }
}

TEST_CASE("frobenius") {
    FieldTower tw(5);
    const Field* F5 = tw.prime_field();
    const Field* F25 = tw.field(2);

    FieldElem a = F5->from_int(3);
    REQUIRE(F5->frobenius(a, 1) == a);

    FieldElem g = F25->gen();
    REQUIRE(F25->frobenius(g, 2) == g);

    // a square root of 2 is conjugate to its negative
    FieldElem two = F25->from_int(2);
    FieldElem h = F25->zero();
    bool found = false;
    Digits v(F25->k, 0);
    do {
        FieldElem cand = F25->make(Digits(v));
        if (cand * cand == two) {
            h = cand;
            found = true;
            break;
        }
    } while (F25->next(v));
    REQUIRE(found);
    REQUIRE(F25->frobenius(h, 1) == -h);

    // additive and multiplicative on random pairs, and frob^k = id
    const Field* F = tw.field(4);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        FieldElem x = random_elem(F, rng), y = random_elem(F, rng);
        REQUIRE(F->frobenius(x + y) == F->frobenius(x) + F->frobenius(y));
        REQUIRE(F->frobenius(x * y) == F->frobenius(x) * F->frobenius(y));
        REQUIRE(F->frobenius(x, 4) == x);
    }
}

TEST_CASE("embeddings") {
    FieldTower tw(5);
    const Field* F5 = tw.prime_field();
    const Field* F25 = tw.field(2);
    const Field* F625 = tw.field(4);

    // prime field embeds as constants
    FieldElem c = tw.embed(F5->from_int(3), F625);
    REQUIRE(c == F625->from_int(3));

    // a root of x^2 - 2 keeps its defining relation under embedding
    FieldElem two25 = F25->from_int(2);
    FieldElem h = F25->zero();
    Digits v(F25->k, 0);
    do {
        FieldElem cand = F25->make(Digits(v));
        if (cand * cand == two25) {
            h = cand;
            break;
        }
    } while (F25->next(v));
    FieldElem H = tw.embed(h, F625);
    REQUIRE(H * H == F625->from_int(2));
    REQUIRE(tw.embed(h, F625) == H); // cached, stable

    REQUIRE_THROWS_AS(tw.embed(h, tw.field(3)), NoEmbedding);

    // homomorphism and injectivity on random pairs
    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        FieldElem a = random_elem(F25, rng), b = random_elem(F25, rng);
        REQUIRE(tw.embed(a + b, F625) == tw.embed(a, F625) + tw.embed(b, F625));
        REQUIRE(tw.embed(a * b, F625) == tw.embed(a, F625) * tw.embed(b, F625));
        if (!(a == b)) REQUIRE(!(tw.embed(a, F625) == tw.embed(b, F625)));
    }
    REQUIRE(tw.embed(F25->one(), F625) == F625->one());
}

TEST_CASE("embedding diagrams commute") {
    FieldTower tw(5);
    std::mt19937_64 rng(37);
    auto check_triangle = [&](unsigned a, unsigned m, unsigned b) {
        const Field* Fa = tw.field(a);
        const Field* Fm = tw.field(m);
        const Field* Fb = tw.field(b);
        for (int i = 0; i < 50; ++i) {
            FieldElem x = random_elem(Fa, rng);
            REQUIRE(tw.embed(tw.embed(x, Fm), Fb) == tw.embed(x, Fb));
        }
    };
    check_triangle(1, 2, 4);
    check_triangle(2, 4, 8);
    check_triangle(2, 6, 12);
    check_triangle(3, 6, 12);
    check_triangle(2, 4, 12);
}

TEST_CASE("projection and element degree") {
    FieldTower tw(13);
    const Field* F2 = tw.field(2);
    const Field* F4 = tw.field(4);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        FieldElem a = random_elem(F2, rng);
        FieldElem A = tw.embed(a, F4);
        REQUIRE(tw.project(A, F2) == a);
        REQUIRE(F4->element_degree(A) <= 2);
    }
    // a proper degree-4 element cannot be projected to GF(p^2)
    FieldElem g = F4->gen();
    REQUIRE(F4->element_degree(g) == 4);
    REQUIRE_THROWS_AS(tw.project(g, F2), Error);
    REQUIRE(tw.minimize(tw.embed(F2->gen(), F4)).F == F2);
}

TEST_CASE("indexing and enumeration") {
    FieldTower tw(3);
    const Field* F = tw.field(2);
    REQUIRE(F->size_u64() == 9);
    std::size_t count = 0;
    Digits v(F->k, 0);
    do {
        FieldElem e = F->make(Digits(v));
        REQUIRE(F->from_index(F->to_index(e)) == e);
        ++count;
    } while (F->next(v));
    REQUIRE(count == 9);
}
