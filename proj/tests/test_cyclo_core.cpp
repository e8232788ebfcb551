#include <doctest.h>

#include <future>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "test_support.hpp"

using namespace cyclo;

TEST_CASE("from_coeffs basics") {
    CHECK(equals(CycInt::from_coeffs(1, std::vector<std::int64_t>{1}), CycInt::integer(1)));
    CycInt x = CycInt::from_coeffs(5, std::vector<std::int64_t>{1, 1, 0, 0, 0});
    CHECK(x.term_count() == 2);
    CHECK(x.conductor() == 5);
    CHECK(is_zero(CycInt::from_coeffs(3, std::vector<std::int64_t>{1, 1, 1})));
    CHECK_THROWS_AS(CycInt::from_coeffs(4, std::vector<std::int64_t>{1, 2}),
                    std::invalid_argument);
    // zero coefficients are never stored
    CHECK(CycInt::from_coeffs(6, std::vector<std::int64_t>{0, 0, 0, 0, 0, 0}).term_count() == 0);
}

TEST_CASE("ring operation examples") {
    CycInt w5 = CycInt::root_of_unity(5, 1);
    CHECK(equals(mul(w5, CycInt::root_of_unity(5, 4)), CycInt::integer(1)));

    CycInt a = add(CycInt::integer(1), CycInt::root_of_unity(3, 1));
    CycInt b = add(CycInt::integer(1), CycInt::root_of_unity(3, 2));
    CHECK(equals(mul(a, b), CycInt::integer(1)));

    CHECK(equals(add(add(CycInt::integer(1), w5), CycInt::integer(-1)), w5));
}

TEST_CASE("conjugate examples and involution") {
    CHECK(equals(conjugate(CycInt::integer(1)), CycInt::integer(1)));
    CHECK(conjugate(CycInt::root_of_unity(5, 1)).identical(CycInt::root_of_unity(5, 4)));

    CycInt x = add(CycInt::integer(1), CycInt::term(7, 3, 2));
    CHECK(conjugate(x).identical(add(CycInt::integer(1), CycInt::term(7, 4, 2))));

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        CycInt y = test::random_cyclotomic(rng);
        CHECK(conjugate(conjugate(y)).identical(y));
    }
}

TEST_CASE("galois examples and composition") {
    CycInt w5 = CycInt::root_of_unity(5, 1);
    CHECK(galois(w5, 2).identical(CycInt::root_of_unity(5, 2)));
    CycInt x = add(CycInt::integer(1), w5);
    CHECK(galois(x, 1).identical(x));
    CHECK_THROWS_AS(galois(CycInt::root_of_unity(6, 1), 3), std::domain_error);

    std::mt19937 rng(11);
    std::uniform_int_distribution<std::int64_t> coeff(-4, 4);
    for (int i = 0; i < 50; ++i) {
        std::vector<std::int64_t> a(5);
        for (auto& v : a) v = coeff(rng);
        CycInt y = CycInt::from_coeffs(5, a);
        CHECK(galois(galois(y, 2), 3).identical(galois(y, 6)));
    }
}

TEST_CASE("embed examples and structure preservation") {
    CHECK(embed(CycInt::root_of_unity(3, 1), 6).identical(CycInt::root_of_unity(6, 2)));
    CHECK(equals(embed(CycInt::integer(1), 12), CycInt::integer(1)));
    CycInt x = add(CycInt::integer(1), CycInt::root_of_unity(5, 1));
    CHECK(embed(x, 10).identical(add(embed(CycInt::integer(1), 10), CycInt::root_of_unity(10, 2))));
    CHECK_THROWS_AS(embed(CycInt::root_of_unity(4, 1), 6), std::domain_error);

    std::mt19937 rng(13);
    for (int i = 0; i < 40; ++i) {
        CycInt a = test::random_cyclotomic(rng, 12);
        CycInt b = test::random_cyclotomic(rng, 12);
        std::int64_t m = a.conductor() * 3;
        CHECK(equals(embed(a, m), a));
        CHECK(equals(add(embed(a, m), b), add(a, b)));
        CHECK(equals(mul(embed(a, m), b), mul(a, b)));
    }
}

TEST_CASE("canonical_form examples") {
    CHECK(canonical_form(CycInt::root_of_unity(4, 2)).identical(CycInt::term(4, 0, -1)));

    CycInt w54 = CycInt::root_of_unity(5, 4);
    CycInt expect = CycInt::from_coeffs(5, std::vector<std::int64_t>{-1, -1, -1, -1, 0});
    CHECK(canonical_form(w54).identical(expect));

    CHECK(canonical_form(CycInt::from_coeffs(3, std::vector<std::int64_t>{1, 1, 1})).term_count() ==
          0);
}

TEST_CASE("canonical_form is idempotent and respects equality") {
    std::mt19937 rng(17);
    for (int i = 0; i < 60; ++i) {
        CycInt x = test::random_cyclotomic(rng, 30, 5);
        CycInt c = canonical_form(x);
        CHECK(canonical_form(c).identical(c));
        CHECK(equals(c, x));
    }
}

TEST_CASE("is_zero and equals") {
    CHECK(is_zero(CycInt::from_coeffs(3, std::vector<std::int64_t>{1, 1, 1})));
    CHECK_FALSE(is_zero(CycInt::integer(1)));
    CHECK(equals(CycInt::root_of_unity(6, 3), CycInt::integer(-1)));
}

TEST_CASE("order_of_term") {
    CHECK(order_of_term(5, 0) == 1);
    CHECK(order_of_term(12, 8) == 3);
    CHECK(order_of_term(7, 3) == 7);
    CHECK_THROWS_AS(order_of_term(5, 5), std::domain_error);
}

TEST_CASE("ring axioms on random instances") {
    std::mt19937 rng(19);
    for (int i = 0; i < 40; ++i) {
        CycInt a = test::random_cyclotomic(rng, 16, 3, 3);
        CycInt b = test::random_cyclotomic(rng, 16, 3, 3);
        CycInt c = test::random_cyclotomic(rng, 16, 3, 3);
        CHECK(equals(add(a, b), add(b, a)));
        CHECK(equals(mul(a, b), mul(b, a)));
        CHECK(equals(add(add(a, b), c), add(a, add(b, c))));
        CHECK(equals(mul(mul(a, b), c), mul(a, mul(b, c))));
        CHECK(equals(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
        CHECK(is_zero(add(a, neg(a))));
    }
}

TEST_CASE("conjugate and galois are ring homomorphisms") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::int64_t> coeff(-3, 3);
    const std::int64_t n = 12;
    for (int i = 0; i < 40; ++i) {
        std::vector<std::int64_t> va(n), vb(n);
        for (auto& v : va) v = coeff(rng);
        for (auto& v : vb) v = coeff(rng);
        CycInt a = CycInt::from_coeffs(n, va);
        CycInt b = CycInt::from_coeffs(n, vb);
        CHECK(equals(conjugate(add(a, b)), add(conjugate(a), conjugate(b))));
        CHECK(equals(conjugate(mul(a, b)), mul(conjugate(a), conjugate(b))));
        for (std::int64_t j : {5, 7, 11}) {
            CHECK(equals(galois(add(a, b), j), add(galois(a, j), galois(b, j))));
            CHECK(equals(galois(mul(a, b), j), mul(galois(a, j), galois(b, j))));
        }
    }
}

TEST_CASE("cyclotomic polynomial values") {
    auto phi1 = cyclotomic_polynomial(1);
    CHECK(phi1 == std::vector<Int>{Int(-1), Int(1)});
    auto phi12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
    CHECK(phi12 == std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(1)});
    // Phi_105 is the first cyclotomic polynomial with a coefficient of
    // magnitude 2 (at x^7 and x^41).
    auto phi105 = cyclotomic_polynomial(105);
    CHECK(phi105.size() == 49);
    CHECK(phi105[7] == Int(-2));
    CHECK(phi105[41] == Int(-2));
}

TEST_CASE("phi cache is usable from several threads") {
    std::vector<std::future<bool>> futs;
    for (int t = 0; t < 4; ++t) {
        futs.push_back(std::async(std::launch::async, [t] {
            for (std::int64_t n = 2 + t; n <= 40; ++n) {
                CycInt x = CycInt::root_of_unity(n, n - 1);
                if (!equals(canonical_form(x), x)) return false;
            }
            return true;
        }));
    }
    for (auto& f : futs) CHECK(f.get());
}
