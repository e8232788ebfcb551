#include <doctest.h>

#include "cyclo/limit_points.hpp"
#include "cyclo/parse.hpp"
#include "cyclo/trace_height.hpp"

using namespace cyclo;

TEST_CASE("cross_term examples") {
    CycInt one = CycInt::integer(1);
    CHECK(cross_term(one, one, CycInt::root_of_unity(3, 1)) == Rat(-1));
    CHECK(cross_term(one, one, CycInt::integer(1)) == Rat(2));
    CHECK(cross_term(one, one, CycInt::root_of_unity(4, 1)) == Rat(0));
    CHECK_THROWS_AS(cross_term(one, one, parse_cyclotomic("1 + w5")), std::domain_error);
    CHECK_THROWS_AS(cross_term(one, one, CycInt::term(5, 1, 2)), std::domain_error);
    // -w7^3 is a root of unity and is accepted
    CHECK(cross_term(one, one, CycInt::term(7, 3, -1)) ==
          cassels_height(sub(one, CycInt::root_of_unity(7, 3))).value - Rat(2));
}

TEST_CASE("cross_term equals the height defect") {
    for (const char* e1 : {"1", "1 + w5", "1 + w3 + w9"}) {
        for (const char* e2 : {"1", "2 - w7"}) {
            CycInt g1 = parse_cyclotomic(e1);
            CycInt g2 = parse_cyclotomic(e2);
            for (std::int64_t q : {4, 5, 11, 16}) {
                CycInt w = CycInt::root_of_unity(q, 1);
                Rat defect = cassels_height(add(g1, mul(w, g2))).value -
                             cassels_height(g1).value - cassels_height(g2).value;
                CHECK(cross_term(g1, g2, w) == defect);
            }
        }
    }
}

TEST_CASE("two_term_sequence for the pair (1, 1)") {
    CycInt one = CycInt::integer(1);

    auto below = two_term_sequence(one, one, Side::below, 3);
    REQUIRE(below.size() == 3);
    CHECK(below[0].ell_star == 3);
    CHECK(below[1].ell_star == 5);
    CHECK(below[2].ell_star == 7);
    CHECK(below[0].height == Rat(1));
    CHECK(below[1].height == make_rat(3, 2));
    CHECK(below[2].height == make_rat(5, 3));
    for (const auto& st : below) {
        CHECK_FALSE(st.doubled);
        CHECK(st.height == Rat(2) - make_rat(2, st.ell_star - 1));
    }

    auto above = two_term_sequence(one, one, Side::above, 3);
    CHECK(above[0].height == Rat(3));
    CHECK(above[1].height == make_rat(5, 2));
    CHECK(above[2].height == make_rat(7, 3));
    for (const auto& st : above) {
        CHECK(st.doubled);
        CHECK(st.height == Rat(2) + make_rat(2, st.ell_star - 1));
    }

    CHECK_THROWS_AS(two_term_sequence(one, CycInt(), Side::below, 2), std::domain_error);
    CHECK_THROWS_AS(two_term_sequence(parse_cyclotomic("1 + w3 + w3^2"), one, Side::below, 2),
                    std::domain_error);
}

TEST_CASE("two_term_sequence invariants on mixed pairs") {
    struct Pair {
        const char* g1;
        const char* g2;
    };
    // the last pair has an even common conductor, exercising the doubled
    // construction with 2 | n
    for (const auto& pr :
         {Pair{"1", "1 + w5"}, Pair{"1 + w3", "1 + w7"}, Pair{"1 + w4", "1 + w3"}}) {
        CycInt g1 = parse_cyclotomic(pr.g1);
        CycInt g2 = parse_cyclotomic(pr.g2);
        Rat limit = cassels_height(g1).value + cassels_height(g2).value;
        for (Side side : {Side::below, Side::above}) {
            auto steps = two_term_sequence(g1, g2, side, 8);
            for (const auto& st : steps) {
                CHECK(st.height == limit + st.cross);
                CHECK(st.cross == st.predicted_cross);
                CHECK(st.cross != Rat(0));
                if (side == Side::above)
                    CHECK(st.cross > Rat(0));
                else
                    CHECK(st.cross < Rat(0));
                CHECK(st.height != limit);
            }
            // all primes distinct and the same side construction throughout
            for (std::size_t i = 1; i < steps.size(); ++i) {
                CHECK(steps[i].ell_star > steps[i - 1].ell_star);
                CHECK(steps[i].doubled == steps[0].doubled);
            }
        }
    }
}

TEST_CASE("multi_term_limit for (1,1,1)") {
    std::vector<CycInt> gs{CycInt::integer(1), CycInt::integer(1), CycInt::integer(1)};
    auto steps = multi_term_limit(gs, 10);
    REQUIRE(steps.size() == 10);
    CHECK(steps[0].orders == std::vector<std::int64_t>{5, 7});
    CHECK(steps[1].orders == std::vector<std::int64_t>{11, 13});
    CHECK(steps[0].height == make_rat(9, 4));
    CHECK(steps[0].deviation == make_rat(3, 4));
    bool reached = false;
    for (const auto& st : steps) {
        reached = reached || st.deviation < make_rat(1, 100);
        // the deviation is dominated by a constant over the smallest prime
        CHECK(st.deviation < make_rat(4, st.orders.front() - 1));
    }
    CHECK(reached);
}

TEST_CASE("multi_term_limit misc") {
    auto steps = multi_term_limit({CycInt::integer(1), CycInt::root_of_unity(3, 1)}, 6);
    Rat limit = Rat(2);
    CHECK(steps.back().deviation == rat_abs(steps.back().height - limit));
    CHECK(steps.back().deviation < make_rat(1, 20));

    auto constant = multi_term_limit({parse_cyclotomic("1 + w5")}, 4);
    for (const auto& st : constant) {
        CHECK(st.height == make_rat(3, 2));
        CHECK(st.deviation == Rat(0));
        CHECK(st.orders.empty());
    }

    CHECK_THROWS_AS(multi_term_limit({}, 3), std::domain_error);
    CHECK_THROWS_AS(multi_term_limit({CycInt::integer(1)}, 0), std::domain_error);
}
