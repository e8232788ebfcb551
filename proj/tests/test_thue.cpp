#include <doctest.h>

#include <array>
#include <iterator>

#include "cyclo/thue.hpp"

using namespace cyclo;

namespace {

ThueLabel mk(std::initializer_list<std::int64_t> terms) {
    ThueLabel l;
    l.terms = terms;
    return l;
}

} // namespace

TEST_CASE("label grammar") {
    CHECK(mk({0, 0}).valid());
    CHECK(mk({0, 5}).valid());
    CHECK(mk({2, 0, -3, 1}).valid());
    CHECK_FALSE(mk({}).valid());
    CHECK_FALSE(mk({1}).valid());
    CHECK_FALSE(mk({-1, 0}).valid());
    CHECK_FALSE(mk({0, -1}).valid());
    CHECK_FALSE(mk({0, 0, 0}).valid());      // k=0 allows exactly two terms
    CHECK_FALSE(mk({1, 0, 0, 0}).valid());   // more than k+2 terms
}

TEST_CASE("compare_labels") {
    CHECK(compare_labels(mk({0, 1}), mk({0, 2})) < 0);
    CHECK(compare_labels(mk({1, 0}), mk({1, 0, 0})) < 0);
    CHECK(compare_labels(mk({1, 0, -1}), mk({1, 0, 0})) < 0);
    CHECK(compare_labels(mk({1, 0, -2}), mk({1, 0, -1})) < 0);
    CHECK(compare_labels(mk({1, 3}), mk({2, 0})) < 0);
    CHECK(compare_labels(mk({1, 0}), mk({1, 0})) == 0);
    CHECK(compare_labels(mk({1, 0, 4}), mk({1, 0})) > 0);
    CHECK_THROWS_AS(compare_labels(mk({1}), mk({1, 0})), std::domain_error);
    CHECK_THROWS_AS(compare_labels(mk({0, 0}), mk({0, 0, 0})), std::domain_error);
}

TEST_CASE("label string round trip") {
    ThueLabel l = mk({2, 0, -3});
    CHECK(l.str() == "2 0 -3");
    CHECK(ThueLabel::from_string("2 0 -3") == l);
    CHECK(l.level() == 1);
    CHECK(mk({3, 1}).level() == 3);
}

TEST_CASE("synthetic decode anchors") {
    SyntheticThue syn(2, 2, 3);
    CHECK(syn.decode(mk({0, 0})) == Rat(1));
    CHECK(syn.decode(mk({1, 0})) == Rat(2));
    CHECK(syn.decode(mk({2, 1})) == Rat(3) + make_rat(1, 2));
    CHECK_THROWS_AS(syn.decode(mk({5, 0})), std::domain_error);
    CHECK_THROWS_AS(syn.decode(mk({1, 0, 9})), std::domain_error);
}

TEST_CASE("synthetic round trip and order isomorphism") {
    for (auto [max_k, depth, breadth] :
         {std::array<std::int64_t, 3>{0, 1, 4}, std::array<std::int64_t, 3>{1, 2, 4},
          std::array<std::int64_t, 3>{2, 2, 5}}) {
        SyntheticThue syn(max_k, depth, breadth);
        for (const auto& [v, l] : syn.points()) {
            CHECK(l.valid());
            CHECK(label(v, syn) == l);
            CHECK(syn.decode(l) == v);
        }
    }

    // order isomorphism, exhaustive over all pairs of one truncation
    SyntheticThue syn(1, 2, 4);
    const auto& pts = syn.points();
    for (auto it1 = pts.begin(); it1 != pts.end(); ++it1)
        for (auto it2 = pts.begin(); it2 != pts.end(); ++it2) {
            int byvalue = it1->first < it2->first ? -1 : (it1->first == it2->first ? 0 : 1);
            CHECK(compare_labels(it1->second, it2->second) == byvalue);
        }
}

TEST_CASE("label rejects values outside the oracle") {
    SyntheticThue syn(1, 2, 3);
    CHECK_THROWS_AS(label(make_rat(1, 2), syn), std::domain_error);    // below the minimum
    CHECK_THROWS_AS(label(make_rat(17, 16), syn), std::domain_error);  // between points
}

TEST_CASE("height-set fragment") {
    CasselsFragment frag;
    const auto& pts = frag.points();
    REQUIRE(pts.size() > 20);

    // the named anchors
    CHECK(pts.at(Rat(1)) == mk({0, 0}));
    CHECK(pts.at(make_rat(3, 2)) == mk({0, 1}));
    CHECK(pts.at(make_rat(5, 3)) == mk({0, 2}));
    CHECK(pts.at(Rat(2)) == mk({1, 0}));
    CHECK(pts.at(make_rat(9, 4)) == mk({1, 0, 0}));
    CHECK(pts.at(make_rat(11, 5)) == mk({1, 0, -1}));

    for (const auto& [v, l] : pts) {
        CHECK(l.valid());
        CHECK(label(v, frag) == l);
    }

    // order isomorphism on the fragment
    for (auto it1 = pts.begin(); it1 != pts.end(); ++it1) {
        auto it2 = std::next(it1);
        if (it2 == pts.end()) break;
        CHECK(compare_labels(it1->second, it2->second) < 0);
    }
}
