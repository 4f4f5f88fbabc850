#include <doctest.h>

#include "cbtree/ordinal.hpp"

using namespace cbtree;

TEST_CASE("cantor normal form text") {
    CHECK(Ordinal().str() == "0");
    CHECK(Ordinal::finite(3).str() == "3");
    CHECK(Ordinal::omega().str() == "w");
    CHECK(succ(Ordinal::omega()).str() == "w+1");
    CHECK(Ordinal({{2, 3}, {1, 1}, {0, 4}}).str() == "w^2*3+w+4");
    CHECK_THROWS(Ordinal({{0, 1}, {1, 1}}));
    CHECK_THROWS(Ordinal({{1, 0}}));
}

TEST_CASE("order and kinds") {
    CHECK(Ordinal::finite(100) < Ordinal::omega());
    CHECK(Ordinal::omega() < succ(Ordinal::omega()));
    CHECK(Ordinal({{1, 2}}) > Ordinal({{1, 1}, {0, 9}}));
    CHECK(Ordinal::omega().is_limit());
    CHECK(succ(Ordinal::omega()).is_successor());
    CHECK_FALSE(Ordinal().is_successor());
    CHECK(Ordinal::finite(5).to_finite() == 5);
    CHECK(ord_max(Ordinal::finite(3), Ordinal::omega()) == Ordinal::omega());
}

TEST_CASE("supremum of affine sequences") {
    CHECK(sup_affine(0, 4) == Ordinal::finite(4));
    CHECK(sup_affine(1, 1) == Ordinal::omega());
    CHECK(sup_affine(3, 0) == Ordinal::omega());
}
