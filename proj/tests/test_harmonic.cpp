#include "doctest.h"

#include <stdexcept>
#include <thread>
#include <vector>

#include "harmsum/harmonic.hpp"

using harmsum::Integer;
using harmsum::Rational;

TEST_CASE("small values") {
    const harmsum::HarmonicTable t(10, 3);
    CHECK(t.value(0, 1) == 0);
    CHECK(t.value(1, 3) == 1);
    CHECK(t.value(4, 1) == Rational(Integer(25), Integer(12)));
    CHECK(t.value(4, 2) == Rational(Integer(205), Integer(144)));
    CHECK(t.value(3, 3) == Rational(Integer(251), Integer(216)));
    CHECK(t.value(10, 1) == Rational(Integer(7381), Integer(2520)));
    CHECK_THROWS_AS(t.value(11, 1), std::out_of_range);
    CHECK_THROWS_AS(t.value(2, 0), std::out_of_range);
    CHECK_THROWS_AS(t.value(2, 4), std::out_of_range);
    CHECK_THROWS_AS(harmsum::HarmonicTable(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(harmsum::HarmonicTable(3, 0), std::invalid_argument);
}

TEST_CASE("table against direct summation") {
    const auto t = harmsum::build_harmonic_table(60, 5);
    for (int r = 1; r <= 5; ++r) {
        Rational s = 0;
        for (int k = 1; k <= 60; ++k) {
            s += Rational(Integer(1), harmsum::ipow(Integer(k), r));
            REQUIRE(t->value(k, r) == s);
        }
    }
}

TEST_CASE("global cache grows and is consistent across threads") {
    CHECK(harmsum::harmonic(4, 1) == Rational(Integer(25), Integer(12)));
    const Rational big = harmsum::harmonic(300, 4);
    std::vector<std::thread> threads;
    std::vector<Rational> seen(8);
    for (int i = 0; i < 8; ++i) {
        threads.emplace_back([i, &seen] { seen[i] = harmsum::harmonic(200 + 20 * i, 2); });
    }
    for (auto& th : threads) th.join();
    for (int i = 0; i < 8; ++i) CHECK(seen[i] == harmsum::HarmonicTable(200 + 20 * i, 2).value(200 + 20 * i, 2));
    CHECK(big == harmsum::HarmonicTable(300, 4).value(300, 4));
}
