#include <doctest.h>

#include <random>
#include <set>

#include "graybox/bitstring.hpp"
#include "graybox/errors.hpp"
#include "graybox/indexed_set.hpp"
#include "graybox/permutation.hpp"
#include "graybox/rng.hpp"

using graybox::BitString;
using graybox::Permutation;

TEST_CASE("bit strings print variable 1 first and index it as the low bit") {
    const auto x = BitString::from_string("110");
    CHECK(x.size() == 3);
    CHECK(x.test(0));
    CHECK(x.test(1));
    CHECK_FALSE(x.test(2));
    CHECK(x.to_index() == 3);
    CHECK(x.to_string() == "110");
    CHECK(BitString::from_index(3, 4).to_string() == "001");
    CHECK(x.ones() == std::vector<int>{0, 1});
    CHECK_THROWS_AS(BitString::from_string("10x"), graybox::ContractError);
}

TEST_CASE("bit string XOR is a group where every element is its own inverse") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 130);
        BitString a(n), b(n);
        for (int i = 0; i < n; ++i) {
            a.set(i, rng() & 1);
            b.set(i, rng() & 1);
        }
        CHECK((a ^ a).none());
        CHECK(((a ^ b) ^ b) == a);
        CHECK((a ^ b) == (b ^ a));
        int overlap = 0;
        for (int i = 0; i < n; ++i) overlap += a.test(i) && b.test(i);
        CHECK(a.dot(b) == overlap % 2);
        CHECK(BitString::from_string(a.to_string()) == a);
    }
}

TEST_CASE("permutation text forms") {
    const auto p = Permutation::parse_one_line("2 3 1");
    CHECK(p.to_one_line() == "2 3 1");
    CHECK(p.to_cycles() == "(1 2 3)");
    CHECK(Permutation::parse_cycles("(1 2 3)", 3) == p);
    CHECK(Permutation::identity(4).to_cycles() == "(1)");
    CHECK(Permutation::parse_cycles("(1)", 4).is_identity());
    CHECK(Permutation::parse_cycles("(1 3)(2 4)", 4).to_one_line() == "3 4 1 2");
    CHECK_THROWS_AS(Permutation::parse_one_line("1 1 2"), graybox::ContractError);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1 5)", 4), graybox::ContractError);
}

TEST_CASE("permutation product applies the left factor first") {
    const auto a = Permutation::parse_cycles("(1 2)", 3);
    const auto b = Permutation::parse_cycles("(2 3)", 3);
    const auto ab = a * b;
    for (int i = 0; i < 3; ++i) CHECK(ab(i) == b(a(i)));
    CHECK(ab != b * a);
    CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("rank and unrank are inverse and lexicographic") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<int>> seen;
        std::vector<int> previous;
        for (std::uint64_t r = 0; r < graybox::factorial(n); ++r) {
            const auto p = Permutation::unrank(n, r);
            CHECK(p.rank() == r);
            if (!previous.empty()) CHECK(previous < p.image());
            previous = p.image();
            seen.insert(p.image());
        }
        CHECK(seen.size() == graybox::factorial(n));
    }
}

TEST_CASE("apply_window moves the element at first + pattern[k] to first + k") {
    auto p = Permutation::parse_one_line("1 2 3 4 5");
    const std::vector<int> pattern{2, 0, 1};
    p.apply_window(1, pattern);
    CHECK(p.to_one_line() == "1 4 2 3 5");
}

TEST_CASE("indexed set supports constant-time membership and removal") {
    graybox::IndexedSet s(10);
    s.insert(3);
    s.insert(7);
    s.insert(3);
    CHECK(s.size() == 2);
    s.erase(3);
    CHECK_FALSE(s.contains(3));
    CHECK(s.contains(7));
    s.assign(1, true);
    s.assign(7, false);
    CHECK(s.items() == std::vector<std::size_t>{1});
    CHECK(s.min() == 1);
}

TEST_CASE("derived streams are reproducible and independent per phase") {
    auto a = graybox::derive_rng(42, 1, 0);
    auto b = graybox::derive_rng(42, 1, 0);
    auto c = graybox::derive_rng(42, 2, 0);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    auto r = graybox::derive_rng(1, 1);
    for (int i = 0; i < 1000; ++i) CHECK(graybox::uniform_below(r, 7) < 7);
}
