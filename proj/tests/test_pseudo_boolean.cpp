#include <doctest.h>

#include <random>
#include <sstream>

#include "graybox/errors.hpp"
#include "graybox/group_fourier.hpp"
#include "graybox/pseudo_boolean.hpp"
#include "oracles.hpp"

using namespace graybox;
using namespace graybox::pb;

namespace {

BitString bits(const char* s) { return BitString::from_string(s); }

WalshExpansion regression_expansion() {
    WalshExpansion w(3);
    w.add(bits("100"), 1);
    w.add(bits("010"), -2);
    w.add(bits("001"), 3);
    w.add(bits("110"), 4);
    w.add(bits("111"), 5);
    return w;
}

BitString random_bits(int n, std::mt19937_64& rng) {
    BitString x(n);
    for (int i = 0; i < n; ++i) x.set(i, rng() & 1);
    return x;
}

std::vector<double> full_table(const KBoundedFunction& f) {
    std::vector<double> table(std::size_t{1} << f.size());
    for (std::uint64_t x = 0; x < table.size(); ++x) table[x] = oracle::pb(f, BitString::from_index(f.size(), x));
    return table;
}

}  // namespace

TEST_CASE("walsh expansion of a single variable") {
    const KBoundedFunction f(3, {Subfunction{{0}, {0, 1}}});
    const auto w = walsh_decompose(f);
    REQUIRE(w.terms().size() == 2);
    CHECK(w.terms().at(bits("000")) == doctest::Approx(0.5));
    CHECK(w.terms().at(bits("100")) == doctest::Approx(-0.5));
}

TEST_CASE("walsh expansion of a constant has only the empty term") {
    const KBoundedFunction f(4, {Subfunction{{1, 2}, {7, 7, 7, 7}}});
    const auto w = walsh_decompose(f);
    REQUIRE(w.terms().size() == 1);
    CHECK(w.terms().begin()->first.none());
    CHECK(w.terms().begin()->second == doctest::Approx(7.0));
}

TEST_CASE("walsh expansion reproduces random instances and matches direct coefficients") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const int n = 6 + static_cast<int>(seed % 7);
        const auto f = generate_nk(n, 1 + static_cast<int>(seed % 4), seed);
        const auto w = walsh_decompose(f);
        const auto table = full_table(f);
        std::size_t bound = 0;
        for (const auto& sf : f.subfunctions()) bound += std::size_t{1} << sf.variables.size();
        CHECK(w.terms().size() <= bound);
        for (std::uint64_t x = 0; x < table.size(); ++x) {
            CHECK(w.evaluate(BitString::from_index(n, x)) == doctest::Approx(table[x]));
            CHECK(f.evaluate(BitString::from_index(n, x)) == table[x]);
        }
        for (std::uint64_t l = 0; l < table.size(); ++l) {
            const double direct = oracle::walsh_coefficient(table, n, l);
            const auto it = w.terms().find(BitString::from_index(n, l));
            const double stored = it == w.terms().end() ? 0.0 : it->second;
            CHECK(std::fabs(direct - stored) < 1e-9);
        }
    }
}

TEST_CASE("variable interaction graph") {
    const KBoundedFunction chain(3, {Subfunction{{0, 1}, {0, 1, 2, 7}}, Subfunction{{1, 2}, {3, 0, 5, 1}}});
    const auto vig = build_vig(walsh_decompose(chain));
    CHECK(vig.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_FALSE(moves_interact_vig(bits("100"), bits("001"), vig));

    WalshExpansion linear(3);
    linear.add(bits("100"), 1);
    linear.add(bits("001"), 2);
    CHECK(build_vig(linear).edges().empty());

    const auto example = build_vig(regression_expansion());
    CHECK(example.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(moves_interact_vig(bits("110"), bits("001"), example));
    CHECK_THROWS_AS(moves_interact_vig(bits("110"), bits("011"), example), ContractError);

    const KBoundedFunction split(4, {Subfunction{{0, 1}, {0, 1, 2, 7}}, Subfunction{{2, 3}, {3, 0, 5, 1}}});
    CHECK_FALSE(moves_interact_vig(bits("1100"), bits("0011"), build_vig(walsh_decompose(split))));
}

TEST_CASE("parity test on the regression example") {
    const auto w = regression_expansion();
    CHECK_FALSE(moves_interact_walsh(bits("110"), bits("001"), w));
    CHECK(moves_interact_walsh(bits("001"), bits("010"), w));
    CHECK(moves_interact_walsh(bits("100"), bits("100"), w));
}

TEST_CASE("move decomposition on the regression example") {
    const auto w = regression_expansion();
    const auto split = decompose_move(bits("111"), w);
    REQUIRE(split.has_value());
    CHECK(split->first == bits("110"));
    CHECK(split->second == bits("001"));
    CHECK_FALSE(decompose_move(bits("011"), w).has_value());
    CHECK_FALSE(decompose_move(bits("100"), w).has_value());
}

TEST_CASE("move decomposition splits along disconnected components") {
    const KBoundedFunction f(4, {Subfunction{{0, 1}, {0, 1, 2, 7}}, Subfunction{{2, 3}, {3, 0, 5, 1}}});
    const auto split = decompose_move(bits("1111"), walsh_decompose(f));
    REQUIRE(split.has_value());
    CHECK(split->first == bits("1100"));
    CHECK(split->second == bits("0011"));
    CHECK_THROWS_AS(decompose_move(BitString(13) ^ BitString::from_string("1111111111111"), WalshExpansion(13)),
                    CapacityError);
}

TEST_CASE("parity non-interaction implies definitional non-interaction") {
    std::mt19937_64 rng(31);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const auto f = generate_nk(8, 3, seed);
        const auto w = walsh_decompose(f);
        const auto table = full_table(f);
        for (int trial = 0; trial < 200; ++trial) {
            const auto g = rng() & 0xff, h = rng() & 0xff;
            const bool parity = moves_interact_walsh(BitString::from_index(8, g), BitString::from_index(8, h), w);
            CHECK(!parity == oracle::xor_non_interacting(table, g, h));
        }
    }
}

TEST_CASE("hill climber on a separable function reaches all zeros") {
    std::vector<Subfunction> parts;
    for (int i = 0; i < 10; ++i) parts.push_back({{i}, {0, 1}});
    const KBoundedFunction onemax(10, std::move(parts));
    std::mt19937_64 rng(1);
    const auto result = bitflip_hill_climb(onemax, random_bits(10, rng), {.seed = 3});
    CHECK(result.solution.none());
    CHECK(result.fitness == 0.0);

    const auto again = bitflip_hill_climb(onemax, result.solution, {.seed = 4});
    CHECK(again.moves == 0);
    CHECK(again.solution == result.solution);
}

TEST_CASE("hill climber keeps scores exact and updates only co-occurring variables") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto f = generate_nk(12, 3, seed);
        std::mt19937_64 rng(seed);
        for (auto selection : {Selection::Random, Selection::FirstImproving}) {
            BitFlipClimber climber(f, random_bits(12, rng), {.seed = seed, .selection = selection});
            double fitness = climber.fitness();
            while (climber.step()) {
                const int v = climber.last_variable();
                CHECK(climber.last_updates() == f.co_occurring(v).size());
                CHECK(climber.fitness() < fitness);
                fitness = climber.fitness();
                const auto& x = climber.solution();
                CHECK(fitness == oracle::pb(f, x));
                for (int i = 0; i < 12; ++i) {
                    auto y = x;
                    y.flip(i);
                    CHECK(climber.scores()[static_cast<std::size_t>(i)] == oracle::pb(f, y) - oracle::pb(f, x));
                    CHECK(climber.improving().contains(static_cast<std::size_t>(i)) ==
                          (climber.scores()[static_cast<std::size_t>(i)] < 0));
                }
            }
            const auto& x = climber.solution();
            for (int i = 0; i < 12; ++i) {
                auto y = x;
                y.flip(i);
                CHECK(oracle::pb(f, y) >= oracle::pb(f, x));
            }
        }
    }
}

TEST_CASE("hill climber budget") {
    const auto f = generate_nk(30, 3, 7);
    const auto result = bitflip_hill_climb(f, BitString(30), {.seed = 1, .budget = 2});
    CHECK(result.moves <= 2);
    if (result.moves == 2) CHECK(result.budget_exhausted);
}

TEST_CASE("binary partition crossover") {
    const auto f = generate_nk(14, 2, 3);
    std::mt19937_64 rng(6);
    const auto p = random_bits(14, rng);
    const auto same = px_binary(f, p, p);
    CHECK(same.offspring == p);
    CHECK(same.components.empty());

    // Two bits in different components of the graph: best of four.
    const KBoundedFunction split(4, {Subfunction{{0, 1}, {5, 1, 2, 7}}, Subfunction{{2, 3}, {3, 0, 5, 1}}});
    const auto a = bits("0000"), b = bits("1010");
    const auto r = px_binary(split, a, b);
    CHECK(r.components.size() == 2);
    double best = INFINITY;
    for (const char* s : {"0000", "1000", "0010", "1010"}) best = std::min(best, oracle::pb(split, bits(s)));
    CHECK(r.fitness == best);
    CHECK(oracle::pb(split, r.offspring) == best);
}

TEST_CASE("binary partition crossover equals the best of all component subsets") {
    std::mt19937_64 rng(12);
    int checked = 0;
    for (std::uint64_t seed = 0; checked < 60; ++seed) {
        const auto f = generate_nk(14, 2, seed);
        const auto p1 = random_bits(14, rng), p2 = random_bits(14, rng);
        const auto r = px_binary(f, p1, p2);
        if (r.components.size() > 10) continue;
        ++checked;
        const double best = oracle::best_subset(
            r.components.size(),
            [&](std::uint64_t mask) {
                auto x = p1;
                for (std::size_t c = 0; c < r.components.size(); ++c)
                    if (mask >> c & 1) x ^= r.components[c].mask;
                return x;
            },
            [&](const BitString& x) { return oracle::pb(f, x); });
        CHECK(r.fitness == best);
        CHECK(r.fitness <= std::min(oracle::pb(f, p1), oracle::pb(f, p2)));
    }
}

TEST_CASE("instance text round trip and parse errors") {
    const auto f = generate_nk(9, 3, 5);
    std::stringstream text;
    write_instance(text, f);
    const auto g = parse_instance(text);
    REQUIRE(g.size() == f.size());
    REQUIRE(g.subfunctions().size() == f.subfunctions().size());
    for (std::size_t i = 0; i < f.subfunctions().size(); ++i) {
        CHECK(g.subfunctions()[i].variables == f.subfunctions()[i].variables);
        CHECK(g.subfunctions()[i].table == f.subfunctions()[i].table);
    }

    std::istringstream crlf("2 1 2\r\n2 1 2\r\n0 1 2 3\r\n");
    CHECK(parse_instance(crlf).evaluate(bits("11")) == 3.0);

    std::istringstream bad("3 1 2\n2 1 4\n0 1 2 3\n");
    try {
        parse_instance(bad, "bad.txt");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream short_table("3 1 2\n2 1 2\n0 1 2\n");
    CHECK_THROWS_AS(parse_instance(short_table), ParseError);
}
