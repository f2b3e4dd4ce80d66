#include <doctest.h>

#include <random>

#include "graybox/errors.hpp"
#include "graybox/perm_operators.hpp"
#include "oracles.hpp"

using namespace graybox;
using namespace graybox::perm;

namespace {

// Fresh delta of every enabled window move, by full evaluation.
void check_scores(const PermutationProblem& problem, const Permutation& sigma, const ScoreVector& scores) {
    const auto order = oracle::order_of(sigma);
    const double base = oracle::evaluate(problem, order);
    for (std::size_t e = 0; e < scores.size(); ++e) {
        const auto& m = scores.move(e);
        const std::vector<int> pattern(m.local().begin(), m.local().end());
        const double fresh = oracle::evaluate(problem, oracle::apply_window(order, m.start, pattern)) - base;
        CHECK(scores[e] == fresh);
        CHECK(scores.improving().contains(e) == (fresh < 0));
    }
}

bool has_improving_move(const PermutationProblem& problem, const Permutation& sigma, const std::vector<int>& widths) {
    const auto order = oracle::order_of(sigma);
    const double base = oracle::evaluate(problem, order);
    for (int w : widths)
        for (const auto& pattern : oracle::all_patterns(w))
            for (int first = 0; first + w <= sigma.size(); ++first)
                if (oracle::evaluate(problem, oracle::apply_window(order, first, pattern)) < base) return true;
    return false;
}

}  // namespace

TEST_CASE("window patterns") {
    CHECK(pattern_count(2) == 1);
    CHECK(pattern_count(3) == 5);
    CHECK(std::vector<int>(window_pattern(2, 0).begin(), window_pattern(2, 0).end()) == std::vector<int>{1, 0});
    std::vector<std::vector<int>> three;
    for (int p = 0; p < 5; ++p) three.emplace_back(window_pattern(3, p).begin(), window_pattern(3, p).end());
    CHECK(three == std::vector<std::vector<int>>{{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}});
    CHECK_THROWS_AS(pattern_count(4), ContractError);
}

TEST_CASE("score vector sizes") {
    const LopProblem two(generate_lop(2, 1));
    const std::vector<int> w2{2};
    CHECK(init_scores(two, Permutation(2), w2).size() == 1);
    const LopProblem ten(generate_lop(10, 1));
    const std::vector<int> w23{2, 3};
    CHECK(init_scores(ten, Permutation(10), w23).size() == 49);
    const std::vector<int> w4{4};
    CHECK_THROWS_AS(init_scores(ten, Permutation(10), w4), ContractError);
}

TEST_CASE("initial scores equal full re-evaluation") {
    std::mt19937_64 rng(1);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const LopProblem lop(generate_lop(12, seed));
        const SmtwtpProblem smt(generate_smtwtp(12, seed));
        const Permutation sigma(oracle::random_order(12, rng));
        for (const auto& widths : {std::vector<int>{2}, std::vector<int>{3}, std::vector<int>{2, 3}}) {
            check_scores(lop, sigma, init_scores(lop, sigma, widths));
            check_scores(smt, sigma, init_scores(smt, sigma, widths));
        }
    }
}

TEST_CASE("hill climber on a locally optimal start does nothing") {
    const LopProblem lop(generate_lop(15, 4));
    const auto first = hill_climb(lop, Permutation(15), {.seed = 1});
    const auto again = hill_climb(lop, first.solution, {.seed = 2});
    CHECK(again.moves == 0);
    CHECK(again.solution == first.solution);
    CHECK_FALSE(again.budget_exhausted);
}

TEST_CASE("three-element ordering problem with a single favourable swap") {
    // Only A[1][0] < A[0][1] differs; every other pair is balanced.
    const LopProblem lop(LopInstance{3, {0, 4, 2, 1, 0, 3, 2, 3, 0}});
    const auto result = hill_climb(lop, Permutation(3), {.widths = {2}, .seed = 5});
    CHECK(result.moves == 1);
    CHECK(result.solution.to_one_line() == "2 1 3");
    CHECK(result.fitness == 1 + 2 + 3);
}

TEST_CASE("hill climber keeps every score exact and ends at a local optimum") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const LopProblem lop(generate_lop(14, seed));
        const SmtwtpProblem smt(generate_smtwtp(14, seed));
        for (const PermutationProblem* problem : {static_cast<const PermutationProblem*>(&lop),
                                                  static_cast<const PermutationProblem*>(&smt)}) {
            for (const auto& widths : {std::vector<int>{2}, std::vector<int>{2, 3}}) {
                for (auto selection : {MoveSelection::Random, MoveSelection::FirstImproving}) {
                    WindowClimber climber(*problem, Permutation(oracle::random_order(14, rng)),
                                          {.widths = widths, .seed = seed, .selection = selection});
                    check_scores(*problem, climber.solution(), climber.scores());
                    double fitness = climber.fitness();
                    while (climber.step()) {
                        CHECK(climber.fitness() < fitness);
                        fitness = climber.fitness();
                        CHECK(fitness == oracle::evaluate(*problem, oracle::order_of(climber.solution())));
                        check_scores(*problem, climber.solution(), climber.scores());
                    }
                    CHECK_FALSE(has_improving_move(*problem, climber.solution(), widths));
                }
            }
        }
    }
}

TEST_CASE("hill climber budget is honoured and flagged") {
    const SmtwtpProblem smt(generate_smtwtp(40, 3));
    std::mt19937_64 rng(1);
    const Permutation start(oracle::random_order(40, rng));
    const auto result = hill_climb(smt, start, {.seed = 2, .budget = 3});
    CHECK(result.moves == 3);
    CHECK(result.budget_exhausted);
    CHECK(result.trace.size() == 3);
}

TEST_CASE("hill climber runs are reproducible per seed") {
    const LopProblem lop(generate_lop(30, 8));
    const auto a = hill_climb(lop, Permutation(30), {.seed = 99});
    const auto b = hill_climb(lop, Permutation(30), {.seed = 99});
    CHECK(a.solution == b.solution);
    CHECK(a.moves == b.moves);
}

TEST_CASE("parent decomposition") {
    const auto id = Permutation(6);
    const auto same = decompose_parents(id, id);
    CHECK(same.components.size() == 6);
    CHECK(same.nontrivial_count() == 0);

    const auto target = Permutation::parse_one_line("2 1 3 6 4 5");
    const auto d = decompose_parents(id, target);
    REQUIRE(d.components.size() == 3);
    CHECK(d.components[0].first == 0);
    CHECK(d.components[0].last == 1);
    CHECK(d.components[1].first == 2);
    CHECK(d.components[1].last == 2);
    CHECK(d.components[2].first == 3);
    CHECK(d.components[2].last == 5);
    CHECK(d.nontrivial_count() == 2);
    CHECK_THROWS_AS(decompose_parents(Permutation(3), Permutation(4)), ContractError);
}

TEST_CASE("components are disjoint, compose to the second parent and add up") {
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const LopProblem lop(generate_lop(9, seed));
        const SmtwtpProblem smt(generate_smtwtp(9, seed));
        for (const PermutationProblem* problem : {static_cast<const PermutationProblem*>(&lop),
                                                  static_cast<const PermutationProblem*>(&smt)}) {
            const Permutation s1(oracle::random_order(9, rng));
            // Mix fully random second parents with local perturbations.
            auto order2 = oracle::order_of(s1);
            if (seed % 2 == 0) {
                order2 = oracle::random_order(9, rng);
            } else {
                for (int k = 0; k < 3; ++k) {
                    const auto p = rng() % 8;
                    std::swap(order2[p], order2[p + 1]);
                }
            }
            const Permutation s2(order2);
            const auto d = decompose_parents(*problem, s1, s2);
            int expected_first = 0;
            double sum = 0.0;
            std::vector<std::size_t> all;
            for (std::size_t i = 0; i < d.components.size(); ++i) {
                const auto& c = d.components[i];
                CHECK(c.first == expected_first);
                expected_first = c.last + 1;
                if (c.trivial()) CHECK(c.delta == 0.0);
                sum += c.delta;
                all.push_back(i);
            }
            CHECK(expected_first == 9);
            CHECK(apply_components(s1, d, all) == s2);
            CHECK(sum == oracle::evaluate(*problem, order2) - oracle::evaluate(*problem, oracle::order_of(s1)));
        }
    }
}

TEST_CASE("partition crossover") {
    const LopProblem lop(generate_lop(8, 2));
    std::mt19937_64 rng(4);
    const Permutation s1(oracle::random_order(8, rng));
    const auto same = px_perm(lop, s1, s1);
    CHECK(same.offspring == s1);
    CHECK(same.decomposition.nontrivial_count() == 0);

    // When every component improves, the offspring is the second parent.
    const LopProblem chain(LopInstance{4, {0, 9, 0, 0, 1, 0, 0, 0, 0, 0, 0, 9, 0, 0, 1, 0}});
    const auto p1 = Permutation(4), p2 = Permutation::parse_one_line("2 1 4 3");
    const auto r = px_perm(chain, p1, p2);
    CHECK(r.offspring == p2);
    CHECK(r.decomposition.nontrivial_count() == 2);
}

TEST_CASE("partition crossover equals the best subset and sequential acceptance") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const LopProblem lop(generate_lop(10, seed));
        const SmtwtpProblem smt(generate_smtwtp(10, seed));
        for (const PermutationProblem* problem : {static_cast<const PermutationProblem*>(&lop),
                                                  static_cast<const PermutationProblem*>(&smt)}) {
            const Permutation s1(oracle::random_order(10, rng));
            auto order2 = oracle::order_of(s1);
            for (int k = 0; k < 4; ++k) {
                const auto p = rng() % 9;
                std::swap(order2[p], order2[p + 1]);
            }
            const Permutation s2(order2);
            const auto r = px_perm(*problem, s1, s2);
            std::vector<std::size_t> nontrivial;
            for (std::size_t i = 0; i < r.decomposition.components.size(); ++i)
                if (!r.decomposition.components[i].trivial()) nontrivial.push_back(i);
            const double best = oracle::best_subset(
                nontrivial.size(),
                [&](std::uint64_t mask) {
                    auto order = oracle::order_of(s1);
                    for (std::size_t c = 0; c < nontrivial.size(); ++c)
                        if (mask >> c & 1) {
                            const auto& comp = r.decomposition.components[nontrivial[c]];
                            order = oracle::apply_window(order, comp.first, comp.pattern);
                        }
                    return order;
                },
                [&](const oracle::Order& o) { return oracle::evaluate(*problem, o); });
            CHECK(r.fitness == best);
            CHECK(r.fitness == oracle::evaluate(*problem, oracle::order_of(r.offspring)));
            CHECK(r.fitness <= std::min(oracle::evaluate(*problem, oracle::order_of(s1)),
                                        oracle::evaluate(*problem, order2)));

            // Re-evaluating each component after the ones already accepted
            // selects the same components.
            auto current = s1;
            for (std::size_t i = 0; i < r.decomposition.components.size(); ++i) {
                const auto& c = r.decomposition.components[i];
                if (c.trivial()) continue;
                const double now = window_delta(*problem, current, c.first, c.pattern);
                CHECK(now == c.delta);
                if (now < 0) current.apply_window(c.first, c.pattern);
            }
            CHECK(current == r.offspring);
        }
    }
}

TEST_CASE("an improving two-window move has an improving window") {
    std::mt19937_64 rng(6);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const SmtwtpProblem smt(generate_smtwtp(8, seed));
        const auto order = oracle::random_order(8, rng);
        const std::vector<int> a{2, 0, 1}, b{1, 0};
        const double base = oracle::evaluate(smt, order);
        const double d1 = oracle::evaluate(smt, oracle::apply_window(order, 1, a)) - base;
        const double d2 = oracle::evaluate(smt, oracle::apply_window(order, 5, b)) - base;
        const double both = oracle::evaluate(smt, oracle::apply_window(oracle::apply_window(order, 1, a), 5, b)) - base;
        if (both < 0) CHECK((d1 < 0 || d2 < 0));
    }
}
