#include "graybox/pseudo_boolean.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <ostream>

#include "graybox/errors.hpp"
#include "text_io.hpp"

namespace graybox::pb {

std::size_t Subfunction::index_of(const BitString& x) const {
    std::size_t index = 0;
    for (std::size_t b = 0; b < variables.size(); ++b)
        if (x.test(variables[b])) index |= std::size_t{1} << b;
    return index;
}

KBoundedFunction::KBoundedFunction(int n, std::vector<Subfunction> subfunctions)
    : n_(n), subfunctions_(std::move(subfunctions)), touching_(static_cast<std::size_t>(n)),
      co_occurring_(static_cast<std::size_t>(n)) {
    if (n <= 0) throw ContractError("KBoundedFunction: n must be positive");
    for (std::size_t s = 0; s < subfunctions_.size(); ++s) {
        const auto& sub = subfunctions_[s];
        const int arity = static_cast<int>(sub.variables.size());
        if (arity > kMaxArity) throw CapacityError("subfunction arity " + std::to_string(arity) + " exceeds 16");
        if (sub.table.size() != (std::size_t{1} << arity))
            throw ContractError("subfunction table must have 2^arity entries");
        for (std::size_t a = 0; a < sub.variables.size(); ++a) {
            const int v = sub.variables[a];
            if (v < 0 || v >= n) throw ContractError("subfunction variable index out of range");
            for (std::size_t b = 0; b < a; ++b)
                if (sub.variables[b] == v) throw ContractError("subfunction repeats a variable");
            touching_[static_cast<std::size_t>(v)].push_back(static_cast<int>(s));
        }
        k_ = std::max(k_, arity);
    }
    for (int i = 0; i < n; ++i) {
        auto& co = co_occurring_[static_cast<std::size_t>(i)];
        co.push_back(i);
        for (int s : touching_[static_cast<std::size_t>(i)])
            for (int v : subfunctions_[static_cast<std::size_t>(s)].variables) co.push_back(v);
        std::sort(co.begin(), co.end());
        co.erase(std::unique(co.begin(), co.end()), co.end());
    }
}

double KBoundedFunction::evaluate(const BitString& x) const {
    double sum = 0.0;
    for (const auto& sub : subfunctions_) sum += sub.evaluate(x);
    return sum;
}

double KBoundedFunction::flip_delta(const BitString& x, int i) const {
    double delta = 0.0;
    for (int s : touching(i)) {
        const auto& sub = subfunctions_[static_cast<std::size_t>(s)];
        const std::size_t index = sub.index_of(x);
        const auto pos = static_cast<std::size_t>(
            std::find(sub.variables.begin(), sub.variables.end(), i) - sub.variables.begin());
        delta += sub.table[index ^ (std::size_t{1} << pos)] - sub.table[index];
    }
    return delta;
}

double KBoundedFunction::move_delta(const BitString& x, const BitString& move) const {
    std::vector<int> subs;
    for (int v : move.ones())
        for (int s : touching(v)) subs.push_back(s);
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    const BitString y = x ^ move;
    double delta = 0.0;
    for (int s : subs) {
        const auto& sub = subfunctions_[static_cast<std::size_t>(s)];
        delta += sub.evaluate(y) - sub.evaluate(x);
    }
    return delta;
}

void WalshExpansion::add(const BitString& mask, double coefficient) {
    if (mask.size() != n_) throw ContractError("WalshExpansion: mask length mismatch");
    terms_[mask] += coefficient;
}

void WalshExpansion::prune(double tolerance) {
    std::erase_if(terms_, [tolerance](const auto& term) { return std::abs(term.second) <= tolerance; });
}

double WalshExpansion::evaluate(const BitString& x) const {
    double sum = 0.0;
    for (const auto& [mask, w] : terms_) sum += mask.dot(x) ? -w : w;
    return sum;
}

WalshExpansion walsh_decompose(const KBoundedFunction& f) {
    WalshExpansion w(f.size());
    for (const auto& sub : f.subfunctions()) {
        std::vector<double> a = sub.table;
        for (std::size_t len = 1; len < a.size(); len <<= 1)
            for (std::size_t i = 0; i < a.size(); i += len << 1)
                for (std::size_t j = i; j < i + len; ++j) {
                    const double u = a[j], v = a[j + len];
                    a[j] = u + v;
                    a[j + len] = u - v;
                }
        const double scale = 1.0 / static_cast<double>(a.size());
        for (std::size_t local = 0; local < a.size(); ++local) {
            BitString mask(f.size());
            for (std::size_t b = 0; b < sub.variables.size(); ++b)
                if (local >> b & 1u) mask.set(sub.variables[b]);
            w.add(mask, a[local] * scale);
        }
    }
    w.prune(kWalshZeroTolerance);
    return w;
}

void VariableInteractionGraph::add_edge(int a, int b) {
    if (a == b || has_edge(a, b)) return;
    auto insert_sorted = [](std::vector<int>& list, int v) { list.insert(std::lower_bound(list.begin(), list.end(), v), v); };
    insert_sorted(adjacency_[static_cast<std::size_t>(a)], b);
    insert_sorted(adjacency_[static_cast<std::size_t>(b)], a);
}

bool VariableInteractionGraph::has_edge(int a, int b) const {
    const auto& list = adjacency_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<std::pair<int, int>> VariableInteractionGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b : neighbours(a))
            if (a < b) out.emplace_back(a, b);
    return out;
}

std::vector<BitString> VariableInteractionGraph::components(const BitString& mask) const {
    std::vector<BitString> out;
    BitString seen(mask.size());
    std::vector<int> stack;
    for (int start : mask.ones()) {
        if (seen.test(start)) continue;
        BitString component(mask.size());
        stack.push_back(start);
        seen.set(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            component.set(v);
            for (int u : neighbours(v))
                if (mask.test(u) && !seen.test(u)) {
                    seen.set(u);
                    stack.push_back(u);
                }
        }
        out.push_back(std::move(component));
    }
    return out;
}

VariableInteractionGraph build_vig(const WalshExpansion& w) {
    VariableInteractionGraph vig(w.size());
    for (const auto& [mask, coefficient] : w.terms()) {
        if (coefficient == 0.0) continue;
        const auto vars = mask.ones();
        for (std::size_t a = 0; a < vars.size(); ++a)
            for (std::size_t b = a + 1; b < vars.size(); ++b) vig.add_edge(vars[a], vars[b]);
    }
    return vig;
}

bool moves_interact_vig(const BitString& g, const BitString& h, const VariableInteractionGraph& vig) {
    if (g.intersects(h)) throw ContractError("moves_interact_vig: move supports overlap");
    for (int a : g.ones())
        for (int b : vig.neighbours(a))
            if (h.test(b)) return true;
    return false;
}

bool moves_interact_walsh(const BitString& g, const BitString& h, const WalshExpansion& w) {
    for (const auto& [mask, coefficient] : w.terms())
        if (coefficient != 0.0 && mask.dot(g) && mask.dot(h)) return true;
    return false;
}

std::optional<std::pair<BitString, BitString>> decompose_move(const BitString& g, const WalshExpansion& w) {
    const auto support = g.ones();
    const int m = static_cast<int>(support.size());
    if (m > kMaxDecomposeSupport)
        throw CapacityError("decompose_move: support of " + std::to_string(m) + " bits exceeds " +
                            std::to_string(kMaxDecomposeSupport));
    if (m < 2) return std::nullopt;

    // Terms restricted to the support, in local coordinates (bit b <-> support[b]).
    std::vector<std::uint32_t> local_terms;
    for (const auto& [mask, coefficient] : w.terms()) {
        if (coefficient == 0.0) continue;
        std::uint32_t local = 0;
        for (int b = 0; b < m; ++b)
            if (mask.test(support[static_cast<std::size_t>(b)])) local |= 1u << b;
        if (local != 0) local_terms.push_back(local);
    }
    std::sort(local_terms.begin(), local_terms.end());
    local_terms.erase(std::unique(local_terms.begin(), local_terms.end()), local_terms.end());

    auto to_global = [&](std::uint32_t local) {
        BitString out(g.size());
        for (int b = 0; b < m; ++b)
            if (local >> b & 1u) out.set(support[static_cast<std::size_t>(b)]);
        return out;
    };
    const std::uint32_t full = (1u << m) - 1;

    // Structural split first: the component holding the lowest bit versus the rest.
    std::uint32_t component = 1u;
    for (bool grown = true; grown;) {
        grown = false;
        for (auto t : local_terms)
            if ((t & component) && (t & ~component)) {
                component |= t;
                grown = true;
            }
    }
    if (component != full) return std::pair{to_global(component), to_global(full & ~component)};

    // Exhaustive search over splits, most balanced first. h1 keeps bit 0.
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t s = 1; s < full; s += 2) candidates.push_back(s);
    std::stable_sort(candidates.begin(), candidates.end(), [m](std::uint32_t a, std::uint32_t b) {
        return std::abs(2 * std::popcount(a) - m) < std::abs(2 * std::popcount(b) - m);
    });
    for (auto s : candidates) {
        const std::uint32_t rest = full & ~s;
        const bool interact = std::any_of(local_terms.begin(), local_terms.end(), [&](std::uint32_t t) {
            return (std::popcount(t & s) & 1) && (std::popcount(t & rest) & 1);
        });
        if (!interact) return std::pair{to_global(s), to_global(rest)};
    }
    return std::nullopt;
}

BitFlipClimber::BitFlipClimber(const KBoundedFunction& f, BitString start, ClimbOptions options)
    : f_(f), x_(std::move(start)), options_(options), rng_(options.seed),
      scores_(static_cast<std::size_t>(f.size())), improving_(static_cast<std::size_t>(f.size())) {
    if (x_.size() != f.size()) throw ContractError("BitFlipClimber: start length does not match instance");
    fitness_ = f_.evaluate(x_);
    for (int i = 0; i < f_.size(); ++i) refresh(i);
}

void BitFlipClimber::refresh(int i) {
    const double d = f_.flip_delta(x_, i);
    scores_[static_cast<std::size_t>(i)] = d;
    improving_.assign(static_cast<std::size_t>(i), d < 0.0);
}

bool BitFlipClimber::step() {
    if (improving_.empty()) return false;
    const std::size_t chosen = options_.selection == Selection::Random
                                   ? improving_.at(static_cast<std::size_t>(uniform_below(rng_, improving_.size())))
                                   : improving_.min();
    const int i = static_cast<int>(chosen);
    fitness_ += scores_[chosen];
    x_.flip(i);
    const auto& touched = f_.co_occurring(i);
    for (int v : touched) refresh(v);
    last_updates_ = touched.size();
    last_variable_ = i;
    ++moves_;
    return true;
}

ClimbResult BitFlipClimber::run() {
    ClimbResult result;
    while (moves_ < options_.budget && step()) {
        result.trace.push_back({last_variable_, fitness_});
        result.max_updates = std::max(result.max_updates, last_updates_);
    }
    result.solution = x_;
    result.fitness = fitness_;
    result.moves = moves_;
    result.budget_exhausted = !improving_.empty();
    return result;
}

ClimbResult bitflip_hill_climb(const KBoundedFunction& f, const BitString& start, const ClimbOptions& options) {
    BitFlipClimber climber(f, start, options);
    return climber.run();
}

BinaryPxResult px_binary(const KBoundedFunction& f, const VariableInteractionGraph& vig, const BitString& p1,
                         const BitString& p2) {
    if (p1.size() != f.size() || p2.size() != f.size()) throw ContractError("px_binary: parent length mismatch");
    BinaryPxResult result;
    result.offspring = p1;
    for (auto& mask : vig.components(p1 ^ p2)) {
        BinaryComponent c{std::move(mask), 0.0, false};
        c.delta = f.move_delta(p1, c.mask);
        if (c.delta < 0.0) {
            c.applied = true;
            result.offspring ^= c.mask;
        }
        result.components.push_back(std::move(c));
    }
    result.fitness = f.evaluate(result.offspring);
    return result;
}

BinaryPxResult px_binary(const KBoundedFunction& f, const BitString& p1, const BitString& p2) {
    return px_binary(f, build_vig(walsh_decompose(f)), p1, p2);
}

KBoundedFunction parse_instance(std::istream& in, const std::string& source) {
    detail::TokenReader reader(in, source);
    const auto n = reader.read_int("n");
    const auto header_line = reader.line();
    const auto m = reader.read_int("m");
    const auto k = reader.read_int("k");
    if (n <= 0) reader.fail(header_line, "n must be positive");
    if (m < 0) reader.fail(header_line, "m must be non-negative");
    if (k < 0 || k > kMaxArity) reader.fail(header_line, "k must be in 0..16");
    std::vector<Subfunction> subs;
    subs.reserve(static_cast<std::size_t>(m));
    for (long long s = 0; s < m; ++s) {
        const auto line = reader.line();
        const auto arity = reader.read_int("arity");
        if (arity < 0 || arity > k)
            reader.fail(line, "subfunction " + std::to_string(s + 1) + ": arity " + std::to_string(arity) +
                                  " outside 0.." + std::to_string(k));
        Subfunction sub;
        for (long long a = 0; a < arity; ++a) {
            const auto vline = reader.line();
            const auto v = reader.read_int("variable index");
            if (v < 1 || v > n) reader.fail(vline, "variable index " + std::to_string(v) + " outside 1..n");
            if (std::find(sub.variables.begin(), sub.variables.end(), static_cast<int>(v - 1)) != sub.variables.end())
                reader.fail(vline, "variable index " + std::to_string(v) + " repeated in subfunction");
            sub.variables.push_back(static_cast<int>(v - 1));
        }
        for (std::size_t t = 0; t < (std::size_t{1} << arity); ++t) sub.table.push_back(reader.read_double("table value"));
        subs.push_back(std::move(sub));
    }
    reader.expect_end();
    return KBoundedFunction(static_cast<int>(n), std::move(subs));
}

KBoundedFunction load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "cannot open file");
    return parse_instance(in, path);
}

void write_instance(std::ostream& out, const KBoundedFunction& f) {
    out << f.size() << ' ' << f.subfunctions().size() << ' ' << f.arity_bound() << '\n';
    for (const auto& sub : f.subfunctions()) {
        out << sub.variables.size();
        for (int v : sub.variables) out << ' ' << v + 1;
        out << '\n';
        for (std::size_t t = 0; t < sub.table.size(); ++t) out << (t ? " " : "") << detail::format_number(sub.table[t]);
        out << '\n';
    }
}

KBoundedFunction generate_nk(int n, int k, std::uint64_t seed) {
    if (n <= 0 || k < 1 || k > n || k > kMaxArity) throw ContractError("generate_nk: need 1 <= k <= min(n, 16)");
    Rng rng(seed);
    std::vector<Subfunction> subs;
    for (int i = 0; i < n; ++i) {
        Subfunction sub;
        sub.variables.push_back(i);
        while (static_cast<int>(sub.variables.size()) < k) {
            const int v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
            if (std::find(sub.variables.begin(), sub.variables.end(), v) == sub.variables.end())
                sub.variables.push_back(v);
        }
        for (std::size_t t = 0; t < (std::size_t{1} << k); ++t)
            sub.table.push_back(static_cast<double>(uniform_below(rng, 100)));
        subs.push_back(std::move(sub));
    }
    return KBoundedFunction(n, std::move(subs));
}

}  // namespace graybox::pb
