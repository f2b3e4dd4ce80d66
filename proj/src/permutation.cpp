#include "graybox/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "graybox/errors.hpp"

namespace graybox {

namespace {

void require_bijection(const std::vector<int>& image) {
    std::vector<char> seen(image.size(), 0);
    for (int v : image) {
        if (v < 0 || static_cast<std::size_t>(v) >= image.size() || seen[static_cast<std::size_t>(v)])
            throw ContractError("not a permutation: values must be distinct and in range");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

bool parse_int(std::string_view token, int& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation::Permutation(int n) : image_(static_cast<std::size_t>(n)) {
    std::iota(image_.begin(), image_.end(), 0);
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    require_bijection(image_);
}

Permutation Permutation::from_one_based(std::span<const int> image) {
    std::vector<int> zero(image.begin(), image.end());
    for (auto& v : zero) --v;
    return Permutation(std::move(zero));
}

Permutation Permutation::parse_one_line(std::string_view text) {
    std::vector<int> values;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',' || text[i] == '\r' ||
                                   text[i] == '\n'))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !(text[j] == ' ' || text[j] == '\t' || text[j] == ',' || text[j] == '\r' ||
                                    text[j] == '\n'))
            ++j;
        if (j > i) {
            int v = 0;
            if (!parse_int(text.substr(i, j - i), v))
                throw ContractError("invalid permutation entry '" + std::string(text.substr(i, j - i)) + "'");
            values.push_back(v);
        }
        i = j;
    }
    return from_one_based(values);
}

Permutation Permutation::parse_cycles(std::string_view text, int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        if (text[i] != '(') throw ContractError("cycle notation: expected '(' in '" + std::string(text) + "'");
        const auto close = text.find(')', i);
        if (close == std::string_view::npos) throw ContractError("cycle notation: missing ')'");
        std::vector<int> cycle;
        std::istringstream in(std::string(text.substr(i + 1, close - i - 1)));
        std::string token;
        while (in >> token) {
            int v = 0;
            if (!parse_int(token, v) || v < 1 || v > n)
                throw ContractError("cycle notation: element '" + token + "' out of range 1.." + std::to_string(n));
            if (used[static_cast<std::size_t>(v - 1)])
                throw ContractError("cycle notation: element " + token + " repeated");
            used[static_cast<std::size_t>(v - 1)] = 1;
            cycle.push_back(v - 1);
        }
        if (cycle.size() > 1)
            for (std::size_t k = 0; k < cycle.size(); ++k)
                image[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
        i = close + 1;
    }
    return Permutation(std::move(image));
}

Permutation Permutation::transposition(int n, int a, int b) {
    Permutation p(n);
    std::swap(p.image_[static_cast<std::size_t>(a)], p.image_[static_cast<std::size_t>(b)]);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    Permutation p;
    p.image_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != static_cast<int>(i)) return false;
    return true;
}

void Permutation::apply_window(int first, std::span<const int> pattern) {
    int buffer[8];
    std::vector<int> heap;
    int* tmp = buffer;
    if (pattern.size() > 8) {
        heap.resize(pattern.size());
        tmp = heap.data();
    }
    for (std::size_t k = 0; k < pattern.size(); ++k) tmp[k] = image_[static_cast<std::size_t>(first + pattern[k])];
    for (std::size_t k = 0; k < pattern.size(); ++k) image_[static_cast<std::size_t>(first) + k] = tmp[k];
}

std::string Permutation::to_one_line() const {
    std::string out;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(image_[i] + 1);
    }
    return out;
}

std::string Permutation::to_cycles() const {
    std::string out;
    std::vector<char> seen(image_.size(), 0);
    for (std::size_t start = 0; start < image_.size(); ++start) {
        if (seen[start] || image_[start] == static_cast<int>(start)) continue;
        out += '(';
        std::size_t k = start;
        bool first = true;
        while (!seen[k]) {
            seen[k] = 1;
            if (!first) out += ' ';
            out += std::to_string(k + 1);
            first = false;
            k = static_cast<std::size_t>(image_[k]);
        }
        out += ')';
    }
    return out.empty() ? "(1)" : out;
}

std::uint64_t Permutation::rank() const {
    const int n = size();
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (image_[static_cast<std::size_t>(j)] < image_[static_cast<std::size_t>(i)]) ++smaller;
        r = r * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return r;
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const auto base = static_cast<std::uint64_t>(n - i);
        digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
        rank /= base;
    }
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> image;
    image.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
        image.push_back(*it);
        pool.erase(it);
    }
    Permutation p;
    p.image_ = std::move(image);
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw ContractError("permutation product: size mismatch");
    std::vector<int> image(a.image_.size());
    for (std::size_t i = 0; i < image.size(); ++i)
        image[i] = b.image_[static_cast<std::size_t>(a.image_[i])];
    Permutation p;
    p.image_ = std::move(image);
    return p;
}

}  // namespace graybox
