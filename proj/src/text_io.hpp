#pragma once

// Whitespace tokenizer with line tracking for the plain-text formats.

#include <charconv>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "graybox/errors.hpp"

namespace graybox::detail {

struct Token {
    std::string text;
    std::size_t line;
};

class TokenReader {
public:
    TokenReader(std::istream& in, std::string source) : source_(std::move(source)) {
        std::string line;
        std::size_t number = 0;
        while (std::getline(in, line)) {
            ++number;
            lines_.push_back(line);
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && is_space(line[i])) ++i;
                std::size_t j = i;
                while (j < line.size() && !is_space(line[j])) ++j;
                if (j > i) tokens_.push_back({line.substr(i, j - i), number});
                i = j;
            }
        }
        last_line_ = number;
    }

    bool done() const noexcept { return next_ >= tokens_.size(); }
    const std::string& source() const noexcept { return source_; }
    const std::vector<std::string>& lines() const noexcept { return lines_; }

    const Token& peek(const char* field) const {
        if (done()) fail(last_line_, std::string("unexpected end of input, expected ") + field);
        return tokens_[next_];
    }

    long long read_int(const char* field) {
        const Token& t = peek(field);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            fail(t.line, std::string("expected integer for ") + field + ", got '" + t.text + "'");
        ++next_;
        return v;
    }

    double read_double(const char* field) {
        const Token& t = peek(field);
        double v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
            fail(t.line, std::string("expected number for ") + field + ", got '" + t.text + "'");
        ++next_;
        return v;
    }

    std::size_t line() const noexcept { return done() ? last_line_ : tokens_[next_].line; }

    /// Skips every token on the current token's line.
    void skip_line() {
        if (done()) return;
        const auto l = tokens_[next_].line;
        while (!done() && tokens_[next_].line == l) ++next_;
    }

    void expect_end() const {
        if (!done()) fail(tokens_[next_].line, "unexpected trailing token '" + tokens_[next_].text + "'");
    }

    [[noreturn]] void fail(std::size_t line, const std::string& what) const { throw ParseError(source_, line, what); }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

    std::string source_;
    std::vector<Token> tokens_;
    std::vector<std::string> lines_;
    std::size_t next_ = 0;
    std::size_t last_line_ = 0;
};

inline std::string format_number(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

}  // namespace graybox::detail
