#ifndef DETFSING_KERNEL_TEXT_HPP
#define DETFSING_KERNEL_TEXT_HPP

// Polynomial text format.
//
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := [nat '*'] factor ('*' factor)* | nat
//   factor := var ['^' nat]
//   var    := name '[' nat ',' nat ']'
//
// Whitespace is ignored. Printing lists terms in descending order with
// coefficients in 1..p-1; a '-' is never printed.

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "detfsing/kernel/polynomial.hpp"

namespace detfsing {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        Polynomial sum(ring_);
        skip();
        bool negative = false;
        if (peek() == '-') {
            ++pos_;
            negative = true;
        }
        for (;;) {
            Polynomial t = term();
            sum = negative ? sum - t : sum + t;
            skip();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            negative = c == '-';
            ++pos_;
        }
        return sum;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip();
        return pos_ >= text_.size();
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    // Natural number; `mod` reduces on the fly so any length is accepted.
    std::uint64_t nat(std::uint64_t mod = 0) {
        skip();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (mod) v %= mod;
            else if (v > 0xFFFFFFFFull) fail("number too large");
            ++pos_;
        }
        return v;
    }

    Polynomial term() {
        skip();
        std::vector<Exp> exps(ring_->nvars(), 0);
        Coeff c = 1;
        bool need_factor = true;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = static_cast<Coeff>(nat(ring_->p()));
            if (peek() != '*') return Polynomial::constant(ring_, c);
            ++pos_;
        }
        while (need_factor) {
            factor(exps);
            need_factor = peek() == '*';
            if (need_factor) ++pos_;
        }
        return Polynomial::term(ring_, exps, c);
    }

    void factor(std::vector<Exp>& exps) {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
            pos_ = start;
            fail("expected a variable");
        }
        std::string name(text_.substr(start, pos_ - start));
        expect('[');
        auto row = nat();
        expect(',');
        auto col = nat();
        expect(']');
        std::string full = name + "[" + std::to_string(row) + "," + std::to_string(col) + "]";
        auto index = ring_->find(full);
        if (!index) {
            pos_ = start;
            fail("undeclared variable " + full);
        }
        std::uint64_t k = 1;
        if (peek() == '^') {
            ++pos_;
            k = nat();
        }
        std::uint64_t total = exps[*index] + k;
        if (total > mono::kMaxExp) fail("exponent too large");
        exps[*index] = static_cast<Exp>(total);
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const Ring& ring) {
    return detail::PolyParser(text, ring).parse();
}

inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const RingContext& R = *f.ring();
    std::string out;
    for (std::size_t t = 0; t < f.size(); ++t) {
        if (t) out += " + ";
        const Exp* m = f.mono(t);
        bool first = true;
        if (f.coeff(t) != 1 || m[0] == 0) {
            out += std::to_string(f.coeff(t));
            first = false;
        }
        for (std::size_t i = 0; i < R.nvars(); ++i) {
            if (!m[i + 1]) continue;
            if (!first) out += '*';
            first = false;
            out += R.var(i).name();
            if (m[i + 1] > 1) out += "^" + std::to_string(m[i + 1]);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }

}  // namespace detfsing

#endif  // DETFSING_KERNEL_TEXT_HPP
