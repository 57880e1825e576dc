#include "mp4/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace mp4 {

namespace {

struct Lexer {
    std::string s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    std::optional<Int> integer() {
        skip();
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        if (j == i) return std::nullopt;
        Int v(s.substr(i, j - i));
        i = j;
        return v;
    }
    std::optional<std::string> ident() {
        skip();
        size_t j = i;
        auto head = [](char c) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
        };
        auto tail = [&](char c) {
            return head(c) || std::isdigit(static_cast<unsigned char>(c));
        };
        if (j >= s.size() || !head(s[j])) return std::nullopt;
        while (j < s.size() && tail(s[j])) ++j;
        std::string v = s.substr(i, j - i);
        i = j;
        return v;
    }
};

bool is_basis_name(const std::string& n) {
    return n == "a1" || n == "a2" || n == "a3" || n == "a4" || n == "b1" ||
           n == "b2";
}

Int denominator_of(Lexer& lx) {
    auto d = lx.integer();
    if (!d) throw ParseError("expected integer after '/'");
    if (*d == 0) throw ParseError("division by zero");
    return *d;
}

Weight parse_term(Lexer& lx) {
    Rat coeff = 1;
    std::optional<std::string> basis, var;
    bool first = true;
    do {
        if (auto n = lx.integer()) {
            Rat f(*n);
            if (lx.eat('/')) f /= denominator_of(lx);
            coeff *= f;
        } else if (auto id = lx.ident()) {
            if (is_basis_name(*id)) {
                if (basis)
                    throw ParseError("more than one basis symbol in a term");
                basis = *id;
            } else {
                if (var)
                    throw ParseError("more than one free variable in a term");
                var = *id;
            }
            if (lx.eat('/')) coeff /= denominator_of(lx);
        } else {
            throw ParseError(first ? "expected a term" : "expected a factor");
        }
        first = false;
    } while (lx.eat('*'));
    if (!basis) throw ParseError("term has no basis symbol (a1..a4, b1, b2)");
    Weight b = basis_weight(*basis);
    AffineForm scale =
        var ? coeff * AffineForm::var(*var) : AffineForm(coeff);
    Weight out;
    out.x = b.x.value() * scale;
    out.y = b.y.value() * scale;
    return out;
}

} // namespace

Weight parse_weight(const std::string& text) {
    Lexer lx{text};
    bool neg = lx.eat('-');
    if (!neg) lx.eat('+');
    Weight acc = parse_term(lx);
    if (neg) acc = {Rat(-1) * acc.x, Rat(-1) * acc.y};
    while (!lx.done()) {
        bool minus;
        if (lx.eat('+')) minus = false;
        else if (lx.eat('-')) minus = true;
        else throw ParseError("expected '+' or '-' in weight expression");
        Weight t = parse_term(lx);
        if (minus) t = {Rat(-1) * t.x, Rat(-1) * t.y};
        acc = {acc.x + t.x, acc.y + t.y};
    }
    return acc;
}

Rat parse_rat(const std::string& text) {
    Lexer lx{text};
    bool neg = lx.eat('-');
    auto n = lx.integer();
    if (!n) throw ParseError("expected a rational number: " + text);
    Rat v(*n);
    if (lx.eat('/')) v /= denominator_of(lx);
    if (!lx.done()) throw ParseError("trailing input in rational: " + text);
    return neg ? -v : v;
}

} // namespace mp4
