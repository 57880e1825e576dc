#include "mp4/coeff.hpp"

#include <mutex>
#include <unordered_map>

namespace mp4 {

namespace symtab {

namespace {
std::mutex mu;
std::unordered_map<std::string, bool>& table() {
    static std::unordered_map<std::string, bool> t = {{"a-1", true}};
    return t;
}
} // namespace

void declare(const std::string& name, bool invertible) {
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = table().emplace(name, invertible);
    if (!inserted && it->second != invertible)
        throw std::logic_error("symbol redeclared with different unit status: " +
                               name);
}

bool invertible(const std::string& name) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = table().find(name);
    return it != table().end() && it->second;
}

} // namespace symtab

std::string monomial_str(const Monomial& m) {
    std::string out;
    for (const auto& [s, e] : m) {
        if (!out.empty()) out += "*";
        out += s;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

Coeff Coeff::rational(Rat q) {
    Coeff c;
    if (q != 0) c.terms[Monomial{}] = std::move(q);
    return c;
}

Coeff Coeff::symbol(const std::string& name, int exp) {
    if (exp < 0 && !symtab::invertible(name))
        throw std::logic_error("negative power of non-invertible symbol: " + name);
    Coeff c;
    Monomial m;
    if (exp != 0) m[name] = exp;
    c.terms[m] = Rat(1);
    return c;
}

bool Coeff::is_rational() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
}

bool Coeff::is_unit() const {
    if (terms.size() != 1) return false;
    for (const auto& [s, e] : terms.begin()->first)
        if (!symtab::invertible(s)) return false;
    return true;
}

Coeff Coeff::inverse() const {
    if (!is_unit())
        throw UnsupportedCase("cannot invert non-unit coefficient: " + str());
    const auto& [mono, q] = *terms.begin();
    Coeff r;
    Monomial m;
    for (const auto& [s, e] : mono) m[s] = -e;
    r.terms[m] = Rat(1) / q;
    return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
    for (const auto& [m, q] : o.terms) {
        Rat& v = terms[m];
        v += q;
        if (v == 0) terms.erase(m);
    }
    return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff Coeff::operator-() const {
    Coeff r;
    for (const auto& [m, q] : terms) r.terms[m] = -q;
    return r;
}

Coeff operator*(const Coeff& a, const Coeff& b) {
    Coeff r;
    for (const auto& [ma, qa] : a.terms) {
        for (const auto& [mb, qb] : b.terms) {
            Monomial m = ma;
            for (const auto& [s, e] : mb) {
                int& v = m[s];
                v += e;
                if (v == 0) m.erase(s);
            }
            Rat& v = r.terms[m];
            v += qa * qb;
            if (v == 0) r.terms.erase(m);
        }
    }
    return r;
}

Coeff operator*(const Rat& q, const Coeff& c) {
    Coeff r;
    if (q == 0) return r;
    for (const auto& [m, v] : c.terms) r.terms[m] = q * v;
    return r;
}

namespace {

std::string term_str(const Monomial& m, const Rat& q, const std::string& var,
                     int power) {
    Int num = boost::multiprecision::numerator(q < 0 ? Rat(-q) : q);
    Int den = boost::multiprecision::denominator(q);
    std::string top, bottom;
    auto append = [](std::string& s, const std::string& piece) {
        if (!s.empty()) s += "*";
        s += piece;
    };
    auto sympow = [](const std::string& s, int e) {
        return e == 1 ? s : s + "^" + std::to_string(e);
    };
    for (const auto& [s, e] : m) {
        if (e > 0) append(top, sympow(s, e));
        else append(bottom, sympow(s, -e));
    }
    if (power > 0) append(top, sympow(var, power));
    else if (power < 0) append(bottom, sympow(var, -power));
    if (den != 1) {
        std::string d = den.str();
        bottom = bottom.empty() ? d : d + "*" + bottom;
    }
    if (num != 1 || top.empty()) {
        std::string n = num.str();
        top = top.empty() ? n : n + "*" + top;
    }
    if (bottom.empty()) return top;
    bool paren = bottom.find('*') != std::string::npos;
    return top + "/" + (paren ? "(" + bottom + ")" : bottom);
}

} // namespace

std::string Coeff::str() const { return str_with_power("", 0); }

std::string Coeff::str_with_power(const std::string& var, int power) const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, q] : terms) {
        if (out.empty())
            out += (q < 0 ? "-" : "");
        else
            out += (q < 0 ? " - " : " + ");
        out += term_str(m, q, var, power);
    }
    return out;
}

} // namespace mp4
