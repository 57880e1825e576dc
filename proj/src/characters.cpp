#include "mp4/characters.hpp"

#include <algorithm>
#include <set>

namespace mp4 {

CharacterExpr char_of(const std::string& symbol, int exp) {
    CharacterExpr e;
    if (exp != 0) e[symbol] = exp;
    return e;
}

CharacterExpr char_mul(const CharacterExpr& a, const CharacterExpr& b) {
    CharacterExpr r = a;
    for (const auto& [s, n] : b) {
        int& v = r[s];
        v += n;
        if (v == 0) r.erase(s);
    }
    return r;
}

CharacterExpr char_pow(const CharacterExpr& a, int n) {
    CharacterExpr r;
    if (n == 0) return r;
    for (const auto& [s, e] : a) r[s] = e * n;
    return r;
}

CharacterExpr char_inv(const CharacterExpr& a) { return char_pow(a, -1); }

std::string char_str(const CharacterExpr& e) {
    if (e.empty()) return "1";
    std::string out;
    for (const auto& [s, n] : e) {
        if (!out.empty()) out += "*";
        out += s;
        if (n != 1) out += "^" + std::to_string(n);
    }
    return out;
}

RelationSet::RelationSet(std::vector<CharacterExpr> relations,
                         std::vector<CharacterExpr> inequations)
    : relations_(std::move(relations)), inequations_(std::move(inequations)) {
    build();
}

namespace {

long floor_div(long a, long b) { // b > 0
    long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

bool valid_ident(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

} // namespace

RelationSet RelationSet::parse(const std::string& src) {
    std::vector<CharacterExpr> rels, ineqs;
    size_t pos = 0;
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t");
        size_t b = s.find_last_not_of(" \t");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (pos <= src.size()) {
        size_t comma = src.find(',', pos);
        std::string item = trim(src.substr(pos, comma == std::string::npos
                                                    ? std::string::npos
                                                    : comma - pos));
        pos = comma == std::string::npos ? src.size() + 1 : comma + 1;
        if (item.empty()) continue;
        size_t ne = item.find("!=");
        if (ne != std::string::npos) {
            std::string lhs = trim(item.substr(0, ne));
            std::string rhs = trim(item.substr(ne + 2));
            if (!valid_ident(lhs) || !(valid_ident(rhs) || rhs == "1"))
                throw ParseError("bad inequation: " + item);
            CharacterExpr e = char_of(lhs);
            if (rhs != "1") e = char_mul(e, char_of(rhs, -1));
            ineqs.push_back(std::move(e));
            continue;
        }
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("missing '=' in: " + item);
        std::string lhs = trim(item.substr(0, eq));
        std::string rhs = trim(item.substr(eq + 1));
        int lexp = 1;
        size_t caret = lhs.find('^');
        if (caret != std::string::npos) {
            std::string exp = trim(lhs.substr(caret + 1));
            if (exp.empty() ||
                exp.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad exponent in: " + item);
            lexp = std::stoi(exp);
            lhs = trim(lhs.substr(0, caret));
            if (lexp <= 0) throw ParseError("exponent must be positive: " + item);
        }
        if (!valid_ident(lhs)) throw ParseError("bad identifier in: " + item);
        CharacterExpr e = char_of(lhs, lexp);
        if (rhs == "1") {
            // done
        } else if (valid_ident(rhs)) {
            if (caret != std::string::npos)
                throw ParseError("power relations must equal 1: " + item);
            e = char_mul(e, char_of(rhs, -1));
        } else {
            throw ParseError("bad right-hand side: " + item);
        }
        rels.push_back(std::move(e));
    }
    return RelationSet(std::move(rels), std::move(ineqs));
}

void RelationSet::build() {
    std::set<std::string> syms;
    for (const auto& r : relations_)
        for (const auto& [s, n] : r) syms.insert(s);
    symbols_.assign(syms.begin(), syms.end());
    size_t n = symbols_.size();
    std::vector<std::vector<long>> rows;
    for (const auto& r : relations_) {
        std::vector<long> row(n, 0);
        for (const auto& [s, e] : r) {
            size_t idx = std::lower_bound(symbols_.begin(), symbols_.end(), s) -
                         symbols_.begin();
            row[idx] = e;
        }
        rows.push_back(std::move(row));
    }
    // Integer row echelon (Hermite normal form).
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < rows.size(); ++c) {
        while (true) {
            size_t best = rows.size();
            for (size_t i = rank; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() ||
                    std::abs(rows[i][c]) < std::abs(rows[best][c]))
                    best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[rank], rows[best]);
            bool others = false;
            for (size_t i = rank + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                long q = rows[i][c] / rows[rank][c];
                for (size_t k = 0; k < n; ++k) rows[i][k] -= q * rows[rank][k];
                if (rows[i][c] != 0) others = true;
            }
            if (!others) {
                if (rows[rank][c] < 0)
                    for (size_t k = 0; k < n; ++k) rows[rank][k] = -rows[rank][k];
                ++rank;
                break;
            }
        }
    }
    rows.resize(rank);
    // Reduce entries above each pivot so the reduction map is canonical.
    for (size_t i = rank; i-- > 0;) {
        size_t c = 0;
        while (c < n && rows[i][c] == 0) ++c;
        for (size_t j = 0; j < i; ++j) {
            long q = floor_div(rows[j][c], rows[i][c]);
            if (q != 0)
                for (size_t k = 0; k < n; ++k) rows[j][k] -= q * rows[i][k];
        }
    }
    basis_ = std::move(rows);
}

CharacterExpr RelationSet::reduce(const CharacterExpr& e) const {
    size_t n = symbols_.size();
    std::vector<long> v(n, 0);
    CharacterExpr leftover;
    for (const auto& [s, exp] : e) {
        auto it = std::lower_bound(symbols_.begin(), symbols_.end(), s);
        if (it != symbols_.end() && *it == s)
            v[it - symbols_.begin()] = exp;
        else
            leftover[s] = exp;
    }
    for (const auto& row : basis_) {
        size_t c = 0;
        while (c < n && row[c] == 0) ++c;
        if (c == n) continue;
        long q = floor_div(v[c], row[c]);
        if (q != 0)
            for (size_t k = 0; k < n; ++k) v[k] -= q * row[k];
    }
    CharacterExpr out = leftover;
    for (size_t k = 0; k < n; ++k)
        if (v[k] != 0) out[symbols_[k]] = static_cast<int>(v[k]);
    return out;
}

bool RelationSet::is_trivial(const CharacterExpr& e) const {
    return reduce(e).empty();
}

bool RelationSet::declared_nontrivial(const CharacterExpr& e) const {
    if (is_trivial(e)) return false;
    for (const auto& q : inequations_) {
        if (is_trivial(char_mul(e, char_inv(q)))) return true;
        if (is_trivial(char_mul(e, q))) return true;
    }
    return false;
}

std::string RelationSet::str() const {
    std::string out;
    for (const auto& r : relations_) {
        if (!out.empty()) out += ", ";
        out += char_str(r) + "=1";
    }
    for (const auto& q : inequations_) {
        if (!out.empty()) out += ", ";
        out += char_str(q) + "!=1";
    }
    return out.empty() ? "(none)" : out;
}

std::string TorusCharacter::str() const {
    return char_str(first) + "(x)" + char_str(second);
}

CharacterExpr char_on_coroot(const TorusCharacter& tc, RootId r) {
    auto c = coroot_e(r);
    // Coroot coordinates in the (e1, e2) basis are integral for C2.
    int c1 = c[0].convert_to<int>();
    int c2 = c[1].convert_to<int>();
    return char_mul(char_pow(tc.first, c1), char_pow(tc.second, c2));
}

TorusCharacter weyl_act_char(Weyl w, const TorusCharacter& tc) {
    TorusConj conj = torus_conj(w);
    const CharacterExpr* comp[2] = {&tc.first, &tc.second};
    TorusCharacter out;
    CharacterExpr* slot[2] = {&out.first, &out.second};
    for (int i = 0; i < 2; ++i)
        *slot[conj.src[i]] = char_pow(*comp[i], conj.exp[i]);
    return out;
}

} // namespace mp4
