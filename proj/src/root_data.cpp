#include "mp4/root_data.hpp"

#include <algorithm>
#include <stdexcept>

namespace mp4 {

namespace {

using Mat = std::array<std::array<int, 2>, 2>; // acts on (e1, e2) columns

constexpr Mat kId{{{1, 0}, {0, 1}}};
constexpr Mat kS1{{{0, 1}, {1, 0}}};   // swap e1, e2
constexpr Mat kS2{{{1, 0}, {0, -1}}};  // negate e2

Mat mat_mul(const Mat& a, const Mat& b) {
    Mat r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

const std::vector<int>& word_of(Weyl w) {
    static const std::vector<int> words[8] = {
        {}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}, {2, 1, 2}, {1, 2, 1, 2}};
    return words[static_cast<int>(w)];
}

Mat letter_mat(int letter) { return letter == 1 ? kS1 : kS2; }

Mat mat_of(Weyl w) {
    Mat m = kId;
    for (int letter : word_of(w)) m = mat_mul(m, letter_mat(letter));
    return m;
}

Weyl weyl_of_mat(const Mat& m) {
    for (Weyl w : all_weyl)
        if (mat_of(w) == m) return w;
    throw std::logic_error("matrix is not a C2 Weyl element");
}

} // namespace

bool is_short(RootId r) { return r == RootId::A1 || r == RootId::A3; }

std::array<Rat, 2> root_e(RootId r) {
    switch (r) {
    case RootId::A1: return {Rat(1), Rat(-1)};
    case RootId::A2: return {Rat(0), Rat(2)};
    case RootId::A3: return {Rat(1), Rat(1)};
    case RootId::A4: return {Rat(2), Rat(0)};
    }
    throw std::logic_error("bad root");
}

std::array<Rat, 2> coroot_e(RootId r) {
    // beta^vee = 2 beta / (beta, beta)
    auto e = root_e(r);
    Rat norm = e[0] * e[0] + e[1] * e[1];
    return {2 * e[0] / norm, 2 * e[1] / norm};
}

std::array<Rat, 2> root_simple_coords(RootId r) {
    switch (r) {
    case RootId::A1: return {Rat(1), Rat(0)};
    case RootId::A2: return {Rat(0), Rat(1)};
    case RootId::A3: return {Rat(1), Rat(1)};
    case RootId::A4: return {Rat(2), Rat(1)};
    }
    throw std::logic_error("bad root");
}

std::string root_name(RootId r) {
    static const char* names[4] = {"a1", "a2", "a3", "a4"};
    return names[static_cast<int>(r)];
}

std::string root_name(SignedRoot r) {
    return (r.negative ? "-" : "") + root_name(r.id);
}

std::string weyl_name(Weyl w) {
    static const char* names[8] = {"1",    "w1",   "w2",   "w12",
                                   "w21",  "w121", "w212", "w1212"};
    return names[static_cast<int>(w)];
}

Weyl weyl_from_name(const std::string& name) {
    for (Weyl w : all_weyl)
        if (weyl_name(w) == name) return w;
    throw ParseError("unknown Weyl element: " + name);
}

std::string Weight::str() const {
    if (!is_constant())
        return "[x=" + x.str() + ", y=" + y.str() + "]";
    const Rat& vx = x.value();
    const Rat& vy = y.value();
    if (vx == 0 && vy == 0) return "0";
    // Prefer the a4/2 form on the diagonal, otherwise combine a1/2 and a3/2.
    auto piece = [](const Rat& half_coeff, const char* root) -> std::string {
        // half_coeff * root/2
        Rat q = half_coeff / 2;
        Rat a = q < 0 ? Rat(-q) : q;
        std::string body;
        if (a == 1) body = root;
        else if (a == Rat(1, 2)) body = std::string(root) + "/2";
        else body = rat_str(a) + "*" + root;
        return (q < 0 ? "-" : "") + body;
    };
    if (vx == vy) return piece(vx, "a4");
    std::string out;
    if (vx != 0) out += piece(vx, "a1");
    if (vy != 0) {
        std::string p = piece(vy, "a3");
        if (!out.empty() && p[0] != '-') out += "+";
        out += p;
    }
    return out;
}

Weight basis_weight(const std::string& name) {
    // In (x, y) coordinates with Lambda = x a1/2 + y a3/2.
    if (name == "a1") return {AffineForm(2), AffineForm(0)};
    if (name == "a2") return {AffineForm(-2), AffineForm(2)};
    if (name == "a3") return {AffineForm(0), AffineForm(2)};
    if (name == "a4") return {AffineForm(2), AffineForm(2)};
    if (name == "b1") return {AffineForm(1), AffineForm(1)};
    if (name == "b2") return {AffineForm(0), AffineForm(2)};
    throw ParseError("unknown basis symbol: " + name);
}

std::array<AffineForm, 2> weight_e_coords(const Weight& v) {
    return {Rat(1, 2) * (v.x + v.y), Rat(1, 2) * (v.y - v.x)};
}

Weight weight_from_e(const AffineForm& e1, const AffineForm& e2) {
    return {e1 - e2, e1 + e2};
}

std::array<AffineForm, 2> weight_simple_coords(const Weight& v) {
    auto e = weight_e_coords(v);
    return {e[0], Rat(1, 2) * (e[0] + e[1])};
}

int weyl_length(Weyl w) { return static_cast<int>(word_of(w).size()); }

const std::vector<int>& weyl_word(Weyl w) { return word_of(w); }

std::vector<std::vector<int>> reduced_words(Weyl w) {
    int len = weyl_length(w);
    std::vector<std::vector<int>> out;
    std::vector<int> word(len);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            if (weyl_from_word(word) == w) out.push_back(word);
            return;
        }
        for (int letter : {1, 2}) {
            if (pos > 0 && word[pos - 1] == letter) continue;
            word[pos] = letter;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Weyl weyl_mul(Weyl a, Weyl b) { return weyl_of_mat(mat_mul(mat_of(a), mat_of(b))); }

Weyl weyl_inverse(Weyl w) {
    for (Weyl v : all_weyl)
        if (weyl_mul(w, v) == Weyl::One) return v;
    throw std::logic_error("no inverse");
}

Weyl weyl_from_word(const std::vector<int>& word) {
    Mat m = kId;
    for (int letter : word) m = mat_mul(m, letter_mat(letter));
    return weyl_of_mat(m);
}

SignedRoot weyl_act_root(Weyl w, SignedRoot r) {
    Mat m = mat_of(w);
    auto e = root_e(r.id);
    if (r.negative) { e[0] = -e[0]; e[1] = -e[1]; }
    std::array<Rat, 2> img = {m[0][0] * e[0] + m[0][1] * e[1],
                              m[1][0] * e[0] + m[1][1] * e[1]};
    for (RootId cand : all_roots) {
        auto c = root_e(cand);
        if (img[0] == c[0] && img[1] == c[1]) return {cand, false};
        if (img[0] == -c[0] && img[1] == -c[1]) return {cand, true};
    }
    throw std::logic_error("root image is not a root");
}

Weight weyl_act_weight(Weyl w, const Weight& v) {
    Mat m = mat_of(w);
    auto e = weight_e_coords(v);
    AffineForm f1 = Rat(m[0][0]) * e[0] + Rat(m[0][1]) * e[1];
    AffineForm f2 = Rat(m[1][0]) * e[0] + Rat(m[1][1]) * e[1];
    return weight_from_e(f1, f2);
}

AffineForm pairing(const Weight& v, SignedRoot r) {
    auto e = weight_e_coords(v);
    auto c = coroot_e(r.id);
    AffineForm p = c[0] * e[0] + c[1] * e[1];
    return r.negative ? -p : p;
}

std::vector<RootId> inversion_set(Weyl w) {
    std::vector<RootId> out;
    for (RootId r : all_roots)
        if (weyl_act_root(w, {r, false}).negative) out.push_back(r);
    return out;
}

TorusConj torus_conj(Weyl w) {
    Mat m = mat_of(w);
    TorusConj tc{};
    for (int i = 0; i < 2; ++i) {
        bool found = false;
        for (int j = 0; j < 2; ++j) {
            if (m[i][j] != 0) {
                tc.src[i] = j;
                tc.exp[i] = m[i][j];
                found = true;
            }
        }
        if (!found) throw std::logic_error("degenerate torus action");
    }
    return tc;
}

std::string TorusConj::str() const {
    auto slot = [&](int i) {
        std::string v = src[i] == 0 ? "a" : "b";
        return exp[i] == 1 ? v : v + "^-1";
    };
    return "t(" + slot(0) + "," + slot(1) + ")";
}

} // namespace mp4
