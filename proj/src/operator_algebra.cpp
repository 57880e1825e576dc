#include "mp4/operator_algebra.hpp"

#include <algorithm>

namespace mp4 {

std::string OpAtom::str() const {
    static const char* heads[3] = {"R", "Rx", "Ry"};
    return std::string(heads[static_cast<int>(kind)]) + "(" + pt.str() + "," +
           weyl_name(w) + ")";
}

std::string op_product_str(const OpProduct& p) {
    if (p.empty()) return "Id";
    std::string out;
    for (const OpAtom& a : p) {
        if (!out.empty()) out += "*";
        out += a.str();
    }
    return out;
}

OpSum OpSum::identity() {
    OpSum s;
    s.terms[OpProduct{}] = Coeff::one();
    return s;
}

OpSum OpSum::atom(OpAtom a) {
    OpSum s;
    s.terms[OpProduct{std::move(a)}] = Coeff::one();
    return s;
}

OpSum& OpSum::operator+=(const OpSum& o) {
    for (const auto& [p, c] : o.terms) {
        Coeff& dst = terms[p];
        dst += c;
        if (dst.is_zero()) terms.erase(p);
    }
    return *this;
}

OpSum operator-(OpSum a, const OpSum& b) { return a += -b; }

OpSum OpSum::operator-() const {
    OpSum r;
    for (const auto& [p, c] : terms) r.terms[p] = -c;
    return r;
}

OpSum operator*(const OpSum& a, const OpSum& b) {
    OpSum r;
    for (const auto& [pa, ca] : a.terms) {
        for (const auto& [pb, cb] : b.terms) {
            OpProduct p = pa;
            p.insert(p.end(), pb.begin(), pb.end());
            Coeff& dst = r.terms[p];
            dst += ca * cb;
            if (dst.is_zero()) r.terms.erase(p);
        }
    }
    return r;
}

OpSum operator*(const Coeff& k, const OpSum& s) {
    OpSum r;
    if (k.is_zero()) return r;
    for (const auto& [p, c] : s.terms) {
        Coeff prod = k * c;
        if (!prod.is_zero()) r.terms[p] = std::move(prod);
    }
    return r;
}

std::string OpSum::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [p, c] : terms) {
        std::string cs = c.str();
        std::string piece;
        if (cs == "1") piece = op_product_str(p);
        else if (cs == "-1") piece = "-" + op_product_str(p);
        else {
            bool paren = cs.find(" + ") != std::string::npos ||
                         cs.find(" - ") != std::string::npos;
            piece = (paren ? "(" + cs + ")" : cs) + "*" + op_product_str(p);
        }
        if (out.empty()) out = piece;
        else if (piece[0] == '-') out += " - " + piece.substr(1);
        else out += " + " + piece;
    }
    return out;
}

std::string OpPoly::str(const std::string& var) const {
    std::string out = c0.str();
    if (order >= 1) {
        std::string c1s = c1.str();
        if (c1s != "0") out += " + (" + c1s + ")*" + var;
    }
    return out + " + O(" + var + "^" + std::to_string(order + 1) + ")";
}

namespace {

Weyl letter_elem(int letter) { return letter == 1 ? Weyl::W1 : Weyl::W2; }

bool on_letter_line(int letter, const Weight& pt) {
    // w1 fixes {x = 0} (the a3 axis), w2 fixes {x = y} (the a4 axis).
    return letter == 1 ? pt.x.is_zero() : pt.x == pt.y;
}

bool axiom_char_ok(const TorusCharacter& c, const RelationSet& rel) {
    return rel.is_trivial(char_mul(c.first, char_inv(c.second))) &&
           rel.is_trivial(char_pow(c.first, 2));
}

TorusCharacter reduced(const TorusCharacter& c, const RelationSet& rel) {
    return {rel.reduce(c.first), rel.reduce(c.second)};
}

std::vector<int> drop_front(const std::vector<int>& w) {
    return {w.begin() + 1, w.end()};
}

std::vector<int> drop_back(const std::vector<int>& w) {
    return {w.begin(), w.end() - 1};
}

} // namespace

AtomNF atom_normal_form(OpAtom a, const RelationSet& rel) {
    a.chr = reduced(a.chr, rel);
    if (a.kind == OpAtom::Kind::Ry) {
        if (a.w == Weyl::W1 && a.pt.x.is_zero() && axiom_char_ok(a.chr, rel))
            return {true, std::nullopt};
        return {false, a};
    }
    if (a.kind == OpAtom::Kind::Rx) return {false, a};
    while (a.w != Weyl::One) {
        bool peeled = false;
        for (const auto& word : reduced_words(a.w)) {
            int lk = word.back();
            if (on_letter_line(lk, a.pt) && axiom_char_ok(a.chr, rel)) {
                a.pt = weyl_act_weight(letter_elem(lk), a.pt); // fixed on the line
                a.chr = reduced(weyl_act_char(letter_elem(lk), a.chr), rel);
                a.w = weyl_from_word(drop_back(word));
                peeled = true;
                break;
            }
            int l1 = word.front();
            Weyl r = weyl_from_word(drop_front(word));
            Weight rp = weyl_act_weight(r, a.pt);
            TorusCharacter rc = reduced(weyl_act_char(r, a.chr), rel);
            if (on_letter_line(l1, rp) && axiom_char_ok(rc, rel)) {
                a.w = r;
                peeled = true;
                break;
            }
        }
        if (!peeled) break;
    }
    if (a.w == Weyl::One) return {false, std::nullopt};
    return {false, a};
}

OpSum apply_axioms(const OpSum& s, const RelationSet& rel) {
    OpSum out;
    for (const auto& [prod, coeff] : s.terms) {
        OpProduct np;
        bool dead = false;
        for (const OpAtom& a : prod) {
            AtomNF nf = atom_normal_form(a, rel);
            if (nf.zero) { dead = true; break; }
            if (nf.atom) np.push_back(std::move(*nf.atom));
        }
        if (dead) continue;
        // Re-merge adjacent factors along the cocycle relation.
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i + 1 < np.size(); ++i) {
                const OpAtom& a = np[i];
                const OpAtom& b = np[i + 1];
                if (a.kind != OpAtom::Kind::R || b.kind != OpAtom::Kind::R)
                    continue;
                Weyl prod_w = weyl_mul(a.w, b.w);
                if (weyl_length(prod_w) != weyl_length(a.w) + weyl_length(b.w))
                    continue;
                if (a.pt != weyl_act_weight(b.w, b.pt)) continue;
                if (a.chr != reduced(weyl_act_char(b.w, b.chr), rel)) continue;
                OpAtom merged{OpAtom::Kind::R, b.pt, b.chr, prod_w};
                AtomNF nf = atom_normal_form(merged, rel);
                np.erase(np.begin() + i, np.begin() + i + 2);
                if (nf.atom) np.insert(np.begin() + i, std::move(*nf.atom));
                changed = true;
                break;
            }
        }
        Coeff& dst = out.terms[np];
        dst += coeff;
        if (dst.is_zero()) out.terms.erase(np);
    }
    return out;
}

OpProduct cocycle_split(const Weight& lambda, const TorusCharacter& tc, Weyl w,
                        const RelationSet& rel, const std::vector<int>* word) {
    const std::vector<int>& letters = word ? *word : weyl_word(w);
    if (weyl_from_word(letters) != w)
        throw std::logic_error("word does not spell the given Weyl element");
    OpProduct out;
    for (size_t i = 0; i < letters.size(); ++i) {
        std::vector<int> suffix(letters.begin() + i + 1, letters.end());
        Weyl rest = weyl_from_word(suffix);
        out.push_back(OpAtom{OpAtom::Kind::R, weyl_act_weight(rest, lambda),
                             reduced(weyl_act_char(rest, tc), rel),
                             letter_elem(letters[i])});
    }
    return out;
}

namespace {

OpPoly poly_mul(const OpPoly& a, const OpPoly& b, int order) {
    OpPoly r;
    r.order = order;
    r.c0 = a.c0 * b.c0;
    if (order >= 1) r.c1 = a.c0 * b.c1 + a.c1 * b.c0;
    return r;
}

// Expansion of a rank-one family whose order-0 term is the identity axiom.
OpPoly rank_one_identity_family(const Weight& base, const Weight& vel,
                                const TorusCharacter& chr, int letter,
                                int order, const RelationSet& rel) {
    OpPoly p;
    p.order = order;
    p.c0 = OpSum::identity();
    if (order >= 1) {
        Weyl lw = letter_elem(letter);
        Rat vx = vel.x.value(), vy = vel.y.value();
        OpSum d;
        if (vx != 0) {
            AtomNF nf = atom_normal_form({OpAtom::Kind::Rx, base, chr, lw}, rel);
            if (!nf.zero && nf.atom)
                d += Coeff::rational(vx) * OpSum::atom(*nf.atom);
        }
        if (vy != 0) {
            AtomNF nf = atom_normal_form({OpAtom::Kind::Ry, base, chr, lw}, rel);
            if (!nf.zero && nf.atom)
                d += Coeff::rational(vy) * OpSum::atom(*nf.atom);
        }
        p.c1 = std::move(d);
    }
    return p;
}

OpPoly expand_family(const Weight& base, const Weight& vel,
                     const TorusCharacter& chr, Weyl w, int order,
                     const RelationSet& rel) {
    if (w == Weyl::One) {
        OpPoly p;
        p.order = order;
        p.c0 = OpSum::identity();
        return p;
    }
    for (const auto& word : reduced_words(w)) {
        // Peel an identity factor off the left end of the word.
        int l1 = word.front();
        Weyl r = weyl_from_word(drop_front(word));
        Weight rbase = weyl_act_weight(r, base);
        TorusCharacter rchr = reduced(weyl_act_char(r, chr), rel);
        if (on_letter_line(l1, rbase) && axiom_char_ok(rchr, rel)) {
            OpPoly factor = rank_one_identity_family(
                rbase, weyl_act_weight(r, vel), rchr, l1, order, rel);
            OpPoly rest = expand_family(base, vel, chr, r, order, rel);
            return poly_mul(factor, rest, order);
        }
        // Or off the right end.
        int lk = word.back();
        if (on_letter_line(lk, base) && axiom_char_ok(chr, rel)) {
            Weyl le = letter_elem(lk);
            OpPoly factor =
                rank_one_identity_family(base, vel, chr, lk, order, rel);
            OpPoly rest = expand_family(base, weyl_act_weight(le, vel),
                                        reduced(weyl_act_char(le, chr), rel),
                                        weyl_from_word(drop_back(word)), order,
                                        rel);
            return poly_mul(rest, factor, order);
        }
    }
    // No factor degenerates: expand the family as a single atom.
    OpPoly p;
    p.order = order;
    AtomNF nf = atom_normal_form({OpAtom::Kind::R, base, chr, w}, rel);
    p.c0 = nf.atom ? OpSum::atom(*nf.atom) : OpSum::identity();
    if (order >= 1) {
        Rat vx = vel.x.value(), vy = vel.y.value();
        OpSum d;
        if (vx != 0) {
            AtomNF dnf = atom_normal_form({OpAtom::Kind::Rx, base, chr, w}, rel);
            if (!dnf.zero && dnf.atom)
                d += Coeff::rational(vx) * OpSum::atom(*dnf.atom);
        }
        if (vy != 0) {
            AtomNF dnf = atom_normal_form({OpAtom::Kind::Ry, base, chr, w}, rel);
            if (!dnf.zero && dnf.atom)
                d += Coeff::rational(vy) * OpSum::atom(*dnf.atom);
        }
        p.c1 = std::move(d);
    }
    return p;
}

} // namespace

OpPoly taylor_expand(const Weight& base, const std::array<Rat, 2>& velocity,
                     const TorusCharacter& tc, Weyl w, int order,
                     const RelationSet& rel) {
    if (order < 0 || order > 1)
        throw UnsupportedCase("operator Taylor expansion beyond order 1");
    if (!base.is_constant())
        throw std::logic_error("taylor_expand needs a rational base point");
    Weight vel{AffineForm(velocity[0]), AffineForm(velocity[1])};
    OpPoly p = expand_family(base, vel, reduced(tc, rel), w, order, rel);
    p.c0 = apply_axioms(p.c0, rel);
    if (order >= 1) p.c1 = apply_axioms(p.c1, rel);
    return p;
}

} // namespace mp4
