#include "mp4/root_data.hpp"

#include <doctest.h>

#include <set>

using namespace mp4;

TEST_CASE("basis weights and coordinate frames agree") {
    // a1 = e1 - e2, a2 = 2 e2, a3 = e1 + e2, a4 = 2 e1.
    struct Row {
        const char* name;
        Rat e1, e2;
    };
    for (const Row& r : {Row{"a1", 1, -1}, Row{"a2", 0, 2}, Row{"a3", 1, 1},
                         Row{"a4", 2, 0}, Row{"b1", 1, 0}, Row{"b2", 1, 1}}) {
        Weight w = basis_weight(r.name);
        auto e = weight_e_coords(w);
        CHECK(e[0].value() == r.e1);
        CHECK(e[1].value() == r.e2);
        CHECK(weight_from_e(e[0], e[1]) == w);
    }
    Weight w = basis_weight("a3");
    auto c = weight_simple_coords(w);
    CHECK(c[0].value() == 1);
    CHECK(c[1].value() == 1);
}

TEST_CASE("group structure of the eight Weyl elements") {
    for (Weyl a : all_weyl) {
        CHECK(weyl_mul(a, Weyl::One) == a);
        CHECK(weyl_mul(Weyl::One, a) == a);
        CHECK(weyl_mul(a, weyl_inverse(a)) == Weyl::One);
        CHECK(weyl_from_word(weyl_word(a)) == a);
        CHECK(static_cast<int>(weyl_word(a).size()) == weyl_length(a));
        for (Weyl b : all_weyl) {
            // Composition matches word concatenation.
            std::vector<int> word = weyl_word(a);
            const auto& wb = weyl_word(b);
            word.insert(word.end(), wb.begin(), wb.end());
            CHECK(weyl_from_word(word) == weyl_mul(a, b));
        }
    }
    std::set<Weyl> all(all_weyl.begin(), all_weyl.end());
    CHECK(all.size() == 8);
}

TEST_CASE("reduced words") {
    CHECK(reduced_words(Weyl::One).size() == 1);
    CHECK(reduced_words(Weyl::W12) ==
          std::vector<std::vector<int>>{{1, 2}});
    auto longest = reduced_words(Weyl::W1212);
    CHECK(longest.size() == 2);
    for (const auto& word : longest) CHECK(weyl_from_word(word) == Weyl::W1212);
}

TEST_CASE("inversion sets") {
    auto inv = [](Weyl w) { return inversion_set(w); };
    using V = std::vector<RootId>;
    CHECK(inv(Weyl::One) == V{});
    CHECK(inv(Weyl::W1) == V{RootId::A1});
    CHECK(inv(Weyl::W2) == V{RootId::A2});
    CHECK(inv(Weyl::W12) == V{RootId::A2, RootId::A3});
    CHECK(inv(Weyl::W21) == V{RootId::A1, RootId::A4});
    CHECK(inv(Weyl::W121) == V{RootId::A1, RootId::A3, RootId::A4});
    CHECK(inv(Weyl::W212) == V{RootId::A2, RootId::A3, RootId::A4});
    CHECK(inv(Weyl::W1212) ==
          V{RootId::A1, RootId::A2, RootId::A3, RootId::A4});
    for (Weyl w : all_weyl)
        CHECK(static_cast<int>(inv(w).size()) == weyl_length(w));
}

TEST_CASE("root action respects the weight action") {
    // <w v, w r> = <v, r> for all elements, weights, roots.
    Weight v{AffineForm(Rat(2, 3)), AffineForm(Rat(-1, 5))};
    for (Weyl w : all_weyl) {
        for (RootId r : all_roots) {
            AffineForm lhs = pairing(weyl_act_weight(w, v),
                                     weyl_act_root(w, {r, false}));
            AffineForm rhs = pairing(v, {r, false});
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("pairings with the simple coroots") {
    // <x a1/2 + y a3/2, a1^vee> = x and <., a2^vee> = (y-x)/2.
    Weight v{AffineForm::var("x"), AffineForm::var("y")};
    CHECK(pairing(v, {RootId::A1, false}) == AffineForm::var("x"));
    CHECK(pairing(v, {RootId::A2, false}) ==
          Rat(1, 2) * (AffineForm::var("y") - AffineForm::var("x")));
    CHECK(pairing(v, {RootId::A3, false}) == AffineForm::var("y"));
    CHECK(pairing(v, {RootId::A4, false}) ==
          Rat(1, 2) * (AffineForm::var("x") + AffineForm::var("y")));
    CHECK(pairing(v, {RootId::A1, true}) == Rat(-1) * AffineForm::var("x"));
}

TEST_CASE("torus conjugation matches the root action") {
    CHECK(torus_conj(Weyl::One).str() == "t(a,b)");
    CHECK(torus_conj(Weyl::W1).str() == "t(b,a)");
    CHECK(torus_conj(Weyl::W2).str() == "t(a,b^-1)");
    CHECK(torus_conj(Weyl::W12).str() == "t(b^-1,a)");
    CHECK(torus_conj(Weyl::W1212).str() == "t(a^-1,b^-1)");
}

TEST_CASE("weight rendering") {
    CHECK(Weight{AffineForm(0), AffineForm(1)}.str() == "a3/2");
    CHECK(Weight{AffineForm(1), AffineForm(2)}.str() == "a1/2+a3");
    CHECK(Weight{AffineForm(1), AffineForm(1)}.str() == "a4/2");
    CHECK(Weight{AffineForm(0), AffineForm(0)}.str() == "0");
}
