#include <doctest.h>

#include <random>

#include "prelie/dual.hpp"
#include "prelie/words.hpp"
#include "test_util.hpp"

using namespace prelie;

namespace {

Word w(const char* text) { return parse_word(text); }

}  // namespace

TEST_CASE("word parse and format") {
    CHECK(format_word(w("((x1 x2) x3)")) == "((x1 x2) x3)");
    CHECK(format_word(w("x12")) == "x12");
    CHECK(w("(x1 (x2 x3))") == Word::pair(Word::variable(1), Word::pair(Word::variable(2), Word::variable(3))));

    auto offset_of = [](const char* text) {
        try {
            parse_word(text);
        } catch (const ParseError& e) {
            return e.offset;
        }
        return std::size_t(-1);
    };
    CHECK(offset_of("(x1 x2") == 6);    // missing ')'
    CHECK(offset_of("x0") == 1);        // bad index
    CHECK(offset_of("(x1x2)") == 3);    // missing space
    CHECK(offset_of("(x1 x2))") == 7);  // trailing input
    CHECK_THROWS_AS(word_vars(w("(x1 x1)")), std::invalid_argument);
}

TEST_CASE("relator is the quoted four-term combination") {
    WordComb r = relator();
    CHECK(r.term_count() == 4);
    CHECK(r.coeff(w("((x1 x2) x3)")) == 1);
    CHECK(r.coeff(w("(x1 (x2 x3))")) == -1);
    CHECK(r.coeff(w("((x1 x3) x2)")) == -1);
    CHECK(r.coeff(w("(x1 (x3 x2))")) == 1);
}

TEST_CASE("relator orbit spans a 3-dimensional submodule") {
    auto orbit = relator_orbit();
    CHECK(orbit.size() == 6);
    CHECK(orbit[0] == relator());  // identity permutation comes first
    std::vector<F3Vector> vecs;
    for (const auto& member : orbit) vecs.push_back(to_f3(member));
    CHECK(submodule_generated({to_f3(relator())}).size() == 3);
    CHECK(submodule_generated(vecs).size() == 3);
}

TEST_CASE("phi on basic words") {
    CHECK(phi(WordComb::single(w("(x1 x2)"))) == OperadElement::basis(parse_tree("(1 (2))")));
    CHECK(phi(WordComb::single(w("(x2 x1)"))) == OperadElement::basis(parse_tree("(2 (1))")));
    auto left_nested = phi(WordComb::single(w("((x1 x2) x3)")));
    TreeComb expected;
    expected.add_term(parse_tree("(1 (2 (3)))"), 1);
    expected.add_term(parse_tree("(1 (2) (3))"), 1);
    CHECK(left_nested.value == expected);
}

TEST_CASE("phi kills the relator and its whole orbit") {
    CHECK(phi(relator(), 3).value.is_zero());
    for (const auto& member : relator_orbit()) CHECK(phi(member, 3).value.is_zero());
}

TEST_CASE("phi is equivariant") {
    std::mt19937_64 rng(41);
    for (int n = 2; n <= 4; ++n) {
        auto perms = permutations(n);
        for (int round = 0; round < 20; ++round) {
            Word word = testutil::random_word(rng, n);
            const auto& sigma = perms[testutil::draw(rng, perms.size())];
            CHECK(phi(WordComb::single(apply_perm(sigma, word))) ==
                  sym_action(sigma, phi(WordComb::single(word))));
        }
    }
}

TEST_CASE("phi sends the product word to the star of the factors") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 25; ++round) {
        int total = 2 + static_cast<int>(testutil::draw(rng, 3));
        int split = 1 + static_cast<int>(testutil::draw(rng, total - 1));
        std::vector<int> left_vars, right_vars;
        for (int v = 1; v <= split; ++v) left_vars.push_back(v);
        for (int v = split + 1; v <= total; ++v) right_vars.push_back(v);
        Word left = testutil::random_word_on(rng, left_vars);
        Word right = testutil::random_word_on(rng, right_vars);
        CHECK(phi_trees(Word::pair(left, right)) == star_disjoint(phi_trees(left), phi_trees(right)));
    }
}

TEST_CASE("psi on small trees") {
    CHECK(psi(parse_tree("(1)")) == WordComb::single(w("x1")));
    CHECK(psi(parse_tree("(1 (2))")) == WordComb::single(w("(x1 x2)")));
    WordComb expected;
    expected.add_term(w("((x1 x3) x2)"), 1);
    expected.add_term(w("(x1 (x3 x2))"), -1);
    CHECK(psi(parse_tree("(1 (2) (3))")) == expected);
}

TEST_CASE("roundtrip for small arities") {
    for (int n = 1; n <= 4; ++n) {
        auto report = roundtrip_check(n);
        CHECK(report.total == enumerate_trees(n).size());
        CHECK(report.ok());
        CHECK(report.phi_psi_failures.empty());
        CHECK(report.choice_mismatches.empty());
    }
    CHECK_THROWS_AS(roundtrip_check(6), std::out_of_range);
}

TEST_CASE("both ungraft choices give phi-equal words") {
    for (const auto& t : enumerate_trees(4)) {
        auto a = psi(t, UngraftChoice::Smallest);
        auto b = psi(t, UngraftChoice::Largest);
        CHECK(phi(a, 4) == phi(b, 4));
    }
}

TEST_CASE("psi extends linearly") {
    TreeComb v;
    v.add_term(parse_tree("(1 (2))"), 2);
    v.add_term(parse_tree("(2 (1))"), -1);
    WordComb expected;
    expected.add_term(w("(x1 x2)"), 2);
    expected.add_term(w("(x2 x1)"), -1);
    CHECK(psi(v) == expected);
}
