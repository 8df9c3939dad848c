#include <doctest.h>

#include <random>

#include "prelie/operad.hpp"
#include "test_util.hpp"

using namespace prelie;

namespace {

OperadElement basis(const char* text) { return OperadElement::basis(parse_tree(text)); }

TreeComb comb(std::initializer_list<const char*> trees) {
    TreeComb v;
    for (const char* t : trees) v.add_term(parse_tree(t), 1);
    return v;
}

// embeds a into labels offset+1..offset+arity
TreeComb shift_block(const OperadElement& a, int offset) {
    std::map<Label, Label> m;
    for (int k = 1; k <= a.arity; ++k) m.emplace(Label(k), Label(k + offset));
    TreeComb out;
    for (const auto& [t, c] : a.value.terms()) out.add_term(relabel(t, m), c);
    return out;
}

// Lemma-style pre-Lie identity with fixed disjoint label blocks
bool star_prelie_identity(const TreeComb& a, const TreeComb& b, const TreeComb& c) {
    TreeComb lhs = star_disjoint(star_disjoint(a, b), c) - star_disjoint(a, star_disjoint(b, c));
    TreeComb rhs = star_disjoint(star_disjoint(a, c), b) - star_disjoint(a, star_disjoint(c, b));
    return lhs == rhs;
}

}  // namespace

TEST_CASE("compose_at reproduces the four-summand example") {
    auto result = compose_at(basis("(2 (1) (3))"), 2, basis("(1 (2))"));
    CHECK(result.arity == 4);
    CHECK(result.value ==
          comb({"(2 (3 (1) (4)))", "(2 (4) (3 (1)))", "(2 (1) (3 (4)))", "(2 (1) (3) (4))"}));
}

TEST_CASE("compose_at with units") {
    CHECK(compose_at(OperadElement::unit(), 1, basis("(1 (2))")) == basis("(1 (2))"));
    // frozen from listing both maps {one edge} -> {1,2} by hand
    CHECK(compose_at(basis("(1 (2))"), 1, basis("(1 (2))")).value ==
          comb({"(1 (2) (3))", "(1 (2 (3)))"}));
    CHECK_THROWS_AS(compose_at(basis("(1 (2))"), 3, basis("(1)")), std::out_of_range);
    CHECK_THROWS_AS(compose_at(basis("(1 (2))"), 0, basis("(1)")), std::out_of_range);
}

TEST_CASE("gamma evaluates highest slot first") {
    auto unit = OperadElement::unit();
    CHECK(gamma(basis("(1 (2))"), {unit, unit}) == basis("(1 (2))"));
    CHECK(gamma(basis("(1 (2))"), {basis("(1 (2))"), unit}).value == comb({"(1 (2) (3))", "(1 (2 (3)))"}));
    CHECK_THROWS_AS(gamma(basis("(1 (2))"), {unit}), std::invalid_argument);
}

TEST_CASE("gamma on the two-slot tree is star") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 30; ++round) {
        int a = 1 + static_cast<int>(testutil::draw(rng, 3));
        int b = 1 + static_cast<int>(testutil::draw(rng, 3));
        OperadElement t1(a, TreeComb::single(testutil::random_tree_block(rng, 0, a)));
        OperadElement t2(b, TreeComb::single(testutil::random_tree_block(rng, 0, b)));
        CHECK(gamma(basis("(1 (2))"), {t1, t2}) == star(t1, t2));
    }
}

TEST_CASE("star examples") {
    CHECK(star(OperadElement::unit(), OperadElement::unit()) == basis("(1 (2))"));
    CHECK(star(basis("(1 (2))"), OperadElement::unit()).value == comb({"(1 (2 (3)))", "(1 (2) (3))"}));
    auto three = star(basis("(1 (2) (3))"), OperadElement::unit());
    CHECK(three.value.term_count() == 3);
    CHECK(three.value.coeff_sum() == 3);
}

TEST_CASE("sym_action examples") {
    auto t = basis("(1 (2))");
    CHECK(sym_action({1, 2}, t) == t);
    CHECK(sym_action({2, 1}, t) == basis("(2 (1))"));
    CHECK(sym_action({2, 3, 1}, basis("(1 (2) (3))")) == basis("(2 (1) (3))"));
    CHECK_THROWS_AS(sym_action({1, 1}, t), std::invalid_argument);
    CHECK_THROWS_AS(sym_action({1}, t), std::invalid_argument);
}

TEST_CASE("dim_rt") {
    CHECK(rt_dim(1) == 1);
    CHECK(rt_dim(3) == 9);
    CHECK(rt_dim(7) == 117649);
    auto rows = dim_check(4);
    for (const auto& r : rows) CHECK(r.match);
}

TEST_CASE("unit laws hold for every slot") {
    auto unit = OperadElement::unit();
    for (int n = 1; n <= 4; ++n)
        for (const auto& t : enumerate_trees(n)) {
            OperadElement T = OperadElement::basis(t);
            CHECK(compose_at(unit, 1, T) == T);
            for (int i = 1; i <= n; ++i) CHECK(compose_at(T, i, unit) == T);
        }
}

TEST_CASE("sequential associativity") {
    std::mt19937_64 rng(32);
    for (int round = 0; round < 40; ++round) {
        int a = 1 + static_cast<int>(testutil::draw(rng, 3));
        int b = 1 + static_cast<int>(testutil::draw(rng, 3));
        int c = 1 + static_cast<int>(testutil::draw(rng, 3));
        OperadElement T(a, TreeComb::single(testutil::random_tree_block(rng, 0, a)));
        OperadElement U(b, TreeComb::single(testutil::random_tree_block(rng, 0, b)));
        OperadElement V(c, TreeComb::single(testutil::random_tree_block(rng, 0, c)));
        for (int i = 1; i <= a; ++i)
            for (int j = 1; j <= b; ++j)
                CHECK(compose_at(compose_at(T, i, U), i + j - 1, V) == compose_at(T, i, compose_at(U, j, V)));
    }
}

TEST_CASE("parallel slots commute") {
    std::mt19937_64 rng(33);
    for (int round = 0; round < 40; ++round) {
        int a = 2 + static_cast<int>(testutil::draw(rng, 2));  // need two slots
        int b = 1 + static_cast<int>(testutil::draw(rng, 3));
        int c = 1 + static_cast<int>(testutil::draw(rng, 3));
        OperadElement T(a, TreeComb::single(testutil::random_tree_block(rng, 0, a)));
        OperadElement U(b, TreeComb::single(testutil::random_tree_block(rng, 0, b)));
        OperadElement V(c, TreeComb::single(testutil::random_tree_block(rng, 0, c)));
        for (int i = 1; i <= a; ++i)
            for (int j = i + 1; j <= a; ++j)
                CHECK(compose_at(compose_at(T, j, V), i, U) == compose_at(compose_at(T, i, U), j + b - 1, V));
    }
}

TEST_CASE("equivariance of composition") {
    auto arity2 = enumerate_trees(2);
    for (const auto& sigma : permutations(3))
        for (const auto& t : enumerate_trees(3))
            for (const auto& s : arity2)
                for (int i = 1; i <= 3; ++i) {
                    OperadElement T = OperadElement::basis(t);
                    OperadElement S = OperadElement::basis(s);
                    int m = S.arity;
                    // induced permutation on the composed labels
                    std::vector<int> tau(3 + m - 1);
                    for (int j = 1; j <= 3; ++j) {
                        if (j == i) continue;
                        int from = j < i ? j : j + m - 1;
                        int to = sigma[j - 1] < sigma[i - 1] ? sigma[j - 1] : sigma[j - 1] + m - 1;
                        tau[from - 1] = to;
                    }
                    for (int k = 1; k <= m; ++k) tau[i + k - 2] = sigma[i - 1] + k - 1;
                    CHECK(compose_at(sym_action(sigma, T), sigma[i - 1], S) ==
                          sym_action(tau, compose_at(T, i, S)));
                }
}

TEST_CASE("pre-Lie identity for star, exhaustive to total weight 6") {
    std::size_t checked = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                if (a + b + c > 6) continue;
                for (const auto& t1 : enumerate_trees(a))
                    for (const auto& t2 : enumerate_trees(b))
                        for (const auto& t3 : enumerate_trees(c)) {
                            TreeComb A = shift_block(OperadElement::basis(t1), 0);
                            TreeComb B = shift_block(OperadElement::basis(t2), a);
                            TreeComb C = shift_block(OperadElement::basis(t3), a + b);
                            CHECK(star_prelie_identity(A, B, C));
                            ++checked;
                        }
            }
    CHECK(checked == 354);  // sum over arity triples of RT products
}

TEST_CASE("pre-Lie identity for star on random combinations") {
    std::mt19937_64 rng(34);
    for (int round = 0; round < 50; ++round) {
        int a = 1 + static_cast<int>(testutil::draw(rng, 3));
        int b = 1 + static_cast<int>(testutil::draw(rng, 3));
        int c = 1 + static_cast<int>(testutil::draw(rng, 3));
        CHECK(star_prelie_identity(testutil::random_tree_comb(rng, 0, a),
                                   testutil::random_tree_comb(rng, a, b),
                                   testutil::random_tree_comb(rng, a + b, c)));
    }
}

TEST_CASE("composition term count is m^(incoming edges)") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_trees(n))
            for (int m = 1; m <= 3; ++m)
                for (const auto& s : enumerate_trees(m))
                    for (int i = 1; i <= n; ++i) {
                        // incoming edge count of vertex i = child count
                        struct Finder {
                            int target;
                            std::size_t operator()(const RootedTree& u) const {
                                if (u.label == Label(target)) return u.children.size();
                                for (const auto& c : u.children) {
                                    if (auto r = (*this)(c); r != std::size_t(-1)) return r;
                                }
                                return std::size_t(-1);
                            }
                        };
                        std::size_t edges = Finder{i}(t);
                        auto result = compose_at(OperadElement::basis(t), i, OperadElement::basis(s));
                        Integer expected = int_pow(Integer(m), static_cast<unsigned long>(edges));
                        CHECK(Rational(expected) == result.value.coeff_sum());
                        CHECK(Integer(static_cast<unsigned long>(result.value.term_count())) == expected);
                    }
}

TEST_CASE("series check through order 10") {
    auto one = series_inverse_check(1);
    REQUIRE(one.residuals.size() == 1);
    CHECK(one.residuals[0] == 0);

    auto ten = series_inverse_check(10);
    CHECK(ten.all_zero());

    CHECK_THROWS_AS(series_inverse_check(0), std::out_of_range);
    CHECK_THROWS_AS(series_inverse_check(31), std::out_of_range);
}

TEST_CASE("perturbed series no longer inverts") {
    Series g = rt_poincare_series(10);
    g[3] += 1;
    Series h = compose_series(g, minus_x_exp_minus_x(10));
    h[1] -= 1;
    CHECK(h[3] != 0);
}

TEST_CASE("operad element validation") {
    CHECK_THROWS_AS(OperadElement(2, TreeComb::single(parse_tree("(1 (3))"))), std::invalid_argument);
    CHECK_THROWS_AS(OperadElement::basis(parse_tree("(x (y))")), std::invalid_argument);
}
