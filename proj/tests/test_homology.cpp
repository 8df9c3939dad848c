#include <doctest.h>

#include <random>

#include "prelie/homology.hpp"
#include "test_util.hpp"

using namespace prelie;

namespace {

using Constants = std::vector<std::vector<std::vector<Rational>>>;

Constants zero_constants(std::size_t d) {
    return Constants(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d, Rational(0))));
}

// e*e = e on one weight-0 element
PreLieStructure idempotent_line() {
    auto c = zero_constants(1);
    c[0][0][0] = 1;
    return PreLieStructure::finite_table({"e"}, {0}, c);
}

PreLieStructure abelian_line() {
    return PreLieStructure::finite_table({"e"}, {1}, zero_constants(1));
}

// weights (1,1,2), products of the weight-1 pair land on the top element;
// the grading makes any such table pre-Lie
PreLieStructure graded_table_112(const Rational& a, const Rational& b, const Rational& c,
                                 const Rational& d) {
    auto k = zero_constants(3);
    k[0][0][2] = a;
    k[0][1][2] = b;
    k[1][0][2] = c;
    k[1][1][2] = d;
    return PreLieStructure::finite_table({"u", "v", "w"}, {1, 1, 2}, k);
}

PreLieStructure random_3dim_table(std::mt19937_64& rng) {
    auto coeff = [&] {
        return make_rational(static_cast<long>(testutil::draw(rng, 9)) - 4,
                             1 + static_cast<long>(testutil::draw(rng, 2)));
    };
    if (testutil::draw(rng, 2) == 0) return graded_table_112(coeff(), coeff(), coeff(), coeff());
    // weights (1,2,3): e1*e1 = a e2, e1*e2 = b e3, e2*e1 = c e3
    auto k = zero_constants(3);
    k[0][0][1] = coeff();
    k[0][1][2] = coeff();
    k[1][0][2] = coeff();
    return PreLieStructure::finite_table({"u", "v", "w"}, {1, 2, 3}, k);
}

std::size_t total_rank(const ExactMatrix& m) { return m.rank(); }

}  // namespace

TEST_CASE("finite_table validation") {
    CHECK_NOTHROW(idempotent_line());
    CHECK_NOTHROW(graded_table_112(1, 2, -1, 0));

    // grading violation: product of two weight-1 elements lands on weight 1
    auto bad_grading = zero_constants(2);
    bad_grading[0][0][1] = 1;
    CHECK_THROWS_AS(PreLieStructure::finite_table({"a", "b"}, {1, 1}, bad_grading),
                    std::invalid_argument);

    // graded but not pre-Lie: weights (1,1,2,3) with (e1 e1) e2 != 0 and all
    // competing terms zero
    auto bad = zero_constants(4);
    bad[0][0][2] = 1;  // e1*e1 = e3
    bad[2][1][3] = 1;  // e3*e2 = e4
    CHECK_THROWS_AS(PreLieStructure::finite_table({"a", "b", "c", "d"}, {1, 1, 2, 3}, bad),
                    std::invalid_argument);
}

TEST_CASE("chain basis enumeration") {
    auto abelian = abelian_line();
    auto cb22 = chain_basis(abelian, 2, 2);
    REQUIRE(cb22.size() == 1);
    CHECK(cb22[0] == ChainBasisElement{0, {0}});
    CHECK(chain_basis(abelian, 3, 3).empty());  // wedge of a line squares to zero

    auto free_x = PreLieStructure::free_on({"x"}, 3);
    auto cb23 = chain_basis(free_x, 2, 3);
    REQUIRE(cb23.size() == 2);
    CHECK(cb23[0] == ChainBasisElement{0, {1}});  // x wedge (x (x))
    CHECK(cb23[1] == ChainBasisElement{1, {0}});  // (x (x)) wedge x
}

TEST_CASE("differential single-term example") {
    auto L = idempotent_line();
    auto d2 = differential(L, 2, 0);
    REQUIRE(d2.rows() == 1);
    REQUIRE(d2.cols() == 1);
    CHECK(d2.at(0, 0) == -1);  // d(e tensor e) = -e.e = -e
}

TEST_CASE("differential vanishes for abelian structures") {
    auto abelian3 = PreLieStructure::finite_table({"a", "b", "c"}, {1, 1, 2}, zero_constants(3));
    for (int w = 1; w <= 4; ++w)
        for (int n = 2; n <= 4; ++n) CHECK(differential(abelian3, n, w).is_zero());
}

TEST_CASE("differential matches the hand-expanded degree-3 formula") {
    // u.u = w, u.v = 2w, v.u = -w
    auto L = graded_table_112(1, 2, -1, 0);
    // source: degree 3, weight 3 -> heads of weight 1 with wedge {u, v}
    auto source = chain_basis(L, 3, 3);
    REQUIRE(source.size() == 2);
    REQUIRE(source[0] == ChainBasisElement{0, {0, 1}});  // u tensor u ^ v
    auto target = chain_basis(L, 2, 3);
    REQUIRE(target.size() == 4);
    // targets in order: (u,{w}), (v,{w}), (w,{u}), (w,{v})
    REQUIRE(target[0] == ChainBasisElement{0, {2}});
    REQUIRE(target[1] == ChainBasisElement{1, {2}});
    REQUIRE(target[2] == ChainBasisElement{2, {0}});
    REQUIRE(target[3] == ChainBasisElement{2, {1}});

    auto d = differential(L, 3, 3);
    // d(u ^ u ^ v) = -(u.u) tensor v + (u.v) tensor u + u tensor [u,v]
    //             = -w tensor v + 2 w tensor u + 3 u tensor w
    CHECK(d.at(0, 0) == 3);   // u tensor w
    CHECK(d.at(1, 0) == 0);
    CHECK(d.at(2, 0) == 2);   // w tensor u
    CHECK(d.at(3, 0) == -1);  // w tensor v
}

TEST_CASE("homology of the abelian line") {
    auto table = homology_ranks(abelian_line(), 4, 4);
    CHECK(table.hpl_dim(1, 1) == 1);
    CHECK(table.hpl_dim(2, 2) == 1);
    for (int n = 3; n <= 4; ++n)
        for (int w = 0; w <= 4; ++w) CHECK(table.hpl_dim(n, w) == 0);
    CHECK(table.hpl_dim(1, 2) == 0);
    CHECK(table.hpl_dim(2, 1) == 0);
}

TEST_CASE("homology of the idempotent line vanishes") {
    auto table = homology_ranks(idempotent_line(), 3, 0);
    CHECK(table.hpl_dim(1, 0) == 0);
    CHECK(table.hpl_dim(2, 0) == 0);
    CHECK(table.hpl_dim(3, 0) == 0);
}

TEST_CASE("free pre-Lie homology is concentrated in degree 1") {
    auto one = homology_ranks(PreLieStructure::free_on({"x"}, 5), 5, 5);
    CHECK(one.concentrated_in_degree_one(1));
    CHECK(one.hpl_dim(1, 1) == 1);

    auto two = homology_ranks(PreLieStructure::free_on({"x", "y"}, 4), 4, 4);
    CHECK(two.concentrated_in_degree_one(2));
    CHECK(two.hpl_dim(1, 1) == 2);
    CHECK_FALSE(two.concentrated_in_degree_one(1));
}

TEST_CASE("d o d vanishes on random validated tables") {
    std::mt19937_64 rng(61);
    for (int round = 0; round < 10; ++round) {
        auto L = random_3dim_table(rng);
        int top = 2 * 3 + 2;  // every chain weight lives below twice the top weight
        for (int w = 0; w <= top; ++w)
            for (int n = 2; n <= 4; ++n) {
                auto dn = differential(L, n, w);
                auto dn1 = differential(L, n + 1, w);
                CHECK((dn * dn1).is_zero());
            }
    }
}

TEST_CASE("Euler characteristic agrees between chains and homology") {
    for (const auto& alphabet : {std::vector<std::string>{"x"}, std::vector<std::string>{"x", "y"}}) {
        auto L = PreLieStructure::free_on(alphabet, 4);
        auto table = homology_ranks(L, 5, 4);
        for (int w = 1; w <= 4; ++w) {
            long chain_sum = 0, hpl_sum = 0;
            for (int n = 1; n <= 5; ++n) {
                long sign = (n % 2) ? 1 : -1;
                chain_sum += sign * static_cast<long>(table.chain_dims.at({n, w}));
                hpl_sum += sign * static_cast<long>(table.hpl_dim(n, w));
            }
            CHECK(chain_sum == hpl_sum);
        }
    }
}

TEST_CASE("free structure products outside the cutoff are rejected") {
    auto L = PreLieStructure::free_on({"x"}, 3);
    CHECK(L.dim() == 4);  // weights 1,2,3,3
    CHECK_THROWS_AS(L.product(3, 3), std::out_of_range);
    CHECK(total_rank(differential(L, 2, 3)) > 0);
}
