#pragma once

#include <optional>

#include "prelie/exact_matrix.hpp"
#include "prelie/words.hpp"

namespace prelie {

// Coordinates over the 12-word basis of the arity-3 component of the free
// operad: ((xi xj) xk) for the six labelings, then (xi (xj xk)).
using F3Vector = std::vector<Rational>;

const std::vector<Word>& f3_basis();
std::size_t f3_index(const Word& w);
F3Vector to_f3(const WordComb& w);
WordComb from_f3(const F3Vector& v);

/// The diagonal signed pairing: <xi(xj xk), same> = sgn(i j k),
/// <(xi xj)xk, same> = -sgn(i j k), distinct basis words pair to zero.
Rational scalar_product(const F3Vector& u, const F3Vector& v);

F3Vector f3_perm_action(const std::vector<int>& sigma, const F3Vector& v);

/// Echelonized basis of the S3-submodule generated by the given vectors.
std::vector<F3Vector> submodule_generated(const std::vector<F3Vector>& gens);

/// Echelonized basis of { v : <b, v> = 0 for all b in the subspace }.
std::vector<F3Vector> annihilator(const std::vector<F3Vector>& subspace);

bool same_span(const std::vector<F3Vector>& a, const std::vector<F3Vector>& b);

struct DualReport {
    std::size_t dim_r = 0;        // expected 3
    std::size_t dim_rprime = 0;   // expected 9
    bool pairing_vanishes = false;
    bool annihilator_matches = false;
    bool ok() const { return dim_r == 3 && dim_rprime == 9 && pairing_vanishes && annihilator_matches; }
};

/// The span R of the pre-Lie relator against the span R' of the dual
/// relations s, t: dimensions, orthogonality, and R' = annihilator(R).
DualReport verify_dual();

/// The generators s, t of R' (associativity defect and argument swap).
WordComb dual_relation_s();
WordComb dual_relation_t();

// Finite-dimensional algebra given by structure constants:
// product[i][j] is the coordinate vector of e_i * e_j.
struct PermTable {
    std::size_t dim;
    std::vector<std::vector<std::vector<Rational>>> product;
};

struct PermCheckResult {
    bool ok = true;
    std::string axiom;           // "associativity" or "right-symmetry"
    std::size_t i = 0, j = 0, k = 0;  // witness triple (0-based) when !ok
};

/// Checks (a b) c = a (b c) and (a b) c = (a c) b on all basis triples; dim <= 6.
PermCheckResult check_perm_axioms(const PermTable& table);

}  // namespace prelie
