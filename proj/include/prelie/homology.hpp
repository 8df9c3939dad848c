#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "prelie/exact_matrix.hpp"
#include "prelie/free_prelie.hpp"

namespace prelie {

// A pre-Lie algebra presented over a weighted basis: either a finite
// structure-constant table (validated for grading and the pre-Lie identity)
// or the free pre-Lie algebra on an alphabet truncated at a weight cutoff.
// Products are weight-homogeneous; for the free variant they are available
// whenever the factor weights sum within the cutoff.
class PreLieStructure {
public:
    using Expansion = std::vector<std::pair<std::size_t, Rational>>;

    /// constants[i][j] is the coordinate vector of e_i * e_j (length = dim).
    static PreLieStructure finite_table(std::vector<std::string> names, std::vector<int> weights,
                                        std::vector<std::vector<std::vector<Rational>>> constants);
    static PreLieStructure free_on(std::vector<std::string> alphabet, int weight_cutoff);

    std::size_t dim() const { return weights_.size(); }
    int weight(std::size_t i) const { return weights_[i]; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::size_t generator_count() const { return generator_count_; }  // 0 for finite tables

    const Expansion& product(std::size_t i, std::size_t j) const;
    Expansion bracket_expand(std::size_t i, std::size_t j) const;

private:
    PreLieStructure() = default;
    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::vector<std::vector<Expansion>> table_;
    std::vector<std::vector<bool>> available_;
    std::size_t generator_count_ = 0;
};

// Basis element of the degree-n chain space: head tensor a strictly
// increasing wedge of n-1 basis indices.
struct ChainBasisElement {
    std::size_t head;
    std::vector<std::size_t> wedge;

    auto operator<=>(const ChainBasisElement&) const = default;
};

/// All chain basis elements of the given degree (>= 1) and total weight,
/// in lexicographic order.
std::vector<ChainBasisElement> chain_basis(const PreLieStructure& L, int degree, int weight);

/// Matrix of the boundary map from degree n to degree n-1 in the weight-w
/// block (rows = target basis, cols = source basis). degree >= 2.
ExactMatrix differential(const PreLieStructure& L, int degree, int weight);

struct HomologyTable {
    int max_degree = 0;
    int max_weight = 0;
    std::map<std::pair<int, int>, std::size_t> chain_dims;  // (degree, weight) -> dim
    std::map<std::pair<int, int>, std::size_t> hpl;         // (degree, weight) -> dim

    std::size_t hpl_dim(int degree, int weight) const {
        auto it = hpl.find({degree, weight});
        return it == hpl.end() ? 0 : it->second;
    }
    /// Homology concentrated in degree 1 with the generators at weight 1.
    bool concentrated_in_degree_one(std::size_t n_generators) const;
};

/// Exact homology dimensions per (degree, weight) block, asserting d o d = 0
/// on every block. Guard: no block may exceed 20000 chain dimensions.
HomologyTable homology_ranks(const PreLieStructure& L, int max_degree, int max_weight);

}  // namespace prelie
