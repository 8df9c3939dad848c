#pragma once

#include <map>
#include <string>
#include <vector>

#include "prelie/free_prelie.hpp"

namespace prelie {

// A PBW monomial is a nondecreasing sequence of basis indices of the
// underlying Lie algebra of the free pre-Lie algebra; the empty sequence is
// the unit of the enveloping algebra.
using PBWMonomial = std::vector<std::size_t>;
using UElement = LinComb<PBWMonomial>;

// Basis bookkeeping for the enveloping algebra of L_Lie, L free on an
// alphabet: trees ordered by (weight, canonical encoding), all arithmetic
// confined to a fixed weight cutoff so nothing is ever truncated.
class EnvelopingContext {
public:
    EnvelopingContext(std::vector<std::string> alphabet, int weight_cutoff);

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    int cutoff() const { return cutoff_; }
    const std::vector<RootedTree>& basis() const { return basis_; }
    std::size_t index_of(const RootedTree& t) const;
    int weight(std::size_t i) const { return weights_[i]; }
    int weight(const PBWMonomial& m) const;
    FreeElement tree_element(std::size_t i) const;
    FreeElement expand(const LinComb<RootedTree>& v) const { return FreeElement(alphabet_, v); }

    /// [b_i, b_j] expanded over the tree basis; requires the weights to sum
    /// within the cutoff.
    const std::vector<std::pair<std::size_t, Rational>>& bracket_of(std::size_t i, std::size_t j) const;

private:
    std::vector<std::string> alphabet_;
    int cutoff_;
    std::vector<RootedTree> basis_;
    std::vector<int> weights_;
    std::map<RootedTree, std::size_t> index_;
    mutable std::map<std::pair<std::size_t, std::size_t>,
                     std::vector<std::pair<std::size_t, Rational>>>
        bracket_cache_;
};

enum class RewriteStrategy { FirstDescent, LastDescent };

/// Straightens a word of basis indices into the PBW basis by rewriting
/// adjacent out-of-order pairs b_i b_j (i > j) to b_j b_i + [b_i, b_j].
/// The result is independent of the strategy picking which descent to
/// rewrite first.
UElement pbw_normalize(const EnvelopingContext& ctx, const PBWMonomial& word,
                       RewriteStrategy strategy = RewriteStrategy::FirstDescent);
UElement pbw_normalize(const EnvelopingContext& ctx, const UElement& u,
                       RewriteStrategy strategy = RewriteStrategy::FirstDescent);

/// Product in the enveloping algebra: concatenation followed by straightening.
UElement u_mul(const EnvelopingContext& ctx, const UElement& a, const UElement& b);

/// Iterated pre-Lie action of each monomial factor, left to right.
FreeElement right_action(const EnvelopingContext& ctx, const FreeElement& l, const UElement& u);

struct ModuleElement {
    std::string generator;
    UElement u;

    bool operator==(const ModuleElement&) const = default;
};

/// The module-to-algebra map v tensor u -> (one-vertex tree of v) . u.
FreeElement psi_map(const EnvelopingContext& ctx, const ModuleElement& m);

/// The pre-Lie product on V tensor U: (v,u)*(v',u') = (v, u (psi(v',u'))),
/// the appended factors straightened into the PBW basis.
ModuleElement module_product(const EnvelopingContext& ctx, const ModuleElement& a,
                             const ModuleElement& b);

/// All PBW monomials of the given total weight, lexicographic order.
std::vector<PBWMonomial> pbw_monomials_of_weight(const EnvelopingContext& ctx, int w);

/// Number of basis trees of the given weight over n_generators, by the
/// recursive multiset count (no tree enumeration).
Integer gen_tree_count(std::size_t n_generators, int weight);

/// Number of multisets of basis trees with the given total weight.
Integer forest_count(std::size_t n_generators, int weight);

struct FreenessRow {
    int weight = 0;
    std::size_t tree_dim = 0;    // dim L_w by enumeration
    std::size_t module_dim = 0;  // #generators x #monomials of weight w-1
    Integer tree_count_oracle;   // recursive count
    Integer module_count_oracle; // #generators x forest count
    std::size_t rank = 0;
    bool square = false;
    bool invertible = false;
    bool oracles_match = false;
    bool ok() const { return square && invertible && oracles_match; }
};

struct FreenessReport {
    std::vector<FreenessRow> rows;
    bool ok() const {
        for (const auto& r : rows)
            if (!r.ok()) return false;
        return !rows.empty();
    }
};

/// Per weight w <= max_weight, the matrix of psi_map from the (generator,
/// PBW monomial of weight w-1) basis to the tree basis of weight w must be
/// square and invertible. Guards: max_weight <= 7 (one generator), <= 5
/// (two), <= 4 (more).
FreenessReport check_freeness(const std::vector<std::string>& alphabet, int max_weight);

struct StrategyCheckReport {
    std::size_t total = 0;
    std::size_t mismatches = 0;
    bool ok() const { return total > 0 && mismatches == 0; }
};

/// Normalizes seeded random words under both rewrite strategies and counts
/// disagreements (there must be none).
StrategyCheckReport pbw_strategy_check(const EnvelopingContext& ctx, std::size_t words,
                                       unsigned long seed);

std::string format_monomial(const EnvelopingContext& ctx, const PBWMonomial& m);

}  // namespace prelie
