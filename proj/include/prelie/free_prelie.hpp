#pragma once

#include <string>
#include <vector>

#include "prelie/lincomb.hpp"
#include "prelie/tree.hpp"

namespace prelie {

// Element of the free pre-Lie algebra on an explicit generator alphabet:
// a linear combination of generator-labeled trees, graded by vertex count.
struct FreeElement {
    std::vector<std::string> alphabet;  // sorted, unique
    LinComb<RootedTree> value;

    FreeElement(std::vector<std::string> alphabet_, LinComb<RootedTree> v = {});
    static FreeElement generator(std::vector<std::string> alphabet_, const std::string& g);
    static FreeElement from_tree(std::vector<std::string> alphabet_, const RootedTree& t);

    bool operator==(const FreeElement&) const = default;
};

FreeElement operator+(const FreeElement& a, const FreeElement& b);
FreeElement operator-(const FreeElement& a, const FreeElement& b);
FreeElement operator*(const Rational& c, FreeElement a);

/// The free pre-Lie product: sum over the vertices of a of grafting b's root
/// there. Isomorphic outcomes merge with integer multiplicities.
FreeElement star_free(const FreeElement& a, const FreeElement& b);

/// Induced Lie bracket a*b - b*a.
FreeElement bracket(const FreeElement& a, const FreeElement& b);

/// result[w] = sorted basis trees of weight w, for w = 1..w_max (result[0] empty).
std::vector<std::vector<RootedTree>> basis_up_to_weight(const std::vector<std::string>& alphabet,
                                                        int w_max);

}  // namespace prelie
