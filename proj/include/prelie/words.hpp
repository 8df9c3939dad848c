#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "prelie/operad.hpp"

namespace prelie {

// Parenthesized binary product over variables x1..xn, each occurring exactly
// once across the leaves. A leaf has var > 0 and no parts; a product has two
// parts. Leaves order before products; both orders are recursive-lexicographic.
struct Word {
    int var = 0;
    std::vector<Word> parts;

    bool is_var() const { return parts.empty(); }
    static Word variable(int k);
    static Word pair(Word l, Word r);

    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }
};

using WordComb = LinComb<Word>;

/// The set of variable indices; throws if any variable repeats.
std::set<int> word_vars(const Word& w);

// Text grammar: word := 'x' integer | '(' word ' ' word ')'
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

/// sigma[k-1] is the image of variable k.
Word apply_perm(const std::vector<int>& sigma, const Word& w);
WordComb apply_perm(const std::vector<int>& sigma, const WordComb& w);

/// ((x1 x2) x3) - (x1 (x2 x3)) - ((x1 x3) x2) + (x1 (x3 x2)).
WordComb relator();
/// The six S3 images of the relator, permutations in lexicographic order.
std::vector<WordComb> relator_orbit();
/// All permutations of {1,..,n} in lexicographic order.
std::vector<std::vector<int>> permutations(int n);

/// The operad morphism on a single word: a leaf maps to its one-vertex tree,
/// a product maps to the label-preserving star of its factors' images.
TreeComb phi_trees(const Word& w);

/// Linear extension; every word must use variables {1,..,n} exactly once.
/// The arity is deduced from the first term (or passed explicitly).
OperadElement phi(const WordComb& w);
OperadElement phi(const WordComb& w, int arity);

enum class UngraftChoice { Smallest, Largest };

/// Inverse of phi up to the relator ideal, by recursion on the root subtrees;
/// the ungrafted subtree is the canonically smallest (or largest) one.
WordComb psi(const RootedTree& t, UngraftChoice choice = UngraftChoice::Smallest);
WordComb psi(const TreeComb& v, UngraftChoice choice = UngraftChoice::Smallest);

struct RoundtripReport {
    int n = 0;
    std::size_t total = 0;
    std::vector<RootedTree> phi_psi_failures;   // trees with phi(psi(T)) != T
    std::vector<RootedTree> choice_mismatches;  // trees where the two ungraft choices
                                                // have different phi images
    bool ok() const { return phi_psi_failures.empty() && choice_mismatches.empty(); }
};

/// Checks phi(psi(T)) = T over all trees of arity n, and that both ungraft
/// choices agree through phi. n <= 5.
RoundtripReport roundtrip_check(int n);

}  // namespace prelie
