#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace prelie {

/// Thrown by the text parsers; `offset` is the byte position of the error.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t offset_)
        : std::runtime_error(msg + " at byte " + std::to_string(offset_)), offset(offset_) {}
    std::size_t offset;
};

// Vertex label: a positive integer (operad slot) or a generator symbol.
// Integer labels order before symbols; within a kind, by value.
class Label {
public:
    explicit Label(int n) : value_(n) {
        if (n < 1) throw std::invalid_argument("integer label must be >= 1");
    }
    explicit Label(std::string symbol) : value_(std::move(symbol)) {
        const auto& s = std::get<std::string>(value_);
        if (s.empty()) throw std::invalid_argument("empty label");
    }

    bool is_int() const { return value_.index() == 0; }
    int as_int() const { return std::get<int>(value_); }
    const std::string& as_symbol() const { return std::get<std::string>(value_); }
    std::string text() const { return is_int() ? std::to_string(as_int()) : as_symbol(); }

    auto operator<=>(const Label&) const = default;

private:
    std::variant<int, std::string> value_;
};

// Canonical rooted tree: children of every node are sorted ascending by the
// recursive (label, children) encoding, so structural equality is value
// equality. All operations below return canonical trees.
struct RootedTree {
    Label label;
    std::vector<RootedTree> children;

    explicit RootedTree(Label l, std::vector<RootedTree> ch = {});

    friend std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b);
    friend bool operator==(const RootedTree& a, const RootedTree& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }
};

struct TreeMultiplicity {
    RootedTree tree;
    std::size_t count;  // >= 1
};

RootedTree leaf(Label l);
inline RootedTree leaf(int n) { return leaf(Label(n)); }
inline RootedTree leaf(const std::string& s) { return leaf(Label(s)); }

/// Recursively sorts children; idempotent. The unique representative of a
/// tree under reordering of siblings.
RootedTree canonicalize(const RootedTree& raw);

std::size_t tree_size(const RootedTree& t);
std::multiset<Label> tree_labels(const RootedTree& t);

/// Labels are distinct integers forming exactly {1,..,n}; returns n, or 0 if not.
int operad_arity(const RootedTree& t);

/// Appends scion as a new child of the vertex with the given 1-based preorder
/// index (root = 1). Throws std::out_of_range for an invalid position and
/// std::invalid_argument on a label collision between distinct-label trees.
RootedTree graft(const RootedTree& host, std::size_t at, const RootedTree& scion);

/// Grafts at the unique vertex carrying `at`; host labels must be distinct.
RootedTree graft_at_label(const RootedTree& host, const Label& at, const RootedTree& scion);

/// One graft per vertex of host, isomorphic results collapsed with counts.
std::vector<TreeMultiplicity> graft_everywhere(const RootedTree& host, const RootedTree& scion);

/// Applies a label map to every vertex. The map must cover every label of t
/// and be injective on them.
RootedTree relabel(const RootedTree& t, const std::map<Label, Label>& map);

// Text grammar (byte-exact):
//   tree  := '(' label (' ' tree)* ')'
//   label := [1-9][0-9]* | [a-zA-Z][a-zA-Z0-9_]*
RootedTree parse_tree(std::string_view text);
std::string format_tree(const RootedTree& t);

/// All canonical rooted trees on label set {1,..,n}, sorted; |result| = n^(n-1).
/// Generated by filtering acyclic parent functions. 1 <= n <= 8.
std::vector<RootedTree> enumerate_trees(int n);

/// All canonical trees with `weight` vertices labeled from `generators`,
/// distinct up to label-preserving isomorphism, sorted. 1 <= weight <= 8.
std::vector<RootedTree> enumerate_gen_trees(const std::vector<std::string>& generators, int weight);

}  // namespace prelie
