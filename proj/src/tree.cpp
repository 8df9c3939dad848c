#include "prelie/tree.hpp"

#include <algorithm>
#include <optional>

namespace prelie {

RootedTree::RootedTree(Label l, std::vector<RootedTree> ch) : label(std::move(l)), children(std::move(ch)) {
    std::sort(children.begin(), children.end());
}

std::strong_ordering operator<=>(const RootedTree& a, const RootedTree& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    return std::lexicographical_compare_three_way(a.children.begin(), a.children.end(),
                                                  b.children.begin(), b.children.end());
}

RootedTree leaf(Label l) { return RootedTree(std::move(l)); }

RootedTree canonicalize(const RootedTree& raw) {
    std::vector<RootedTree> ch;
    ch.reserve(raw.children.size());
    for (const auto& c : raw.children) ch.push_back(canonicalize(c));
    return RootedTree(raw.label, std::move(ch));
}

std::size_t tree_size(const RootedTree& t) {
    std::size_t n = 1;
    for (const auto& c : t.children) n += tree_size(c);
    return n;
}

static void collect_labels(const RootedTree& t, std::multiset<Label>& out) {
    out.insert(t.label);
    for (const auto& c : t.children) collect_labels(c, out);
}

std::multiset<Label> tree_labels(const RootedTree& t) {
    std::multiset<Label> out;
    collect_labels(t, out);
    return out;
}

int operad_arity(const RootedTree& t) {
    auto labels = tree_labels(t);
    int n = static_cast<int>(labels.size());
    for (int k = 1; k <= n; ++k)
        if (labels.count(Label(k)) != 1) return 0;
    return n;
}

static void check_disjoint(const RootedTree& host, const RootedTree& scion) {
    auto a = tree_labels(host);
    auto b = tree_labels(scion);
    // collision checks only apply when both trees are in distinct-label mode
    if (a.size() != std::set<Label>(a.begin(), a.end()).size()) return;
    if (b.size() != std::set<Label>(b.begin(), b.end()).size()) return;
    for (const auto& l : b)
        if (a.count(l)) {
            if (l.is_int())
                throw std::invalid_argument("label collision grafting distinct-label trees: " + l.text());
            return;  // generator labels repeat freely
        }
}

static std::optional<RootedTree> graft_preorder(const RootedTree& t, std::size_t at, std::size_t& counter,
                                                const RootedTree& scion) {
    ++counter;
    if (counter == at) {
        auto ch = t.children;
        ch.push_back(scion);
        return RootedTree(t.label, std::move(ch));
    }
    for (std::size_t k = 0; k < t.children.size(); ++k) {
        if (auto sub = graft_preorder(t.children[k], at, counter, scion)) {
            auto ch = t.children;
            ch[k] = std::move(*sub);
            return RootedTree(t.label, std::move(ch));
        }
    }
    return std::nullopt;
}

RootedTree graft(const RootedTree& host, std::size_t at, const RootedTree& scion) {
    check_disjoint(host, scion);
    std::size_t counter = 0;
    auto result = graft_preorder(host, at, counter, scion);
    if (!result) throw std::out_of_range("graft: vertex position " + std::to_string(at) + " out of range");
    return *result;
}

static std::optional<RootedTree> graft_label_impl(const RootedTree& t, const Label& at, const RootedTree& scion) {
    if (t.label == at) {
        auto ch = t.children;
        ch.push_back(scion);
        return RootedTree(t.label, std::move(ch));
    }
    for (std::size_t k = 0; k < t.children.size(); ++k) {
        if (auto sub = graft_label_impl(t.children[k], at, scion)) {
            auto ch = t.children;
            ch[k] = std::move(*sub);
            return RootedTree(t.label, std::move(ch));
        }
    }
    return std::nullopt;
}

RootedTree graft_at_label(const RootedTree& host, const Label& at, const RootedTree& scion) {
    auto result = graft_label_impl(host, at, scion);
    if (!result) throw std::out_of_range("graft_at_label: no vertex labeled " + at.text());
    return *result;
}

std::vector<TreeMultiplicity> graft_everywhere(const RootedTree& host, const RootedTree& scion) {
    std::map<RootedTree, std::size_t> acc;
    std::size_t n = tree_size(host);
    for (std::size_t v = 1; v <= n; ++v) ++acc[graft(host, v, scion)];
    std::vector<TreeMultiplicity> out;
    out.reserve(acc.size());
    for (auto& [t, c] : acc) out.push_back({t, c});
    return out;
}

RootedTree relabel(const RootedTree& t, const std::map<Label, Label>& map) {
    auto labels = tree_labels(t);
    std::set<Label> images;
    for (const auto& l : std::set<Label>(labels.begin(), labels.end())) {
        auto it = map.find(l);
        if (it == map.end()) throw std::invalid_argument("relabel: map not defined on label " + l.text());
        if (!images.insert(it->second).second)
            throw std::invalid_argument("relabel: map not injective at image " + it->second.text());
    }
    struct Walk {
        const std::map<Label, Label>& m;
        RootedTree operator()(const RootedTree& u) const {
            std::vector<RootedTree> ch;
            ch.reserve(u.children.size());
            for (const auto& c : u.children) ch.push_back((*this)(c));
            return RootedTree(m.at(u.label), std::move(ch));
        }
    };
    return Walk{map}(t);
}

namespace {

struct TreeParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    Label parse_label() {
        char c = peek();
        if (c >= '1' && c <= '9') {
            std::size_t start = pos;
            while (peek() >= '0' && peek() <= '9') ++pos;
            return Label(std::stoi(std::string(text.substr(start, pos - start))));
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            std::size_t start = pos;
            auto ident = [](char x) {
                return (x >= 'a' && x <= 'z') || (x >= 'A' && x <= 'Z') || (x >= '0' && x <= '9') || x == '_';
            };
            while (ident(peek())) ++pos;
            return Label(std::string(text.substr(start, pos - start)));
        }
        fail("expected label");
    }

    RootedTree parse_node() {
        expect('(');
        Label l = parse_label();
        std::vector<RootedTree> children;
        while (peek() == ' ') {
            ++pos;
            children.push_back(parse_node());
        }
        expect(')');
        return RootedTree(std::move(l), std::move(children));
    }

    RootedTree run() {
        RootedTree t = parse_node();
        if (pos != text.size()) fail("trailing input");
        return t;
    }
};

}  // namespace

RootedTree parse_tree(std::string_view text) { return TreeParser{text}.run(); }

std::string format_tree(const RootedTree& t) {
    std::string out = "(" + t.label.text();
    for (const auto& c : t.children) {
        out += ' ';
        out += format_tree(c);
    }
    out += ')';
    return out;
}

namespace {

// parent[v] in 1..n for non-root vertices; checks the digraph v -> parent[v]
// is acyclic into the root
bool is_tree(int n, int root, const std::vector<int>& parent) {
    for (int v = 1; v <= n; ++v) {
        if (v == root) continue;
        int u = v;
        int steps = 0;
        while (u != root) {
            u = parent[u];
            if (++steps > n) return false;
        }
    }
    return true;
}

RootedTree build_from_parents(int n, int root, const std::vector<int>& parent) {
    std::vector<std::vector<int>> children(n + 1);
    for (int v = 1; v <= n; ++v)
        if (v != root) children[parent[v]].push_back(v);
    struct Build {
        const std::vector<std::vector<int>>& ch;
        RootedTree operator()(int v) const {
            std::vector<RootedTree> sub;
            sub.reserve(ch[v].size());
            for (int c : ch[v]) sub.push_back((*this)(c));
            return RootedTree(Label(v), std::move(sub));
        }
    };
    return Build{children}(root);
}

}  // namespace

std::vector<RootedTree> enumerate_trees(int n) {
    if (n < 1 || n > 8) throw std::out_of_range("enumerate_trees: n must be in 1..8");
    std::vector<RootedTree> out;
    std::vector<int> parent(n + 1, 0);
    for (int root = 1; root <= n; ++root) {
        std::vector<int> slots;  // vertices other than the root
        for (int v = 1; v <= n; ++v)
            if (v != root) slots.push_back(v);
        // odometer over parent assignments slots -> {1..n}
        std::vector<int> digit(slots.size(), 1);
        while (true) {
            for (std::size_t k = 0; k < slots.size(); ++k) parent[slots[k]] = digit[k];
            if (is_tree(n, root, parent)) out.push_back(build_from_parents(n, root, parent));
            std::size_t k = 0;
            while (k < slots.size() && digit[k] == n) digit[k++] = 1;
            if (k == slots.size()) break;
            ++digit[k];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RootedTree> enumerate_gen_trees(const std::vector<std::string>& generators, int weight) {
    if (generators.empty()) throw std::invalid_argument("enumerate_gen_trees: empty generator list");
    if (weight < 1 || weight > 8) throw std::out_of_range("enumerate_gen_trees: weight must be in 1..8");
    std::set<RootedTree> level;
    for (const auto& g : generators) level.insert(leaf(g));
    for (int w = 2; w <= weight; ++w) {
        // every tree of weight w arises by grafting a leaf somewhere on a
        // tree of weight w-1
        std::set<RootedTree> next;
        for (const auto& t : level)
            for (const auto& g : generators)
                for (const auto& [grafted, count] : graft_everywhere(t, leaf(g))) next.insert(grafted);
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

}  // namespace prelie
