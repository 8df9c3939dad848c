#include "prelie/operad.hpp"

#include <algorithm>

namespace prelie {

OperadElement::OperadElement(int n, TreeComb v) : arity(n), value(std::move(v)) {
    if (n < 1) throw std::invalid_argument("operad arity must be >= 1");
    for (const auto& [t, c] : value.terms())
        if (operad_arity(t) != n)
            throw std::invalid_argument("operad element of arity " + std::to_string(n) +
                                        " contains tree " + format_tree(t));
}

OperadElement OperadElement::basis(const RootedTree& t) {
    int n = operad_arity(t);
    if (n == 0) throw std::invalid_argument("not an operad basis tree: " + format_tree(t));
    return OperadElement(n, TreeComb::single(t));
}

OperadElement OperadElement::unit() { return basis(leaf(1)); }

namespace {

const RootedTree* find_node(const RootedTree& t, const Label& l) {
    if (t.label == l) return &t;
    for (const auto& c : t.children)
        if (const RootedTree* hit = find_node(c, l)) return hit;
    return nullptr;
}

RootedTree replace_subtree(const RootedTree& t, const Label& at, const RootedTree& replacement) {
    if (t.label == at) return replacement;
    std::vector<RootedTree> ch;
    ch.reserve(t.children.size());
    for (const auto& c : t.children) ch.push_back(replace_subtree(c, at, replacement));
    return RootedTree(t.label, std::move(ch));
}

std::map<Label, Label> shift_map(int count, int from, int offset) {
    std::map<Label, Label> m;
    for (int k = from; k <= count; ++k) m.emplace(Label(k), Label(k + offset));
    return m;
}

// all m^k summands of t o_i s for basis trees of arities n and m
void compose_basis(const RootedTree& t, int i, int n, const RootedTree& s, int m, const Rational& coeff,
                   TreeComb& out) {
    std::map<Label, Label> mt;
    for (int j = 1; j <= n; ++j) mt.emplace(Label(j), Label(j <= i ? j : j + m - 1));
    std::map<Label, Label> ms;
    for (int k = 1; k <= m; ++k) ms.emplace(Label(k), Label(k + i - 1));
    RootedTree th = relabel(t, mt);  // vertex i keeps its label for the moment
    RootedTree sh = relabel(s, ms);  // occupies {i,..,i+m-1}

    const RootedTree* slot = find_node(th, Label(i));
    const std::vector<RootedTree> incoming = slot->children;
    std::size_t k = incoming.size();
    // drop vertex i's subtree wholesale; each summand carries it inside `filled`
    const RootedTree stripped = replace_subtree(th, Label(i), RootedTree(Label(i)));

    std::vector<int> digit(k, 0);  // digit[j] in 0..m-1 selects the target vertex
    while (true) {
        RootedTree filled = sh;
        for (std::size_t j = 0; j < k; ++j)
            filled = graft_at_label(filled, Label(i + digit[j]), incoming[j]);
        out.add_term(replace_subtree(stripped, Label(i), filled), coeff);

        std::size_t j = 0;
        while (j < k && digit[j] == m - 1) digit[j++] = 0;
        if (j == k) break;
        ++digit[j];
    }
}

}  // namespace

OperadElement compose_at(const OperadElement& T, int i, const OperadElement& S) {
    if (i < 1 || i > T.arity)
        throw std::out_of_range("compose_at: slot " + std::to_string(i) + " out of range for arity " +
                                std::to_string(T.arity));
    TreeComb out;
    for (const auto& [t, ct] : T.value.terms())
        for (const auto& [s, cs] : S.value.terms()) compose_basis(t, i, T.arity, s, S.arity, ct * cs, out);
    return OperadElement(T.arity + S.arity - 1, std::move(out));
}

OperadElement gamma(const OperadElement& T, const std::vector<OperadElement>& args) {
    if (static_cast<int>(args.size()) != T.arity)
        throw std::invalid_argument("gamma: expected " + std::to_string(T.arity) + " arguments, got " +
                                    std::to_string(args.size()));
    OperadElement result = T;
    for (int slot = T.arity; slot >= 1; --slot) result = compose_at(result, slot, args[slot - 1]);
    return result;
}

TreeComb star_disjoint(const TreeComb& a, const TreeComb& b) {
    TreeComb out;
    for (const auto& [t1, c1] : a.terms())
        for (const auto& [t2, c2] : b.terms())
            for (const auto& [grafted, count] : graft_everywhere(t1, t2))
                out.add_term(grafted, c1 * c2 * Rational(static_cast<long>(count)));
    return out;
}

OperadElement star(const OperadElement& a, const OperadElement& b) {
    auto shift = shift_map(b.arity, 1, a.arity);
    TreeComb shifted;
    for (const auto& [t, c] : b.value.terms()) shifted.add_term(relabel(t, shift), c);
    return OperadElement(a.arity + b.arity, star_disjoint(a.value, shifted));
}

OperadElement sym_action(const std::vector<int>& sigma, const OperadElement& T) {
    int n = T.arity;
    if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("sym_action: permutation size mismatch");
    std::vector<bool> seen(n + 1, false);
    std::map<Label, Label> m;
    for (int j = 1; j <= n; ++j) {
        int img = sigma[j - 1];
        if (img < 1 || img > n || seen[img]) throw std::invalid_argument("sym_action: not a permutation of [n]");
        seen[img] = true;
        m.emplace(Label(j), Label(img));
    }
    TreeComb out;
    for (const auto& [t, c] : T.value.terms()) out.add_term(relabel(t, m), c);
    return OperadElement(n, std::move(out));
}

Integer rt_dim(int n) {
    if (n < 1) throw std::out_of_range("rt_dim: n must be >= 1");
    return int_pow(Integer(n), static_cast<unsigned long>(n - 1));
}

std::vector<DimCheckRow> dim_check(int n_max) {
    std::vector<DimCheckRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        Integer expected = rt_dim(n);
        std::size_t count = enumerate_trees(n).size();
        rows.push_back({n, expected, count, expected == Integer(static_cast<unsigned long>(count))});
    }
    return rows;
}

Series rt_poincare_series(int order) {
    Series g(order + 1, Rational(0));
    for (int n = 1; n <= order; ++n) {
        Rational c(rt_dim(n), factorial(n));
        if (n % 2) c = -c;
        c.canonicalize();
        g[n] = c;
    }
    return g;
}

Series minus_x_exp_minus_x(int order) {
    Series f(order + 1, Rational(0));
    for (int n = 1; n <= order; ++n) {
        Rational c(Integer(1), factorial(n - 1));
        if (n % 2) c = -c;
        c.canonicalize();
        f[n] = c;
    }
    return f;
}

static Series truncated_product(const Series& a, const Series& b, std::size_t order) {
    Series out(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order; ++i) {
        if (i >= a.size() || a[i] == 0) continue;
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (j >= b.size() || b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Series compose_series(const Series& outer, const Series& inner) {
    if (inner.empty() || inner[0] != 0)
        throw std::invalid_argument("compose_series: inner series must have zero constant term");
    std::size_t order = std::min(outer.size(), inner.size()) - 1;
    Series out(order + 1, Rational(0));
    Series power = inner;  // inner^n, truncated
    for (std::size_t n = 1; n <= order; ++n) {
        if (outer[n] != 0)
            for (std::size_t k = 0; k <= order; ++k) out[k] += outer[n] * power[k];
        if (n < order) power = truncated_product(power, inner, order);
    }
    return out;
}

SeriesCheckReport series_inverse_check(int order) {
    if (order < 1 || order > 30) throw std::out_of_range("series_inverse_check: order must be in 1..30");
    Series h = compose_series(rt_poincare_series(order), minus_x_exp_minus_x(order));
    SeriesCheckReport report{order, {}};
    for (int k = 1; k <= order; ++k) {
        Rational r = h[k];
        if (k == 1) r -= 1;
        report.residuals.push_back(r);
    }
    return report;
}

}  // namespace prelie
