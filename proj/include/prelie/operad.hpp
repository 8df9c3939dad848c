#pragma once

#include <vector>

#include "prelie/lincomb.hpp"
#include "prelie/tree.hpp"

namespace prelie {

using TreeComb = LinComb<RootedTree>;

// Element of the arity-n component of the rooted-trees operad: a linear
// combination of trees whose label set is exactly {1,..,n}.
struct OperadElement {
    int arity;
    TreeComb value;

    OperadElement(int n, TreeComb v);
    static OperadElement basis(const RootedTree& t);
    static OperadElement unit();  // the single-vertex tree (1)

    bool operator==(const OperadElement&) const = default;
};

/// T composed with S in slot i. Convention: S's vertices occupy labels
/// {i,..,i+m-1} and T's labels above i shift up by m-1; one summand per map
/// from the incoming edges of vertex i to the vertices of S.
OperadElement compose_at(const OperadElement& T, int i, const OperadElement& S);

/// Full composition, evaluated highest slot first:
/// (..(T o_n args[n-1]) o_{n-1} args[n-2]) .. o_1 args[0].
OperadElement gamma(const OperadElement& T, const std::vector<OperadElement>& args);

/// Grafts the root of b on every vertex of a; b's labels shift up by a.arity.
OperadElement star(const OperadElement& a, const OperadElement& b);

/// Label-preserving grafting sum (the S-module star): no shifting, the basis
/// trees of a and b must have disjoint label sets.
TreeComb star_disjoint(const TreeComb& a, const TreeComb& b);

/// sigma[j-1] is the image of label j; must be a permutation of {1,..,n}.
OperadElement sym_action(const std::vector<int>& sigma, const OperadElement& T);

/// n^(n-1), the dimension of the arity-n component.
Integer rt_dim(int n);

struct DimCheckRow {
    int n;
    Integer formula;
    std::size_t enumerated;
    bool match;
};

/// Formula vs exhaustive enumeration for n = 1..n_max (n_max <= 8).
std::vector<DimCheckRow> dim_check(int n_max);

// Truncated power series with exact rational coefficients; index = order.
using Series = std::vector<Rational>;

/// sum_{n>=1} n^(n-1) (-x)^n / n!, through the given order.
Series rt_poincare_series(int order);
/// -x e^(-x), through the given order.
Series minus_x_exp_minus_x(int order);
/// outer(inner(x)) truncated at the common order; inner must have zero
/// constant term.
Series compose_series(const Series& outer, const Series& inner);

struct SeriesCheckReport {
    int order;
    std::vector<Rational> residuals;  // coefficient of x^k in (g o f)(x) - x, k = 1..order
    bool all_zero() const {
        for (const auto& r : residuals)
            if (r != 0) return false;
        return true;
    }
};

/// Verifies that the Poincare series inverts x -> -x e^(-x) through the given
/// order (1 <= order <= 30).
SeriesCheckReport series_inverse_check(int order);

}  // namespace prelie
