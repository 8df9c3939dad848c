#include "prelie/enveloping.hpp"

#include <algorithm>
#include <random>

#include "prelie/exact_matrix.hpp"

namespace prelie {

EnvelopingContext::EnvelopingContext(std::vector<std::string> alphabet, int weight_cutoff)
    : cutoff_(weight_cutoff) {
    if (weight_cutoff < 1 || weight_cutoff > 8)
        throw std::out_of_range("enveloping context: weight cutoff must be in 1..8");
    auto levels = basis_up_to_weight(alphabet, weight_cutoff);
    for (int w = 1; w <= weight_cutoff; ++w)
        for (const auto& t : levels[w]) {
            index_.emplace(t, basis_.size());
            basis_.push_back(t);
            weights_.push_back(w);
        }
    for (const auto& t : levels[1]) alphabet_.push_back(t.label.as_symbol());
}

std::size_t EnvelopingContext::index_of(const RootedTree& t) const {
    auto it = index_.find(t);
    if (it == index_.end())
        throw std::out_of_range("tree " + format_tree(t) + " outside the weight cutoff");
    return it->second;
}

int EnvelopingContext::weight(const PBWMonomial& m) const {
    int w = 0;
    for (std::size_t i : m) w += weights_[i];
    return w;
}

FreeElement EnvelopingContext::tree_element(std::size_t i) const {
    return FreeElement::from_tree(alphabet_, basis_[i]);
}

const std::vector<std::pair<std::size_t, Rational>>& EnvelopingContext::bracket_of(std::size_t i,
                                                                                   std::size_t j) const {
    auto key = std::make_pair(i, j);
    auto it = bracket_cache_.find(key);
    if (it != bracket_cache_.end()) return it->second;
    if (weights_[i] + weights_[j] > cutoff_)
        throw std::out_of_range("bracket exceeds the weight cutoff");
    FreeElement b = bracket(tree_element(i), tree_element(j));
    std::vector<std::pair<std::size_t, Rational>> e;
    for (const auto& [t, c] : b.value.terms()) e.emplace_back(index_of(t), c);
    return bracket_cache_.emplace(key, std::move(e)).first->second;
}

UElement pbw_normalize(const EnvelopingContext& ctx, const PBWMonomial& word, RewriteStrategy strategy) {
    if (ctx.weight(word) > ctx.cutoff())
        throw std::out_of_range("pbw_normalize: word weight exceeds the cutoff");
    UElement result;
    std::vector<std::pair<PBWMonomial, Rational>> work{{word, Rational(1)}};
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();

        std::size_t descent = m.size();  // position d with m[d] > m[d+1]
        if (strategy == RewriteStrategy::FirstDescent) {
            for (std::size_t d = 0; d + 1 < m.size(); ++d)
                if (m[d] > m[d + 1]) {
                    descent = d;
                    break;
                }
        } else {
            for (std::size_t d = m.size(); d-- > 1;)
                if (m[d - 1] > m[d]) {
                    descent = d - 1;
                    break;
                }
        }
        if (descent == m.size()) {
            result.add_term(m, c);
            continue;
        }

        PBWMonomial swapped = m;
        std::swap(swapped[descent], swapped[descent + 1]);
        work.emplace_back(std::move(swapped), c);
        for (const auto& [k, cb] : ctx.bracket_of(m[descent], m[descent + 1])) {
            PBWMonomial shorter;
            shorter.reserve(m.size() - 1);
            shorter.insert(shorter.end(), m.begin(), m.begin() + static_cast<std::ptrdiff_t>(descent));
            shorter.push_back(k);
            shorter.insert(shorter.end(), m.begin() + static_cast<std::ptrdiff_t>(descent) + 2, m.end());
            work.emplace_back(std::move(shorter), c * cb);
        }
    }
    return result;
}

UElement pbw_normalize(const EnvelopingContext& ctx, const UElement& u, RewriteStrategy strategy) {
    UElement out;
    for (const auto& [m, c] : u.terms()) out += c * pbw_normalize(ctx, m, strategy);
    return out;
}

UElement u_mul(const EnvelopingContext& ctx, const UElement& a, const UElement& b) {
    UElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            PBWMonomial concat = ma;
            concat.insert(concat.end(), mb.begin(), mb.end());
            out += (ca * cb) * pbw_normalize(ctx, concat);
        }
    return out;
}

FreeElement right_action(const EnvelopingContext& ctx, const FreeElement& l, const UElement& u) {
    int l_weight = 0;
    for (const auto& [t, c] : l.value.terms())
        l_weight = std::max(l_weight, static_cast<int>(tree_size(t)));
    FreeElement acc(ctx.alphabet());
    for (const auto& [m, c] : u.terms()) {
        if (l_weight + ctx.weight(m) > ctx.cutoff())
            throw std::out_of_range("right_action: weight exceeds the cutoff");
        FreeElement cur = l;
        for (std::size_t i : m) cur = star_free(cur, ctx.tree_element(i));
        acc = acc + c * cur;
    }
    return acc;
}

FreeElement psi_map(const EnvelopingContext& ctx, const ModuleElement& m) {
    return right_action(ctx, FreeElement::generator(ctx.alphabet(), m.generator), m.u);
}

ModuleElement module_product(const EnvelopingContext& ctx, const ModuleElement& a, const ModuleElement& b) {
    FreeElement z = psi_map(ctx, b);
    UElement out;
    for (const auto& [ma, ca] : a.u.terms())
        for (const auto& [t, cz] : z.value.terms()) {
            PBWMonomial word = ma;
            word.push_back(ctx.index_of(t));
            out += (ca * cz) * pbw_normalize(ctx, word);
        }
    return {a.generator, std::move(out)};
}

std::vector<PBWMonomial> pbw_monomials_of_weight(const EnvelopingContext& ctx, int w) {
    std::vector<PBWMonomial> out;
    PBWMonomial acc;
    auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (std::size_t i = start; i < ctx.basis().size(); ++i) {
            if (ctx.weight(i) > remaining) continue;
            acc.push_back(i);
            self(self, i, remaining - ctx.weight(i));  // nondecreasing: i may repeat
            acc.pop_back();
        }
    };
    rec(rec, 0, w);
    return out;
}

namespace {

// counts of trees per weight plus multiset ("forest") counts, by the
// standard multiset recursion; independent of any enumeration
struct Counts {
    std::vector<Integer> trees;    // trees[w], w >= 1
    std::vector<Integer> forests;  // forests[m], m >= 0
};

Counts compute_counts(std::size_t k, int max_weight) {
    Counts c;
    c.trees.assign(max_weight + 1, Integer(0));
    c.forests.assign(max_weight + 1, Integer(0));
    c.forests[0] = 1;
    for (int w = 1; w <= max_weight; ++w) {
        c.trees[w] = Integer(static_cast<unsigned long>(k)) * c.forests[w - 1];
        // forests of total weight w from trees of weight <= w
        std::vector<Integer> dp(w + 1, Integer(0));
        dp[0] = 1;
        for (int j = 1; j <= w; ++j) {
            std::vector<Integer> next(w + 1, Integer(0));
            for (int m = 0; m <= w; ++m) {
                if (dp[m] == 0) continue;
                for (int r = 0; m + r * j <= w; ++r)
                    next[m + r * j] += dp[m] * binomial(c.trees[j] + r - 1, static_cast<unsigned long>(r));
            }
            dp = std::move(next);
        }
        c.forests[w] = dp[w];
    }
    return c;
}

}  // namespace

Integer gen_tree_count(std::size_t n_generators, int weight) {
    if (weight < 1) throw std::out_of_range("gen_tree_count: weight must be >= 1");
    return compute_counts(n_generators, weight).trees[weight];
}

Integer forest_count(std::size_t n_generators, int weight) {
    if (weight < 0) throw std::out_of_range("forest_count: weight must be >= 0");
    return compute_counts(n_generators, std::max(weight, 1)).forests[weight];
}

FreenessReport check_freeness(const std::vector<std::string>& alphabet, int max_weight) {
    EnvelopingContext ctx(alphabet, max_weight);
    std::size_t k = ctx.alphabet().size();
    int guard = k == 1 ? 7 : (k == 2 ? 5 : 4);
    if (max_weight > guard)
        throw std::out_of_range("check_freeness: max weight " + std::to_string(max_weight) +
                                " exceeds the guard for " + std::to_string(k) + " generators");

    FreenessReport report;
    for (int w = 1; w <= max_weight; ++w) {
        FreenessRow row;
        row.weight = w;

        auto trees = enumerate_gen_trees(ctx.alphabet(), w);
        std::map<RootedTree, std::size_t> tree_index;
        for (std::size_t r = 0; r < trees.size(); ++r) tree_index.emplace(trees[r], r);
        row.tree_dim = trees.size();

        auto monos = pbw_monomials_of_weight(ctx, w - 1);
        row.module_dim = k * monos.size();

        row.tree_count_oracle = gen_tree_count(k, w);
        row.module_count_oracle = Integer(static_cast<unsigned long>(k)) * forest_count(k, w - 1);
        row.oracles_match = row.tree_count_oracle == Integer(static_cast<unsigned long>(row.tree_dim)) &&
                            row.module_count_oracle == Integer(static_cast<unsigned long>(row.module_dim));

        ExactMatrix mat(row.tree_dim, row.module_dim);
        std::size_t col = 0;
        for (const auto& g : ctx.alphabet())
            for (const auto& mono : monos) {
                FreeElement image = psi_map(ctx, {g, UElement::single(mono)});
                for (const auto& [t, c] : image.value.terms()) mat.at(tree_index.at(t), col) = c;
                ++col;
            }
        row.square = row.tree_dim == row.module_dim;
        row.rank = mat.rank();
        row.invertible = row.square && row.rank == row.tree_dim;
        report.rows.push_back(std::move(row));
    }
    return report;
}

StrategyCheckReport pbw_strategy_check(const EnvelopingContext& ctx, std::size_t words,
                                       unsigned long seed) {
    std::mt19937_64 rng(seed);
    StrategyCheckReport report;
    std::size_t n = ctx.basis().size();
    while (report.total < words) {
        std::size_t len = 1 + rng() % 5;
        PBWMonomial word(len);
        for (auto& i : word) i = rng() % n;
        if (ctx.weight(word) > ctx.cutoff()) continue;  // resample
        ++report.total;
        if (pbw_normalize(ctx, word, RewriteStrategy::FirstDescent) !=
            pbw_normalize(ctx, word, RewriteStrategy::LastDescent))
            ++report.mismatches;
    }
    return report;
}

std::string format_monomial(const EnvelopingContext& ctx, const PBWMonomial& m) {
    if (m.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += '.';
        out += format_tree(ctx.basis()[m[i]]);
    }
    return out;
}

}  // namespace prelie
