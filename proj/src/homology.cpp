#include "prelie/homology.hpp"

#include <algorithm>

namespace prelie {

namespace {

using Expansion = PreLieStructure::Expansion;

Expansion scale(const Expansion& e, const Rational& c) {
    Expansion out;
    for (const auto& [k, v] : e) out.emplace_back(k, v * c);
    return out;
}

// sum of expansions, combining indices and dropping zeros
Expansion combine(std::vector<Expansion> parts) {
    std::map<std::size_t, Rational> acc;
    for (const auto& part : parts)
        for (const auto& [k, v] : part) {
            auto [it, inserted] = acc.emplace(k, v);
            if (!inserted) it->second += v;
        }
    Expansion out;
    for (const auto& [k, v] : acc)
        if (v != 0) out.emplace_back(k, v);
    return out;
}

}  // namespace

PreLieStructure PreLieStructure::finite_table(std::vector<std::string> names, std::vector<int> weights,
                                              std::vector<std::vector<std::vector<Rational>>> constants) {
    std::size_t d = names.size();
    if (weights.size() != d || constants.size() != d)
        throw std::invalid_argument("finite_table: inconsistent dimensions");
    for (int w : weights)
        if (w < 0) throw std::invalid_argument("finite_table: negative weight");

    PreLieStructure L;
    L.names_ = std::move(names);
    L.weights_ = std::move(weights);
    L.table_.assign(d, std::vector<Expansion>(d));
    L.available_.assign(d, std::vector<bool>(d, true));
    for (std::size_t i = 0; i < d; ++i) {
        if (constants[i].size() != d) throw std::invalid_argument("finite_table: inconsistent dimensions");
        for (std::size_t j = 0; j < d; ++j) {
            if (constants[i][j].size() != d)
                throw std::invalid_argument("finite_table: inconsistent dimensions");
            for (std::size_t k = 0; k < d; ++k) {
                const Rational& c = constants[i][j][k];
                if (c == 0) continue;
                if (L.weights_[k] != L.weights_[i] + L.weights_[j])
                    throw std::invalid_argument("finite_table: product " + L.names_[i] + "*" + L.names_[j] +
                                                " violates the weight grading at " + L.names_[k]);
                L.table_[i][j].emplace_back(k, c);
            }
        }
    }

    // pre-Lie identity on all basis triples: (ei ej) ek - ei (ej ek) must be
    // symmetric in j, k
    auto assoc = [&](std::size_t i, std::size_t j, std::size_t k) {
        std::vector<Expansion> parts;
        for (const auto& [p, c] : L.table_[i][j]) parts.push_back(scale(L.table_[p][k], c));
        for (const auto& [p, c] : L.table_[j][k]) parts.push_back(scale(L.table_[i][p], -c));
        return combine(std::move(parts));
    };
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k)
                if (assoc(i, j, k) != assoc(i, k, j))
                    throw std::invalid_argument("finite_table: pre-Lie identity fails on (" + L.names_[i] +
                                                ", " + L.names_[j] + ", " + L.names_[k] + ")");
    return L;
}

PreLieStructure PreLieStructure::free_on(std::vector<std::string> alphabet, int weight_cutoff) {
    if (weight_cutoff < 1 || weight_cutoff > 8)
        throw std::out_of_range("free_on: weight cutoff must be in 1..8");
    PreLieStructure L;
    auto levels = basis_up_to_weight(alphabet, weight_cutoff);
    std::vector<RootedTree> flat;
    for (int w = 1; w <= weight_cutoff; ++w)
        for (const auto& t : levels[w]) {
            flat.push_back(t);
            L.weights_.push_back(w);
            L.names_.push_back(format_tree(t));
        }
    L.generator_count_ = levels[1].size();

    std::map<RootedTree, std::size_t> index;
    for (std::size_t i = 0; i < flat.size(); ++i) index.emplace(flat[i], i);

    std::size_t d = flat.size();
    std::vector<std::string> sorted_alphabet(levels[1].size());
    for (std::size_t g = 0; g < levels[1].size(); ++g) sorted_alphabet[g] = levels[1][g].label.as_symbol();

    L.table_.assign(d, std::vector<Expansion>(d));
    L.available_.assign(d, std::vector<bool>(d, false));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (L.weights_[i] + L.weights_[j] > weight_cutoff) continue;
            FreeElement p = star_free(FreeElement::from_tree(sorted_alphabet, flat[i]),
                                      FreeElement::from_tree(sorted_alphabet, flat[j]));
            Expansion e;
            for (const auto& [t, c] : p.value.terms()) e.emplace_back(index.at(t), c);
            L.table_[i][j] = std::move(e);
            L.available_[i][j] = true;
        }
    return L;
}

const PreLieStructure::Expansion& PreLieStructure::product(std::size_t i, std::size_t j) const {
    if (!available_[i][j])
        throw std::out_of_range("product " + names_[i] + "*" + names_[j] + " exceeds the weight cutoff");
    return table_[i][j];
}

PreLieStructure::Expansion PreLieStructure::bracket_expand(std::size_t i, std::size_t j) const {
    return combine({product(i, j), scale(product(j, i), Rational(-1))});
}

std::vector<ChainBasisElement> chain_basis(const PreLieStructure& L, int degree, int weight) {
    if (degree < 1) throw std::invalid_argument("chain degree must be >= 1");
    std::vector<ChainBasisElement> out;
    std::size_t d = L.dim();
    int m = degree - 1;  // wedge length

    // enumerate head first so the output is ordered by (head, wedge)
    for (std::size_t head = 0; head < d; ++head) {
        int rem = weight - L.weight(head);
        if (rem < 0) continue;
        std::vector<std::vector<std::size_t>> wedges;
        std::vector<std::size_t> acc;
        auto collect = [&](auto&& self, std::size_t start, int remaining) -> void {
            if (static_cast<int>(acc.size()) == m) {
                if (remaining == 0) wedges.push_back(acc);
                return;
            }
            for (std::size_t i = start; i < d; ++i) {
                // weight-0 basis elements are allowed, so no pruning on 0
                if (L.weight(i) > remaining) continue;
                acc.push_back(i);
                self(self, i + 1, remaining - L.weight(i));
                acc.pop_back();
            }
        };
        collect(collect, 0, rem);
        for (auto& w : wedges) out.push_back({head, std::move(w)});
    }
    return out;
}

ExactMatrix differential(const PreLieStructure& L, int degree, int weight) {
    if (degree < 2) throw std::invalid_argument("differential needs degree >= 2");
    auto source = chain_basis(L, degree, weight);
    auto target = chain_basis(L, degree - 1, weight);
    std::map<ChainBasisElement, std::size_t> target_index;
    for (std::size_t r = 0; r < target.size(); ++r) target_index.emplace(target[r], r);

    ExactMatrix mat(target.size(), source.size());
    auto row_of = [&](const ChainBasisElement& e) {
        auto it = target_index.find(e);
        if (it == target_index.end())
            throw std::logic_error("differential left the weight block");  // weight preservation
        return it->second;
    };

    for (std::size_t col = 0; col < source.size(); ++col) {
        const auto& [head, wedge] = source[col];
        std::size_t m = wedge.size();
        // head action terms: (-1)^j (v0 . vj) tensor wedge minus j
        for (std::size_t j = 1; j <= m; ++j) {
            std::vector<std::size_t> rest;
            for (std::size_t k = 0; k < m; ++k)
                if (k != j - 1) rest.push_back(wedge[k]);
            int sign = (j % 2) ? -1 : 1;
            for (const auto& [p, c] : L.product(head, wedge[j - 1]))
                mat.at(row_of({p, rest}), col) += Rational(sign) * c;
        }
        // bracket terms: (-1)^(i+j-1) v0 tensor [vi, vj] wedged in front
        for (std::size_t i = 1; i <= m; ++i)
            for (std::size_t j = i + 1; j <= m; ++j) {
                std::vector<std::size_t> rest;
                for (std::size_t k = 0; k < m; ++k)
                    if (k != i - 1 && k != j - 1) rest.push_back(wedge[k]);
                int base_sign = ((i + j - 1) % 2) ? -1 : 1;
                for (const auto& [p, c] : L.bracket_expand(wedge[i - 1], wedge[j - 1])) {
                    if (std::binary_search(rest.begin(), rest.end(), p)) continue;  // repeated factor
                    auto sorted = rest;
                    auto pos = std::lower_bound(sorted.begin(), sorted.end(), p);
                    int shifts = static_cast<int>(pos - sorted.begin());
                    sorted.insert(pos, p);
                    int sign = (shifts % 2) ? -base_sign : base_sign;
                    mat.at(row_of({head, sorted}), col) += Rational(sign) * c;
                }
            }
    }
    return mat;
}

bool HomologyTable::concentrated_in_degree_one(std::size_t n_generators) const {
    for (int n = 1; n <= max_degree; ++n)
        for (int w = 0; w <= max_weight; ++w) {
            std::size_t expected = (n == 1 && w == 1) ? n_generators : 0;
            if (hpl_dim(n, w) != expected) return false;
        }
    return true;
}

HomologyTable homology_ranks(const PreLieStructure& L, int max_degree, int max_weight) {
    HomologyTable table;
    table.max_degree = max_degree;
    table.max_weight = max_weight;
    for (int w = 0; w <= max_weight; ++w) {
        std::vector<std::size_t> dims(max_degree + 2, 0);
        std::vector<ExactMatrix> d_mats;  // d_mats[n-2]: degree n -> n-1
        for (int n = 1; n <= max_degree + 1; ++n) {
            dims[n] = chain_basis(L, n, w).size();
            if (dims[n] > 20000) throw std::length_error("chain block dimension exceeds 20000");
        }
        for (int n = 2; n <= max_degree + 1; ++n) d_mats.push_back(differential(L, n, w));
        for (int n = 2; n <= max_degree; ++n)
            if (!(d_mats[n - 2] * d_mats[n - 1]).is_zero())
                throw std::logic_error("d o d != 0 at degree " + std::to_string(n + 1) + ", weight " +
                                       std::to_string(w));
        std::vector<std::size_t> ranks(max_degree + 2, 0);
        for (int n = 2; n <= max_degree + 1; ++n) ranks[n] = d_mats[n - 2].rank();
        for (int n = 1; n <= max_degree; ++n) {
            table.chain_dims[{n, w}] = dims[n];
            table.hpl[{n, w}] = dims[n] - ranks[n] - ranks[n + 1];
        }
    }
    return table;
}

}  // namespace prelie
