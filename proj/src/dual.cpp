#include "prelie/dual.hpp"

#include <algorithm>
#include <map>

namespace prelie {

namespace {

int perm_sign(const std::vector<int>& p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) sign = -sign;
    return sign;
}

struct F3Basis {
    std::vector<Word> words;
    std::vector<Rational> diag;  // pairing of each basis word with itself
    std::map<Word, std::size_t> index;

    F3Basis() {
        for (int shape = 0; shape < 2; ++shape) {
            for (const auto& p : permutations(3)) {
                Word xi = Word::variable(p[0]);
                Word xj = Word::variable(p[1]);
                Word xk = Word::variable(p[2]);
                Word w = shape == 0 ? Word::pair(Word::pair(xi, xj), xk)
                                    : Word::pair(xi, Word::pair(xj, xk));
                int s = perm_sign(p);
                words.push_back(w);
                diag.push_back(Rational(shape == 0 ? -s : s));
            }
        }
        for (std::size_t c = 0; c < words.size(); ++c) index.emplace(words[c], c);
    }
};

const F3Basis& basis() {
    static const F3Basis b;
    return b;
}

}  // namespace

const std::vector<Word>& f3_basis() { return basis().words; }

std::size_t f3_index(const Word& w) {
    auto it = basis().index.find(w);
    if (it == basis().index.end())
        throw std::invalid_argument("not an arity-3 basis word: " + format_word(w));
    return it->second;
}

F3Vector to_f3(const WordComb& w) {
    F3Vector v(12, Rational(0));
    for (const auto& [word, c] : w.terms()) v[f3_index(word)] = c;
    return v;
}

WordComb from_f3(const F3Vector& v) {
    WordComb out;
    for (std::size_t c = 0; c < 12; ++c) out.add_term(basis().words[c], v[c]);
    return out;
}

Rational scalar_product(const F3Vector& u, const F3Vector& v) {
    Rational s(0);
    for (std::size_t c = 0; c < 12; ++c) s += u[c] * v[c] * basis().diag[c];
    return s;
}

F3Vector f3_perm_action(const std::vector<int>& sigma, const F3Vector& v) {
    F3Vector out(12, Rational(0));
    for (std::size_t c = 0; c < 12; ++c) {
        if (v[c] == 0) continue;
        out[f3_index(apply_perm(sigma, basis().words[c]))] += v[c];
    }
    return out;
}

static std::vector<F3Vector> echelonize(const std::vector<F3Vector>& rows) {
    if (rows.empty()) return {};
    ExactMatrix m = ExactMatrix::from_rows(rows);
    std::vector<std::size_t> pivots;
    ExactMatrix r = m.rref(&pivots);
    std::vector<F3Vector> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        F3Vector v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) v[j] = r.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<F3Vector> submodule_generated(const std::vector<F3Vector>& gens) {
    std::vector<F3Vector> orbit;
    for (const auto& g : gens)
        for (const auto& sigma : permutations(3)) orbit.push_back(f3_perm_action(sigma, g));
    return echelonize(orbit);
}

std::vector<F3Vector> annihilator(const std::vector<F3Vector>& subspace) {
    if (subspace.empty()) {
        // annihilator of the zero subspace is everything
        std::vector<F3Vector> all;
        for (std::size_t c = 0; c < 12; ++c) {
            F3Vector v(12, Rational(0));
            v[c] = 1;
            all.push_back(std::move(v));
        }
        return all;
    }
    ExactMatrix pairing(subspace.size(), 12);
    for (std::size_t r = 0; r < subspace.size(); ++r)
        for (std::size_t c = 0; c < 12; ++c) pairing.at(r, c) = subspace[r][c] * basis().diag[c];
    return echelonize(pairing.kernel());
}

bool same_span(const std::vector<F3Vector>& a, const std::vector<F3Vector>& b) {
    auto ea = echelonize(a);
    auto eb = echelonize(b);
    return ea == eb;
}

WordComb dual_relation_s() {
    auto x1 = Word::variable(1);
    auto x2 = Word::variable(2);
    auto x3 = Word::variable(3);
    WordComb s;
    s.add_term(Word::pair(Word::pair(x1, x2), x3), 1);
    s.add_term(Word::pair(x1, Word::pair(x2, x3)), -1);
    return s;
}

WordComb dual_relation_t() {
    auto x1 = Word::variable(1);
    auto x2 = Word::variable(2);
    auto x3 = Word::variable(3);
    WordComb t;
    t.add_term(Word::pair(Word::pair(x1, x2), x3), 1);
    t.add_term(Word::pair(Word::pair(x1, x3), x2), -1);
    return t;
}

DualReport verify_dual() {
    auto r_space = submodule_generated({to_f3(relator())});
    auto rp_space = submodule_generated({to_f3(dual_relation_s()), to_f3(dual_relation_t())});
    DualReport report;
    report.dim_r = r_space.size();
    report.dim_rprime = rp_space.size();
    report.pairing_vanishes = true;
    for (const auto& u : r_space)
        for (const auto& v : rp_space)
            if (scalar_product(u, v) != 0) report.pairing_vanishes = false;
    report.annihilator_matches = same_span(annihilator(r_space), rp_space);
    return report;
}

namespace {

std::vector<Rational> table_mul(const PermTable& t, const std::vector<Rational>& a,
                                const std::vector<Rational>& b) {
    std::vector<Rational> out(t.dim, Rational(0));
    for (std::size_t i = 0; i < t.dim; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < t.dim; ++j) {
            if (b[j] == 0) continue;
            for (std::size_t k = 0; k < t.dim; ++k) out[k] += a[i] * b[j] * t.product[i][j][k];
        }
    }
    return out;
}

}  // namespace

PermCheckResult check_perm_axioms(const PermTable& table) {
    if (table.dim > 6) throw std::out_of_range("check_perm_axioms: dim must be <= 6");
    std::vector<std::vector<Rational>> e(table.dim, std::vector<Rational>(table.dim, Rational(0)));
    for (std::size_t i = 0; i < table.dim; ++i) e[i][i] = 1;
    for (std::size_t i = 0; i < table.dim; ++i)
        for (std::size_t j = 0; j < table.dim; ++j)
            for (std::size_t k = 0; k < table.dim; ++k) {
                auto ab_c = table_mul(table, table_mul(table, e[i], e[j]), e[k]);
                auto a_bc = table_mul(table, e[i], table_mul(table, e[j], e[k]));
                if (ab_c != a_bc) return {false, "associativity", i, j, k};
                auto ac_b = table_mul(table, table_mul(table, e[i], e[k]), e[j]);
                if (ab_c != ac_b) return {false, "right-symmetry", i, j, k};
            }
    return {};
}

}  // namespace prelie
