#include "prelie/free_prelie.hpp"

#include <algorithm>

namespace prelie {

namespace {

void check_in_alphabet(const RootedTree& t, const std::vector<std::string>& alphabet) {
    if (t.label.is_int() || !std::binary_search(alphabet.begin(), alphabet.end(), t.label.as_symbol()))
        throw std::invalid_argument("tree label " + t.label.text() + " not in the generator alphabet");
    for (const auto& c : t.children) check_in_alphabet(c, alphabet);
}

std::vector<std::string> normalize_alphabet(std::vector<std::string> alphabet) {
    if (alphabet.empty()) throw std::invalid_argument("empty generator alphabet");
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    return alphabet;
}

void check_same_alphabet(const FreeElement& a, const FreeElement& b) {
    if (a.alphabet != b.alphabet) throw std::invalid_argument("generator alphabet mismatch");
}

}  // namespace

FreeElement::FreeElement(std::vector<std::string> alphabet_, LinComb<RootedTree> v)
    : alphabet(normalize_alphabet(std::move(alphabet_))), value(std::move(v)) {
    for (const auto& [t, c] : value.terms()) check_in_alphabet(t, alphabet);
}

FreeElement FreeElement::generator(std::vector<std::string> alphabet_, const std::string& g) {
    return FreeElement(std::move(alphabet_), LinComb<RootedTree>::single(leaf(g)));
}

FreeElement FreeElement::from_tree(std::vector<std::string> alphabet_, const RootedTree& t) {
    return FreeElement(std::move(alphabet_), LinComb<RootedTree>::single(t));
}

FreeElement operator+(const FreeElement& a, const FreeElement& b) {
    check_same_alphabet(a, b);
    return FreeElement(a.alphabet, a.value + b.value);
}

FreeElement operator-(const FreeElement& a, const FreeElement& b) {
    check_same_alphabet(a, b);
    return FreeElement(a.alphabet, a.value - b.value);
}

FreeElement operator*(const Rational& c, FreeElement a) {
    a.value *= c;
    return a;
}

FreeElement star_free(const FreeElement& a, const FreeElement& b) {
    check_same_alphabet(a, b);
    LinComb<RootedTree> out;
    for (const auto& [t1, c1] : a.value.terms())
        for (const auto& [t2, c2] : b.value.terms())
            for (const auto& [grafted, count] : graft_everywhere(t1, t2))
                out.add_term(grafted, c1 * c2 * Rational(static_cast<long>(count)));
    return FreeElement(a.alphabet, std::move(out));
}

FreeElement bracket(const FreeElement& a, const FreeElement& b) {
    return star_free(a, b) - star_free(b, a);
}

std::vector<std::vector<RootedTree>> basis_up_to_weight(const std::vector<std::string>& alphabet,
                                                        int w_max) {
    auto sorted = normalize_alphabet(alphabet);
    std::vector<std::vector<RootedTree>> out(w_max + 1);
    for (int w = 1; w <= w_max; ++w) out[w] = enumerate_gen_trees(sorted, w);
    return out;
}

}  // namespace prelie
