#include "prelie/words.hpp"

#include <algorithm>
#include <map>

namespace prelie {

Word Word::variable(int k) {
    if (k < 1) throw std::invalid_argument("variable index must be >= 1");
    Word w;
    w.var = k;
    return w;
}

Word Word::pair(Word l, Word r) {
    Word w;
    w.parts.push_back(std::move(l));
    w.parts.push_back(std::move(r));
    return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.is_var() != b.is_var()) return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_var()) return a.var <=> b.var;
    if (auto c = a.parts[0] <=> b.parts[0]; c != 0) return c;
    return a.parts[1] <=> b.parts[1];
}

static void collect_vars(const Word& w, std::set<int>& out) {
    if (w.is_var()) {
        if (!out.insert(w.var).second)
            throw std::invalid_argument("variable x" + std::to_string(w.var) + " occurs twice");
        return;
    }
    collect_vars(w.parts[0], out);
    collect_vars(w.parts[1], out);
}

std::set<int> word_vars(const Word& w) {
    std::set<int> out;
    collect_vars(w, out);
    return out;
}

namespace {

struct WordParser {
    std::string_view text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    Word parse() {
        if (peek() == 'x') {
            ++pos;
            if (!(peek() >= '1' && peek() <= '9')) fail("expected variable index");
            std::size_t start = pos;
            while (peek() >= '0' && peek() <= '9') ++pos;
            return Word::variable(std::stoi(std::string(text.substr(start, pos - start))));
        }
        expect('(');
        Word l = parse();
        expect(' ');
        Word r = parse();
        expect(')');
        return Word::pair(std::move(l), std::move(r));
    }

    Word run() {
        Word w = parse();
        if (pos != text.size()) fail("trailing input");
        return w;
    }
};

}  // namespace

Word parse_word(std::string_view text) { return WordParser{text}.run(); }

std::string format_word(const Word& w) {
    if (w.is_var()) return "x" + std::to_string(w.var);
    return "(" + format_word(w.parts[0]) + " " + format_word(w.parts[1]) + ")";
}

Word apply_perm(const std::vector<int>& sigma, const Word& w) {
    if (w.is_var()) {
        if (w.var < 1 || w.var > static_cast<int>(sigma.size()))
            throw std::invalid_argument("permutation does not cover variable x" + std::to_string(w.var));
        return Word::variable(sigma[w.var - 1]);
    }
    return Word::pair(apply_perm(sigma, w.parts[0]), apply_perm(sigma, w.parts[1]));
}

WordComb apply_perm(const std::vector<int>& sigma, const WordComb& w) {
    WordComb out;
    for (const auto& [word, c] : w.terms()) out.add_term(apply_perm(sigma, word), c);
    return out;
}

WordComb relator() {
    auto x1 = Word::variable(1);
    auto x2 = Word::variable(2);
    auto x3 = Word::variable(3);
    WordComb r;
    r.add_term(Word::pair(Word::pair(x1, x2), x3), 1);
    r.add_term(Word::pair(x1, Word::pair(x2, x3)), -1);
    r.add_term(Word::pair(Word::pair(x1, x3), x2), -1);
    r.add_term(Word::pair(x1, Word::pair(x3, x2)), 1);
    return r;
}

std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> sigma(n);
    for (int k = 0; k < n; ++k) sigma[k] = k + 1;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<WordComb> relator_orbit() {
    std::vector<WordComb> out;
    WordComb r = relator();
    for (const auto& sigma : permutations(3)) out.push_back(apply_perm(sigma, r));
    return out;
}

TreeComb phi_trees(const Word& w) {
    if (w.is_var()) return TreeComb::single(leaf(w.var));
    return star_disjoint(phi_trees(w.parts[0]), phi_trees(w.parts[1]));
}

OperadElement phi(const WordComb& w, int arity) {
    TreeComb acc;
    for (const auto& [word, c] : w.terms()) {
        auto vars = word_vars(word);
        if (static_cast<int>(vars.size()) != arity || *vars.begin() != 1 || *vars.rbegin() != arity)
            throw std::invalid_argument("word " + format_word(word) + " does not use variables {1,..," +
                                        std::to_string(arity) + "}");
        acc += c * phi_trees(word);
    }
    return OperadElement(arity, std::move(acc));
}

OperadElement phi(const WordComb& w) {
    if (w.is_zero()) throw std::invalid_argument("phi: cannot deduce arity of the zero combination");
    return phi(w, static_cast<int>(word_vars(w.terms().begin()->first).size()));
}

namespace {

WordComb pair_comb(const WordComb& a, const WordComb& b) {
    WordComb out;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) out.add_term(Word::pair(u, v), cu * cv);
    return out;
}

struct PsiCalculator {
    UngraftChoice choice;
    std::map<RootedTree, WordComb> cache;

    WordComb run(const TreeComb& v) {
        WordComb out;
        for (const auto& [t, c] : v.terms()) out += c * run(t);
        return out;
    }

    // recursion on (weight, number of root subtrees): the ungrafted subtree
    // shrinks the weight, the correction sum shrinks the subtree count
    WordComb run(const RootedTree& t) {
        if (auto it = cache.find(t); it != cache.end()) return it->second;
        WordComb result;
        if (t.children.empty()) {
            result = WordComb::single(Word::variable(t.label.as_int()));
        } else {
            std::size_t pick = choice == UngraftChoice::Smallest ? 0 : t.children.size() - 1;
            const RootedTree ungrafted = t.children[pick];
            std::vector<RootedTree> rest_children = t.children;
            rest_children.erase(rest_children.begin() + static_cast<std::ptrdiff_t>(pick));
            RootedTree rest(t.label, rest_children);

            result = pair_comb(run(rest), run(ungrafted));
            for (std::size_t j = 0; j < rest_children.size(); ++j) {
                TreeComb grafts = star_disjoint(TreeComb::single(rest_children[j]),
                                                TreeComb::single(ungrafted));
                for (const auto& [merged, c] : grafts.terms()) {
                    auto children = rest_children;
                    children[j] = merged;
                    result -= c * run(RootedTree(t.label, std::move(children)));
                }
            }
        }
        cache.emplace(t, result);
        return result;
    }
};

}  // namespace

WordComb psi(const RootedTree& t, UngraftChoice choice) { return PsiCalculator{choice, {}}.run(t); }

WordComb psi(const TreeComb& v, UngraftChoice choice) { return PsiCalculator{choice, {}}.run(v); }

RoundtripReport roundtrip_check(int n) {
    if (n < 1 || n > 5) throw std::out_of_range("roundtrip_check: n must be in 1..5");
    RoundtripReport report;
    report.n = n;
    for (const auto& t : enumerate_trees(n)) {
        ++report.total;
        OperadElement expected = OperadElement::basis(t);
        WordComb smallest = psi(t, UngraftChoice::Smallest);
        if (phi(smallest, n) != expected) report.phi_psi_failures.push_back(t);
        WordComb largest = psi(t, UngraftChoice::Largest);
        if (phi(largest, n) != phi(smallest, n)) report.choice_mismatches.push_back(t);
    }
    return report;
}

}  // namespace prelie
