#include "prelie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "prelie/dual.hpp"
#include "prelie/enveloping.hpp"
#include "prelie/homology.hpp"
#include "prelie/operad.hpp"
#include "prelie/words.hpp"

namespace prelie {

namespace {

using json = nlohmann::ordered_json;

constexpr unsigned long kPbwSeed = 0x70726c69;  // fixed seed for reproducible runs
constexpr std::size_t kPbwWords = 500;

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

json treecomb_json(const TreeComb& v) {
    json arr = json::array();
    for (const auto& [t, c] : v.terms()) arr.push_back({{"coeff", to_string(c)}, {"tree", format_tree(t)}});
    return arr;
}

json wordcomb_json(const WordComb& v) {
    json arr = json::array();
    for (const auto& [w, c] : v.terms()) arr.push_back({{"coeff", to_string(c)}, {"word", format_word(w)}});
    return arr;
}

std::string format_treecomb(const TreeComb& v) { return format_lincomb(v, format_tree); }
std::string format_wordcomb(const WordComb& v) { return format_lincomb(v, format_word); }

OperadElement parse_operad_input(const std::string& text) {
    RootedTree t = parse_tree(text);
    if (operad_arity(t) == 0)
        throw CLI::ValidationError("tree " + text + " must carry labels {1,..,n} exactly once each");
    return OperadElement::basis(t);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct Options {
    std::string left, right, tree, word, args, generators = "x";
    int at = 1;
    int roundtrip_max = 4;
    int dims_max = 7;
    int order = 10;
    int max_weight = 5;
    int max_degree = 5;
    int pbw_max_weight = 6;
    bool use_json = false;
    bool assert_koszul = false;
};

int cmd_compose(const Options& o, std::ostream& out) {
    OperadElement left = parse_operad_input(o.left);
    OperadElement right = parse_operad_input(o.right);
    OperadElement result = compose_at(left, o.at, right);
    if (o.use_json) {
        emit(out, json{{"command", "compose"},
                       {"left", o.left},
                       {"at", o.at},
                       {"right", o.right},
                       {"arity", result.arity},
                       {"result", treecomb_json(result.value)}});
    } else {
        out << format_treecomb(result.value) << "\n";
    }
    return 0;
}

int cmd_gamma(const Options& o, std::ostream& out) {
    OperadElement head = parse_operad_input(o.left);
    std::vector<OperadElement> args;
    for (const auto& text : split_list(o.args)) args.push_back(parse_operad_input(text));
    OperadElement result = gamma(head, args);
    if (o.use_json) {
        json arg_texts = json::array();
        for (const auto& text : split_list(o.args)) arg_texts.push_back(text);
        emit(out, json{{"command", "gamma"},
                       {"left", o.left},
                       {"args", arg_texts},
                       {"arity", result.arity},
                       {"result", treecomb_json(result.value)}});
    } else {
        out << format_treecomb(result.value) << "\n";
    }
    return 0;
}

int cmd_star(const Options& o, std::ostream& out) {
    OperadElement result = star(parse_operad_input(o.left), parse_operad_input(o.right));
    if (o.use_json) {
        emit(out, json{{"command", "star"},
                       {"left", o.left},
                       {"right", o.right},
                       {"arity", result.arity},
                       {"result", treecomb_json(result.value)}});
    } else {
        out << format_treecomb(result.value) << "\n";
    }
    return 0;
}

int cmd_phi(const Options& o, std::ostream& out) {
    Word w = parse_word(o.word);
    word_vars(w);  // validates single occurrence
    OperadElement result = phi(WordComb::single(w));
    if (o.use_json) {
        emit(out, json{{"command", "phi"},
                       {"word", o.word},
                       {"arity", result.arity},
                       {"result", treecomb_json(result.value)}});
    } else {
        out << format_treecomb(result.value) << "\n";
    }
    return 0;
}

int cmd_psi(const Options& o, std::ostream& out) {
    OperadElement input = parse_operad_input(o.tree);
    WordComb result = psi(input.value.terms().begin()->first);
    if (o.use_json) {
        emit(out, json{{"command", "psi"}, {"tree", o.tree}, {"result", wordcomb_json(result)}});
    } else {
        out << format_wordcomb(result) << "\n";
    }
    return 0;
}

int cmd_relator(const Options& o, std::ostream& out) {
    WordComb r = relator();
    std::size_t span = submodule_generated({to_f3(r)}).size();
    if (o.use_json) {
        emit(out, json{{"command", "relator"},
                       {"terms", wordcomb_json(r)},
                       {"orbit_size", relator_orbit().size()},
                       {"span_dimension", span}});
    } else {
        out << "r = " << format_wordcomb(r) << "\n";
        out << "orbit size = " << relator_orbit().size() << "\n";
        out << "span dimension = " << span << "\n";
    }
    return 0;
}

int cmd_dims(const Options& o, std::ostream& out) {
    auto rows = dim_check(o.dims_max);
    bool ok = std::all_of(rows.begin(), rows.end(), [](const DimCheckRow& r) { return r.match; });
    if (o.use_json) {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back({{"n", r.n},
                             {"formula", to_string(r.formula)},
                             {"enumerated", r.enumerated},
                             {"match", r.match}});
        emit(out, json{{"command", "dims"}, {"max", o.dims_max}, {"rows", jrows}, {"ok", ok}});
    } else {
        out << "n\tn^(n-1)\tenumerated\tmatch\n";
        for (const auto& r : rows)
            out << r.n << "\t" << to_string(r.formula) << "\t" << r.enumerated << "\t"
                << (r.match ? "yes" : "no") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_series_check(const Options& o, std::ostream& out) {
    auto report = series_inverse_check(o.order);
    if (o.use_json) {
        json res = json::array();
        for (const auto& r : report.residuals) res.push_back(to_string(r));
        emit(out, json{{"command", "series-check"},
                       {"order", report.order},
                       {"residuals", res},
                       {"all_zero", report.all_zero()}});
    } else {
        out << "(g o f)(x) - x residuals through order " << report.order << ":";
        for (const auto& r : report.residuals) out << " " << to_string(r);
        out << "\nall zero: " << (report.all_zero() ? "yes" : "no") << "\n";
    }
    return report.all_zero() ? 0 : 1;
}

int cmd_dual_check(const Options& o, std::ostream& out) {
    DualReport report = verify_dual();
    if (o.use_json) {
        emit(out, json{{"command", "dual-check"},
                       {"dim_r", report.dim_r},
                       {"dim_r_prime", report.dim_rprime},
                       {"pairing_vanishes", report.pairing_vanishes},
                       {"annihilator_matches", report.annihilator_matches},
                       {"ok", report.ok()}});
    } else {
        out << "dim R = " << report.dim_r << " (expect 3)\n";
        out << "dim R' = " << report.dim_rprime << " (expect 9)\n";
        out << "<R, R'> = 0: " << (report.pairing_vanishes ? "yes" : "no") << "\n";
        out << "annihilator(R) = span(R'): " << (report.annihilator_matches ? "yes" : "no") << "\n";
        out << "dual check: " << (report.ok() ? "ok" : "FAILED") << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
    bool ok = true;
    json jrows = json::array();
    std::ostringstream text;
    for (int n = 1; n <= o.roundtrip_max; ++n) {
        RoundtripReport r = roundtrip_check(n);
        ok = ok && r.ok();
        if (o.use_json) {
            jrows.push_back({{"n", n},
                             {"trees", r.total},
                             {"phi_psi_identity", r.phi_psi_failures.empty()},
                             {"ungraft_choices_agree", r.choice_mismatches.empty()}});
        } else {
            text << "n=" << n << ": trees=" << r.total << ", phi(psi(T))=T: "
                 << (r.phi_psi_failures.empty() ? "ok" : "FAILED") << ", ungraft choices agree: "
                 << (r.choice_mismatches.empty() ? "ok" : "FAILED") << "\n";
        }
    }
    if (o.use_json) {
        emit(out, json{{"command", "roundtrip"}, {"max", o.roundtrip_max}, {"rows", jrows}, {"ok", ok}});
    } else {
        out << text.str() << "round trip: " << (ok ? "ok" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_homology(const Options& o, std::ostream& out) {
    auto generators = split_list(o.generators);
    PreLieStructure L = PreLieStructure::free_on(generators, o.max_weight);
    HomologyTable table = homology_ranks(L, o.max_degree, o.max_weight);
    bool koszul = table.concentrated_in_degree_one(L.generator_count());
    if (o.use_json) {
        json degrees = json::array();
        for (int n = 1; n <= o.max_degree; ++n) {
            json dims = json::array();
            for (int w = 1; w <= o.max_weight; ++w) dims.push_back(table.hpl_dim(n, w));
            degrees.push_back({{"degree", n}, {"dims_by_weight", dims}});
        }
        emit(out, json{{"command", "homology"},
                       {"generators", generators},
                       {"max_weight", o.max_weight},
                       {"max_degree", o.max_degree},
                       {"table", degrees},
                       {"koszul_pattern", koszul}});
    } else {
        out << "weight:";
        for (int w = 1; w <= o.max_weight; ++w) out << "\t" << w;
        out << "\n";
        for (int n = 1; n <= o.max_degree; ++n) {
            out << "HPL_" << n << ":";
            for (int w = 1; w <= o.max_weight; ++w) out << "\t" << table.hpl_dim(n, w);
            out << "\n";
        }
        out << "concentrated in degree 1: " << (koszul ? "yes" : "no") << "\n";
    }
    if (o.assert_koszul && !koszul) return 1;
    return 0;
}

int cmd_pbw_check(const Options& o, std::ostream& out) {
    auto generators = split_list(o.generators);
    FreenessReport report = check_freeness(generators, o.pbw_max_weight);
    EnvelopingContext ctx(generators, o.pbw_max_weight);
    StrategyCheckReport strat = pbw_strategy_check(ctx, kPbwWords, kPbwSeed);
    bool ok = report.ok() && strat.ok();
    if (o.use_json) {
        json jrows = json::array();
        for (const auto& r : report.rows)
            jrows.push_back({{"weight", r.weight},
                             {"tree_dim", r.tree_dim},
                             {"module_dim", r.module_dim},
                             {"tree_count_oracle", to_string(r.tree_count_oracle)},
                             {"module_count_oracle", to_string(r.module_count_oracle)},
                             {"rank", r.rank},
                             {"square", r.square},
                             {"invertible", r.invertible},
                             {"oracles_match", r.oracles_match}});
        emit(out, json{{"command", "pbw-check"},
                       {"generators", generators},
                       {"max_weight", o.pbw_max_weight},
                       {"rows", jrows},
                       {"strategy_words", strat.total},
                       {"strategy_mismatches", strat.mismatches},
                       {"ok", ok}});
    } else {
        for (const auto& r : report.rows)
            out << "weight " << r.weight << ": tree dim " << r.tree_dim << ", module dim " << r.module_dim
                << ", oracle " << to_string(r.tree_count_oracle) << "/" << to_string(r.module_count_oracle)
                << ", rank " << r.rank << ", invertible: " << (r.invertible ? "yes" : "no") << "\n";
        out << "strategy independence: " << strat.total << " words, mismatches " << strat.mismatches
            << "\n";
        out << "pbw check: " << (ok ? "ok" : "FAILED") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rooted-trees operad, free pre-Lie algebras, and their Koszulness checks"};
    app.name("prelie");
    app.require_subcommand(1);
    Options o;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.use_json, "machine-readable output"); };

    auto* compose = app.add_subcommand("compose", "compose two operad elements in one slot");
    compose->add_option("--left", o.left, "outer tree")->required();
    compose->add_option("--at", o.at, "slot index (1-based)")->required();
    compose->add_option("--right", o.right, "inner tree")->required();
    add_json(compose);

    auto* gammac = app.add_subcommand("gamma", "full operadic composition, highest slot first");
    gammac->add_option("--left", o.left, "outer tree")->required();
    gammac->add_option("--args", o.args, "comma-separated argument trees")->required();
    add_json(gammac);

    auto* starc = app.add_subcommand("star", "graft the right tree's root on every vertex of the left");
    starc->add_option("--left", o.left, "left tree")->required();
    starc->add_option("--right", o.right, "right tree")->required();
    add_json(starc);

    auto* phic = app.add_subcommand("phi", "map a parenthesized word to its tree combination");
    phic->add_option("--word", o.word, "word, e.g. \"((x1 x2) x3)\"")->required();
    add_json(phic);

    auto* psic = app.add_subcommand("psi", "map a tree to a representative word combination");
    psic->add_option("--tree", o.tree, "tree with labels {1,..,n}")->required();
    add_json(psic);

    auto* roundtripc = app.add_subcommand("roundtrip", "verify phi(psi(T)) = T over all trees per arity");
    roundtripc->add_option("--max", o.roundtrip_max, "largest arity (<= 5)")->default_val(4);
    add_json(roundtripc);

    auto* dimsc = app.add_subcommand("dims", "compare n^(n-1) with exhaustive enumeration");
    dimsc->add_option("--max", o.dims_max, "largest arity (<= 8)")->default_val(7);
    add_json(dimsc);

    auto* seriesc = app.add_subcommand("series-check", "verify the Poincare series inverts -x e^(-x)");
    seriesc->add_option("--order", o.order, "truncation order (<= 30)")->default_val(10);
    add_json(seriesc);

    auto* dualc = app.add_subcommand("dual-check", "verify the Koszul-dual relation space");
    add_json(dualc);

    auto* homologyc = app.add_subcommand("homology", "homology table of a free pre-Lie algebra");
    homologyc->add_option("--generators", o.generators, "comma-separated generator names")->required();
    homologyc->add_option("--max-weight", o.max_weight, "weight cutoff")->default_val(5);
    homologyc->add_option("--max-degree", o.max_degree, "largest homological degree")->default_val(5);
    homologyc->add_flag("--assert-koszul", o.assert_koszul,
                        "fail unless homology is concentrated in degree 1");
    add_json(homologyc);

    auto* pbwc = app.add_subcommand("pbw-check", "module freeness and straightening well-definedness");
    pbwc->add_option("--generators", o.generators, "comma-separated generator names")->default_val("x");
    pbwc->add_option("--max-weight", o.pbw_max_weight, "weight cutoff")->default_val(6);
    add_json(pbwc);

    auto* relatorc = app.add_subcommand("relator", "print the defining relator and its orbit data");
    add_json(relatorc);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*compose) return cmd_compose(o, out);
        if (*gammac) return cmd_gamma(o, out);
        if (*starc) return cmd_star(o, out);
        if (*phic) return cmd_phi(o, out);
        if (*psic) return cmd_psi(o, out);
        if (*roundtripc) return cmd_roundtrip(o, out);
        if (*dimsc) return cmd_dims(o, out);
        if (*seriesc) return cmd_series_check(o, out);
        if (*dualc) return cmd_dual_check(o, out);
        if (*homologyc) return cmd_homology(o, out);
        if (*pbwc) return cmd_pbw_check(o, out);
        if (*relatorc) return cmd_relator(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace prelie
