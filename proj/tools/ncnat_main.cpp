// ncnat — noncommutative natural numbers workbench.
//
// Exit codes: 0 success (for `eq`: equal; for `verify-chain`: valid chain),
// 2 usage error, 3 malformed input, 4 stratum budget exceeded, 5 `eq` ran
// fine but the terms are not equal, 6 `verify-chain` found an invalid step,
// 1 anything else.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncnat/arithmetic.hpp"
#include "ncnat/congruence.hpp"
#include "ncnat/errors.hpp"
#include "ncnat/invariants.hpp"
#include "ncnat/search.hpp"
#include "ncnat/term.hpp"

using json = nlohmann::ordered_json;
using namespace ncnat;

namespace {

enum ExitCode : int {
    kOk = 0,
    kError = 1,
    kUsage = 2,
    kParse = 3,
    kBudget = 4,
    kNotEqual = 5,
    kInvalidChain = 6,
};

struct CliOptions {
    int n_max = kDefaultNMax;
    std::string cache_dir;
    bool no_cache = false;
    std::string output = "text";
};

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("NCNAT_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "ncnat";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "ncnat";
    return {};
}

StratumStore make_store(const CliOptions& opt) {
    Config cfg;
    cfg.n_max = opt.n_max;
    if (!opt.no_cache)
        cfg.cache_dir = opt.cache_dir.empty() ? default_cache_dir()
                                              : std::filesystem::path(opt.cache_dir);
    return StratumStore(cfg);
}

DeformationSpec parse_spec(const std::string& text) {
    if (text == "ell") return DeformationSpec::ell();
    if (text == "ell-a") return DeformationSpec::ell_a();
    const std::string prefix = "custom:";
    if (text.rfind(prefix, 0) == 0) {
        std::string rest = text.substr(prefix.size());
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw ParseError("custom spec needs the form custom:<alpha>:<beta>", prefix.size());
        Polynomial alpha = Polynomial::parse(rest.substr(0, colon));
        Polynomial beta = Polynomial::parse(rest.substr(colon + 1));
        return DeformationSpec::custom(std::move(alpha), std::move(beta));
    }
    throw ParseError("unknown spec '" + text + "' (expected ell, ell-a or custom:<alpha>:<beta>)",
                     0);
}

json class_json(const ClassId& c) {
    return json{{"n", c.n}, {"index", c.index}, {"rep", c.rep.to_string()}};
}

void emit(const CliOptions& opt, const json& payload, const std::string& text) {
    if (opt.output == "json")
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_dseq(const CliOptions& opt, int max_n) {
    StratumStore store = make_store(opt);
    json rows = json::array();
    std::string text = "n\tC(n)\tD(n)\n";
    for (int n = 1; n <= max_n; ++n) {
        const Stratum& s = store.stratum(n);
        rows.push_back({{"n", n}, {"terms", s.term_count()}, {"classes", s.class_count()}});
        text += std::to_string(n) + "\t" + std::to_string(s.term_count()) + "\t" +
                std::to_string(s.class_count()) + "\n";
    }
    emit(opt, json{{"rows", rows}}, text);
    return kOk;
}

int cmd_eq(const CliOptions& opt, const std::string& left, const std::string& right) {
    StratumStore store = make_store(opt);
    Term a = Term::parse(left);
    Term b = Term::parse(right);
    bool equal = store.are_equal(a, b);
    emit(opt,
         json{{"left", a.to_string()}, {"right", b.to_string()}, {"equal", equal}},
         std::string(equal ? "equal" : "not equal") + "\n");
    return equal ? kOk : kNotEqual;
}

int cmd_mul(const CliOptions& opt, const std::string& left, const std::string& right) {
    Term a = Term::parse(left);
    Term b = Term::parse(right);
    Term product = multiply(a, b);
    emit(opt,
         json{{"left", a.to_string()},
              {"right", b.to_string()},
              {"product", product.to_string()},
              {"magnitude", product.magnitude()}},
         product.to_string() + "\n");
    return kOk;
}

int cmd_invariant(const CliOptions& opt, const std::string& spec_text, const std::string& term_text,
                  int table_n) {
    DeformationSpec spec = parse_spec(spec_text);
    if (table_n > 0) {
        StratumStore store = make_store(opt);
        auto table = invariant_table(store, spec, table_n);
        json rows = json::array();
        std::string text;
        for (const auto& [cls, value] : table) {
            rows.push_back({{"class_rep", cls.rep.to_string()}, {"value", value.to_string()}});
            text += cls.rep.to_string() + "\t" + value.to_string() + "\n";
        }
        emit(opt, json{{"spec", spec.name}, {"n", table_n}, {"rows", rows}}, text);
        return kOk;
    }
    Term t = Term::parse(term_text);
    Polynomial value = eval_morphism(spec, t);
    emit(opt,
         json{{"spec", spec.name}, {"term", t.to_string()}, {"value", value.to_string()}},
         value.to_string() + "\n");
    return kOk;
}

int cmd_enumerate(const CliOptions& opt, int n, bool classes) {
    StratumStore store = make_store(opt);
    if (classes) {
        auto list = store.list_classes(n);
        json rows = json::array();
        std::string text;
        for (const auto& [cls, size] : list) {
            json row = class_json(cls);
            row["size"] = size;
            rows.push_back(std::move(row));
            text += std::to_string(cls.index) + "\t" + cls.rep.to_string() + "\t" +
                    std::to_string(size) + "\n";
        }
        emit(opt, json{{"n", n}, {"classes", rows}}, text);
        return kOk;
    }
    const Stratum& s = store.stratum(n);
    json terms = json::array();
    std::string text;
    for (std::size_t i = 0; i < s.term_count(); ++i) {
        std::string t = s.term_at(i).to_string();
        terms.push_back(t);
        text += t + "\n";
    }
    emit(opt, json{{"n", n}, {"terms", terms}}, text);
    return kOk;
}

int cmd_factor(const CliOptions& opt, const std::string& term_text) {
    StratumStore store = make_store(opt);
    Term t = Term::parse(term_text);
    ClassId cls = store.class_of(t);
    auto factorizations = factorize(store, cls);
    bool irreducible = cls.n >= 2 && is_irreducible(store, cls);
    json rows = json::array();
    std::string text;
    for (const auto& f : factorizations) {
        json factors = json::array();
        std::string line;
        for (const auto& factor : f.factors) {
            factors.push_back(factor.cls.rep.to_string());
            if (!line.empty()) line += " * ";
            line += factor.cls.rep.to_string();
        }
        rows.push_back(std::move(factors));
        text += (line.empty() ? "(empty product)" : line) + "\n";
    }
    emit(opt,
         json{{"term", t.to_string()},
              {"class_rep", cls.rep.to_string()},
              {"irreducible", irreducible},
              {"factorizations", rows}},
         text);
    return kOk;
}

int cmd_collisions(const CliOptions& opt, const std::string& spec_text, int n) {
    StratumStore store = make_store(opt);
    DeformationSpec spec = parse_spec(spec_text);
    auto pairs = find_collisions(store, spec, n);
    json rows = json::array();
    std::string text;
    for (const auto& [first, second] : pairs) {
        Polynomial value = eval_morphism(spec, first.rep);
        rows.push_back({{"first", first.rep.to_string()},
                        {"second", second.rep.to_string()},
                        {"value", value.to_string()}});
        text += first.rep.to_string() + "\t" + second.rep.to_string() + "\t" + value.to_string() +
                "\n";
    }
    emit(opt, json{{"spec", spec.name}, {"n", n}, {"pairs", rows}}, text);
    return kOk;
}

int cmd_search_noncancel(const CliOptions& opt, int magnitude, int multiplier_max) {
    StratumStore store = make_store(opt);
    auto witnesses = search_noncancel(store, magnitude, multiplier_max);
    json rows = json::array();
    std::string text;
    for (const auto& w : witnesses) {
        rows.push_back({{"a", w.a.rep.to_string()},
                        {"b1", w.b1.rep.to_string()},
                        {"b2", w.b2.rep.to_string()},
                        {"product", w.product.rep.to_string()}});
        text += w.a.rep.to_string() + " * " + w.b1.rep.to_string() + " = " + w.a.rep.to_string() +
                " * " + w.b2.rep.to_string() + "\n";
    }
    emit(opt,
         json{{"n", magnitude}, {"multiplier_max", multiplier_max}, {"witnesses", rows}},
         text.empty() ? "no witnesses\n" : text);
    return kOk;
}

int cmd_verify_chain(const CliOptions& opt, const std::string& file) {
    RewriteChain chain = load_chain(file);
    ChainVerdict verdict = verify_chain(chain);
    json steps = json::array();
    std::string text;
    for (std::size_t i = 0; i < verdict.steps.size(); ++i) {
        const StepVerdict& sv = verdict.steps[i];
        json row{{"step", i + 1}, {"ok", sv.ok}};
        if (sv.ok) {
            row["site"] = sv.site.to_string();
            text += "step " + std::to_string(i + 1) + ": rewrite at site \"" +
                    sv.site.to_string() + "\"\n";
        } else {
            text += "step " + std::to_string(i + 1) + ": NOT a single elementary rewrite\n";
        }
        steps.push_back(std::move(row));
    }
    bool valid = verdict.valid();
    text += valid ? "chain valid\n" : "chain INVALID\n";
    emit(opt, json{{"file", file}, {"terms", chain.steps.size()}, {"steps", steps},
                   {"valid", valid}},
         text);
    return valid ? kOk : kInvalidChain;
}

int cmd_bordered(const CliOptions& opt, int max_inner) {
    StratumStore store = make_store(opt);
    auto pairs = bordered_candidates(store, max_inner);
    json rows = json::array();
    std::string text;
    for (const auto& [a, b] : pairs) {
        rows.push_back({{"first", a.to_string()}, {"second", b.to_string()}});
        text += a.to_string() + "\t" + b.to_string() + "\n";
    }
    emit(opt, json{{"max_inner", max_inner}, {"pairs", rows}},
         text.empty() ? "no candidates\n" : text);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"noncommutative natural numbers workbench"};
    app.set_version_flag("--version", "ncnat 0.1.0");
    app.require_subcommand(1);

    CliOptions opt;
    app.add_option("--n-max", opt.n_max, "magnitude budget for stratum closures")
        ->default_val(kDefaultNMax)
        ->check(CLI::Range(1, kMaxMagnitude));
    app.add_option("--cache-dir", opt.cache_dir,
                   "stratum cache directory (default: $NCNAT_CACHE_DIR or ~/.cache/ncnat)");
    app.add_flag("--no-cache", opt.no_cache, "disable the on-disk stratum cache");
    app.add_option("--output", opt.output, "output mode")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));

    // dseq
    int dseq_max = 7;
    auto* dseq = app.add_subcommand("dseq", "term and class counts per magnitude");
    dseq->add_option("--max", dseq_max, "largest magnitude")->required();

    // eq
    std::string eq_left, eq_right;
    auto* eq = app.add_subcommand("eq", "decide equality of two terms in the quotient");
    eq->add_option("term1", eq_left)->required();
    eq->add_option("term2", eq_right)->required();

    // mul
    std::string mul_left, mul_right;
    auto* mul = app.add_subcommand("mul", "grafting product of two terms");
    mul->add_option("term1", mul_left)->required();
    mul->add_option("term2", mul_right)->required();

    // invariant
    std::string inv_spec = "ell", inv_term;
    int inv_table = 0;
    auto* inv = app.add_subcommand("invariant", "polynomial invariant of a term or a stratum");
    inv->add_option("term", inv_term, "term to evaluate");
    inv->add_option("--spec", inv_spec, "ell, ell-a, or custom:<alpha>:<beta>");
    inv->add_option("--table", inv_table, "emit the whole table for this magnitude");

    // enumerate
    int enum_n = 1;
    bool enum_classes = false;
    auto* enu = app.add_subcommand("enumerate", "list all terms (or classes) of one magnitude");
    enu->add_option("n", enum_n)->required();
    enu->add_flag("--classes", enum_classes, "list classes with sizes instead of terms");

    // factor
    std::string factor_term;
    auto* fac = app.add_subcommand("factor", "all factorizations into irreducibles");
    fac->add_option("term", factor_term)->required();

    // collisions
    std::string col_spec = "ell-a";
    int col_n = 1;
    auto* col = app.add_subcommand("collisions", "class pairs sharing an invariant value");
    col->add_option("n", col_n)->required();
    col->add_option("--spec", col_spec, "ell, ell-a, or custom:<alpha>:<beta>");

    // search-noncancel
    int snc_magnitude = 8, snc_mult = 2;
    auto* snc = app.add_subcommand("search-noncancel", "find non-cancellative products");
    snc->add_option("--magnitude", snc_magnitude, "cofactor magnitude")->required();
    snc->add_option("--multiplier-max", snc_mult, "largest multiplier magnitude")->required();

    // verify-chain
    std::string chain_file;
    auto* vch = app.add_subcommand("verify-chain", "check a rewrite derivation step by step");
    vch->add_option("file", chain_file)->required()->check(CLI::ExistingFile);

    // bordered
    int obs_max_inner = 3;
    auto* obs = app.add_subcommand("bordered", "collision candidates of shape ((1 a1) (a2 1))");
    obs->add_option("--max-inner", obs_max_inner, "largest inner magnitude")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*dseq) return cmd_dseq(opt, dseq_max);
        if (*eq) return cmd_eq(opt, eq_left, eq_right);
        if (*mul) return cmd_mul(opt, mul_left, mul_right);
        if (*inv) {
            if ((inv_table == 0) == inv_term.empty()) {
                std::cerr << "invariant: give either a term or --table <n>\n";
                return kUsage;
            }
            return cmd_invariant(opt, inv_spec, inv_term, inv_table);
        }
        if (*enu) return cmd_enumerate(opt, enum_n, enum_classes);
        if (*fac) return cmd_factor(opt, factor_term);
        if (*col) return cmd_collisions(opt, col_spec, col_n);
        if (*snc) return cmd_search_noncancel(opt, snc_magnitude, snc_mult);
        if (*vch) return cmd_verify_chain(opt, chain_file);
        if (*obs) return cmd_bordered(opt, obs_max_inner);
        std::cerr << "no subcommand\n";
        return kUsage;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
}
