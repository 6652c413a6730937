#include "ncnat/search.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ncnat/arithmetic.hpp"
#include "ncnat/errors.hpp"

namespace ncnat {

std::vector<std::pair<ClassId, ClassId>> find_collisions(StratumStore& store,
                                                         const DeformationSpec& spec, int n) {
    auto table = invariant_table(store, spec, n);
    std::map<Polynomial, std::vector<ClassId>> groups;
    for (auto& [cls, value] : table) groups[std::move(value)].push_back(std::move(cls));

    std::vector<std::pair<ClassId, ClassId>> out;
    for (auto& [value, members] : groups) {
        // Members arrive in class order already.
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                out.emplace_back(members[i], members[j]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Term, Term>> bordered_candidates(StratumStore& store, int max_inner_magnitude) {
    // Representatives of every class of magnitude <= max_inner_magnitude,
    // with their ell_a values.
    std::vector<std::pair<Term, Polynomial>> inner;
    for (int m = 1; m <= max_inner_magnitude; ++m)
        for (const auto& [cls, size] : store.list_classes(m))
            inner.emplace_back(cls.rep, eval_morphism(DeformationSpec::ell_a(), cls.rep));

    auto shape = [](const Term& a1, const Term& a2) {
        return oplus(oplus(Term::leaf(), a1), oplus(a2, Term::leaf()));
    };

    std::set<std::pair<Term, Term>> seen;
    std::vector<std::pair<Term, Term>> out;
    for (std::size_t i = 0; i < inner.size(); ++i) {
        for (std::size_t j = 0; j < inner.size(); ++j) {
            Polynomial left_sum = inner[i].second + inner[j].second;
            for (std::size_t k = 0; k < inner.size(); ++k) {
                for (std::size_t l = 0; l < inner.size(); ++l) {
                    if (!(left_sum == inner[k].second + inner[l].second)) continue;
                    Term a = shape(inner[i].first, inner[j].first);
                    Term b = shape(inner[k].first, inner[l].first);
                    if (store.are_equal(a, b)) continue;
                    if (b < a) std::swap(a, b);
                    if (seen.emplace(a, b).second) out.emplace_back(a, b);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NonCancelWitness> search_noncancel(StratumStore& store, int n, int multiplier_max) {
    if (n < 1 || multiplier_max < 2)
        throw std::invalid_argument("search_noncancel: need n >= 1 and multiplier_max >= 2");
    if (n * multiplier_max > store.n_max()) throw BudgetError(n * multiplier_max, store.n_max());

    auto collisions = find_collisions(store, DeformationSpec::ell_a(), n);
    std::vector<NonCancelWitness> out;
    for (int m = 2; m <= multiplier_max; ++m) {
        for (const auto& [a, a_size] : store.list_classes(m)) {
            for (const auto& [b1, b2] : collisions) {
                ClassId p1 = multiply_classes(store, a, b1);
                ClassId p2 = multiply_classes(store, a, b2);
                if (!(p1 == p2)) continue;
                // Independent confirmation on fresh term products.
                if (!store.are_equal(multiply(a.rep, b1.rep), multiply(a.rep, b2.rep))) continue;
                out.push_back(NonCancelWitness{a, b1, b2, p1});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const NonCancelWitness& x, const NonCancelWitness& y) {
        if (x.a.n != y.a.n) return x.a.n < y.a.n;
        if (!(x.a == y.a)) return x.a < y.a;
        if (!(x.b1 == y.b1)) return x.b1 < y.b1;
        return x.b2 < y.b2;
    });
    return out;
}

RewriteChain parse_chain(std::string_view text) {
    RewriteChain chain;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            try {
                chain.steps.push_back(Term::parse(line));
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()) + " in chain line starting at byte " +
                                     std::to_string(line_start),
                                 line_start + e.offset());
            }
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }
    return chain;
}

RewriteChain load_chain(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open chain file: " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_chain(buf.str());
}

ChainVerdict verify_chain(const RewriteChain& chain) {
    if (chain.steps.size() < 2)
        throw std::invalid_argument("verify_chain: a chain needs at least 2 steps");
    ChainVerdict verdict;
    verdict.steps.reserve(chain.steps.size() - 1);
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
        const Term& from = chain.steps[i];
        const Term& to = chain.steps[i + 1];
        StepVerdict sv;
        if (from.magnitude() == to.magnitude()) {
            for (const RewriteSite& site : rewrite_sites(from)) {
                if (apply_rewrite(from, site) == to) {
                    sv.ok = true;
                    sv.site = site;
                    break;
                }
            }
        }
        verdict.steps.push_back(std::move(sv));
    }
    return verdict;
}

} // namespace ncnat
