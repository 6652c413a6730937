#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "ncnat/congruence.hpp"
#include "ncnat/invariants.hpp"
#include "ncnat/term.hpp"

namespace ncnat {

// Evidence that the product does not cancel: two distinct classes with equal
// products under the same multiplier.
struct NonCancelWitness {
    ClassId a;       // multiplier
    ClassId b1, b2;  // distinct cofactors, b1 < b2 canonically
    ClassId product; // the common product class
};

// All unordered pairs of distinct classes of magnitude n sharing their
// invariant value, each pair (smaller, larger), sorted canonically.
std::vector<std::pair<ClassId, ClassId>> find_collisions(StratumStore& store,
                                                         const DeformationSpec& spec, int n);

// Candidate generator around the ((1 a1) (a2 1)) shape: the deformed value
// of such a term depends only on the value sum of the inner pair, so equal
// sums with unequal classes give collisions without scanning a stratum.
// Emits unordered pairs of terms, deduplicated and sorted canonically, over
// class representatives a1, a2, b1, b2 of magnitude <= max_inner_magnitude.
std::vector<std::pair<Term, Term>> bordered_candidates(StratumStore& store, int max_inner_magnitude);

// For every invariant collision (b1, b2) at magnitude n and every class a
// with 2 <= |a| <= multiplier_max, emit a witness whenever a b1 = a b2.
// Sorted by (|a|, b1, b2) so the smallest witness comes first.
// Requires n * multiplier_max <= n_max.
std::vector<NonCancelWitness> search_noncancel(StratumStore& store, int n, int multiplier_max);

// A claimed derivation: consecutive terms should differ by exactly one
// elementary rewrite at one site.
struct RewriteChain {
    std::vector<Term> steps;
};

// One term per line, the usual term grammar; blank lines and '#' comments
// ignored.
RewriteChain load_chain(const std::filesystem::path& file);
RewriteChain parse_chain(std::string_view text);

struct StepVerdict {
    bool ok = false;
    RewriteSite site; // meaningful only when ok
};

struct ChainVerdict {
    std::vector<StepVerdict> steps; // one per consecutive pair
    bool valid() const {
        for (const auto& s : steps)
            if (!s.ok) return false;
        return true;
    }
    std::optional<std::size_t> first_invalid() const {
        for (std::size_t i = 0; i < steps.size(); ++i)
            if (!steps[i].ok) return i;
        return std::nullopt;
    }
};

// Pure term-level check, no stratum needed; a fully valid chain proves its
// endpoints equal in the quotient. Requires >= 2 steps.
ChainVerdict verify_chain(const RewriteChain& chain);

} // namespace ncnat
