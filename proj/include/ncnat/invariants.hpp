#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ncnat/congruence.hpp"
#include "ncnat/polynomial.hpp"
#include "ncnat/term.hpp"

namespace ncnat {

// A linear deformation of addition on integer polynomials:
//     f (+) g  =  alpha * f  +  beta * g.
// Every such operation commutes with itself — expanding
// ((w (+) x) (+) (y (+) z)) gives a^2 w + ab x + ab y + b^2 z, symmetric in
// x and y — so each pair (alpha, beta) induces a term invariant that is
// constant on rewrite-equivalence classes.
struct DeformationSpec {
    Polynomial alpha;
    Polynomial beta;
    std::string name; // "ell", "ell-a", or a display form for custom specs

    // f (+) g = f + q g.
    static const DeformationSpec& ell();
    // f (+) g = (1+q) f + (1-q) g.
    static const DeformationSpec& ell_a();
    static DeformationSpec custom(Polynomial alpha, Polynomial beta);
};

// The induced invariant: L(1) = 1, L(a b) = alpha L(a) + beta L(b),
// computed bottom-up over the tree.
Polynomial eval_morphism(const DeformationSpec& spec, const Term& t);

// Magnitude recovered through the plain deformation at q = 1. Always equals
// the leaf count.
std::int64_t magnitude_via_ell(const Term& t);

// Per-class invariant values for one stratum, ordered by class index. All
// members of a class share the value; the representative is evaluated.
std::vector<std::pair<ClassId, Polynomial>> invariant_table(StratumStore& store,
                                                            const DeformationSpec& spec, int n);

} // namespace ncnat
