#pragma once

#include <vector>

#include "ncnat/congruence.hpp"
#include "ncnat/term.hpp"

namespace ncnat {

// The sum: a single new root over the operands.
inline Term oplus(Term a, Term b) { return Term::node(std::move(a), std::move(b)); }

// The grafting product: every leaf of `a` replaced by a copy of `b`.
// Magnitude multiplies; the generator is a two-sided unit; associative as an
// exact term identity; distributes over oplus from the right exactly.
Term multiply(const Term& a, const Term& b);

// Product on classes: well defined because the rewrite relation is
// compatible with grafting. Requires |a| * |b| <= n_max.
ClassId multiply_classes(StratumStore& store, const ClassId& a, const ClassId& b);

struct Factor {
    ClassId cls;
    bool irreducible = true;
};

// One way of writing a class as a product of irreducibles, factors sorted in
// canonical class order (the product is commutative, so order carries no
// information). The magnitudes of the factors multiply to the target
// magnitude. Empty for the unit class.
struct Factorization {
    std::vector<Factor> factors;
};

// True iff no pair of classes of magnitude >= 2 multiplies to c.
bool is_irreducible(StratumStore& store, const ClassId& c);

// All distinct multisets of irreducible classes whose product is c, found by
// brute force over magnitude splits and class pairs. Never empty: an
// irreducible c yields the singleton {c}; the unit class yields the empty
// product.
std::vector<Factorization> factorize(StratumStore& store, const ClassId& c);

} // namespace ncnat
