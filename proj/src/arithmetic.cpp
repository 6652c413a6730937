#include "ncnat/arithmetic.hpp"

#include <algorithm>

#include "ncnat/errors.hpp"

namespace ncnat {

Term multiply(const Term& a, const Term& b) {
    if (a.is_leaf()) return b;
    return Term::node(multiply(a.left(), b), multiply(a.right(), b));
}

ClassId multiply_classes(StratumStore& store, const ClassId& a, const ClassId& b) {
    int product_magnitude = a.n * b.n; // both <= kMaxMagnitude, no overflow
    if (product_magnitude > store.n_max()) throw BudgetError(product_magnitude, store.n_max());
    return store.class_of(multiply(a.rep, b.rep));
}

bool is_irreducible(StratumStore& store, const ClassId& c) {
    const int n = c.n;
    if (n < 2) return false; // the unit is conventionally not irreducible
    for (int d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = n / d;
        // The product is commutative, so checking pairs (|a|, |b|) = (d, e)
        // with d <= e covers (e, d) too.
        for (const auto& [left, left_size] : store.list_classes(d)) {
            for (const auto& [right, right_size] : store.list_classes(e)) {
                if (multiply_classes(store, left, right) == c) return false;
            }
        }
    }
    return true;
}

namespace {

// All multisets (ascending in class order) of irreducible classes with
// product `c`, every factor >= `min_factor`. The cofactor of a fixed first
// factor need not be unique, so all matching cofactors are explored.
void factor_multisets(StratumStore& store, const ClassId& c, const ClassId& min_factor,
                      std::vector<ClassId>& prefix, std::vector<std::vector<ClassId>>& out) {
    const int n = c.n;
    if (is_irreducible(store, c) && !(c < min_factor)) {
        prefix.push_back(c);
        out.push_back(prefix);
        prefix.pop_back();
    }
    for (int d = 2; d < n; ++d) {
        if (n % d != 0) continue;
        int e = n / d;
        if (e < 2) continue;
        for (const auto& [first, first_size] : store.list_classes(d)) {
            if (first < min_factor) continue;
            if (!is_irreducible(store, first)) continue;
            for (const auto& [cofactor, cofactor_size] : store.list_classes(e)) {
                if (multiply_classes(store, first, cofactor) != c) continue;
                prefix.push_back(first);
                factor_multisets(store, cofactor, first, prefix, out);
                prefix.pop_back();
            }
        }
    }
}

} // namespace

std::vector<Factorization> factorize(StratumStore& store, const ClassId& c) {
    if (c.n > store.n_max()) throw BudgetError(c.n, store.n_max());
    if (c.n == 1) return {Factorization{}};

    std::vector<std::vector<ClassId>> multisets;
    std::vector<ClassId> prefix;
    ClassId no_bound; // magnitude 1 sorts below every admissible factor
    factor_multisets(store, c, no_bound, prefix, multisets);

    std::sort(multisets.begin(), multisets.end());
    multisets.erase(std::unique(multisets.begin(), multisets.end()), multisets.end());

    std::vector<Factorization> out;
    out.reserve(multisets.size());
    for (auto& ms : multisets) {
        Factorization f;
        f.factors.reserve(ms.size());
        for (auto& cls : ms) f.factors.push_back(Factor{std::move(cls), true});
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace ncnat
