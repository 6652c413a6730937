#include "ncnat/invariants.hpp"

namespace ncnat {

const DeformationSpec& DeformationSpec::ell() {
    static const DeformationSpec spec{Polynomial{1}, Polynomial::monomial(BigInt{1}, 1), "ell"};
    return spec;
}

const DeformationSpec& DeformationSpec::ell_a() {
    static const DeformationSpec spec{Polynomial{1} + Polynomial::monomial(BigInt{1}, 1),
                                      Polynomial{1} - Polynomial::monomial(BigInt{1}, 1), "ell-a"};
    return spec;
}

DeformationSpec DeformationSpec::custom(Polynomial alpha, Polynomial beta) {
    std::string name = "custom:" + alpha.to_string() + ":" + beta.to_string();
    return DeformationSpec{std::move(alpha), std::move(beta), std::move(name)};
}

Polynomial eval_morphism(const DeformationSpec& spec, const Term& t) {
    if (t.is_leaf()) return Polynomial{1};
    return spec.alpha * eval_morphism(spec, t.left()) + spec.beta * eval_morphism(spec, t.right());
}

std::int64_t magnitude_via_ell(const Term& t) {
    return eval_morphism(DeformationSpec::ell(), t).evaluate(BigInt{1}).to_int64();
}

std::vector<std::pair<ClassId, Polynomial>> invariant_table(StratumStore& store,
                                                            const DeformationSpec& spec, int n) {
    const Stratum& s = store.stratum(n);
    std::vector<std::pair<ClassId, Polynomial>> out;
    out.reserve(s.class_count());
    for (std::size_t c = 0; c < s.class_count(); ++c) {
        ClassId id = s.class_id(c);
        Polynomial value = eval_morphism(spec, id.rep);
        out.emplace_back(std::move(id), std::move(value));
    }
    return out;
}

} // namespace ncnat
