#include "so4sym/rep.hpp"

#include <stdexcept>

namespace so4sym {

long exact_integer_quotient(const CycloNumber& sum, long divisor, const char* what) {
    auto q = sum.as_rational();
    if (!q)
        throw std::logic_error(std::string(what) + ": cyclotomic sum is not rational");
    Rational v = *q / Rational(divisor);
    if (rat_den(v) != 1)
        throw std::logic_error(std::string(what) + ": average is not an integer");
    return rat_num(v).convert_to<long>();
}

int commutant_dimension(const FiniteRotationGroup& g) {
    CycloNumber sum = CycloNumber::zero(g.order_field());
    for (const auto& cls : g.conjugacy_classes()) {
        const CycloNumber& chi = g.character(cls.front());
        sum += chi * chi * Rational(static_cast<long>(cls.size()));
    }
    long c = exact_integer_quotient(sum, g.size(), "commutant_dimension");
    if (c < 0) throw std::logic_error("commutant_dimension: negative");
    return static_cast<int>(c);
}

bool is_absolutely_irreducible(const FiniteRotationGroup& g) {
    return commutant_dimension(g) == 1;
}

int fix_dimension(const FiniteRotationGroup& g, const std::vector<int>& subgroup) {
    if (!g.is_subgroup(subgroup))
        throw std::invalid_argument("fix_dimension: subset is not a subgroup");
    CycloNumber sum = CycloNumber::zero(g.order_field());
    for (int h : subgroup) sum += g.character(h);
    long d = exact_integer_quotient(sum, static_cast<long>(subgroup.size()), "fix_dimension");
    if (d < 0 || d > 4) throw std::logic_error("fix_dimension: out of range");
    return static_cast<int>(d);
}

Subspace fixed_subspace(const FiniteRotationGroup& g, const std::vector<int>& subset) {
    Subspace acc = Subspace::full(g.order_field());
    for (int i : subset) {
        if (i == g.identity_index()) continue;
        acc = intersect(acc, g.fixed_space_of(i));
        if (acc.dim() == 0) break;
    }
    return acc;
}

}  // namespace so4sym
