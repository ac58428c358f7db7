#pragma once

#include "so4sym/group.hpp"

namespace so4sym {

/// Dimension of the space of linear maps commuting with the action,
/// (1/|G|) sum chi(g)^2. Equals the number of linear equivariants C_1.
/// The cyclotomic sum must come out a nonnegative rational integer;
/// anything else signals an arithmetic bug and throws.
int commutant_dimension(const FiniteRotationGroup& g);

/// True iff the commutant is one-dimensional.
bool is_absolutely_irreducible(const FiniteRotationGroup& g);

/// dim Fix(H) by the character average (1/|H|) sum_{h in H} chi(h).
int fix_dimension(const FiniteRotationGroup& g, const std::vector<int>& subgroup);

/// The same space computed by exact linear algebra: the intersection of the
/// fixed spaces of all elements of the subset. Cross-check for fix_dimension.
Subspace fixed_subspace(const FiniteRotationGroup& g, const std::vector<int>& subset);

/// Asserts that sum / divisor is a rational integer and returns it.
long exact_integer_quotient(const CycloNumber& sum, long divisor, const char* what);

}  // namespace so4sym
