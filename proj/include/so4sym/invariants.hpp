#pragma once

#include <array>

#include "so4sym/group.hpp"

namespace so4sym {

/// Symmetrized character chi_(d)(g): sum over all tuples (i_1,...,i_d) with
/// sum_j j*i_j = d of prod_k chi(g^k)^{i_k} / (k^{i_k} i_k!). For d = 2,3,4
/// this reproduces the closed forms
///   chi_(2) = (chi(g^2) + chi(g)^2)/2
///   chi_(3) = chi(g)^3/6 + chi(g)chi(g^2)/2 + chi(g^3)/3
///   chi_(4) = chi(g)^4/24 + chi(g)chi(g^3)/3 + chi(g)^2 chi(g^2)/4
///             + chi(g^2)^2/8 + chi(g^4)/4.
CycloNumber chi_d(const RotationElement& g, int d);

/// Number of degree-d invariant polynomials, (1/|G|) sum_g chi_(d)(g);
/// exact, asserted integral.
long count_invariants(const FiniteRotationGroup& g, int d);

/// Number of degree-d equivariant polynomial maps,
/// (1/|G|) sum_g chi_(d)(g) chi(g); exact, asserted integral.
long count_equivariants(const FiniteRotationGroup& g, int d);

/// The explicit invariants of the series groups, in complex coordinates
/// z1 = x1 + i x2, z2 = x3 + i x4:
///   I2  = |z1|^2 + |z2|^2
///   I41 = |z1|^2 |z2|^2
///   I42 = z1^2 conj(z2)^2 + conj(z1)^2 z2^2
///   I6  = (|z1|^2 - |z2|^2) i (z1^2 conj(z2)^2 - conj(z1)^2 z2^2)
enum class InvariantName { I2, I41, I42, I6 };

InvariantName invariant_from_string(const std::string& name);
std::string invariant_to_string(InvariantName p);
int invariant_degree(InvariantName p);

/// Exact evaluation at a quaternion point; the result is always real.
CycloNumber eval_invariant(InvariantName p, const Quaternion& x);
double eval_invariant(InvariantName p, const std::array<double, 4>& x);

enum class SymmetryMode { Invariant, AntiInvariant };

/// Eight fixed rational probe points used by all symmetry checks:
/// small generic rationals, no two related by the group actions under test.
std::vector<Vec4> probe_points(int order);

/// Max over the listed elements and the probe points of
/// |p(g x) - p(x)| (invariant mode) or |p(g x) + p(x)| (anti mode), exact.
CycloNumber symmetry_defect(InvariantName p, const FiniteRotationGroup& g,
                            const std::vector<int>& element_ids, SymmetryMode mode);
/// Same over the whole group.
CycloNumber symmetry_defect(InvariantName p, const FiniteRotationGroup& g, SymmetryMode mode);

}  // namespace so4sym
