#pragma once

#include <string>

#include "so4sym/group.hpp"

namespace so4sym {

/// The six named families plus the cyclic groups H(m) and the central F(m).
enum class Family { G1, G2, G3, F1, F2, F3, H, Fcenter };

struct FamilySpec {
    Family family;
    int m;  // odd, >= 3
};

Family family_from_string(const std::string& name);
std::string family_to_string(Family f);

/// Smallest field order housing e_m, e_2m and e_4 together: lcm(8, 4m) = 8m
/// for odd m.
int family_field_order(int m);

std::vector<RotationElement> family_generators(const FamilySpec& spec);
FiniteRotationGroup build(const FamilySpec& spec, int cap = 100000);

/// Partition of the elements by their commutation with J = [i, 1]:
/// M J = J M, M J = -J M, or neither (exact matrix arithmetic).
struct JPartition {
    std::vector<int> commuting;
    std::vector<int> anticommuting;
    std::vector<int> other;
};
JPartition j_commutation_partition(const FiniteRotationGroup& g);

/// True iff every element of G_j(m) lies in G_j(m') after embedding into a
/// common field order. Must hold whenever m | m'.
bool divisibility_inclusion(int j, int m, int m_prime);

}  // namespace so4sym
