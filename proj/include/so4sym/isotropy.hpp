#pragma once

#include <optional>

#include "so4sym/group.hpp"

namespace so4sym {

/// One conjugacy class of isotropy subgroups.
struct IsotropyType {
    std::vector<int> representative;  // sorted element ids of the subgroup
    Subspace fix;                     // = Fix(representative)
    int fix_dim = 0;
    int class_length = 0;     // number of conjugate subgroups
    int normalizer_order = 0; // |N(H)|; class_length * normalizer_order = |G|
    int normalizer_image_order = 0;   // order of N(H) restricted to Fix(H)
    bool normalizer_image_cyclic = false;
    bool normalizer_image_rotations_only = false;
    bool normalizer_image_minus_identity = false;  // image is exactly {I, -I}
    /// Minimal rotation angle of the image as a multiple of pi (2/order for a
    /// cyclic rotation image); empty when the image contains reflections or
    /// is trivial.
    std::optional<Rational> rotation_angle_per_pi;
    bool rotation_angle_verified = false;  // trace identity checked exactly
};

struct LatticeEntry {
    Subspace space;
    /// Arose only as an intersection, not as some Fix(g); dim-0 entries are
    /// kept for bookkeeping but never produce types.
    bool intersection_only = false;
};

/// Closure of {Fix(g) : g in G, dim > 0} under pairwise intersection;
/// contains R^4 (from the identity).
std::vector<LatticeEntry> fixed_space_lattice(const FiniteRotationGroup& g);

struct IsotropyScan {
    std::vector<IsotropyType> types;  // ordered by (fix_dim, class_length, min element)
    int principal_order = 1;          // stabilizer of a generic point (action kernel)
    int principal_fix_dim = 4;
};

IsotropyScan isotropy_types(const FiniteRotationGroup& g);

/// Restriction of N(H) to Fix(H) in the exact RREF basis.
struct NormalizerAction {
    int image_order = 0;
    bool cyclic = false;
    bool rotations_only = false;
    bool minus_identity = false;
    std::optional<Rational> min_rotation_angle_per_pi;
    bool angle_verified = false;
};

NormalizerAction normalizer_action(const FiniteRotationGroup& g, const IsotropyType& t);

struct IzeReport {
    bool absolutely_irreducible = false;
    bool has_odd_dim_fix = false;
    bool verdict = false;  // absolutely irreducible AND no odd-dimensional fix
};

IzeReport ize_check(const FiniteRotationGroup& g);

}  // namespace so4sym
