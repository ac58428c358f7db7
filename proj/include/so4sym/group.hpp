#pragma once

#include <map>
#include <optional>
#include <vector>

#include "so4sym/quat.hpp"

namespace so4sym {

/// Finite subgroup of SO(4) closed under composition, with a stable element
/// indexing (insertion order of the breadth-first closure under a fixed
/// generator order; index 0 is the identity).
///
/// After construction the group is immutable. Products are evaluated on
/// indices through the generator-multiplication table, so the conjugacy,
/// normalizer and coset machinery never touches exact arithmetic again.
class FiniteRotationGroup {
public:
    static FiniteRotationGroup closure(const std::vector<RotationElement>& generators,
                                       int cap = 100000);

    int size() const { return static_cast<int>(elems_.size()); }
    int order_field() const { return field_order_; }
    const RotationElement& element(int i) const { return elems_[i]; }
    const std::vector<RotationElement>& elements() const { return elems_; }
    const std::vector<RotationElement>& generators() const { return gens_; }

    std::optional<int> index_of(const RotationElement& g) const;
    bool contains(const RotationElement& g) const { return index_of(g).has_value(); }
    int identity_index() const { return id_index_; }

    // index arithmetic
    int mult(int i, int j) const;
    int inv(int i) const { return inv_[i]; }
    int conj(int g, int x) const { return mult(mult(g, x), inv_[g]); }
    int power(int i, long k) const;
    int element_order_of(int i) const;

    /// chi(g) of the natural 4-dimensional representation (cached).
    const CycloNumber& character(int i) const { return traces_[i]; }
    /// Fix(g), computed once per element on first use.
    const Subspace& fixed_space_of(int i) const;
    const Mat4& matrix_of(int i) const;

    const std::vector<std::vector<int>>& conjugacy_classes() const;
    /// Index of the class containing element i.
    int class_of(int i) const;

    // subgroup machinery; subgroups are sorted index subsets of this group
    bool is_subgroup(const std::vector<int>& subset) const;
    std::vector<int> subgroup_generated_by(const std::vector<int>& subset_gens) const;
    std::vector<int> normalizer(const std::vector<int>& subgroup) const;
    std::vector<int> centralizer(const std::vector<int>& subset) const;
    std::vector<int> center() const;
    std::vector<int> pointwise_stabilizer(const Subspace& w) const;

    struct SubgroupTests {
        bool is_subgroup = false;
        std::optional<int> index;
        bool is_normal = false;
    };
    SubgroupTests subgroup_tests(const std::vector<int>& subset) const;
    /// Cross-group variant; embeds both element sets into the lcm field
    /// order when they differ.
    SubgroupTests subgroup_tests(const FiniteRotationGroup& h) const;

    /// Indices of this group's elements matching another group's elements
    /// (after field embedding); nullopt if any element is missing.
    std::optional<std::vector<int>> locate_subgroup(const FiniteRotationGroup& h) const;

private:
    FiniteRotationGroup() = default;

    int field_order_ = 0;
    int id_index_ = 0;
    std::vector<RotationElement> elems_;
    std::map<RotationElement, int, RotationElementLess> index_;
    std::vector<RotationElement> gens_;
    std::vector<std::vector<int>> gen_mult_;   // [elem][gen] -> elem
    std::vector<std::vector<int>> words_;      // generator word per element
    std::vector<int> inv_;
    std::vector<CycloNumber> traces_;

    // lazy caches; single-writer construction, then read-only use
    mutable std::vector<std::optional<Subspace>> fixed_cache_;
    mutable std::vector<std::optional<Mat4>> matrix_cache_;
    mutable std::optional<std::vector<std::vector<int>>> classes_;
    mutable std::vector<int> class_of_;
};

}  // namespace so4sym
