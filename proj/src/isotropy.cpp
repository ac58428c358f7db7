#include "so4sym/isotropy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "so4sym/rep.hpp"

namespace so4sym {

namespace {

// image of a subspace under a group element, re-canonicalized
Subspace map_subspace(const FiniteRotationGroup& g, int elem, const Subspace& w) {
    std::vector<Vec4> imgs;
    for (const auto& b : w.basis()) imgs.push_back(g.element(elem).apply(b));
    return Subspace::span(w.order(), imgs);
}

// smallest non-identity element id, used for deterministic ordering
int min_nontrivial(const FiniteRotationGroup& g, const std::vector<int>& subgroup) {
    for (int i : subgroup)
        if (i != g.identity_index()) return i;
    return g.identity_index();
}

}  // namespace

std::vector<LatticeEntry> fixed_space_lattice(const FiniteRotationGroup& g) {
    std::map<Subspace, bool, SubspaceLess> seen;  // space -> intersection_only
    std::vector<Subspace> work;

    for (int i = 0; i < g.size(); ++i) {
        const Subspace& f = g.fixed_space_of(i);
        if (f.dim() == 0) continue;
        if (seen.emplace(f, false).second) work.push_back(f);
    }

    for (size_t head = 0; head < work.size(); ++head) {
        // pairwise intersections with everything found so far
        std::vector<Subspace> snapshot;
        snapshot.reserve(seen.size());
        for (const auto& [s, flag] : seen) snapshot.push_back(s);
        for (const auto& other : snapshot) {
            Subspace inter = intersect(work[head], other);
            auto it = seen.find(inter);
            if (it == seen.end()) {
                seen.emplace(inter, true);
                work.push_back(inter);
            }
        }
    }

    std::vector<LatticeEntry> out;
    for (const auto& [s, flag] : seen) out.push_back({s, flag});
    return out;
}

IsotropyScan isotropy_types(const FiniteRotationGroup& g) {
    const int n = g.order_field();
    IsotropyScan scan;

    // principal isotropy: the pointwise stabilizer of all of R^4
    std::vector<int> kernel_ids = g.pointwise_stabilizer(Subspace::full(n));
    scan.principal_order = static_cast<int>(kernel_ids.size());
    scan.principal_fix_dim = fixed_subspace(g, kernel_ids).dim();

    // candidate subspaces: lattice members that are genuine fixed spaces of
    // their own pointwise stabilizers
    std::map<Subspace, std::vector<int>, SubspaceLess> candidates;
    for (const auto& entry : fixed_space_lattice(g)) {
        const Subspace& w = entry.space;
        if (w.dim() == 0 || w.dim() == 4) continue;
        std::vector<int> stab;
        for (int i = 0; i < g.size(); ++i)
            if (g.fixed_space_of(i).contains(w)) stab.push_back(i);
        if (stab.size() <= 1) continue;
        if (fixed_subspace(g, stab) != w) continue;
        // consistency: the stabilizer realizes the character-average dimension
        if (fix_dimension(g, stab) != w.dim())
            throw std::logic_error("isotropy_types: character/linear-algebra mismatch");
        candidates.emplace(w, std::move(stab));
    }

    // group into conjugacy classes via the orbit of the fixed space
    std::set<Subspace, SubspaceLess> used;
    std::vector<int> gen_ids;
    for (const auto& ge : g.generators()) gen_ids.push_back(*g.index_of(ge));

    for (const auto& [w, stab] : candidates) {
        if (used.count(w)) continue;
        std::vector<Subspace> orbit{w};
        std::set<Subspace, SubspaceLess> in_orbit{w};
        for (size_t head = 0; head < orbit.size(); ++head)
            for (int ge : gen_ids) {
                Subspace img = map_subspace(g, ge, orbit[head]);
                if (in_orbit.insert(img).second) orbit.push_back(img);
            }
        for (const auto& s : orbit) used.insert(s);

        // deterministic representative: subgroup with the smallest
        // non-identity element, ties broken by the subspace order
        const Subspace* rep_space = nullptr;
        const std::vector<int>* rep_stab = nullptr;
        int best = g.size();
        for (const auto& s : orbit) {
            auto it = candidates.find(s);
            if (it == candidates.end())
                throw std::logic_error("isotropy_types: orbit left the candidate set");
            int mn = min_nontrivial(g, it->second);
            if (mn < best || (mn == best && rep_space && s.lex_cmp(*rep_space) < 0)) {
                best = mn;
                rep_space = &it->first;
                rep_stab = &it->second;
            }
        }

        IsotropyType t{*rep_stab, *rep_space};
        t.fix_dim = rep_space->dim();
        t.class_length = static_cast<int>(orbit.size());
        t.normalizer_order = static_cast<int>(g.normalizer(*rep_stab).size());
        if (t.class_length * t.normalizer_order != g.size())
            throw std::logic_error("isotropy_types: orbit-stabilizer identity violated");

        NormalizerAction act = normalizer_action(g, t);
        t.normalizer_image_order = act.image_order;
        t.normalizer_image_cyclic = act.cyclic;
        t.normalizer_image_rotations_only = act.rotations_only;
        t.normalizer_image_minus_identity = act.minus_identity;
        t.rotation_angle_per_pi = act.min_rotation_angle_per_pi;
        t.rotation_angle_verified = act.angle_verified;
        scan.types.push_back(std::move(t));
    }

    std::sort(scan.types.begin(), scan.types.end(),
              [&](const IsotropyType& a, const IsotropyType& b) {
                  if (a.fix_dim != b.fix_dim) return a.fix_dim < b.fix_dim;
                  if (a.class_length != b.class_length) return a.class_length < b.class_length;
                  return min_nontrivial(g, a.representative) <
                         min_nontrivial(g, b.representative);
              });
    return scan;
}

namespace {

using SmallMat = std::vector<CycloNumber>;  // dim x dim, row-major

struct SmallMatLess {
    bool operator()(const SmallMat& a, const SmallMat& b) const {
        for (size_t i = 0; i < a.size(); ++i) {
            int c = a[i].lex_cmp(b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

SmallMat small_mul(const SmallMat& a, const SmallMat& b, int dim, int order) {
    SmallMat r(dim * dim, CycloNumber::zero(order));
    for (int i = 0; i < dim; ++i)
        for (int k = 0; k < dim; ++k)
            for (int j = 0; j < dim; ++j) r[i * dim + j] += a[i * dim + k] * b[k * dim + j];
    return r;
}

bool small_group_cyclic(const std::vector<SmallMat>& elems, int dim, int order) {
    std::set<SmallMat, SmallMatLess> all(elems.begin(), elems.end());
    for (const auto& cand : elems) {
        std::set<SmallMat, SmallMatLess> gen;
        SmallMat p = cand;
        while (gen.insert(p).second) p = small_mul(p, cand, dim, order);
        if (gen.size() == all.size()) return true;
    }
    return false;
}

}  // namespace

NormalizerAction normalizer_action(const FiniteRotationGroup& g, const IsotropyType& t) {
    const int n = g.order_field();
    const int dim = t.fix.dim();
    const std::vector<Vec4>& basis = t.fix.basis();

    // pivot columns of the RREF basis give coordinates directly
    std::vector<int> pivots;
    for (const auto& row : basis) {
        int p = 0;
        while (p < 4 && row[p].is_zero()) ++p;
        pivots.push_back(p);
    }

    std::vector<int> normal = g.normalizer(t.representative);
    std::set<SmallMat, SmallMatLess> image;
    for (int ne : normal) {
        SmallMat m(dim * dim, CycloNumber::zero(n));
        for (int col = 0; col < dim; ++col) {
            Vec4 img = g.element(ne).apply(basis[col]);
            if (!t.fix.contains(img))
                throw std::logic_error("normalizer_action: normalizer left the fixed space");
            for (int row = 0; row < dim; ++row) m[row * dim + col] = img[pivots[row]];
        }
        image.insert(std::move(m));
    }

    NormalizerAction act;
    act.image_order = static_cast<int>(image.size());

    std::vector<SmallMat> elems(image.begin(), image.end());
    if (dim == 2) {
        act.rotations_only = true;
        for (const auto& m : elems) {
            CycloNumber det = m[0] * m[3] - m[1] * m[2];
            if (det != CycloNumber::one(n)) {
                act.rotations_only = false;
                break;
            }
        }
        // a finite planar rotation group is cyclic; with reflections present
        // only order <= 2 remains cyclic
        act.cyclic = act.rotations_only ? true
                                        : (act.image_order <= 2 ||
                                           small_group_cyclic(elems, dim, n));

        SmallMat minus_id{-CycloNumber::one(n), CycloNumber::zero(n), CycloNumber::zero(n),
                          -CycloNumber::one(n)};
        act.minus_identity =
            act.image_order == 2 && image.count(minus_id) == 1;

        if (act.rotations_only && act.image_order > 1) {
            const int k = act.image_order;
            act.min_rotation_angle_per_pi = Rational(2, k);
            // verify: some image element realizes trace 2 cos(2 pi / k);
            // lcm stays divisible by 4 because n is
            long l = std::lcm<long>(n, k);
            CycloNumber want = CycloNumber::root_power(static_cast<int>(l), l / k) +
                               CycloNumber::root_power(static_cast<int>(l), -(l / k));
            for (const auto& m : elems) {
                CycloNumber tr = (m[0] + m[3]).embed(static_cast<int>(l));
                if (tr == want) {
                    act.angle_verified = true;
                    break;
                }
            }
        }
    } else {
        act.cyclic = small_group_cyclic(elems, dim, n);
    }
    return act;
}

IzeReport ize_check(const FiniteRotationGroup& g) {
    IzeReport r;
    r.absolutely_irreducible = is_absolutely_irreducible(g);
    IsotropyScan scan = isotropy_types(g);
    r.has_odd_dim_fix = scan.principal_fix_dim % 2 == 1;
    for (const auto& t : scan.types)
        if (t.fix_dim % 2 == 1) r.has_odd_dim_fix = true;
    r.verdict = r.absolutely_irreducible && !r.has_odd_dim_fix;
    return r;
}

}  // namespace so4sym
