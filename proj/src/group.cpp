#include "so4sym/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace so4sym {

FiniteRotationGroup FiniteRotationGroup::closure(const std::vector<RotationElement>& generators,
                                                 int cap) {
    if (generators.empty()) throw std::invalid_argument("closure: no generators");
    if (cap < 1) throw std::invalid_argument("closure: cap must be >= 1");
    const int n = generators.front().order_field();
    for (const auto& g : generators)
        if (g.order_field() != n)
            throw std::invalid_argument("closure: generators from different field orders");

    FiniteRotationGroup grp;
    grp.field_order_ = n;
    grp.gens_ = generators;

    RotationElement id = RotationElement::identity(n);
    grp.elems_.push_back(id);
    grp.index_.emplace(id, 0);
    grp.words_.push_back({});

    for (size_t head = 0; head < grp.elems_.size(); ++head) {
        grp.gen_mult_.emplace_back(generators.size(), -1);
        for (size_t k = 0; k < generators.size(); ++k) {
            RotationElement f = grp.elems_[head].compose(generators[k]);
            auto it = grp.index_.find(f);
            int idx;
            if (it == grp.index_.end()) {
                idx = static_cast<int>(grp.elems_.size());
                if (idx >= cap)
                    throw std::runtime_error(
                        "closure: element cap of " + std::to_string(cap) +
                        " exceeded; generators do not generate a small finite group");
                grp.index_.emplace(f, idx);
                grp.elems_.push_back(std::move(f));
                std::vector<int> w = grp.words_[head];
                w.push_back(static_cast<int>(k));
                grp.words_.push_back(std::move(w));
            } else {
                idx = it->second;
            }
            grp.gen_mult_[head][k] = idx;
        }
    }

    const int sz = grp.size();
    grp.inv_.resize(sz);
    grp.traces_.reserve(sz);
    for (int i = 0; i < sz; ++i) {
        auto it = grp.index_.find(grp.elems_[i].inverse());
        if (it == grp.index_.end())
            throw std::logic_error("closure: inverse not found; set not closed");
        grp.inv_[i] = it->second;
        grp.traces_.push_back(grp.elems_[i].trace_char());
    }
    grp.fixed_cache_.resize(sz);
    grp.matrix_cache_.resize(sz);
    return grp;
}

std::optional<int> FiniteRotationGroup::index_of(const RotationElement& g) const {
    if (g.order_field() != field_order_) return std::nullopt;
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int FiniteRotationGroup::mult(int i, int j) const {
    int r = i;
    for (int k : words_[j]) r = gen_mult_[r][k];
    return r;
}

int FiniteRotationGroup::power(int i, long k) const {
    long n = size();
    long e = ((k % n) + n) % n;  // g^|G| = identity
    int acc = id_index_;
    int base = i;
    while (e > 0) {
        if (e & 1) acc = mult(acc, base);
        base = mult(base, base);
        e >>= 1;
    }
    return acc;
}

int FiniteRotationGroup::element_order_of(int i) const {
    int ord = 1;
    int g = i;
    while (g != id_index_) {
        g = mult(g, i);
        ++ord;
        if (ord > size()) throw std::logic_error("element_order_of: runaway");
    }
    return ord;
}

const Subspace& FiniteRotationGroup::fixed_space_of(int i) const {
    if (!fixed_cache_[i]) fixed_cache_[i] = elems_[i].fixed_space();
    return *fixed_cache_[i];
}

const Mat4& FiniteRotationGroup::matrix_of(int i) const {
    if (!matrix_cache_[i]) matrix_cache_[i] = elems_[i].to_matrix();
    return *matrix_cache_[i];
}

const std::vector<std::vector<int>>& FiniteRotationGroup::conjugacy_classes() const {
    if (classes_) return *classes_;
    const int sz = size();
    std::vector<int> gen_idx;
    for (const auto& g : gens_) gen_idx.push_back(*index_of(g));

    class_of_.assign(sz, -1);
    std::vector<std::vector<int>> classes;
    for (int start = 0; start < sz; ++start) {
        if (class_of_[start] >= 0) continue;
        int cid = static_cast<int>(classes.size());
        std::vector<int> orbit{start};
        class_of_[start] = cid;
        for (size_t head = 0; head < orbit.size(); ++head)
            for (int g : gen_idx) {
                int y = conj(g, orbit[head]);
                if (class_of_[y] < 0) {
                    class_of_[y] = cid;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    classes_ = std::move(classes);
    return *classes_;
}

int FiniteRotationGroup::class_of(int i) const {
    conjugacy_classes();
    return class_of_[i];
}

bool FiniteRotationGroup::is_subgroup(const std::vector<int>& subset) const {
    if (subset.empty()) return false;
    std::vector<char> mask(size(), 0);
    for (int i : subset) mask[i] = 1;
    if (!mask[id_index_]) return false;
    for (int a : subset) {
        if (!mask[inv_[a]]) return false;
        for (int b : subset)
            if (!mask[mult(a, b)]) return false;
    }
    return true;
}

std::vector<int> FiniteRotationGroup::subgroup_generated_by(
    const std::vector<int>& subset_gens) const {
    std::vector<char> mask(size(), 0);
    std::vector<int> out{id_index_};
    mask[id_index_] = 1;
    for (size_t head = 0; head < out.size(); ++head)
        for (int g : subset_gens) {
            int y = mult(out[head], g);
            if (!mask[y]) {
                mask[y] = 1;
                out.push_back(y);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> FiniteRotationGroup::normalizer(const std::vector<int>& subgroup) const {
    if (!is_subgroup(subgroup))
        throw std::invalid_argument("normalizer: subset is not a subgroup");
    std::vector<char> mask(size(), 0);
    for (int i : subgroup) mask[i] = 1;
    std::vector<int> out;
    for (int g = 0; g < size(); ++g) {
        bool ok = true;
        for (int h : subgroup)
            if (!mask[conj(g, h)]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return out;
}

std::vector<int> FiniteRotationGroup::centralizer(const std::vector<int>& subset) const {
    std::vector<int> out;
    for (int g = 0; g < size(); ++g) {
        bool ok = true;
        for (int x : subset)
            if (mult(g, x) != mult(x, g)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return out;
}

std::vector<int> FiniteRotationGroup::center() const {
    std::vector<int> all(size());
    std::iota(all.begin(), all.end(), 0);
    return centralizer(all);
}

std::vector<int> FiniteRotationGroup::pointwise_stabilizer(const Subspace& w) const {
    std::vector<int> out;
    for (int g = 0; g < size(); ++g) {
        bool fixes = true;
        for (const auto& b : w.basis())
            if (elems_[g].apply(b) != b) {
                fixes = false;
                break;
            }
        if (fixes) out.push_back(g);
    }
    return out;
}

FiniteRotationGroup::SubgroupTests FiniteRotationGroup::subgroup_tests(
    const std::vector<int>& subset) const {
    SubgroupTests t;
    t.is_subgroup = is_subgroup(subset);
    if (!t.is_subgroup) return t;
    t.index = size() / static_cast<int>(subset.size());
    std::vector<char> mask(size(), 0);
    for (int i : subset) mask[i] = 1;
    t.is_normal = true;
    for (int g = 0; g < size() && t.is_normal; ++g)
        for (int h : subset)
            if (!mask[conj(g, h)]) {
                t.is_normal = false;
                break;
            }
    return t;
}

std::optional<std::vector<int>> FiniteRotationGroup::locate_subgroup(
    const FiniteRotationGroup& h) const {
    const long ng = field_order_, nh = h.order_field();
    const long l = std::lcm(ng, nh);

    if (l == ng) {
        std::vector<int> ids;
        for (const auto& e : h.elements()) {
            auto idx = index_of(nh == ng ? e : e.embed(static_cast<int>(ng)));
            if (!idx) return std::nullopt;
            ids.push_back(*idx);
        }
        std::sort(ids.begin(), ids.end());
        return ids;
    }

    // no common indexing; compare canonical element sets in the lcm field
    std::map<RotationElement, int, RotationElementLess> lifted;
    for (int i = 0; i < size(); ++i) lifted.emplace(elems_[i].embed(static_cast<int>(l)), i);
    std::vector<int> ids;
    for (const auto& e : h.elements()) {
        auto it = lifted.find(e.embed(static_cast<int>(l)));
        if (it == lifted.end()) return std::nullopt;
        ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

FiniteRotationGroup::SubgroupTests FiniteRotationGroup::subgroup_tests(
    const FiniteRotationGroup& h) const {
    auto ids = locate_subgroup(h);
    if (!ids) return {};
    return subgroup_tests(*ids);
}

}  // namespace so4sym
