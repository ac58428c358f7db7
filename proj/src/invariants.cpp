#include "so4sym/invariants.hpp"

#include <stdexcept>

#include "so4sym/rep.hpp"

namespace so4sym {

namespace {

// all (i_1..i_d) with sum j*i_j = d, as (part size k, multiplicity i_k) lists
void enumerate_partitions(int d, int maxpart, std::vector<std::pair<int, int>>& stack,
                          const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (d == 0) {
        emit(stack);
        return;
    }
    for (int k = std::min(d, maxpart); k >= 1; --k) {
        for (int mult = 1; mult * k <= d; ++mult) {
            stack.emplace_back(k, mult);
            enumerate_partitions(d - mult * k, k - 1, stack, emit);
            stack.pop_back();
        }
    }
}

Rational partition_coefficient(const std::vector<std::pair<int, int>>& parts) {
    BigInt denom = 1;
    for (auto [k, mult] : parts) {
        BigInt f = 1;
        for (int t = 2; t <= mult; ++t) f *= t;
        BigInt kp = 1;
        for (int t = 0; t < mult; ++t) kp *= k;
        denom *= f * kp;
    }
    return Rational(BigInt(1), denom);
}

// chi_(d) from the cached chi(g^k) values, k = 1..d
CycloNumber chi_d_from_powers(const std::vector<CycloNumber>& chis, int d) {
    const int order = chis.front().order();
    CycloNumber total = CycloNumber::zero(order);
    std::vector<std::pair<int, int>> stack;
    enumerate_partitions(d, d, stack, [&](const std::vector<std::pair<int, int>>& parts) {
        CycloNumber term = CycloNumber::one(order);
        for (auto [k, mult] : parts)
            for (int t = 0; t < mult; ++t) term *= chis[k - 1];
        total += term * partition_coefficient(parts);
    });
    return total;
}

}  // namespace

CycloNumber chi_d(const RotationElement& g, int d) {
    if (d < 1) throw std::invalid_argument("chi_d: degree must be >= 1");
    std::vector<CycloNumber> chis;
    RotationElement p = g;
    for (int k = 1; k <= d; ++k) {
        chis.push_back(p.trace_char());
        if (k < d) p = p.compose(g);
    }
    return chi_d_from_powers(chis, d);
}

namespace {

// class-based sum of chi_(d)(g) * weight(g) over the group
CycloNumber class_sum(const FiniteRotationGroup& g, int d, bool weight_by_chi) {
    CycloNumber total = CycloNumber::zero(g.order_field());
    for (const auto& cls : g.conjugacy_classes()) {
        const int rep = cls.front();
        std::vector<CycloNumber> chis;
        int p = rep;
        for (int k = 1; k <= d; ++k) {
            chis.push_back(g.character(p));
            if (k < d) p = g.mult(p, rep);
        }
        CycloNumber v = chi_d_from_powers(chis, d);
        if (weight_by_chi) v *= g.character(rep);
        total += v * Rational(static_cast<long>(cls.size()));
    }
    return total;
}

}  // namespace

long count_invariants(const FiniteRotationGroup& g, int d) {
    if (d < 0) throw std::invalid_argument("count_invariants: degree must be >= 0");
    if (d == 0) return 1;
    long c = exact_integer_quotient(class_sum(g, d, false), g.size(), "count_invariants");
    if (c < 0) throw std::logic_error("count_invariants: negative count");
    return c;
}

long count_equivariants(const FiniteRotationGroup& g, int d) {
    if (d < 1) throw std::invalid_argument("count_equivariants: degree must be >= 1");
    long c = exact_integer_quotient(class_sum(g, d, true), g.size(), "count_equivariants");
    if (c < 0) throw std::logic_error("count_equivariants: negative count");
    return c;
}

// ---- explicit invariants ----

InvariantName invariant_from_string(const std::string& name) {
    if (name == "I2") return InvariantName::I2;
    if (name == "I41") return InvariantName::I41;
    if (name == "I42") return InvariantName::I42;
    if (name == "I6") return InvariantName::I6;
    throw std::invalid_argument("unknown invariant '" + name + "'");
}

std::string invariant_to_string(InvariantName p) {
    switch (p) {
        case InvariantName::I2: return "I2";
        case InvariantName::I41: return "I41";
        case InvariantName::I42: return "I42";
        case InvariantName::I6: return "I6";
    }
    return "?";
}

int invariant_degree(InvariantName p) {
    switch (p) {
        case InvariantName::I2: return 2;
        case InvariantName::I41: return 4;
        case InvariantName::I42: return 4;
        case InvariantName::I6: return 6;
    }
    return 0;
}

CycloNumber eval_invariant(InvariantName p, const Quaternion& x) {
    const int n = x.order();
    const CycloNumber iu = CycloNumber::imaginary_unit(n);
    const Vec4& c = x.components();
    CycloNumber z1 = c[0] + iu * c[1];
    CycloNumber z2 = c[2] + iu * c[3];
    CycloNumber z1c = z1.conjugate();
    CycloNumber z2c = z2.conjugate();
    switch (p) {
        case InvariantName::I2:
            return z1 * z1c + z2 * z2c;
        case InvariantName::I41:
            return z1 * z1c * z2 * z2c;
        case InvariantName::I42:
            return z1 * z1 * z2c * z2c + z1c * z1c * z2 * z2;
        case InvariantName::I6:
            return (z1 * z1c - z2 * z2c) * iu * (z1 * z1 * z2c * z2c - z1c * z1c * z2 * z2);
    }
    throw std::logic_error("unreachable");
}

double eval_invariant(InvariantName p, const std::array<double, 4>& x) {
    std::complex<double> z1{x[0], x[1]}, z2{x[2], x[3]};
    std::complex<double> z1c = std::conj(z1), z2c = std::conj(z2);
    std::complex<double> r;
    switch (p) {
        case InvariantName::I2: r = z1 * z1c + z2 * z2c; break;
        case InvariantName::I41: r = z1 * z1c * z2 * z2c; break;
        case InvariantName::I42: r = z1 * z1 * z2c * z2c + z1c * z1c * z2 * z2; break;
        case InvariantName::I6:
            r = (z1 * z1c - z2 * z2c) * std::complex<double>{0.0, 1.0} *
                (z1 * z1 * z2c * z2c - z1c * z1c * z2 * z2);
            break;
        default: throw std::logic_error("unreachable");
    }
    return r.real();
}

std::vector<Vec4> probe_points(int order) {
    // fixed deterministic probes; denominators kept small so exact
    // evaluation stays cheap
    static const int nums[8][4][2] = {
        {{1, 1}, {1, 2}, {-1, 3}, {1, 5}},
        {{2, 1}, {-1, 1}, {1, 2}, {3, 1}},
        {{-1, 2}, {1, 3}, {1, 1}, {-1, 1}},
        {{1, 1}, {1, 1}, {2, 1}, {-1, 2}},
        {{0, 1}, {1, 1}, {-1, 1}, {2, 1}},
        {{3, 2}, {-2, 1}, {1, 3}, {1, 7}},
        {{1, 4}, {2, 3}, {-3, 2}, {1, 1}},
        {{-1, 1}, {1, 2}, {2, 5}, {-1, 3}},
    };
    std::vector<Vec4> pts;
    for (const auto& row : nums) {
        Vec4 v = zero_vec(order);
        for (int t = 0; t < 4; ++t)
            v[t] = CycloNumber::from_rational(order, Rational(row[t][0], row[t][1]));
        pts.push_back(std::move(v));
    }
    return pts;
}

CycloNumber symmetry_defect(InvariantName p, const FiniteRotationGroup& g,
                            const std::vector<int>& element_ids, SymmetryMode mode) {
    const int n = g.order_field();
    std::vector<Vec4> probes = probe_points(n);
    CycloNumber best = CycloNumber::zero(n);
    for (int id : element_ids) {
        const RotationElement& e = g.element(id);
        for (const auto& x : probes) {
            Quaternion q = Quaternion::from_components(x);
            CycloNumber moved = eval_invariant(p, e.apply(q));
            CycloNumber base = eval_invariant(p, q);
            CycloNumber defect =
                mode == SymmetryMode::Invariant ? moved - base : moved + base;
            if (defect.is_zero()) continue;
            defect = abs_real(defect);
            if (best.is_zero() || compare_real(defect, best) > 0) best = defect;
        }
    }
    return best;
}

CycloNumber symmetry_defect(InvariantName p, const FiniteRotationGroup& g, SymmetryMode mode) {
    std::vector<int> all(g.size());
    for (int i = 0; i < g.size(); ++i) all[i] = i;
    return symmetry_defect(p, g, all, mode);
}

}  // namespace so4sym
