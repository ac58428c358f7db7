#include "so4sym/series.hpp"

#include <stdexcept>

namespace so4sym {

Family family_from_string(const std::string& name) {
    if (name == "g1") return Family::G1;
    if (name == "g2") return Family::G2;
    if (name == "g3") return Family::G3;
    if (name == "f1") return Family::F1;
    if (name == "f2") return Family::F2;
    if (name == "f3") return Family::F3;
    if (name == "h") return Family::H;
    if (name == "fc") return Family::Fcenter;
    throw std::invalid_argument("unknown family '" + name +
                                "' (expected g1,g2,g3,f1,f2,f3,h,fc)");
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::G1: return "g1";
        case Family::G2: return "g2";
        case Family::G3: return "g3";
        case Family::F1: return "f1";
        case Family::F2: return "f2";
        case Family::F3: return "f3";
        case Family::H: return "h";
        case Family::Fcenter: return "fc";
    }
    return "?";
}

int family_field_order(int m) {
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("m must be odd and >= 3 (got " + std::to_string(m) + ")");
    return 8 * m;
}

std::vector<RotationElement> family_generators(const FamilySpec& spec) {
    const int n = family_field_order(spec.m);
    const Quaternion one = Quaternion::one(n);
    const Quaternion qi = Quaternion::i(n);
    const Quaternion qj = Quaternion::j(n);
    const Quaternion em = Quaternion::phase(n, 1, spec.m);
    const Quaternion e2m = Quaternion::phase(n, 1, 2 * spec.m);
    const Quaternion e4 = Quaternion::phase(n, 1, 4);
    auto el = [](const Quaternion& l, const Quaternion& r) { return RotationElement::make(l, r); };

    switch (spec.family) {
        case Family::G1:
            return {el(em, one), el(one, qi), el(one, qj), el(qj, e4)};
        case Family::G2:
            return {el(em, one), el(one, qi), el(e2m, qj), el(qj, e4)};
        case Family::G3:
            return {el(em, one), el(one, qi), el(qj, one), el(one, qj)};
        case Family::F1:
        case Family::F3:  // F_3(m) = F_1(m) as element sets
            return {el(em, qi), el(one, qj)};
        case Family::F2:
            return {el(em, qi), el(e2m, qj)};
        case Family::H:
            return {el(em, qi)};
        case Family::Fcenter:
            return {el(em, qi).compose(el(em, qi))};
    }
    throw std::logic_error("unreachable");
}

FiniteRotationGroup build(const FamilySpec& spec, int cap) {
    return FiniteRotationGroup::closure(family_generators(spec), cap);
}

JPartition j_commutation_partition(const FiniteRotationGroup& g) {
    const int n = g.order_field();
    const Mat4 j =
        RotationElement::make(Quaternion::i(n), Quaternion::one(n)).to_matrix();
    JPartition p;
    for (int i = 0; i < g.size(); ++i) {
        const Mat4& m = g.matrix_of(i);
        Mat4 mj = m * j;
        Mat4 jm = j * m;
        if (mj == jm)
            p.commuting.push_back(i);
        else if (mj == -jm)
            p.anticommuting.push_back(i);
        else
            p.other.push_back(i);
    }
    return p;
}

bool divisibility_inclusion(int j, int m, int m_prime) {
    if (j < 1 || j > 3) throw std::invalid_argument("divisibility_inclusion: j must be 1..3");
    Family fam = j == 1 ? Family::G1 : (j == 2 ? Family::G2 : Family::G3);
    FiniteRotationGroup small = build({fam, m});
    FiniteRotationGroup large = build({fam, m_prime});
    return large.locate_subgroup(small).has_value();
}

}  // namespace so4sym
