#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "so4sym/group.hpp"
#include "so4sym/series.hpp"

using namespace so4sym;

namespace {

RotationElement el(const Quaternion& l, const Quaternion& r) {
    return RotationElement::make(l, r);
}

}  // namespace

TEST_CASE("closure orders") {
    CHECK(build({Family::G1, 3}).size() == 48);
    CHECK(build({Family::H, 3}).size() == 12);
    CHECK(build({Family::F1, 3}).size() == 24);
    CHECK(build({Family::Fcenter, 3}).size() == 6);

    FiniteRotationGroup trivial =
        FiniteRotationGroup::closure({RotationElement::identity(8)});
    CHECK(trivial.size() == 1);

    // cap enforcement
    CHECK_THROWS_AS(build({Family::G1, 5}, 10), std::runtime_error);
}

TEST_CASE("index arithmetic agrees with exact composition") {
    FiniteRotationGroup g = build({Family::G1, 3});
    REQUIRE(g.size() == 48);
    CHECK(g.element(g.identity_index()) == RotationElement::identity(24));
    for (int i = 0; i < g.size(); i += 7)
        for (int j = 0; j < g.size(); j += 5) {
            RotationElement exact = g.element(i).compose(g.element(j));
            CHECK(g.element(g.mult(i, j)) == exact);
        }
    for (int i = 0; i < g.size(); ++i) {
        CHECK(g.element(g.inv(i)) == g.element(i).inverse());
        CHECK(g.mult(i, g.inv(i)) == g.identity_index());
        CHECK(g.element_order_of(i) == g.element(i).element_order());
        CHECK(g.element(g.power(i, 3)) == g.element(i).power(3));
    }
}

TEST_CASE("closure determinism") {
    FiniteRotationGroup a = build({Family::G2, 3});
    FiniteRotationGroup b = build({Family::G2, 3});
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) CHECK(a.element(i) == b.element(i));
}

TEST_CASE("conjugacy classes") {
    FiniteRotationGroup trivial =
        FiniteRotationGroup::closure({RotationElement::identity(8)});
    CHECK(trivial.conjugacy_classes().size() == 1);

    FiniteRotationGroup g1 = build({Family::G1, 3});
    int total = 0;
    for (const auto& c : g1.conjugacy_classes()) total += static_cast<int>(c.size());
    CHECK(total == g1.size());

    // chi is a class function
    for (const auto& c : g1.conjugacy_classes())
        for (int i : c) CHECK(g1.character(i) == g1.character(c.front()));

    // the 12 order-2 elements of the nontrivial F_1(3)-coset form one class
    FiniteRotationGroup f1 = build({Family::F1, 3});
    auto f_ids = g1.locate_subgroup(f1);
    REQUIRE(f_ids.has_value());
    std::vector<char> in_f(g1.size(), 0);
    for (int i : *f_ids) in_f[i] = 1;
    std::vector<int> coset_order2;
    for (int i = 0; i < g1.size(); ++i)
        if (!in_f[i] && g1.element_order_of(i) == 2) coset_order2.push_back(i);
    REQUIRE(coset_order2.size() == 12);
    for (int i : coset_order2) CHECK(g1.class_of(i) == g1.class_of(coset_order2.front()));

    // in G_3(3) the order-2 coset elements split into 3 classes of size 6
    FiniteRotationGroup g3 = build({Family::G3, 3});
    FiniteRotationGroup f3 = build({Family::F3, 3});
    auto f3_ids = g3.locate_subgroup(f3);
    REQUIRE(f3_ids.has_value());
    std::vector<char> in_f3(g3.size(), 0);
    for (int i : *f3_ids) in_f3[i] = 1;
    std::map<int, int> class_sizes;
    for (int i = 0; i < g3.size(); ++i)
        if (!in_f3[i] && g3.element_order_of(i) == 2) class_sizes[g3.class_of(i)]++;
    CHECK(class_sizes.size() == 3);
    for (auto& [cls, sz] : class_sizes) CHECK(sz == 6);
}

TEST_CASE("normalizer") {
    FiniteRotationGroup g1 = build({Family::G1, 3});
    CHECK(g1.normalizer({g1.identity_index()}).size() == 48);

    // an order-2 isotropy subgroup of G_1(3) has normalizer of order 4
    const int n = 24;
    Quaternion qj = Quaternion::j(n);
    RotationElement t = el(qj, qj * Quaternion::phase(n, 1, 4));
    auto ti = g1.index_of(t);
    REQUIRE(ti.has_value());
    auto sub = g1.subgroup_generated_by({*ti});
    CHECK(sub.size() == 2);
    CHECK(g1.normalizer(sub).size() == 4);

    // normalizer of <[i,j]> in G_2(3) has order 4m = 12
    FiniteRotationGroup g2 = build({Family::G2, 3});
    auto ij = g2.index_of(el(Quaternion::i(n), qj));
    REQUIRE(ij.has_value());
    CHECK(g2.normalizer(g2.subgroup_generated_by({*ij})).size() == 12);

    CHECK_THROWS_AS(g1.normalizer({1, 2}), std::invalid_argument);
}

TEST_CASE("pointwise stabilizer") {
    FiniteRotationGroup g1 = build({Family::G1, 3});
    CHECK(g1.pointwise_stabilizer(Subspace::zero(24)).size() == 48);

    const int n = 24;
    Quaternion qj = Quaternion::j(n);
    RotationElement t = el(qj, qj * Quaternion::phase(n, 1, 4));
    Subspace fix = t.fixed_space();
    auto stab = g1.pointwise_stabilizer(fix);
    CHECK(stab == g1.subgroup_generated_by({*g1.index_of(t)}));
    CHECK(stab.size() == 2);

    // G_3(3): stabilizer of Fix([j,j]) is <[j,j]>
    FiniteRotationGroup g3 = build({Family::G3, 3});
    RotationElement jj = el(qj, qj);
    auto stab3 = g3.pointwise_stabilizer(jj.fixed_space());
    CHECK(stab3 == g3.subgroup_generated_by({*g3.index_of(jj)}));
    CHECK(stab3.size() == 2);
}

TEST_CASE("subgroup tests") {
    FiniteRotationGroup g1 = build({Family::G1, 3});
    FiniteRotationGroup f1 = build({Family::F1, 3});

    auto t = g1.subgroup_tests(f1);
    CHECK(t.is_subgroup);
    CHECK(t.index.value() == 2);
    CHECK(t.is_normal);

    auto self = g1.subgroup_tests(g1);
    CHECK(self.is_subgroup);
    CHECK(self.index.value() == 1);
    CHECK(self.is_normal);

    // cross-field containment: G_1(3) inside G_1(9)
    FiniteRotationGroup g19 = build({Family::G1, 9});
    CHECK(g19.subgroup_tests(g1).is_subgroup);

    // not contained the other way
    CHECK_FALSE(g1.subgroup_tests(g19).is_subgroup);
}

TEST_CASE("center of F_1(3) is F(3)") {
    FiniteRotationGroup f1 = build({Family::F1, 3});
    FiniteRotationGroup fc = build({Family::Fcenter, 3});
    auto z = f1.center();
    auto fc_ids = f1.locate_subgroup(fc);
    REQUIRE(fc_ids.has_value());
    CHECK(z == *fc_ids);
    CHECK(z.size() == 6);
}

TEST_CASE("to_matrix is a homomorphism on all pairs of G_1(3)") {
    FiniteRotationGroup g = build({Family::G1, 3});
    for (int i = 0; i < g.size(); ++i) {
        const Mat4& mi = g.matrix_of(i);
        for (int j = 0; j < g.size(); ++j) {
            Mat4 prod = mi * g.matrix_of(j);
            CHECK(prod == g.matrix_of(g.mult(i, j)));
        }
    }
}
