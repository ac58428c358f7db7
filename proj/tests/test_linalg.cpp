#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "so4sym/linalg.hpp"

using namespace so4sym;

namespace {

Vec4 rational_vec(int order, int a, int b, int c, int d) {
    Vec4 v = zero_vec(order);
    v[0] = CycloNumber::from_rational(order, a);
    v[1] = CycloNumber::from_rational(order, b);
    v[2] = CycloNumber::from_rational(order, c);
    v[3] = CycloNumber::from_rational(order, d);
    return v;
}

Vec4 random_rational_vec(int order, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    return rational_vec(order, d(rng), d(rng), d(rng), d(rng));
}

Subspace random_subspace(int order, std::mt19937& rng) {
    std::uniform_int_distribution<int> nd(0, 3);
    std::vector<Vec4> vs;
    for (int i = 0, n = nd(rng); i < n; ++i) vs.push_back(random_rational_vec(order, rng));
    return Subspace::span(order, vs);
}

}  // namespace

TEST_CASE("rref canonical span") {
    CHECK(Subspace::span(8, {}).dim() == 0);

    Subspace s = Subspace::span(8, {rational_vec(8, 1, 0, 0, 0), rational_vec(8, 2, 0, 0, 0)});
    CHECK(s.dim() == 1);
    CHECK(s.basis()[0] == rational_vec(8, 1, 0, 0, 0));

    // span{i+j, 1-k}: hand elimination on (0,1,1,0),(1,0,0,-1)
    Subspace p = Subspace::span(8, {rational_vec(8, 0, 1, 1, 0), rational_vec(8, 1, 0, 0, -1)});
    CHECK(p.dim() == 2);
    CHECK(p.basis()[0] == rational_vec(8, 1, 0, 0, -1));
    CHECK(p.basis()[1] == rational_vec(8, 0, 1, 1, 0));

    // idempotence: re-spanning the basis reproduces it
    CHECK(Subspace::span(8, p.basis()) == p);
}

TEST_CASE("kernel") {
    CHECK(kernel(Mat4::identity(8)).dim() == 0);
    CHECK(kernel(Mat4::zero(8)) == Subspace::full(8));
    CHECK(kernel(8, {rational_vec(8, 1, 1, 0, 0)}).dim() == 3);
}

TEST_CASE("intersect") {
    std::mt19937 rng(11);
    for (int t = 0; t < 40; ++t) {
        Subspace v = random_subspace(24, rng);
        CHECK(intersect(v, v) == v);
        CHECK(intersect(v, Subspace::zero(24)).dim() == 0);
        CHECK(intersect(v, Subspace::full(24)) == v);
    }

    // two generic 2-planes in R^4 meet only at the origin
    Subspace a = Subspace::span(8, {rational_vec(8, 0, 1, 1, 0), rational_vec(8, 1, 0, 0, -1)});
    Subspace b = Subspace::span(8, {rational_vec(8, 1, 2, 0, 0), rational_vec(8, 0, 0, 1, 1)});
    CHECK(intersect(a, b).dim() == 0);
}

TEST_CASE("intersect commutative and associative") {
    std::mt19937 rng(202);
    for (int t = 0; t < 25; ++t) {
        Subspace u = random_subspace(8, rng);
        Subspace v = random_subspace(8, rng);
        Subspace w = random_subspace(8, rng);
        CHECK(intersect(u, v) == intersect(v, u));
        CHECK(intersect(intersect(u, v), w) == intersect(u, intersect(v, w)));
    }
}

TEST_CASE("Grassmann dimension identity") {
    std::mt19937 rng(303);
    for (int t = 0; t < 40; ++t) {
        Subspace u = random_subspace(8, rng);
        Subspace w = random_subspace(8, rng);
        int lhs = intersect(u, w).dim() + subspace_sum(u, w).dim();
        CHECK(lhs == u.dim() + w.dim());
        CHECK(intersect(u, w).dim() >= u.dim() + w.dim() - 4);
    }
}

TEST_CASE("complement") {
    std::mt19937 rng(404);
    for (int t = 0; t < 25; ++t) {
        Subspace u = random_subspace(24, rng);
        Subspace c = u.complement();
        CHECK(c.dim() == 4 - u.dim());
        CHECK(intersect(u, c).dim() == 0);
        CHECK(c.complement() == u);
    }
}

TEST_CASE("matrix basics") {
    Mat4 id = Mat4::identity(8);
    CHECK(id.det() == CycloNumber::one(8));
    CHECK(id.is_orthogonal());
    CHECK(id.trace() == CycloNumber::from_rational(8, 4));
    CHECK((id - id) == Mat4::zero(8));
}
