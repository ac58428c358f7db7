#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "so4sym/quat.hpp"

using namespace so4sym;

namespace {

// float quaternion model as an independent oracle for the exact product
struct QF {
    double a, b, c, d;
};
QF qf_mul(QF p, QF q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
            p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
            p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}
QF to_float(const Quaternion& q) {
    return {q.components()[0].to_double(), q.components()[1].to_double(),
            q.components()[2].to_double(), q.components()[3].to_double()};
}

Quaternion random_unit(int order, std::mt19937& rng) {
    // products of phases and basis quaternions stay exactly unit
    std::uniform_int_distribution<int> pick(0, 3);
    std::uniform_int_distribution<long> ph(0, 2L * order - 1);
    Quaternion q = Quaternion::phase(order, ph(rng), order / 2);
    for (int t = 0; t < 3; ++t) {
        switch (pick(rng)) {
            case 0: q = q * Quaternion::i(order); break;
            case 1: q = q * Quaternion::j(order); break;
            case 2: q = q * Quaternion::phase(order, ph(rng), order / 2); break;
            default: break;
        }
    }
    return q;
}

Vec4 rational_vec(int order, int a, int b, int c, int d) {
    Vec4 v = zero_vec(order);
    v[0] = CycloNumber::from_rational(order, a);
    v[1] = CycloNumber::from_rational(order, b);
    v[2] = CycloNumber::from_rational(order, c);
    v[3] = CycloNumber::from_rational(order, d);
    return v;
}

}  // namespace

TEST_CASE("Hamilton product") {
    const int N = 8;
    Quaternion i = Quaternion::i(N), j = Quaternion::j(N), k = Quaternion::k(N);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * Quaternion::one(N) == j);
    CHECK(i * i == -Quaternion::one(N));
    CHECK((i * j) * k == -Quaternion::one(N));

    // angle addition: e_m * e_m = e^(2 pi i / m) for m = 3 in Q(zeta_24)
    Quaternion em = Quaternion::phase(24, 1, 3);
    Quaternion sq = em * em;
    std::complex<double> z{sq.components()[0].to_double(), sq.components()[1].to_double()};
    CHECK(std::abs(z - std::polar(1.0, 2.0 * M_PI / 3.0)) < 1e-14);

    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        Quaternion p = random_unit(24, rng), q = random_unit(24, rng);
        QF expect = qf_mul(to_float(p), to_float(q));
        QF got = to_float(p * q);
        CHECK(std::abs(expect.a - got.a) < 1e-12);
        CHECK(std::abs(expect.b - got.b) < 1e-12);
        CHECK(std::abs(expect.c - got.c) < 1e-12);
        CHECK(std::abs(expect.d - got.d) < 1e-12);
        CHECK((p * q).is_unit());
    }
}

TEST_CASE("make_element canonical sign") {
    const int N = 8;
    Quaternion one = Quaternion::one(N), i = Quaternion::i(N);
    CHECK(RotationElement::make(-one, -one) == RotationElement::identity(N));
    CHECK(RotationElement::make(i, one) == RotationElement::make(-i, -one));

    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        Quaternion l = random_unit(24, rng), r = random_unit(24, rng);
        CHECK(RotationElement::make(l, r) == RotationElement::make(-l, -r));
    }

    Quaternion not_unit = one + one;
    CHECK_THROWS_AS(RotationElement::make(not_unit, one), std::invalid_argument);
}

TEST_CASE("compose, inverse, powers") {
    const int N = 24;
    Quaternion one = Quaternion::one(N), i = Quaternion::i(N);
    Quaternion e3 = Quaternion::phase(N, 1, 3);

    RotationElement g = RotationElement::make(e3, i);
    // [e_3, i]^3 = [-1, -i] which is [1, i] in canonical form
    CHECK(g.power(3) == RotationElement::make(one, i));
    CHECK(g.power(12) == RotationElement::identity(N));
    CHECK(g.element_order() == 12);

    RotationElement h = RotationElement::make(e3, one);
    CHECK(h.compose(h) == RotationElement::make(e3 * e3, one));

    std::mt19937 rng(31);
    for (int t = 0; t < 25; ++t) {
        RotationElement a =
            RotationElement::make(random_unit(N, rng), random_unit(N, rng));
        CHECK(a.compose(a.inverse()) == RotationElement::identity(N));
        CHECK(a.inverse().inverse() == a);
    }
}

TEST_CASE("element orders") {
    const int N = 24;
    CHECK(RotationElement::identity(N).element_order() == 1);
    // [j, j e_4]: order-2 representative of the G_1 isotropy coset
    Quaternion j = Quaternion::j(N);
    Quaternion je4 = j * Quaternion::phase(N, 1, 4);
    CHECK(RotationElement::make(j, je4).element_order() == 2);

    CHECK_THROWS_AS(RotationElement::make(Quaternion::phase(N, 1, 3), Quaternion::one(N))
                        .element_order(3),
                    std::runtime_error);
}

TEST_CASE("apply") {
    const int N = 8;
    Quaternion one = Quaternion::one(N), i = Quaternion::i(N), j = Quaternion::j(N);

    // [1, j] maps (z1, z2) -> (-z2, z1); in particular 1 -> j
    CHECK(RotationElement::make(one, j).apply(one) == j);
    CHECK(RotationElement::identity(N).apply(i + j) == i + j);
    // [i, j] fixes i + j
    CHECK(RotationElement::make(i, j).apply(i + j) == i + j);

    std::mt19937 rng(37);
    for (int t = 0; t < 25; ++t) {
        RotationElement g = RotationElement::make(random_unit(N, rng), random_unit(N, rng));
        std::uniform_int_distribution<int> d(-3, 3);
        Quaternion x = Quaternion::from_components(
            rational_vec(N, d(rng), d(rng), d(rng), d(rng)));
        CHECK(g.apply(x).norm_sq() == x.norm_sq());
    }
}

TEST_CASE("to_matrix") {
    const int N = 8;
    CHECK(RotationElement::identity(N).to_matrix() == Mat4::identity(N));

    // J = [i, 1] with rows 0 1 0 0 / -1 0 0 0 / 0 0 0 1 / 0 0 -1 0
    Mat4 J = RotationElement::make(Quaternion::i(N), Quaternion::one(N)).to_matrix();
    int expect[4][4] = {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            CHECK(J.at(r, c) == CycloNumber::from_rational(N, expect[r][c]));

    std::mt19937 rng(41);
    for (int t = 0; t < 20; ++t) {
        RotationElement a = RotationElement::make(random_unit(24, rng), random_unit(24, rng));
        RotationElement b = RotationElement::make(random_unit(24, rng), random_unit(24, rng));
        Mat4 ma = a.to_matrix();
        CHECK(ma.is_orthogonal());
        CHECK(ma.det() == CycloNumber::one(24));
        // homomorphism: compose(a, b) applies b first
        CHECK(a.compose(b).to_matrix() == ma * b.to_matrix());
        // and the action matches the matrix
        CHECK(a.apply(b.apply(Quaternion::j(24))) ==
              Quaternion::from_components(ma * (b.to_matrix() * basis_vec(24, 2))));
    }
}

TEST_CASE("trace_char") {
    const int N = 24;
    CHECK(RotationElement::identity(N).trace_char() ==
          CycloNumber::from_rational(N, 4));
    CHECK(RotationElement::make(Quaternion::i(N), Quaternion::j(N)).trace_char().is_zero());
    // 4 cos(pi/3) = 2
    CHECK(RotationElement::make(Quaternion::phase(N, 1, 3), Quaternion::one(N)).trace_char() ==
          CycloNumber::from_rational(N, 2));

    std::mt19937 rng(43);
    for (int t = 0; t < 30; ++t) {
        RotationElement g = RotationElement::make(random_unit(N, rng), random_unit(N, rng));
        CHECK(g.trace_char() == g.to_matrix().trace());
    }
}

TEST_CASE("fixed_space") {
    const int N = 24;
    Quaternion one = Quaternion::one(N), i = Quaternion::i(N), j = Quaternion::j(N);

    CHECK(RotationElement::identity(N).fixed_space() == Subspace::full(N));

    // [i, j] fixes span{i+j, 1-k}
    Subspace fix = RotationElement::make(i, j).fixed_space();
    CHECK(fix.dim() == 2);
    CHECK(fix.contains(rational_vec(N, 0, 1, 1, 0)));
    CHECK(fix.contains(rational_vec(N, 1, 0, 0, -1)));
    // agrees with the kernel of to_matrix - identity
    CHECK(fix == kernel(RotationElement::make(i, j).to_matrix() - Mat4::identity(N)));

    // nontrivial powers of [e_3, i] fix nothing
    RotationElement h = RotationElement::make(Quaternion::phase(N, 1, 3), i);
    for (int r = 1; r < 12; ++r) CHECK(h.power(r).fixed_space().dim() == 0);

    // -identity is a double rotation
    CHECK(RotationElement::make(-one, one).fixed_space().dim() == 0);

    // degenerate closed-form pair: [i, -i] still has a 2-dimensional fix
    Subspace deg = RotationElement::make(i, -i).fixed_space();
    CHECK(deg.dim() == 2);
    CHECK(deg.contains(rational_vec(N, 0, 0, 1, 0)));
    CHECK(deg.contains(rational_vec(N, 0, 0, 0, 1)));

    std::mt19937 rng(47);
    for (int t = 0; t < 40; ++t) {
        RotationElement g = RotationElement::make(random_unit(N, rng), random_unit(N, rng));
        Subspace f = g.fixed_space();
        CHECK((f.dim() == 0 || f.dim() == 2 || f.dim() == 4));
        bool single = g.left().real_part() == g.right().real_part();
        if (g == RotationElement::identity(N)) {
            CHECK(f.dim() == 4);
        } else {
            CHECK(f.dim() == (single ? 2 : 0));
        }
        CHECK(f == kernel(g.to_matrix() - Mat4::identity(N)));
    }
}

TEST_CASE("order-2 fixed space matches the 1 + a^-1 b, a + b span") {
    const int N = 24;
    std::mt19937 rng(53);
    int found = 0;
    while (found < 12) {
        Quaternion a = random_unit(N, rng), b = random_unit(N, rng);
        RotationElement g = RotationElement::make(a, b);
        if (g == RotationElement::identity(N)) continue;
        if (g.power(2) != RotationElement::identity(N)) continue;
        ++found;
        Quaternion v1 = Quaternion::one(N) + a.conj() * b;
        Quaternion v2 = a + b;
        Subspace s = Subspace::span(N, {v1.components(), v2.components()});
        CHECK(s == g.fixed_space());
    }
}
