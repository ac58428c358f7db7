#include "so4sym/quat.hpp"

#include <sstream>
#include <stdexcept>

namespace so4sym {

// ---- Quaternion ----

Quaternion Quaternion::zero(int order) { return Quaternion(zero_vec(order)); }

Quaternion Quaternion::one(int order) { return Quaternion(basis_vec(order, 0)); }
Quaternion Quaternion::i(int order) { return Quaternion(basis_vec(order, 1)); }
Quaternion Quaternion::j(int order) { return Quaternion(basis_vec(order, 2)); }
Quaternion Quaternion::k(int order) { return Quaternion(basis_vec(order, 3)); }

Quaternion Quaternion::phase(int order, long num, long den) {
    if (den <= 0 || order % (2 * den) != 0)
        throw std::invalid_argument("Quaternion::phase: 2*den must divide the field order");
    // e^(i*pi*num/den) = zeta_N^(num*N/(2 den)); real and imaginary parts via
    // the conjugate pair, with 1/i = -zeta^(N/4)
    long t = num * (order / (2 * den));
    CycloNumber z = CycloNumber::root_power(order, t);
    CycloNumber zc = CycloNumber::root_power(order, -t);
    Rational half(1, 2);
    CycloNumber re = (z + zc) * half;
    CycloNumber im = (z - zc) * half * (-CycloNumber::imaginary_unit(order));
    Vec4 c = zero_vec(order);
    c[0] = re;
    c[1] = im;
    return Quaternion(std::move(c));
}

Quaternion Quaternion::from_components(const Vec4& c) {
    for (const auto& x : c)
        if (!x.is_real())
            throw std::invalid_argument("Quaternion: components must be real (conjugation-fixed)");
    return Quaternion(c);
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
    const Vec4& a = c_;
    const Vec4& b = o.c_;
    Vec4 r = {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
              a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
              a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
              a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
    return Quaternion(std::move(r));
}

Quaternion Quaternion::operator+(const Quaternion& o) const {
    return Quaternion({c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]});
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
    return Quaternion(vec_sub(c_, o.c_));
}

Quaternion Quaternion::operator-() const {
    return Quaternion({-c_[0], -c_[1], -c_[2], -c_[3]});
}

Quaternion Quaternion::scaled(const CycloNumber& s) const {
    return Quaternion(vec_scaled(c_, s));
}

Quaternion Quaternion::conj() const {
    return Quaternion({c_[0], -c_[1], -c_[2], -c_[3]});
}

CycloNumber Quaternion::norm_sq() const {
    return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

bool Quaternion::is_unit() const {
    return norm_sq() == CycloNumber::one(order());
}

Quaternion Quaternion::embed(int larger_order) const {
    return Quaternion({c_[0].embed(larger_order), c_[1].embed(larger_order),
                       c_[2].embed(larger_order), c_[3].embed(larger_order)});
}

std::string Quaternion::to_string() const {
    static const char* names[4] = {"", "i", "j", "k"};
    std::ostringstream os;
    bool any = false;
    for (int t = 0; t < 4; ++t) {
        if (c_[t].is_zero()) continue;
        if (any) os << " + ";
        os << "(" << c_[t].to_string() << ")" << names[t];
        any = true;
    }
    if (!any) os << "0";
    return os.str();
}

// ---- RotationElement ----

RotationElement RotationElement::make(const Quaternion& l, const Quaternion& r) {
    if (l.order() != r.order())
        throw std::invalid_argument("RotationElement: field order mismatch");
    if (!l.is_unit() || !r.is_unit())
        throw std::invalid_argument("RotationElement: l and r must be unit quaternions");
    // canonical sign: first nonzero coefficient over (l, r) positive
    for (const Quaternion* q : {&l, &r})
        for (const auto& comp : q->components())
            for (const auto& coeff : comp.coeffs()) {
                if (coeff == 0) continue;
                if (coeff < 0) return RotationElement(-l, -r);
                return RotationElement(l, r);
            }
    throw std::logic_error("RotationElement: zero quaternion slipped through");
}

RotationElement RotationElement::identity(int order) {
    return RotationElement(Quaternion::one(order), Quaternion::one(order));
}

RotationElement RotationElement::compose(const RotationElement& b) const {
    // apply b first: conj(l_b l_a) x (r_b r_a) = conj(l_a)(conj(l_b) x r_b) r_a
    return make(b.l_ * l_, b.r_ * r_);
}

RotationElement RotationElement::inverse() const {
    return make(l_.conj(), r_.conj());
}

RotationElement RotationElement::power(long n) const {
    RotationElement acc = identity(order_field());
    RotationElement base = *this;
    bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1) acc = acc.compose(base);
        base = base.compose(base);
        e >>= 1;
    }
    return invert ? acc.inverse() : acc;
}

Quaternion RotationElement::apply(const Quaternion& x) const {
    return (l_.conj() * x) * r_;
}

Vec4 RotationElement::apply(const Vec4& x) const {
    return apply(Quaternion::from_components(x)).components();
}

Mat4 RotationElement::to_matrix() const {
    const int n = order_field();
    Mat4 m = Mat4::zero(n);
    const Quaternion basis[4] = {Quaternion::one(n), Quaternion::i(n), Quaternion::j(n),
                                 Quaternion::k(n)};
    for (int col = 0; col < 4; ++col) {
        Quaternion img = apply(basis[col]);
        for (int row = 0; row < 4; ++row) m.at(row, col) = img.components()[row];
    }
    return m;
}

CycloNumber RotationElement::trace_char() const {
    return l_.real_part() * r_.real_part() * Rational(4);
}

int RotationElement::element_order(int cap) const {
    RotationElement id = identity(order_field());
    RotationElement g = *this;
    for (int n = 1; n <= cap; ++n) {
        if (g == id) return n;
        g = g.compose(*this);
    }
    throw std::runtime_error("element_order: cap of " + std::to_string(cap) + " exceeded");
}

Subspace RotationElement::fixed_space() const {
    const int n = order_field();
    if (*this == identity(n)) return Subspace::full(n);
    // single rotations have Re(l) = Re(r); everything else fixes only 0
    if (l_.real_part() != r_.real_part()) return Subspace::zero(n);
    Quaternion v1 = l_ - r_.conj();
    Quaternion v2 = Quaternion::one(n) - l_.conj() * r_.conj();
    Subspace s = Subspace::span(n, {v1.components(), v2.components()});
    if (s.dim() == 2) return s;
    // degenerate spanning pair (e.g. l = conj(r)); fall back to the kernel
    return kernel(to_matrix() - Mat4::identity(n));
}

RotationElement RotationElement::embed(int larger_order) const {
    return make(l_.embed(larger_order), r_.embed(larger_order));
}

int RotationElement::lex_cmp(const RotationElement& o) const {
    for (int t = 0; t < 4; ++t) {
        int c = l_.components()[t].lex_cmp(o.l_.components()[t]);
        if (c != 0) return c;
    }
    for (int t = 0; t < 4; ++t) {
        int c = r_.components()[t].lex_cmp(o.r_.components()[t]);
        if (c != 0) return c;
    }
    return 0;
}

std::string RotationElement::to_string() const {
    return "[" + l_.to_string() + ", " + r_.to_string() + "]";
}

}  // namespace so4sym
