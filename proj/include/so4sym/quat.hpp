#pragma once

#include <string>

#include "so4sym/linalg.hpp"

namespace so4sym {

/// Quaternion x1 + i x2 + j x3 + k x4 with real cyclotomic components.
class Quaternion {
public:
    static Quaternion zero(int order);
    static Quaternion one(int order);
    static Quaternion i(int order);
    static Quaternion j(int order);
    static Quaternion k(int order);
    /// e^(i*pi*num/den) = cos(pi*num/den) + i sin(pi*num/den); requires 2*den | N.
    static Quaternion phase(int order, long num, long den);
    /// Validating constructor: all four components must be conjugation-fixed.
    static Quaternion from_components(const Vec4& c);

    const Vec4& components() const { return c_; }
    const CycloNumber& real_part() const { return c_[0]; }
    int order() const { return c_[0].order(); }

    Quaternion operator*(const Quaternion& o) const;  // Hamilton product
    Quaternion operator+(const Quaternion& o) const;
    Quaternion operator-(const Quaternion& o) const;
    Quaternion operator-() const;
    Quaternion scaled(const CycloNumber& s) const;
    Quaternion conj() const;

    CycloNumber norm_sq() const;
    bool is_unit() const;
    Quaternion embed(int larger_order) const;
    bool operator==(const Quaternion& o) const { return c_ == o.c_; }
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    explicit Quaternion(Vec4 c) : c_(std::move(c)) {}
    Vec4 c_;
};

/// SO(4) element [l, r] acting by x -> conj(l) x r, stored in canonical sign:
/// of the representatives (l, r) and (-l, -r) we keep the one whose first
/// nonzero coefficient is positive, so [-l, -r] and [l, r] compare equal.
class RotationElement {
public:
    static RotationElement make(const Quaternion& l, const Quaternion& r);
    static RotationElement identity(int order);

    const Quaternion& left() const { return l_; }
    const Quaternion& right() const { return r_; }
    int order_field() const { return l_.order(); }

    /// a.compose(b) acts as a after b: apply(compose(a,b), x) = apply(a, apply(b, x)).
    /// Under this convention to_matrix is a group homomorphism.
    RotationElement compose(const RotationElement& b) const;
    RotationElement inverse() const;
    RotationElement power(long n) const;

    Quaternion apply(const Quaternion& x) const;
    Vec4 apply(const Vec4& x) const;

    /// Columns are the images of the basis 1, i, j, k.
    Mat4 to_matrix() const;

    /// Character of the natural representation; closed form 4 Re(l) Re(r),
    /// equal to trace(to_matrix()).
    CycloNumber trace_char() const;

    /// Least n >= 1 with g^n = identity; throws when cap is exceeded.
    int element_order(int cap = 100000) const;

    /// Exact fixed-point space: R^4 for the identity, 0 for double rotations
    /// (Re l != Re r), and the plane spanned by l - conj(r) and 1 - conj(l)conj(r)
    /// for single rotations, with an exact kernel fallback when that pair
    /// degenerates.
    Subspace fixed_space() const;

    /// Re-canonicalized image in Q(zeta_M), N | M.
    RotationElement embed(int larger_order) const;

    bool operator==(const RotationElement& o) const { return l_ == o.l_ && r_ == o.r_; }
    bool operator!=(const RotationElement& o) const { return !(*this == o); }
    int lex_cmp(const RotationElement& o) const;

    std::string to_string() const;

private:
    RotationElement(Quaternion l, Quaternion r) : l_(std::move(l)), r_(std::move(r)) {}
    Quaternion l_, r_;
};

struct RotationElementLess {
    bool operator()(const RotationElement& a, const RotationElement& b) const {
        return a.lex_cmp(b) < 0;
    }
};

inline RotationElement compose(const RotationElement& a, const RotationElement& b) {
    return a.compose(b);
}

}  // namespace so4sym
