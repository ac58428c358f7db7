#pragma once

#include <optional>
#include <string>
#include <vector>

#include "so4sym/interval.hpp"
#include "so4sym/rational.hpp"

namespace so4sym {

/// Shared immutable context for the cyclotomic field Q(zeta_N). Holds the
/// cyclotomic polynomial Phi_N and precomputed reduced powers zeta^t for
/// t = 0..N-1, so multiplication and conjugation reduce by table lookup.
///
/// N must be divisible by 4: the in-field imaginary unit zeta^(N/4) is
/// required by every consumer (quaternion components, characters).
class CycloField {
public:
    static const CycloField& get(int order);

    int order() const { return order_; }
    int degree() const { return degree_; }

    /// zeta^t reduced modulo Phi_N, t taken mod N.
    const std::vector<Rational>& power_row(long t) const;

    /// Index of the in-field imaginary unit zeta^(N/4).
    int imaginary_power() const { return order_ / 4; }

private:
    explicit CycloField(int order);

    int order_;
    int degree_;
    std::vector<BigInt> phi_;                      // monic, length degree_+1
    std::vector<std::vector<Rational>> powers_;    // N rows of length degree_
};

/// Exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(deg-1),
/// reduced modulo Phi_N. The representation is unique: two elements are equal
/// iff their coefficient vectors are equal.
class CycloNumber {
public:
    CycloNumber() : field_(nullptr) {}

    static CycloNumber zero(int order);
    static CycloNumber one(int order);
    static CycloNumber from_rational(int order, const Rational& q);
    /// zeta_N^k, k taken mod N.
    static CycloNumber root_power(int order, long k);
    /// The in-field imaginary unit i = zeta_N^(N/4).
    static CycloNumber imaginary_unit(int order);

    bool valid() const { return field_ != nullptr; }
    int order() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    CycloNumber operator+(const CycloNumber& o) const;
    CycloNumber operator-(const CycloNumber& o) const;
    CycloNumber operator-() const;
    CycloNumber operator*(const CycloNumber& o) const;
    /// Exact division; the inverse comes from the extended-gcd of the
    /// representative polynomial with Phi_N.
    CycloNumber operator/(const CycloNumber& o) const;
    CycloNumber inverse() const;

    CycloNumber operator*(const Rational& q) const;
    CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
    CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
    CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }

    bool operator==(const CycloNumber& o) const;
    bool operator!=(const CycloNumber& o) const { return !(*this == o); }

    /// Image under the automorphism zeta -> zeta^(N-1); involutive.
    CycloNumber conjugate() const;

    bool is_zero() const;
    /// Fixed by conjugation.
    bool is_real() const;
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    /// Embeds into Q(zeta_M) for N | M via zeta_N = zeta_M^(M/N).
    CycloNumber embed(int larger_order) const;

    /// Certified enclosure of the image under zeta_N -> e^(2*pi*i/N).
    ComplexInterval numeric_eval(long precision_bits = 64) const;
    std::complex<double> to_complex() const { return numeric_eval().midpoint(); }
    double to_double() const;

    /// Exact sign of a real element: symbolic zero test first, then
    /// interval refinement until zero is excluded.
    int sign_real() const;

    /// (numerator, denominator) lexicographic order on coefficient vectors;
    /// canonical-form tie breaking only, unrelated to real ordering.
    int lex_cmp(const CycloNumber& o) const;

    std::string to_string() const;

private:
    CycloNumber(const CycloField* field, std::vector<Rational> coeffs)
        : field_(field), coeffs_(std::move(coeffs)) {}

    const CycloField* field_;
    std::vector<Rational> coeffs_;
};

inline CycloNumber operator*(const Rational& q, const CycloNumber& a) { return a * q; }

/// Spec-facing aliases for the field operations.
CycloNumber root_power(int order, long k);
CycloNumber conjugate(const CycloNumber& a);

/// Exact comparison of real elements: -1, 0, +1.
int compare_real(const CycloNumber& a, const CycloNumber& b);
CycloNumber abs_real(const CycloNumber& a);

}  // namespace so4sym
