#pragma once

#include <array>
#include <vector>

#include "so4sym/cyclo.hpp"

namespace so4sym {

using Vec4 = std::array<CycloNumber, 4>;

Vec4 zero_vec(int order);
Vec4 basis_vec(int order, int k);
bool vec_is_zero(const Vec4& v);
Vec4 vec_sub(const Vec4& a, const Vec4& b);
Vec4 vec_scaled(const Vec4& a, const CycloNumber& c);

/// 4x4 matrix over Q(zeta_N), row-major.
class Mat4 {
public:
    static Mat4 identity(int order);
    static Mat4 zero(int order);

    const CycloNumber& at(int i, int j) const { return e_[i * 4 + j]; }
    CycloNumber& at(int i, int j) { return e_[i * 4 + j]; }
    int order() const { return e_[0].order(); }

    Mat4 operator*(const Mat4& o) const;
    Mat4 operator+(const Mat4& o) const;
    Mat4 operator-(const Mat4& o) const;
    Mat4 operator-() const;
    Vec4 operator*(const Vec4& v) const;
    bool operator==(const Mat4& o) const { return e_ == o.e_; }

    Mat4 transposed() const;
    CycloNumber trace() const;
    CycloNumber det() const;
    bool is_orthogonal() const;

private:
    explicit Mat4(std::vector<CycloNumber> e) : e_(std::move(e)) {}
    std::vector<CycloNumber> e_;
};

/// Exact linear subspace of R^4 over the real cyclotomic subfield, stored as
/// a reduced-row-echelon basis. RREF is the canonical form: two subspaces
/// are equal iff their stored bases are identical.
class Subspace {
public:
    /// Canonical span of arbitrary vectors (empty list allowed).
    static Subspace span(int order, const std::vector<Vec4>& vectors);
    static Subspace zero(int order) { return span(order, {}); }
    static Subspace full(int order);

    int dim() const { return static_cast<int>(rows_.size()); }
    int order() const { return order_; }
    const std::vector<Vec4>& basis() const { return rows_; }

    bool contains(const Vec4& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Orthogonal complement w.r.t. the standard dot product; well defined
    /// because the real cyclotomic subfield is formally real.
    Subspace complement() const;

    /// Deterministic total order for dedup containers.
    int lex_cmp(const Subspace& o) const;

private:
    Subspace(int order, std::vector<Vec4> rows) : order_(order), rows_(std::move(rows)) {}
    int order_;
    std::vector<Vec4> rows_;  // RREF, leading coefficient 1
};

struct SubspaceLess {
    bool operator()(const Subspace& a, const Subspace& b) const { return a.lex_cmp(b) < 0; }
};

/// Exact null space {x : M x = 0} of a matrix given by rows.
Subspace kernel(int order, const std::vector<Vec4>& rows);
Subspace kernel(const Mat4& m);

/// U ∩ W via the kernel of the stacked orthogonal-complement system.
Subspace intersect(const Subspace& u, const Subspace& w);

/// Sum U + W (canonical span of the union of bases).
Subspace subspace_sum(const Subspace& u, const Subspace& w);

}  // namespace so4sym
