#include "so4sym/linalg.hpp"

#include <stdexcept>

namespace so4sym {

Vec4 zero_vec(int order) {
    CycloNumber z = CycloNumber::zero(order);
    return {z, z, z, z};
}

Vec4 basis_vec(int order, int k) {
    Vec4 v = zero_vec(order);
    v[k] = CycloNumber::one(order);
    return v;
}

bool vec_is_zero(const Vec4& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec4 vec_sub(const Vec4& a, const Vec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

Vec4 vec_scaled(const Vec4& a, const CycloNumber& c) {
    return {a[0] * c, a[1] * c, a[2] * c, a[3] * c};
}

// ---- Mat4 ----

Mat4 Mat4::identity(int order) {
    Mat4 m = zero(order);
    for (int i = 0; i < 4; ++i) m.at(i, i) = CycloNumber::one(order);
    return m;
}

Mat4 Mat4::zero(int order) {
    return Mat4(std::vector<CycloNumber>(16, CycloNumber::zero(order)));
}

Mat4 Mat4::operator*(const Mat4& o) const {
    Mat4 r = zero(order());
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < 4; ++j)
                if (!o.at(k, j).is_zero()) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Mat4 Mat4::operator+(const Mat4& o) const {
    Mat4 r = *this;
    for (int i = 0; i < 16; ++i) r.e_[i] += o.e_[i];
    return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
    Mat4 r = *this;
    for (int i = 0; i < 16; ++i) r.e_[i] -= o.e_[i];
    return r;
}

Mat4 Mat4::operator-() const {
    Mat4 r = *this;
    for (int i = 0; i < 16; ++i) r.e_[i] = -r.e_[i];
    return r;
}

Vec4 Mat4::operator*(const Vec4& v) const {
    Vec4 r = zero_vec(order());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Mat4 Mat4::transposed() const {
    Mat4 r = zero(order());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
    return r;
}

CycloNumber Mat4::trace() const {
    return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 3);
}

CycloNumber Mat4::det() const {
    // Laplace expansion along the first row; 4x4 only, exactness over speed
    CycloNumber d = CycloNumber::zero(order());
    for (int j = 0; j < 4; ++j) {
        if (at(0, j).is_zero()) continue;
        int cols[3], c = 0;
        for (int t = 0; t < 4; ++t)
            if (t != j) cols[c++] = t;
        auto m = [&](int a, int b) -> const CycloNumber& { return at(a + 1, cols[b]); };
        CycloNumber minor = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                            m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                            m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CycloNumber term = at(0, j) * minor;
        d = (j % 2 == 0) ? d + term : d - term;
    }
    return d;
}

bool Mat4::is_orthogonal() const {
    return *this * transposed() == identity(order());
}

// ---- RREF machinery ----

namespace {

// in-place reduced row echelon form; returns pivot column per row
std::vector<int> rref_rows(std::vector<Vec4>& rows) {
    std::vector<int> pivots;
    size_t r = 0;
    for (int col = 0; col < 4 && r < rows.size(); ++col) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        CycloNumber inv = rows[r][col].inverse();
        rows[r] = vec_scaled(rows[r], inv);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            CycloNumber f = rows[i][col];
            for (int j = 0; j < 4; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);  // drop zero rows
    return pivots;
}

}  // namespace

// ---- Subspace ----

Subspace Subspace::span(int order, const std::vector<Vec4>& vectors) {
    std::vector<Vec4> rows;
    for (const auto& v : vectors)
        if (!vec_is_zero(v)) rows.push_back(v);
    rref_rows(rows);
    return Subspace(order, std::move(rows));
}

Subspace Subspace::full(int order) {
    std::vector<Vec4> rows;
    for (int k = 0; k < 4; ++k) rows.push_back(basis_vec(order, k));
    return Subspace(order, std::move(rows));
}

bool Subspace::contains(const Vec4& v) const {
    // reduce v against the RREF basis and check the remainder vanishes
    Vec4 w = v;
    for (const auto& row : rows_) {
        int p = 0;
        while (p < 4 && row[p].is_zero()) ++p;
        if (p == 4) continue;
        if (!w[p].is_zero()) {
            CycloNumber f = w[p];
            for (int j = 0; j < 4; ++j) w[j] -= f * row[j];
        }
    }
    return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& row : other.rows_)
        if (!contains(row)) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return order_ == o.order_ && rows_ == o.rows_;
}

Subspace Subspace::complement() const {
    return kernel(order_, rows_);
}

int Subspace::lex_cmp(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim() ? -1 : 1;
    for (size_t i = 0; i < rows_.size(); ++i)
        for (int j = 0; j < 4; ++j) {
            int c = rows_[i][j].lex_cmp(o.rows_[i][j]);
            if (c != 0) return c;
        }
    return 0;
}

Subspace kernel(int order, const std::vector<Vec4>& rows_in) {
    std::vector<Vec4> rows;
    for (const auto& v : rows_in)
        if (!vec_is_zero(v)) rows.push_back(v);
    std::vector<int> pivots = rref_rows(rows);

    std::vector<bool> is_pivot(4, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<Vec4> null_basis;
    for (int freecol = 0; freecol < 4; ++freecol) {
        if (is_pivot[freecol]) continue;
        Vec4 v = zero_vec(order);
        v[freecol] = CycloNumber::one(order);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][freecol];
        null_basis.push_back(std::move(v));
    }
    return Subspace::span(order, null_basis);
}

Subspace kernel(const Mat4& m) {
    std::vector<Vec4> rows;
    for (int i = 0; i < 4; ++i)
        rows.push_back({m.at(i, 0), m.at(i, 1), m.at(i, 2), m.at(i, 3)});
    return kernel(m.order(), rows);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
    if (u.order() != w.order())
        throw std::invalid_argument("intersect: field order mismatch");
    Subspace uc = u.complement(), wc = w.complement();
    std::vector<Vec4> stacked = uc.basis();
    for (const auto& r : wc.basis()) stacked.push_back(r);
    return kernel(u.order(), stacked);
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
    if (u.order() != w.order())
        throw std::invalid_argument("subspace_sum: field order mismatch");
    std::vector<Vec4> all = u.basis();
    for (const auto& r : w.basis()) all.push_back(r);
    return Subspace::span(u.order(), all);
}

}  // namespace so4sym
