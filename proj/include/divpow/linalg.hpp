#ifndef DIVPOW_LINALG_HPP
#define DIVPOW_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "divpow/field.hpp"

namespace divpow {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(FieldSpec f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

inline Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

inline Vec scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline bool is_zero_vec(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

/// Dense row-major matrix over a Scalar field.
struct Mat {
    std::size_t rows = 0, cols = 0;
    FieldSpec field;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(FieldSpec f, std::size_t r, std::size_t c)
        : rows(r), cols(c), field(f), a(r * c, Scalar::zero(f)) {}

    Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Mat identity(FieldSpec f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    Vec row(std::size_t i) const { return Vec(a.begin() + i * cols, a.begin() + (i + 1) * cols); }
    Vec col(std::size_t j) const {
        Vec v;
        v.reserve(rows);
        for (std::size_t i = 0; i < rows; ++i) v.push_back(at(i, j));
        return v;
    }
    void set_col(std::size_t j, const Vec& v) {
        for (std::size_t i = 0; i < rows; ++i) at(i, j) = v[i];
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline Vec mat_vec(const Mat& m, const Vec& v) {
    Vec r = zero_vec(m.field, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
    return r;
}

inline Mat mat_mul(const Mat& x, const Mat& y) {
    Mat r(x.field, x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                if (!y.at(k, j).is_zero()) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

/// In-place reduced row echelon form; returns the pivot column of each
/// surviving row, in ascending order.
inline std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t sel = r;
        while (sel < m.rows && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
inline std::vector<Vec> kernel_basis(Mat m) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(m.field, m.cols);
        v[c] = Scalar::one(m.field);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) return std::nullopt;
    Mat aug(m.field, m.rows, 2 * m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols + i) = Scalar::one(m.field);
    }
    auto pivots = rref(aug);
    if (pivots.size() != m.rows) return std::nullopt;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] != i) return std::nullopt;
    Mat inv(m.field, m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) inv.at(i, j) = aug.at(i, m.cols + j);
    return inv;
}

/// Solve m x = b; nullopt when inconsistent. Free variables are set to zero.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    Mat aug(m.field, m.rows, m.cols + 1);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
    Vec x = zero_vec(m.field, m.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols);
    return x;
}

inline Scalar det(Mat m) {
    if (m.rows != m.cols) throw validation_error("determinant of non-square matrix");
    Scalar d = Scalar::one(m.field);
    for (std::size_t c = 0; c < m.cols; ++c) {
        std::size_t sel = c;
        while (sel < m.rows && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows) return Scalar::zero(m.field);
        if (sel != c) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Scalar inv = m.at(c, c).inverse();
        for (std::size_t i = c + 1; i < m.rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) * inv;
            for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

/// A linear subspace of k^n kept in reduced row echelon form at all times,
/// rows ordered by ascending pivot. Two subspaces are equal iff their row
/// lists are identical.
class Subspace {
public:
    Subspace(FieldSpec f, std::size_t ambient) : field_(f), ambient_(ambient) {}

    static Subspace span(FieldSpec f, std::size_t ambient, const std::vector<Vec>& gens) {
        Subspace s(f, ambient);
        for (const auto& g : gens) s.insert(g);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    FieldSpec field() const { return field_; }

    /// Reduce v modulo the subspace (Gauss-Jordan against stored rows).
    Vec reduce(Vec v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Scalar& c = v[pivots_[i]];
            if (!c.is_zero()) v = sub(v, scale(c, rows_[i]));
        }
        return v;
    }

    bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

    bool contains(const Subspace& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    /// Insert a vector; returns true if the dimension grew.
    bool insert(const Vec& v) {
        Vec red = reduce(v);
        std::size_t p = 0;
        while (p < ambient_ && red[p].is_zero()) ++p;
        if (p == ambient_) return false;
        red = scale(red[p].inverse(), red);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Scalar& c = rows_[i][p];
            if (!c.is_zero()) rows_[i] = sub(rows_[i], scale(c, red));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(red));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    FieldSpec field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace divpow

#endif
