#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stabforge/gf.hpp"

namespace stabforge::linalg {

using Vec = std::vector<std::uint32_t>;
using Mat = std::vector<Vec>;

// In-place reduced row echelon form; returns the pivot columns.
// Row order and the free-variable convention are fixed (leftmost pivots
// first), so every caller sees one deterministic parametrization.
inline std::vector<std::size_t> rref(const Field& F, Mat& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::uint32_t f = F.inv(a[r][col]);
        for (std::size_t j = col; j < cols; ++j) a[r][j] = F.mul(a[r][j], f);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][col] == 0) continue;
            std::uint32_t g = a[i][col];
            for (std::size_t j = col; j < cols; ++j)
                a[i][j] = F.sub(a[i][j], F.mul(g, a[r][j]));
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(const Field& F, Mat a) { return rref(F, a).size(); }

// One solution of A x = b, free variables pinned to zero in column order;
// nullopt when inconsistent.
inline std::optional<Vec> solve(const Field& F, const Mat& a, const Vec& b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Mat aug(rows, Vec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(F, aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

// Basis of {x : A x = 0}, one row per free column, deterministic order.
inline Mat nullspace(const Field& F, Mat a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size();
    auto pivots = rref(F, a);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Mat basis;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        Vec v(cols, 0);
        v[j] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(a[r][j]);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Vec mat_vec(const Field& F, const Mat& a, const Vec& x) {
    Vec out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint32_t acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j) acc = F.add(acc, F.mul(a[i][j], x[j]));
        out[i] = acc;
    }
    return out;
}

inline Vec vec_mat(const Field& F, const Vec& x, const Mat& a) {
    if (a.empty()) return {};
    Vec out(a[0].size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = F.add(out[j], F.mul(x[i], a[i][j]));
    }
    return out;
}

inline Vec scaled(const Field& F, std::uint32_t c, const Vec& v) {
    Vec out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = F.mul(c, v[j]);
    return out;
}

inline Vec add(const Field& F, const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = F.add(a[j], b[j]);
    return out;
}

// Incrementally maintained row space in reduced echelon form. insert()
// reports whether the row extended the space; contains() is a membership
// test against the current space.
class EchelonBasis {
public:
    EchelonBasis(FieldPtr f, std::size_t width) : f_(std::move(f)), width_(width) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const Mat& rows() const { return rows_; }

    bool contains(const Vec& v) const { return reduce(v).second; }

    bool insert(const Vec& v) {
        auto [red, member] = reduce(v);
        if (member) return false;
        std::size_t lead = 0;
        while (red[lead] == 0) ++lead;
        std::uint32_t f = f_->inv(red[lead]);
        for (auto& e : red) e = f_->mul(e, f);
        for (auto& row : rows_) {
            if (row[lead] == 0) continue;
            std::uint32_t g = row[lead];
            for (std::size_t j = 0; j < width_; ++j) row[j] = f_->sub(row[j], f_->mul(g, red[j]));
        }
        auto pos = rows_.begin();
        while (pos != rows_.end() && lead_of(*pos) < lead) ++pos;
        rows_.insert(pos, std::move(red));
        return true;
    }

    // Canonical coset representative: v reduced by the stored rows.
    Vec reduce_vector(const Vec& v) const { return reduce(v).first; }

private:
    static std::size_t lead_of(const Vec& r) {
        std::size_t j = 0;
        while (j < r.size() && r[j] == 0) ++j;
        return j;
    }

    std::pair<Vec, bool> reduce(Vec v) const {
        for (const auto& row : rows_) {
            std::size_t lead = lead_of(row);
            if (v[lead] == 0) continue;
            std::uint32_t g = v[lead];
            for (std::size_t j = lead; j < width_; ++j) v[j] = f_->sub(v[j], f_->mul(g, row[j]));
        }
        bool zero = true;
        for (auto e : v)
            if (e) {
                zero = false;
                break;
            }
        return {std::move(v), zero};
    }

    FieldPtr f_;
    std::size_t width_;
    Mat rows_;  // kept reduced, sorted by leading column
};

}  // namespace stabforge::linalg
