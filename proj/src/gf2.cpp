#include "blch/gf2.hpp"

#include <algorithm>
#include <utility>

#include "blch/errors.hpp"

namespace blch::gf2 {

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<Vec>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw InputError("gf2: ragged row lengths in from_rows");
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j]) m.set(i, j, true);
    }
    return m;
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < stride_; ++k)
        std::swap(words_[a * stride_ + k], words_[b * stride_ + k]);
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

Vec BitMatrix::mul(const Vec& v) const {
    if (v.size() != cols_) throw InputError("gf2: dimension mismatch in mul");
    Vec out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint8_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc ^= (get(r, c) & (v[c] & 1));
        out[r] = acc;
    }
    return out;
}

namespace {

struct Echelon {
    BitMatrix m;
    std::vector<std::size_t> pivot_cols;  // one entry per pivot row
};

// Reduced row echelon form. Pivots are chosen as the first nonzero entry in
// row-major scan order, which keeps every derived basis reproducible.
Echelon reduce(BitMatrix m) {
    Echelon e{std::move(m), {}};
    std::size_t row = 0;
    for (std::size_t col = 0; col < e.m.cols() && row < e.m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < e.m.rows() && !e.m.get(pr, col)) ++pr;
        if (pr == e.m.rows()) continue;
        e.m.swap_rows(pr, row);
        for (std::size_t r = 0; r < e.m.rows(); ++r)
            if (r != row && e.m.get(r, col)) e.m.xor_row_into(r, row);
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

std::size_t rank(const BitMatrix& m) { return reduce(m).pivot_cols.size(); }

std::vector<Vec> nullspace_basis(const BitMatrix& m) {
    const Echelon e = reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            if (e.m.get(r, free)) v[e.pivot_cols[r]] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const BitMatrix& m, const Vec& b) {
    if (b.size() != m.rows())
        throw InputError("gf2: right-hand side length does not match row count");

    BitMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) aug.set(r, c, true);
        if (b[r] & 1) aug.set(r, m.cols(), true);
    }

    const Echelon e = reduce(std::move(aug));
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        if (e.pivot_cols[r] == m.cols()) return std::nullopt;  // 0 = 1 row

    Vec x(m.cols(), 0);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        if (e.m.get(r, m.cols())) x[e.pivot_cols[r]] = 1;
    return x;
}

}  // namespace blch::gf2
