#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace blch::gf2 {

// A GF(2) vector with one byte per entry (values 0 or 1).
using Vec = std::vector<std::uint8_t>;

// Dense GF(2) matrix; each row is bit-packed into 64-bit words so that row
// operations in Gaussian elimination are word-level XORs.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows),
          cols_(cols),
          stride_((cols + 63) / 64),
          words_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (words_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = words_[r * stride_ + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        if (v)
            w |= bit;
        else
            w &= ~bit;
    }

    void xor_row_into(std::size_t dst, std::size_t src) {
        for (std::size_t k = 0; k < stride_; ++k)
            words_[dst * stride_ + k] ^= words_[src * stride_ + k];
    }
    void swap_rows(std::size_t a, std::size_t b);

    BitMatrix transposed() const;
    Vec mul(const Vec& v) const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dimension of the row space.
std::size_t rank(const BitMatrix& m);

// Independent vectors spanning {v : m*v = 0}; size is cols - rank.
std::vector<Vec> nullspace_basis(const BitMatrix& m);

// One solution of m*x = b, or an empty optional when the system is
// inconsistent. Free variables are set to zero, so the result is
// deterministic. Throws InputError when b.size() != m.rows().
std::optional<Vec> solve(const BitMatrix& m, const Vec& b);

}  // namespace blch::gf2
