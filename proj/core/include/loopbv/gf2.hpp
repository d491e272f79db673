#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace loopbv {

/// Dense matrix over F_2, rows packed into 64-bit words.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    void flip(std::size_t r, std::size_t c);

    /// Rank by Gaussian elimination on a copy.
    std::size_t rank() const;
    /// Number of row vectors y with y * M = 0, as a dimension: rows() - rank().
    std::size_t left_kernel_dimension() const { return rows_ - rank(); }

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    using Word = std::uint64_t;
    static constexpr std::size_t kBits = 64;

    std::size_t words_per_row() const { return (cols_ + kBits - 1) / kBits; }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Word> data_;
};

} // namespace loopbv
