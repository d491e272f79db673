#include "loopbv/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace loopbv {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * ((cols + kBits - 1) / kBits), 0)
{
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("Gf2Matrix index");
    return (data_[r * words_per_row() + c / kBits] >> (c % kBits)) & 1U;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool value)
{
    if (get(r, c) != value)
        flip(r, c);
}

void Gf2Matrix::flip(std::size_t r, std::size_t c)
{
    if (r >= rows_ || c >= cols_)
        throw std::out_of_range("Gf2Matrix index");
    data_[r * words_per_row() + c / kBits] ^= Word{1} << (c % kBits);
}

std::size_t Gf2Matrix::rank() const
{
    const std::size_t wpr = words_per_row();
    std::vector<Word> m = data_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        const std::size_t word = col / kBits;
        const Word bit = Word{1} << (col % kBits);
        std::size_t pivot = rank;
        while (pivot < rows_ && !(m[pivot * wpr + word] & bit))
            ++pivot;
        if (pivot == rows_)
            continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < wpr; ++k)
                std::swap(m[pivot * wpr + k], m[rank * wpr + k]);
        for (std::size_t r = rank + 1; r < rows_; ++r)
            if (m[r * wpr + word] & bit)
                for (std::size_t k = word; k < wpr; ++k)
                    m[r * wpr + k] ^= m[rank * wpr + k];
        ++rank;
    }
    return rank;
}

} // namespace loopbv
