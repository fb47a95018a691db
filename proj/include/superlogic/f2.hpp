#pragma once

// Dense GF(2) matrices with bit-packed rows: just enough linear algebra for
// cochain complexes (multiply, rank by Gaussian elimination).

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace superlogic {

class f2_matrix {
public:
    f2_matrix() = default;
    f2_matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          bits_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool at(std::size_t r, std::size_t c) const {
        return (word(r, c / 64) >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value) {
        std::uint64_t& w = word(r, c / 64);
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        w = value ? (w | mask) : (w & ~mask);
    }

    bool is_zero() const {
        for (auto w : bits_)
            if (w) return false;
        return true;
    }

    f2_matrix multiply(const f2_matrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw std::invalid_argument("f2_matrix: dimension mismatch in multiply");
        f2_matrix out(rows_, rhs.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k)
                if (at(r, k))
                    for (std::size_t w = 0; w < rhs.words_per_row_; ++w)
                        out.word(r, w) ^= rhs.word(k, w);
        return out;
    }

    std::size_t rank() const {
        f2_matrix m = *this;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pivot = r;
            while (pivot < rows_ && !m.at(pivot, c)) ++pivot;
            if (pivot == rows_) continue;
            m.swap_rows(r, pivot);
            for (std::size_t i = 0; i < rows_; ++i)
                if (i != r && m.at(i, c)) m.xor_row(i, r);
            ++r;
        }
        return r;
    }

    bool operator==(const f2_matrix&) const = default;

private:
    std::uint64_t& word(std::size_t r, std::size_t w) {
        return bits_[r * words_per_row_ + w];
    }
    const std::uint64_t& word(std::size_t r, std::size_t w) const {
        return bits_[r * words_per_row_ + w];
    }
    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t w = 0; w < words_per_row_; ++w)
            std::swap(word(a, w), word(b, w));
    }
    void xor_row(std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words_per_row_; ++w)
            word(dst, w) ^= word(src, w);
    }

    std::size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace superlogic
