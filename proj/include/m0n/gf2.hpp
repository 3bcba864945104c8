// Dense bit-packed matrices over the two-element field.
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace m0n {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool v = true);
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    BitVector& operator^=(const BitVector& rhs);
    bool any() const;
    std::size_t count() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }
    const BitVector& row(std::size_t r) const { return rows_[r]; }

    static GF2Matrix identity(std::size_t k);

    /// M x. Throws std::invalid_argument on a shape mismatch.
    BitVector multiply(const BitVector& x) const;
    /// Throws std::invalid_argument unless cols() == rhs.rows().
    GF2Matrix operator*(const GF2Matrix& rhs) const;
    bool is_zero() const;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

std::size_t rank_gf2(const GF2Matrix& m);

/// Whether M x = v has a solution. Throws std::invalid_argument when
/// v.size() != m.rows().
bool in_image(const GF2Matrix& m, const BitVector& v);

}  // namespace m0n
