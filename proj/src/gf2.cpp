#include "m0n/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace m0n {

void BitVector::set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v) words_[i / 64] |= mask;
    else words_[i / 64] &= ~mask;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
    if (rhs.size_ != size_) throw std::invalid_argument("bit vector size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
    return *this;
}

bool BitVector::any() const {
    for (auto w : words_) {
        if (w != 0) return true;
    }
    return false;
}

std::size_t BitVector::count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

GF2Matrix GF2Matrix::identity(std::size_t k) {
    GF2Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i);
    return m;
}

BitVector GF2Matrix::multiply(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("shape mismatch in GF(2) matrix-vector product");
    BitVector out(rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        bool parity = false;
        for (std::size_t c = 0; c < cols_; ++c) parity ^= rows_[r].test(c) && x.test(c);
        out.set(r, parity);
    }
    return out;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& rhs) const {
    if (cols_ != rhs.rows()) throw std::invalid_argument("shape mismatch in GF(2) matrix product");
    GF2Matrix out(rows(), rhs.cols());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            if (get(r, k)) out.rows_[r] ^= rhs.rows_[k];
        }
    }
    return out;
}

bool GF2Matrix::is_zero() const {
    for (const auto& r : rows_) {
        if (r.any()) return false;
    }
    return true;
}

std::size_t rank_gf2(const GF2Matrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].test(c)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r].test(c)) rows[r] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

bool in_image(const GF2Matrix& m, const BitVector& v) {
    if (v.size() != m.rows()) throw std::invalid_argument("shape mismatch in in_image");
    GF2Matrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) augmented.set(r, c);
        }
        if (v.test(r)) augmented.set(r, m.cols());
    }
    return rank_gf2(augmented) == rank_gf2(m);
}

}  // namespace m0n
