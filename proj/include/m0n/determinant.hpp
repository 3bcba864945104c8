#pragma once

#include "m0n/rational.hpp"

#include <cstddef>
#include <vector>

namespace m0n {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact sign of det(m) in {-1, 0, +1}. Rows are cleared of denominators by
/// positive scalings, then reduced with Bareiss fraction-free elimination
/// over the integers using a full pivot search.
/// Throws std::invalid_argument for non-square or empty input.
int det_sign(const RationalMatrix& m);

}  // namespace m0n
