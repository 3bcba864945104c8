#include "m0n/determinant.hpp"

#include <stdexcept>
#include <utility>

namespace m0n {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

int det_sign(const RationalMatrix& m) {
    const std::size_t k = m.rows();
    if (k == 0 || m.cols() != k) throw std::invalid_argument("det_sign requires a non-empty square matrix");

    // Scale each row by the lcm of its denominators (positive, so the sign
    // of the determinant is unchanged).
    std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k));
    for (std::size_t r = 0; r < k; ++r) {
        mpz_class scale = 1;
        for (std::size_t c = 0; c < k; ++c) {
            mpz_class den = m(r, c).denominator();
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < k; ++c) {
            a[r][c] = m(r, c).numerator() * (scale / m(r, c).denominator());
        }
    }

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t pr = k, pc = k;
        for (std::size_t r = step; r < k && pr == k; ++r) {
            for (std::size_t c = step; c < k; ++c) {
                if (a[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
            }
        }
        if (pr == k) return 0;
        if (pr != step) {
            std::swap(a[pr], a[step]);
            sign = -sign;
        }
        if (pc != step) {
            for (auto& row : a) std::swap(row[pc], row[step]);
            sign = -sign;
        }
        for (std::size_t r = step + 1; r < k; ++r) {
            for (std::size_t c = step + 1; c < k; ++c) {
                // Division is exact (Sylvester's identity).
                a[r][c] = (a[step][step] * a[r][c] - a[r][step] * a[step][c]) / prev;
            }
            a[r][step] = 0;
        }
        prev = a[step][step];
    }
    return sign * sgn(a[k - 1][k - 1]);
}

}  // namespace m0n
