#include "m0n/swclass.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

using namespace m0n;

namespace {

// Rank via the size of the column span, for small column counts.
std::size_t rank_by_span(const GF2Matrix& m) {
    std::set<std::vector<bool>> span;
    for (std::uint32_t mask = 0; mask < (1U << m.cols()); ++mask) {
        BitVector x(m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) x.set(i, (mask >> i) & 1U);
        const BitVector y = m.multiply(x);
        std::vector<bool> bits(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) bits[r] = y.test(r);
        span.insert(bits);
    }
    std::size_t r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

GF2Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int density_percent) {
    std::uniform_int_distribution<int> pct(0, 99);
    GF2Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, pct(rng) < density_percent);
    }
    return m;
}

FacetSplit split_with_k(int n, const std::vector<int>& k) {
    std::vector<int> word;
    for (int label = 1; label <= n; ++label) {
        if (std::find(k.begin(), k.end(), label) == k.end()) word.push_back(label);
    }
    const int l = static_cast<int>(word.size());
    word.insert(word.end(), k.begin(), k.end());
    return facet_split(make_polygon(word, {Arc{l, static_cast<int>(k.size())}}));
}

}  // namespace

TEST_CASE("theta criterion") {
    CHECK(theta_criterion(split_with_k(5, {3, 4, 5})));
    CHECK_FALSE(theta_criterion(split_with_k(5, {3, 4})));
    CHECK_FALSE(theta_criterion(split_with_k(5, {4, 5})));
    CHECK_FALSE(theta_criterion(split_with_k(7, {1, 6})));
    CHECK(theta_criterion(split_with_k(6, {4, 5, 6})));
    CHECK(theta_criterion(split_with_k(6, {1, 5, 6})));
    CHECK_FALSE(theta_criterion(split_with_k(6, {5, 6})));
    CHECK_FALSE(theta_criterion(split_with_k(6, {3, 4, 5, 6})));
}

TEST_CASE("theta by the criterion for small n") {
    CHECK(theta_by_criterion(enumerate_cells(4)).support.empty());
    CHECK(theta_by_criterion(enumerate_cells(4)).dimension == 0);

    const auto c5 = enumerate_cells(5);
    const auto theta5 = theta_by_criterion(c5);
    CHECK(theta5.dimension == 1);
    CHECK(theta5.support.size() == 9);
    // Pair {i, j} of {1,2,3} on one side, the other three points on the other.
    std::set<CellKey> expected;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        std::vector<int> rest;
        for (int label = 1; label <= 5; ++label) {
            if (label != i && label != j) rest.push_back(label);
        }
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> word{i, j};
            word.insert(word.end(), rest.begin(), rest.end());
            expected.insert(canonical_key(make_polygon(word, {Arc{2, 3}})));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    CHECK(expected.size() == 9);
    CHECK(theta5.support == expected);

    CHECK(theta_by_criterion(enumerate_cells(6)).support.size() == 90);
}

TEST_CASE("chain addition is symmetric difference") {
    const auto c = enumerate_cells(5);
    auto it = c.cells[1].begin();
    const CellKey a = (it++)->first;
    const CellKey b = (it++)->first;
    GF2Chain x{1, {a, b}};
    x += GF2Chain{1, {b}};
    CHECK(x.support == std::set<CellKey>{a});
    x += x;
    CHECK(x.support.empty());
}

TEST_CASE("GF(2) rank and image") {
    CHECK(rank_gf2(GF2Matrix(4, 6)) == 0);
    CHECK(rank_gf2(GF2Matrix::identity(5)) == 5);
    CHECK(rank_gf2(GF2Matrix::identity(70)) == 70);
    CHECK(rank_gf2(GF2Matrix(0, 3)) == 0);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
        const auto m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 20 : 50);
        CHECK(rank_gf2(m) == rank_by_span(m));

        BitVector x(cols);
        for (std::size_t i = 0; i < cols; ++i) x.set(i, rng() & 1U);
        CHECK(in_image(m, m.multiply(x)));
    }

    // e_2 is not in the span of e_0 + e_1 and e_1.
    GF2Matrix m(3, 2);
    m.set(0, 0);
    m.set(1, 0);
    m.set(1, 1);
    BitVector v(3);
    v.set(2);
    CHECK_FALSE(in_image(m, v));
    v.set(2, false);
    v.set(0);
    CHECK(in_image(m, v));

    CHECK_THROWS_AS(in_image(m, BitVector(2)), std::invalid_argument);
    CHECK_THROWS_AS(m.multiply(BitVector(3)), std::invalid_argument);
    CHECK_THROWS_AS(m * m, std::invalid_argument);
}

TEST_CASE("matrix product over GF(2)") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_matrix(rng, 7, 70, 40);
        const auto b = random_matrix(rng, 70, 5, 40);
        const auto ab = a * b;
        for (std::size_t r = 0; r < 7; ++r) {
            for (std::size_t c = 0; c < 5; ++c) {
                bool want = false;
                for (std::size_t k = 0; k < 70; ++k) want ^= a.get(r, k) && b.get(k, c);
                CHECK(ab.get(r, c) == want);
            }
        }
    }
    CHECK((GF2Matrix::identity(3) * GF2Matrix::identity(3)).row(1).count() == 1);
}

TEST_CASE("boundary matrices") {
    const auto c4 = enumerate_cells(4);
    const auto d = boundary_matrix_gf2(c4, 1);
    REQUIRE(d.matrix.rows() == 3);
    REQUIRE(d.matrix.cols() == 3);
    for (std::size_t col = 0; col < 3; ++col) {
        std::size_t ones = 0;
        for (std::size_t r = 0; r < 3; ++r) ones += d.matrix.get(r, col);
        CHECK(ones == 2);
    }

    const auto c5 = enumerate_cells(5);
    const auto top = boundary_matrix_gf2(c5, 2);
    CHECK(top.matrix.rows() == 30);
    CHECK(top.matrix.cols() == 12);
    CHECK(std::is_sorted(top.row_keys.begin(), top.row_keys.end()));
    CHECK(std::is_sorted(top.col_keys.begin(), top.col_keys.end()));
}

TEST_CASE("boundary of a boundary vanishes") {
    for (int n = 4; n <= 6; ++n) {
        const auto c = enumerate_cells(n);
        for (int dim = 2; dim <= c.dimension(); ++dim) {
            const auto lower = boundary_matrix_gf2(c, dim - 1);
            const auto upper = boundary_matrix_gf2(c, dim);
            REQUIRE(lower.col_keys == upper.row_keys);
            CHECK((lower.matrix * upper.matrix).is_zero());
        }
    }
}

TEST_CASE("every facet has even total multiplicity") {
    for (int n = 4; n <= 7; ++n) {
        const auto c = enumerate_cells(n);
        const auto top = boundary_matrix_gf2(c, c.dimension());
        BitVector all(top.matrix.cols());
        for (std::size_t i = 0; i < all.size(); ++i) all.set(i);
        CHECK_FALSE(top.matrix.multiply(all).any());
    }
}

TEST_CASE("mod 2 Betti numbers") {
    CHECK(betti_gf2(enumerate_cells(4)) == std::vector<std::size_t>{1, 1});
    CHECK(betti_gf2(enumerate_cells(5)) == std::vector<std::size_t>{1, 5, 1});
    CHECK(betti_gf2(enumerate_cells(6)) == std::vector<std::size_t>{1, 16, 16, 1});
    for (int n = 4; n <= 7; ++n) {
        const auto c = enumerate_cells(n);
        const auto b = betti_gf2(c);
        long alt = 0;
        for (std::size_t i = 0; i < b.size(); ++i) alt += (i % 2 == 0 ? 1 : -1) * static_cast<long>(b[i]);
        CHECK(alt == euler_characteristic(c));
        // Connected, closed: one class at each end.
        CHECK(b.front() == 1);
        CHECK(b.back() == 1);
    }
}

TEST_CASE("theta checks") {
    const auto c4 = enumerate_cells(4);
    const auto r4 = theta_checks(c4, theta_by_criterion(c4));
    CHECK(r4.is_cycle);
    CHECK_FALSE(r4.is_nontrivial);

    for (int n = 5; n <= 6; ++n) {
        const auto c = enumerate_cells(n);
        const auto r = theta_checks(c, theta_by_criterion(c));
        CHECK(r.is_cycle);
        CHECK(r.is_nontrivial);
    }

    const auto c5 = enumerate_cells(5);
    // A single edge has two endpoints.
    GF2Chain edge{1, {c5.cells[1].begin()->first}};
    CHECK_FALSE(theta_checks(c5, edge).is_cycle);
    // The boundary of a top cell is a cycle that bounds.
    GF2Chain bd{1, {}};
    for (const auto& rec : facets_with_multiplicity(c5, c5.cells[0].begin()->first)) {
        if (rec.multiplicity % 2 == 1) bd += GF2Chain{1, {rec.facet}};
    }
    const auto rb = theta_checks(c5, bd);
    CHECK(rb.is_cycle);
    CHECK_FALSE(rb.is_nontrivial);
    // Theta plus a boundary stays nontrivial.
    GF2Chain shifted = theta_by_criterion(c5);
    shifted += bd;
    CHECK(theta_checks(c5, shifted).is_nontrivial);
}

TEST_CASE("to_vector rejects cells outside the basis") {
    const auto c5 = enumerate_cells(5);
    const auto top = boundary_matrix_gf2(c5, 2);
    GF2Chain wrong{2, {c5.cells[1].begin()->first}};
    CHECK_THROWS_AS(to_vector(wrong, top.col_keys), std::invalid_argument);
    GF2Chain right{2, {top.col_keys[3]}};
    const auto v = to_vector(right, top.col_keys);
    CHECK(v.count() == 1);
    CHECK(v.test(3));
}

TEST_CASE("for even n both components of a theta cell are odd") {
    for (int n : {4, 6}) {
        const auto c = enumerate_cells(n);
        for (const auto& key : theta_by_criterion(c).support) {
            const auto f = facet_split(key.polygon());
            CHECK(f.K.size() % 2 == 1);
            CHECK(f.L.size() % 2 == 1);
        }
    }
}

TEST_CASE("the Jacobian oracle reproduces the criterion") {
    for (int n = 4; n <= 7; ++n) {
        const auto c = enumerate_cells(n);
        const auto verdicts = facet_verdicts(c);
        CHECK(verdicts.size() == c.cells[1].size());
        for (const auto& v : verdicts) {
            CAPTURE(display(v.facet.polygon()));
            CHECK(v.in_theta() == v.criterion);
            CHECK(v.positive_side != v.negative_side);
            CHECK((v.sign_positive == 1 || v.sign_positive == -1));
            CHECK((v.sign_negative == 1 || v.sign_negative == -1));
        }
        CHECK(theta_by_boundary(c).support == theta_by_criterion(c).support);
    }
}

TEST_CASE("oracle verdict for a single facet") {
    const auto c = enumerate_cells(5);
    const auto key = canonical_key(make_polygon({1, 2, 3, 4, 5}, {Arc{2, 3}}));
    const auto v = facet_verdict(c, key);
    CHECK(v.facet == key);
    CHECK(v.criterion);
    CHECK(v.in_theta());
    const auto w = facet_verdict(c, key, Rational(-1, 200), ChartOptions{.free_values = FreeValues::secondary});
    CHECK(w.in_theta());
}

TEST_CASE("oracle failures name the facet") {
    auto c = enumerate_cells(5);
    const CellKey removed = c.cells[0].begin()->first;
    const CellKey facet = c.incidences.at(removed).front().facet;
    c.cells[0].erase(removed);
    c.incidences.erase(removed);
    try {
        (void)facet_verdicts(c);
        FAIL("expected an oracle failure");
    } catch (const OracleFailure& e) {
        CHECK(e.facet().codimension() == 1);
        CHECK(std::string(e.what()).find(e.facet().hex()) != std::string::npos);
    }
    CHECK_THROWS_AS(facet_verdict(c, facet), OracleFailure);
}
