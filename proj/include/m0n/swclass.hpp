// The cycle dual to the first Stiefel-Whitney class, computed from the
// parity criterion and from the half-sum of oriented top-cell boundaries,
// plus GF(2) homology of the cell complex.
#pragma once

#include "m0n/charts.hpp"
#include "m0n/complex.hpp"
#include "m0n/gf2.hpp"

#include <set>
#include <vector>

namespace m0n {

struct GF2Chain {
    int dimension = 0;
    std::set<CellKey> support;

    GF2Chain& operator+=(const GF2Chain& rhs);  // symmetric difference
    friend GF2Chain operator+(GF2Chain a, const GF2Chain& b) { return a += b; }
    friend bool operator==(const GF2Chain&, const GF2Chain&) = default;
};

/// The component holding at most one of 1, 2, 3 carries an odd number of
/// marked points.
bool theta_criterion(const FacetSplit& f);

GF2Chain theta_by_criterion(const CellComplex& c);

/// Outcome of the orientation comparison across one codimension-one cell.
struct FacetVerdict {
    CellKey facet;
    FacetSplit split;
    std::vector<int> positive_side;  // top-cell word realized at eps > 0
    std::vector<int> negative_side;  // top-cell word realized at eps < 0
    int sign_positive = 0;
    int sign_negative = 0;
    bool criterion = false;

    /// Equal induced orientations: the cell survives the half-sum mod 2.
    bool in_theta() const { return sign_positive != sign_negative; }
};

/// Thrown when the chart oracle fails on a facet; carries the facet key.
class OracleFailure : public std::runtime_error {
public:
    OracleFailure(CellKey facet, const std::string& what)
        : std::runtime_error(what), facet_(std::move(facet)) {}
    const CellKey& facet() const { return facet_; }

private:
    CellKey facet_;
};

/// Compares the two top cells along `facet` in one shared hyperbola chart.
FacetVerdict facet_verdict(const CellComplex& c, const CellKey& facet, const Rational& epsilon = default_epsilon(),
                           const ChartOptions& options = {});

/// Verdicts for every codimension-one cell, in key order.
std::vector<FacetVerdict> facet_verdicts(const CellComplex& c, const Rational& epsilon = default_epsilon(),
                                         const ChartOptions& options = {});

GF2Chain theta_by_boundary(const CellComplex& c, const Rational& epsilon = default_epsilon(),
                           const ChartOptions& options = {});

/// Rows: cells of dimension dim-1; columns: cells of dimension dim, both in
/// key order. Entries are incidence multiplicities mod 2.
struct BoundaryMatrix {
    std::vector<CellKey> row_keys;
    std::vector<CellKey> col_keys;
    GF2Matrix matrix;
};

/// An all-zero shape when dim is outside 1..n-3.
BoundaryMatrix boundary_matrix_gf2(const CellComplex& c, int dim);

/// dim H_i(M; GF(2)) for i = 0..n-3.
std::vector<std::size_t> betti_gf2(const CellComplex& c);

struct ThetaReport {
    bool is_cycle = false;
    bool is_nontrivial = false;
};

ThetaReport theta_checks(const CellComplex& c, const GF2Chain& theta);

BitVector to_vector(const GF2Chain& chain, const std::vector<CellKey>& basis);

}  // namespace m0n
