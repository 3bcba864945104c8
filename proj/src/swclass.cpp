#include "m0n/swclass.hpp"

#include <algorithm>
#include <map>

namespace m0n {

namespace {

using CofaceIndex = std::map<CellKey, std::vector<std::vector<int>>>;

// Facet key -> words of the top-cell representatives attached along it, one
// entry per attachment.
CofaceIndex top_coface_index(const CellComplex& c) {
    CofaceIndex index;
    if (c.cells.size() < 2) return index;
    for (const auto& [key, rep] : c.cells[0]) {
        for (const auto& rec : c.incidences.at(key)) {
            for (const auto& a : rec.attachments) index[rec.facet].push_back(a.parent.word);
        }
    }
    return index;
}

FacetVerdict verdict_from(const CellKey& facet, const std::vector<std::vector<int>>& sides,
                          const Rational& epsilon, const ChartOptions& options) {
    if (sides.size() != 2) {
        throw OracleFailure(facet, "facet " + facet.hex() + " has " + std::to_string(sides.size()) +
                                       " top attachments, expected 2");
    }
    FacetVerdict v;
    v.facet = facet;
    v.split = facet_split(facet.polygon());
    v.criterion = theta_criterion(v.split);

    const Rational pos = epsilon.sign() > 0 ? epsilon : -epsilon;
    const Rational neg = -pos;
    // Flipping the sign of eps in a fixed chart reverses the K cluster, so
    // exactly one pairing of the two top cells with the two signs is
    // realized by a single chart.
    for (int pairing = 0; pairing < 2; ++pairing) {
        const auto& plus_word = sides[pairing];
        const auto& minus_word = sides[1 - pairing];
        try {
            const HyperbolaSample sp = build_sample(v.split, plus_word, pos, options);
            const HyperbolaSample sm = build_sample(v.split, minus_word, neg, options);
            if (sp.x != sm.x || sp.y != sm.y) {
                throw OracleFailure(facet, "facet " + facet.hex() + ": the two sides do not share a chart");
            }
            v.positive_side = plus_word;
            v.negative_side = minus_word;
            v.sign_positive = jacobian_sign(v.split, plus_word, pos, options);
            v.sign_negative = jacobian_sign(v.split, minus_word, neg, options);
            return v;
        } catch (const ChartError& e) {
            if (pairing == 1) throw OracleFailure(facet, "facet " + facet.hex() + ": " + e.what());
        }
    }
    throw OracleFailure(facet, "facet " + facet.hex() + ": unreachable");
}

}  // namespace

GF2Chain& GF2Chain::operator+=(const GF2Chain& rhs) {
    if (&rhs == this) {
        support.clear();
        return *this;
    }
    for (const auto& k : rhs.support) {
        if (!support.erase(k)) support.insert(k);
    }
    return *this;
}

bool theta_criterion(const FacetSplit& f) { return f.K.size() % 2 == 1; }

GF2Chain theta_by_criterion(const CellComplex& c) {
    GF2Chain chain;
    chain.dimension = c.dimension() - 1;
    if (c.cells.size() < 2) return chain;
    for (const auto& [key, rep] : c.cells[1]) {
        if (theta_criterion(facet_split(rep))) chain.support.insert(key);
    }
    return chain;
}

FacetVerdict facet_verdict(const CellComplex& c, const CellKey& facet, const Rational& epsilon,
                           const ChartOptions& options) {
    std::vector<std::vector<int>> sides;
    for (const auto& [parent, attachment] : cofaces(c, facet)) sides.push_back(attachment.parent.word);
    return verdict_from(facet, sides, epsilon, options);
}

std::vector<FacetVerdict> facet_verdicts(const CellComplex& c, const Rational& epsilon, const ChartOptions& options) {
    std::vector<FacetVerdict> out;
    if (c.cells.size() < 2) return out;
    const CofaceIndex index = top_coface_index(c);
    for (const auto& [key, rep] : c.cells[1]) {
        auto it = index.find(key);
        out.push_back(verdict_from(key, it == index.end() ? std::vector<std::vector<int>>{} : it->second, epsilon,
                                   options));
    }
    return out;
}

GF2Chain theta_by_boundary(const CellComplex& c, const Rational& epsilon, const ChartOptions& options) {
    GF2Chain chain;
    chain.dimension = c.dimension() - 1;
    for (const auto& v : facet_verdicts(c, epsilon, options)) {
        if (v.in_theta()) chain.support.insert(v.facet);
    }
    return chain;
}

BoundaryMatrix boundary_matrix_gf2(const CellComplex& c, int dim) {
    BoundaryMatrix b;
    if (dim >= 1 && dim <= c.dimension()) {
        for (const auto& [key, rep] : c.cells_of_dimension(dim - 1)) b.row_keys.push_back(key);
        for (const auto& [key, rep] : c.cells_of_dimension(dim)) b.col_keys.push_back(key);
    } else if (dim == 0) {
        for (const auto& [key, rep] : c.cells_of_dimension(0)) b.col_keys.push_back(key);
    } else if (dim == c.dimension() + 1) {
        for (const auto& [key, rep] : c.cells_of_dimension(c.dimension())) b.row_keys.push_back(key);
    }
    b.matrix = GF2Matrix(b.row_keys.size(), b.col_keys.size());
    if (b.row_keys.empty() || b.col_keys.empty()) return b;
    for (std::size_t col = 0; col < b.col_keys.size(); ++col) {
        for (const auto& rec : c.incidences.at(b.col_keys[col])) {
            auto it = std::lower_bound(b.row_keys.begin(), b.row_keys.end(), rec.facet);
            const auto row = static_cast<std::size_t>(it - b.row_keys.begin());
            if (rec.multiplicity % 2 == 1) b.matrix.set(row, col, !b.matrix.get(row, col));
        }
    }
    return b;
}

std::vector<std::size_t> betti_gf2(const CellComplex& c) {
    const int top = c.dimension();
    std::vector<std::size_t> ranks(top + 2, 0);  // ranks[i] = rank of d_i
    for (int i = 1; i <= top; ++i) ranks[i] = rank_gf2(boundary_matrix_gf2(c, i).matrix);
    const auto f = f_vector(c);
    std::vector<std::size_t> betti(top + 1);
    for (int i = 0; i <= top; ++i) betti[i] = f[i] - ranks[i] - ranks[i + 1];
    return betti;
}

BitVector to_vector(const GF2Chain& chain, const std::vector<CellKey>& basis) {
    BitVector v(basis.size());
    for (const auto& k : chain.support) {
        auto it = std::lower_bound(basis.begin(), basis.end(), k);
        if (it == basis.end() || *it != k) throw std::invalid_argument("chain cell " + k.hex() + " not in basis");
        v.set(static_cast<std::size_t>(it - basis.begin()));
    }
    return v;
}

ThetaReport theta_checks(const CellComplex& c, const GF2Chain& theta) {
    ThetaReport report;
    const int dim = c.dimension() - 1;
    if (dim >= 1) {
        const BoundaryMatrix d = boundary_matrix_gf2(c, dim);
        report.is_cycle = !d.matrix.multiply(to_vector(theta, d.col_keys)).any();
    } else {
        report.is_cycle = true;
    }
    const BoundaryMatrix top = boundary_matrix_gf2(c, c.dimension());
    report.is_nontrivial = !in_image(top.matrix, to_vector(theta, top.row_keys));
    return report;
}

}  // namespace m0n
