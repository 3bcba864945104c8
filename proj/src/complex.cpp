#include "m0n/complex.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace m0n {

namespace {

// Words with word[0] == 1 and word[1] < word[n-1]: one per dihedral class.
std::vector<std::vector<int>> top_cell_words(int n) {
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 2);
    std::vector<std::vector<int>> out;
    do {
        if (rest.front() < rest.back()) {
            std::vector<int> w{1};
            w.insert(w.end(), rest.begin(), rest.end());
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

// Distinct labels force every symmetry of a representative to fix each of
// its edges, so the stabilizer acts trivially on arcs: every inserted arc is
// its own attachment.
std::vector<IncidenceRecord> facet_records(const CellKey& parent, const LabeledPolygon& rep) {
    std::map<CellKey, IncidenceRecord> grouped;
    for (const Arc& a : addable_arcs(rep)) {
        CellKey facet = canonical_key(with_arc(rep, a));
        auto& rec = grouped[facet];
        rec.parent = parent;
        rec.facet = facet;
        rec.attachments.push_back(Attachment{rep, a});
        rec.multiplicity = static_cast<int>(rec.attachments.size());
    }
    std::vector<IncidenceRecord> out;
    out.reserve(grouped.size());
    for (auto& [key, rec] : grouped) out.push_back(std::move(rec));
    return out;
}

}  // namespace

const std::map<CellKey, LabeledPolygon>& CellComplex::cells_of_dimension(int dim) const {
    const int codim = n - 3 - dim;
    if (codim < 0 || codim >= static_cast<int>(cells.size())) {
        throw std::out_of_range("no cells of dimension " + std::to_string(dim));
    }
    return cells[codim];
}

bool CellComplex::contains(const CellKey& key) const {
    const int codim = key.codimension();
    if (key.n() != n || codim >= static_cast<int>(cells.size())) return false;
    return cells[codim].contains(key);
}

CellComplex enumerate_cells(int n, const EnumerationOptions& options) {
    if (n < 4) throw std::invalid_argument("moduli space is a point or empty-dimensional");
    if (n > options.max_n) {
        throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the configured bound " +
                                    std::to_string(options.max_n));
    }
    CellComplex c;
    c.n = n;
    c.cells.resize(n - 2);

    auto words = top_cell_words(n);
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        std::shuffle(words.begin(), words.end(), rng);
    }
    for (auto& w : words) {
        LabeledPolygon p = make_polygon(std::move(w));
        CellKey key = canonical_key(p);
        LabeledPolygon rep = key.polygon();
        c.cells[0].emplace(std::move(key), std::move(rep));
    }

    for (int codim = 0; codim + 1 < static_cast<int>(c.cells.size()); ++codim) {
        for (const auto& [key, rep] : c.cells[codim]) {
            auto records = facet_records(key, rep);
            for (const auto& rec : records) {
                if (!c.cells[codim + 1].contains(rec.facet)) {
                    c.cells[codim + 1].emplace(rec.facet, rec.facet.polygon());
                }
            }
            c.incidences.emplace(key, std::move(records));
        }
    }
    return c;
}

const std::vector<IncidenceRecord>& facets_with_multiplicity(const CellComplex& c, const CellKey& cell) {
    static const std::vector<IncidenceRecord> none;
    if (!c.contains(cell)) throw std::out_of_range("cell " + cell.hex() + " is not in the complex");
    auto it = c.incidences.find(cell);
    return it == c.incidences.end() ? none : it->second;
}

std::vector<std::size_t> f_vector(const CellComplex& c) {
    std::vector<std::size_t> f(c.cells.size());
    for (std::size_t codim = 0; codim < c.cells.size(); ++codim) {
        f[c.dimension() - codim] = c.cells[codim].size();
    }
    return f;
}

long euler_characteristic(const CellComplex& c) {
    long chi = 0;
    const auto f = f_vector(c);
    for (std::size_t dim = 0; dim < f.size(); ++dim) {
        chi += (dim % 2 == 0 ? 1 : -1) * static_cast<long>(f[dim]);
    }
    return chi;
}

std::vector<AdjacencyEdge> adjacency_graph(const CellComplex& c, int parent_dim, int facet_dim) {
    std::vector<AdjacencyEdge> out;
    if (facet_dim != parent_dim - 1 || parent_dim > c.dimension() || facet_dim < 0) return out;
    for (const auto& [key, rep] : c.cells_of_dimension(parent_dim)) {
        auto it = c.incidences.find(key);
        if (it == c.incidences.end()) continue;
        for (const auto& rec : it->second) out.push_back({rec.parent, rec.facet, rec.multiplicity});
    }
    return out;
}

std::vector<std::pair<CellKey, Attachment>> cofaces(const CellComplex& c, const CellKey& facet) {
    std::vector<std::pair<CellKey, Attachment>> out;
    const int codim = facet.codimension();
    if (codim == 0 || !c.contains(facet)) return out;
    for (const auto& [key, rep] : c.cells[codim - 1]) {
        const auto& records = c.incidences.at(key);
        auto it = std::lower_bound(records.begin(), records.end(), facet,
                                   [](const IncidenceRecord& r, const CellKey& k) { return r.facet < k; });
        if (it != records.end() && it->facet == facet) {
            for (const auto& a : it->attachments) out.emplace_back(key, a);
        }
    }
    return out;
}

}  // namespace m0n
