// The cell decomposition of the compactified real moduli space, built by
// inserting diagonals into polygon representatives.
#pragma once

#include "m0n/polygon.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace m0n {

/// One way a facet sits in the boundary of a parent: the parent's stored
/// representative together with the diagonal inserted into it.
struct Attachment {
    LabeledPolygon parent;
    Arc arc;
};

struct IncidenceRecord {
    CellKey parent;
    CellKey facet;
    int multiplicity = 0;  // == attachments.size()
    std::vector<Attachment> attachments;
};

struct CellComplex {
    int n = 0;
    /// cells[c]: codimension-c cells keyed canonically, with their
    /// representative polygon (the decoded orbit minimum).
    std::vector<std::map<CellKey, LabeledPolygon>> cells;
    /// Facet incidences of every cell of codimension < n-3.
    std::map<CellKey, std::vector<IncidenceRecord>> incidences;

    int dimension() const { return n - 3; }
    const std::map<CellKey, LabeledPolygon>& cells_of_dimension(int dim) const;
    bool contains(const CellKey& key) const;
};

struct EnumerationOptions {
    int max_n = 8;
    /// Process top cells in a shuffled order (determinism checks).
    std::optional<std::uint64_t> shuffle_seed;
};

/// Throws std::invalid_argument for n < 4 or n above the configured bound.
CellComplex enumerate_cells(int n, const EnumerationOptions& options = {});

/// Incidence records of `cell` sorted by facet key. Throws
/// std::out_of_range for a key not in the complex.
const std::vector<IncidenceRecord>& facets_with_multiplicity(const CellComplex& c, const CellKey& cell);

/// Number of cells of each dimension 0..n-3.
std::vector<std::size_t> f_vector(const CellComplex& c);
long euler_characteristic(const CellComplex& c);

struct AdjacencyEdge {
    CellKey parent;
    CellKey facet;
    int multiplicity = 0;

    friend bool operator==(const AdjacencyEdge&, const AdjacencyEdge&) = default;
};

/// Incidences between cells of dimension parent_dim and parent_dim - 1,
/// ordered by (parent, facet). Empty when those dimensions are absent.
std::vector<AdjacencyEdge> adjacency_graph(const CellComplex& c, int parent_dim, int facet_dim);

/// Top cells containing `facet` in their boundary, each paired with the
/// attachment realizing it; a parent appears once per attachment.
std::vector<std::pair<CellKey, Attachment>> cofaces(const CellComplex& c, const CellKey& facet);

}  // namespace m0n
