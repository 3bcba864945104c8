// Labeled n-gons with non-crossing diagonals: the combinatorial names of the
// cells of the real moduli space of stable genus-zero curves.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace m0n {

/// A diagonal, recorded as the contiguous run of edges it cuts off:
/// edges start, start+1, ..., start+length-1 (indices mod n).
struct Arc {
    int start = 0;
    int length = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Every diagonal has two arcs (one per side). The normal form is the side
/// that does not contain edge 0, so arcs are sub-intervals of [1, n-1] and
/// non-crossing is the same as laminar.
Arc normalize_arc(Arc arc, int n);

/// word[i] is the label of edge i in circular order; labels are 1..n.
struct LabeledPolygon {
    std::vector<int> word;
    std::vector<Arc> diagonals;  // normalized and sorted, see make_polygon

    int n() const { return static_cast<int>(word.size()); }
    std::size_t codimension() const { return diagonals.size(); }

    friend bool operator==(const LabeledPolygon&, const LabeledPolygon&) = default;
};

/// Normalizes and sorts the arcs. Does not validate.
LabeledPolygon make_polygon(std::vector<int> word, std::vector<Arc> arcs = {});

enum class PolygonIssue {
    labels_not_permutation,
    crossing_diagonals,
    small_region,
};

struct ValidationError {
    PolygonIssue issue;
    std::string message;
};

/// Empty result means the polygon is a valid cell name.
std::vector<ValidationError> validate(const LabeledPolygon& p);
inline bool is_valid(const LabeledPolygon& p) { return validate(p).empty(); }

/// Cut along `d` and reflect the side `d` covers. `d` may be given by either
/// of its two arcs; throws std::invalid_argument if it is not a diagonal of p.
LabeledPolygon twist(const LabeledPolygon& p, Arc d);

/// Rotations 0..n-1 followed by reflections 0..n-1. Image 0 is p itself.
std::vector<LabeledPolygon> dihedral_images(const LabeledPolygon& p);

/// Canonical name of a cell: byte encoding (n, k, sorted arcs, word) of the
/// lexicographically least polygon in the dihedral-and-twist orbit.
class CellKey {
public:
    CellKey() = default;
    explicit CellKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::string hex() const;
    static CellKey from_hex(const std::string& hex);

    /// The polygon this key encodes (the orbit minimum).
    LabeledPolygon polygon() const;
    int n() const { return bytes_.empty() ? 0 : bytes_[0]; }
    int codimension() const { return bytes_.size() < 2 ? 0 : bytes_[1]; }

    friend auto operator<=>(const CellKey&, const CellKey&) = default;

private:
    std::vector<std::uint8_t> bytes_;
};

std::vector<std::uint8_t> encode(const LabeledPolygon& p);

/// Every polygon reachable from p by twists alone (no rigid motions).
std::vector<LabeledPolygon> twist_closure(const LabeledPolygon& p);

/// Full dihedral-and-twist orbit, deduplicated.
std::vector<LabeledPolygon> orbit(const LabeledPolygon& p);

CellKey canonical_key(const LabeledPolygon& p);

/// Items of a region in circular order: positive values are marked labels,
/// negative values -id are nodes (diagonals). Node ids count from 1 in the
/// order of p.diagonals, i.e. ascending start index.
using Component = std::vector<int>;

/// The k+1 polygons the diagonals cut p into. The first component is the
/// one containing edge 0; component i (i >= 1) is the region directly inside
/// diagonal i and ends with node i.
std::vector<Component> regions(const LabeledPolygon& p);

/// Arcs that can be added to p keeping it valid, in ascending order.
std::vector<Arc> addable_arcs(const LabeledPolygon& p);

LabeledPolygon with_arc(const LabeledPolygon& p, Arc a);

/// Labels on the cut-off side of a normalized arc.
std::vector<int> arc_labels(const LabeledPolygon& p, Arc a);

/// "12345|45": the word followed by each diagonal's cut-off label set.
/// Labels are comma separated once n reaches 10.
std::string display(const LabeledPolygon& p);

}  // namespace m0n
