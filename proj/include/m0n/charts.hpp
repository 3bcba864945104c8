// Coordinate charts on the moduli space: the global chart that puts the
// points 1, 2, 3 at 0, 1, infinity, and the hyperbola charts xy = eps around
// codimension-one strata, together with the exact Jacobian-sign oracle.
#pragma once

#include "m0n/polygon.hpp"
#include "m0n/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace m0n {

class ChartError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point of the real projective line.
class ProjectivePoint {
public:
    ProjectivePoint(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    static ProjectivePoint infinity() { return ProjectivePoint(); }

    bool is_infinity() const { return !value_.has_value(); }
    /// Throws ChartError at infinity.
    const Rational& value() const;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    ProjectivePoint() = default;
    std::optional<Rational> value_;
};

std::string to_string(const ProjectivePoint& p);

/// t -> (a t + b) / (c t + d) over a field type F (Rational or DualRational).
template <class F>
struct BasicMoebius {
    F a, b, c, d;

    /// Throws ChartError where the denominator vanishes.
    F operator()(const F& t) const {
        F den = c * t + d;
        if (value_of(den).is_zero()) throw ChartError("singular sample");
        return (a * t + b) / den;
    }
};

using MoebiusMap = BasicMoebius<Rational>;

/// The map sending p0, p1, p_inf to 0, 1, infinity.
/// Throws ChartError if two of the points coincide.
template <class F>
BasicMoebius<F> moebius_through(const F& p0, const F& p1, const F& p_inf) {
    if (value_of(p0) == value_of(p1) || value_of(p0) == value_of(p_inf) || value_of(p1) == value_of(p_inf)) {
        throw ChartError("degenerate sample: coincident coordinates");
    }
    // f(t) = (t - p0)(p1 - p_inf) / ((t - p_inf)(p1 - p0))
    F scale_num = p1 - p_inf;
    F scale_den = p1 - p0;
    return BasicMoebius<F>{scale_num, F(0) - p0 * scale_num, scale_den, F(0) - p_inf * scale_den};
}

/// Total action on the projective line: f(inf) = a/c, f(-d/c) = inf.
ProjectivePoint apply(const MoebiusMap& f, const ProjectivePoint& p);

enum class FacetCase {
    A,  // 1, 2, 3 all on L
    B,  // exactly two of 1, 2, 3 on L
};

/// The two components of a codimension-one curve. L holds at least two of
/// the points 1, 2, 3. L and K are listed in the order they are read off the
/// polygon (each side is a contiguous run of the word).
struct FacetSplit {
    int n = 0;
    std::vector<int> L;
    std::vector<int> K;
    FacetCase case_tag = FacetCase::A;

    friend bool operator==(const FacetSplit&, const FacetSplit&) = default;
};

/// Reads the split off a polygon with exactly one diagonal.
/// Throws std::invalid_argument otherwise.
FacetSplit facet_split(const LabeledPolygon& facet);

/// Labels taking roles 1, 2, 3 (mapped to 0, 1, infinity).
using RoleAssignment = std::array<int, 3>;

/// The two L-members of {1,2,3} take roles 1 and 2 (smaller label first, or
/// larger first when `swap_first_two`); the remaining member takes role 3.
RoleAssignment normalize_roles(const FacetSplit& f, bool swap_first_two = false);

/// Which deterministic free-value sequence a sample uses.
enum class FreeValues {
    primary,    // 3, 4, 5, ... and -3, -4, ...
    secondary,  // 7, 8, 9, ... and -7, -8, ...
};

struct ChartOptions {
    FreeValues free_values = FreeValues::primary;
    bool swap_roles = false;
};

/// A point of the hyperbola chart xy = eps: L-points sit at abscissa x,
/// K-points at ordinate y (abscissa eps / y).
struct HyperbolaSample {
    FacetSplit split;
    RoleAssignment roles{};
    Rational epsilon;
    std::map<int, Rational> x;  // labels of L
    std::map<int, Rational> y;  // labels of K
    /// Chart coordinates after eps, in column order.
    std::vector<int> free_x;
    std::vector<int> free_y;
    /// The K order the y values were laid along was F.K reversed.
    bool k_reversed = false;

    /// Abscissa of a label on the projective line.
    Rational abscissa(int label) const;
};

MoebiusMap transition_map(const HyperbolaSample& s);

/// z(label) for every label. Role points go to exactly 0, 1, infinity.
std::map<int, ProjectivePoint> sample_to_z(const HyperbolaSample& s);

/// Circular order of distinct points, infinity closing the circle, returned
/// as the lexicographically least word of its dihedral class.
/// Throws ChartError on coincident points.
std::vector<int> z_cyclic_order(const std::map<int, ProjectivePoint>& points);

/// Lexicographically least word in the dihedral class of a circular word.
std::vector<int> dihedral_min(const std::vector<int>& word);

/// The chart for F with y laid along K (or K reversed), before any check.
HyperbolaSample chart_sample(const FacetSplit& f, const Rational& epsilon, bool k_reversed,
                             const ChartOptions& options = {});

/// A sample whose global circular order is `attachment`. Tries F.K, then K
/// reversed. Throws ChartError("attachment not realizable") if neither does.
HyperbolaSample build_sample(const FacetSplit& f, const std::vector<int>& attachment,
                             const Rational& epsilon, const ChartOptions& options = {});

/// Sign of d(z_4..z_n)/d(eps, free x, free y) at the sample.
/// Throws ChartError("sample on a singular locus") on a zero determinant.
int jacobian_sign_at(const HyperbolaSample& s);

inline const Rational& default_epsilon() {
    static const Rational eps(1, 64);
    return eps;
}

/// Jacobian sign on the side of eps's sign, for the top cell `attachment`.
/// The magnitude starts at |eps| and is halved until the sign agrees with the
/// one at half that magnitude.
int jacobian_sign(const FacetSplit& f, const std::vector<int>& attachment, const Rational& epsilon,
                  const ChartOptions& options = {});

/// Coordinate changes of the global chart that permute the roles of 0, 1, inf.
enum class RoleChange {
    one_minus,   // t -> 1 - t
    reciprocal,  // t -> 1 / t
};

/// Sign of d(w_4..w_n)/d(z_4..z_n) where w = g(z) for the role change g.
/// `z` holds z_4..z_n (labels 4..n), all finite and nonzero.
int role_change_jacobian_sign(const std::map<int, Rational>& z, RoleChange change);

}  // namespace m0n
