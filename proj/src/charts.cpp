#include "m0n/charts.hpp"

#include "m0n/determinant.hpp"

#include <algorithm>
#include <set>

namespace m0n {

namespace {

bool is_role_point(int label) { return label >= 1 && label <= 3; }

std::size_t index_of(const std::vector<int>& v, int label) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), label) - v.begin());
}

long free_base(FreeValues fv) { return fv == FreeValues::primary ? 3 : 7; }
long spacing_pad(FreeValues fv) { return fv == FreeValues::primary ? 1 : 2; }

// Distinct values strictly inside (lo, lo + width), increasing with j.
Rational inside(const Rational& lo, const Rational& width, long j, long count, FreeValues fv) {
    return lo + width * Rational(j + 1, count + spacing_pad(fv));
}

}  // namespace

const Rational& ProjectivePoint::value() const {
    if (!value_) throw ChartError("point at infinity has no finite value");
    return *value_;
}

std::string to_string(const ProjectivePoint& p) { return p.is_infinity() ? "inf" : p.value().to_string(); }

ProjectivePoint apply(const MoebiusMap& f, const ProjectivePoint& p) {
    if (p.is_infinity()) {
        if (f.c.is_zero()) return ProjectivePoint::infinity();
        return ProjectivePoint(f.a / f.c);
    }
    const Rational den = f.c * p.value() + f.d;
    if (den.is_zero()) return ProjectivePoint::infinity();
    return ProjectivePoint((f.a * p.value() + f.b) / den);
}

FacetSplit facet_split(const LabeledPolygon& facet) {
    if (facet.diagonals.size() != 1) throw std::invalid_argument("facet_split needs exactly one diagonal");
    const int n = facet.n();
    const Arc a = facet.diagonals.front();
    std::vector<int> inner = arc_labels(facet, a);
    std::vector<int> outer = arc_labels(facet, Arc{(a.start + a.length) % n, n - a.length});
    auto role_count = [](const std::vector<int>& side) {
        return std::count_if(side.begin(), side.end(), is_role_point);
    };
    FacetSplit f;
    f.n = n;
    if (role_count(inner) >= 2) {
        f.L = std::move(inner);
        f.K = std::move(outer);
    } else {
        f.L = std::move(outer);
        f.K = std::move(inner);
    }
    f.case_tag = role_count(f.L) == 3 ? FacetCase::A : FacetCase::B;
    return f;
}

RoleAssignment normalize_roles(const FacetSplit& f, bool swap_first_two) {
    RoleAssignment roles{1, 2, 3};
    if (f.case_tag == FacetCase::B) {
        std::vector<int> on_l;
        for (int label = 1; label <= 3; ++label) {
            if (std::find(f.L.begin(), f.L.end(), label) != f.L.end()) on_l.push_back(label);
        }
        const int third = 6 - on_l[0] - on_l[1];
        roles = {on_l[0], on_l[1], third};
    }
    if (swap_first_two) std::swap(roles[0], roles[1]);
    return roles;
}

Rational HyperbolaSample::abscissa(int label) const {
    if (auto it = x.find(label); it != x.end()) return it->second;
    return epsilon / y.at(label);
}

HyperbolaSample chart_sample(const FacetSplit& f, const Rational& epsilon, bool k_reversed,
                             const ChartOptions& options) {
    if (epsilon.is_zero()) throw std::invalid_argument("epsilon must be nonzero");
    if (f.L.size() < 2 || f.K.size() < 2) throw std::invalid_argument("facet split sides need at least two labels");
    const FreeValues fv = options.free_values;
    const long base = free_base(fv);

    HyperbolaSample s;
    s.split = f;
    s.roles = normalize_roles(f, options.swap_roles);
    s.epsilon = epsilon;
    s.k_reversed = k_reversed;

    // x increases along L read so that role 1 precedes role 2.
    std::vector<int> lt = f.L;
    if (index_of(lt, s.roles[0]) > index_of(lt, s.roles[1])) std::reverse(lt.begin(), lt.end());
    const long p1 = static_cast<long>(index_of(lt, s.roles[0]));
    const long p2 = static_cast<long>(index_of(lt, s.roles[1]));
    const long between = p2 - p1 - 1;
    for (long i = 0; i < static_cast<long>(lt.size()); ++i) {
        Rational v;
        if (i < p1) v = inside(Rational(1, 2), Rational(1, 2), i, p1, fv);
        else if (i == p1) v = Rational(1);
        else if (i < p2) v = inside(Rational(1), Rational(1), i - p1 - 1, between, fv);
        else if (i == p2) v = Rational(2);
        else v = Rational(base + (i - p2 - 1));
        s.x.emplace(lt[i], std::move(v));
    }

    std::vector<int> kt = f.K;
    if (k_reversed) std::reverse(kt.begin(), kt.end());
    std::vector<int> pinned_k;
    if (f.case_tag == FacetCase::A) {
        // y decreases along kt: -1, -2, then the free values.
        for (long j = 0; j < static_cast<long>(kt.size()); ++j) {
            s.y.emplace(kt[j], j < 2 ? Rational(-(j + 1)) : Rational(-(base + j - 2)));
        }
        pinned_k = {kt[0], kt[1]};
    } else {
        // Role 3 at -1, its neighbour (next along kt when there is one) at -2;
        // y keeps decreasing away from role 3 on the pin side and rises
        // towards -1/2 on the other.
        const long q = static_cast<long>(index_of(kt, s.roles[2]));
        const long last = static_cast<long>(kt.size()) - 1;
        const long dir = q < last ? 1 : -1;
        s.y.emplace(kt[q], Rational(-1));
        s.y.emplace(kt[q + dir], Rational(-2));
        for (long j = q + 2 * dir, t = 0; j >= 0 && j <= last; j += dir, ++t) {
            s.y.emplace(kt[j], Rational(-(base + t)));
        }
        const long other = dir > 0 ? q : last - q;
        for (long j = q - dir, t = 0; j >= 0 && j <= last; j -= dir, ++t) {
            s.y.emplace(kt[j], Rational(-1) + Rational(1, 2) * Rational(t + 1, other + spacing_pad(fv)));
        }
        pinned_k = {kt[q], kt[q + dir]};
    }

    if (f.case_tag == FacetCase::A) s.free_x.push_back(s.roles[2]);
    std::vector<int> rest_x;
    for (int label : f.L) {
        if (label != s.roles[0] && label != s.roles[1] && label != s.roles[2]) rest_x.push_back(label);
    }
    std::sort(rest_x.begin(), rest_x.end());
    s.free_x.insert(s.free_x.end(), rest_x.begin(), rest_x.end());
    for (int label : f.K) {
        if (std::find(pinned_k.begin(), pinned_k.end(), label) == pinned_k.end()) s.free_y.push_back(label);
    }
    std::sort(s.free_y.begin(), s.free_y.end());
    return s;
}

MoebiusMap transition_map(const HyperbolaSample& s) {
    return moebius_through(s.abscissa(s.roles[0]), s.abscissa(s.roles[1]), s.abscissa(s.roles[2]));
}

std::map<int, ProjectivePoint> sample_to_z(const HyperbolaSample& s) {
    const MoebiusMap f = transition_map(s);
    std::map<int, ProjectivePoint> z;
    for (int label = 1; label <= s.split.n; ++label) {
        if (label == s.roles[2]) {
            z.emplace(label, ProjectivePoint::infinity());
        } else {
            z.emplace(label, ProjectivePoint(f(s.abscissa(label))));
        }
    }
    return z;
}

std::vector<int> dihedral_min(const std::vector<int>& word) {
    const std::size_t n = word.size();
    std::vector<int> best = word, candidate(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) candidate[i] = word[(i + r) % n];
        best = std::min(best, candidate);
        for (std::size_t i = 0; i < n; ++i) candidate[i] = word[(r + n - i) % n];
        best = std::min(best, candidate);
    }
    return best;
}

std::vector<int> z_cyclic_order(const std::map<int, ProjectivePoint>& points) {
    std::vector<std::pair<Rational, int>> finite;
    std::vector<int> at_infinity;
    for (const auto& [label, p] : points) {
        if (p.is_infinity()) at_infinity.push_back(label);
        else finite.emplace_back(p.value(), label);
    }
    if (at_infinity.size() > 1) throw ChartError("coincident points at infinity");
    std::sort(finite.begin(), finite.end());
    for (std::size_t i = 1; i < finite.size(); ++i) {
        if (finite[i - 1].first == finite[i].first) throw ChartError("coincident points");
    }
    std::vector<int> word;
    for (const auto& [v, label] : finite) word.push_back(label);
    word.insert(word.end(), at_infinity.begin(), at_infinity.end());
    return dihedral_min(word);
}

HyperbolaSample build_sample(const FacetSplit& f, const std::vector<int>& attachment, const Rational& epsilon,
                             const ChartOptions& options) {
    if (epsilon.is_zero() || (epsilon.sign() > 0 ? epsilon : -epsilon) > default_epsilon()) {
        throw std::invalid_argument("epsilon must be nonzero with |epsilon| <= 1/64");
    }
    const std::vector<int> target = dihedral_min(attachment);
    for (bool reversed : {false, true}) {
        HyperbolaSample s = chart_sample(f, epsilon, reversed, options);
        if (z_cyclic_order(sample_to_z(s)) == target) return s;
    }
    throw ChartError("attachment not realizable");
}

int jacobian_sign_at(const HyperbolaSample& s) {
    std::vector<int> rows;
    for (int label = 1; label <= s.split.n; ++label) {
        if (label != s.roles[0] && label != s.roles[1] && label != s.roles[2]) rows.push_back(label);
    }
    // Column 0 is eps; columns 1.. are the free x then the free y labels.
    std::vector<int> columns{0};
    columns.insert(columns.end(), s.free_x.begin(), s.free_x.end());
    columns.insert(columns.end(), s.free_y.begin(), s.free_y.end());
    const std::size_t dim = rows.size();
    if (columns.size() != dim) throw ChartError("chart coordinate count mismatch");

    RationalMatrix jac(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const bool x_column = col >= 1 && col <= s.free_x.size();
        const bool y_column = col > s.free_x.size();
        const int active = columns[col];

        const DualRational eps = col == 0 ? DualRational::variable(s.epsilon) : DualRational(s.epsilon);
        auto abscissa = [&](int label) -> DualRational {
            if (auto it = s.x.find(label); it != s.x.end()) {
                return x_column && label == active ? DualRational::variable(it->second) : DualRational(it->second);
            }
            const Rational& yv = s.y.at(label);
            const DualRational y = y_column && label == active ? DualRational::variable(yv) : DualRational(yv);
            return eps / y;
        };
        const auto f = moebius_through(abscissa(s.roles[0]), abscissa(s.roles[1]), abscissa(s.roles[2]));
        for (std::size_t r = 0; r < dim; ++r) jac(r, col) = f(abscissa(rows[r])).deriv;
    }
    const int sign = det_sign(jac);
    if (sign == 0) throw ChartError("sample on a singular locus");
    return sign;
}

int jacobian_sign(const FacetSplit& f, const std::vector<int>& attachment, const Rational& epsilon,
                  const ChartOptions& options) {
    Rational magnitude = epsilon;
    for (int attempt = 0; attempt < 32; ++attempt) {
        const HyperbolaSample near = build_sample(f, attachment, magnitude, options);
        const HyperbolaSample nearer = build_sample(f, attachment, magnitude / Rational(2), options);
        if (near.k_reversed != nearer.k_reversed) throw ChartError("chart changed while shrinking epsilon");
        const int a = jacobian_sign_at(near);
        const int b = jacobian_sign_at(nearer);
        if (a == b) return a;
        magnitude /= Rational(2);
    }
    throw ChartError("jacobian sign did not stabilize as epsilon shrinks");
}

int role_change_jacobian_sign(const std::map<int, Rational>& z, RoleChange change) {
    std::vector<int> labels;
    for (const auto& [label, v] : z) labels.push_back(label);
    const std::size_t dim = labels.size();
    RationalMatrix jac(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t r = 0; r < dim; ++r) {
            const Rational& zv = z.at(labels[r]);
            const DualRational t = r == col ? DualRational::variable(zv) : DualRational(zv);
            const DualRational w = change == RoleChange::one_minus ? DualRational(1) - t : DualRational(1) / t;
            jac(r, col) = w.deriv;
        }
    }
    return det_sign(jac);
}

}  // namespace m0n
