#include "m0n/polygon.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace m0n {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

bool crosses(Arc a, Arc b) {
    const int ea = a.start + a.length;
    const int eb = b.start + b.length;
    const bool disjoint = ea <= b.start || eb <= a.start;
    const bool nested = (a.start <= b.start && eb <= ea) || (b.start <= a.start && ea <= eb);
    return !disjoint && !nested;
}

bool contains(Arc outer, Arc inner) {
    return outer.start <= inner.start && inner.start + inner.length <= outer.start + outer.length;
}

// Sort order used for the region tree: outer arcs before the arcs they contain.
bool tree_order(Arc a, Arc b) {
    if (a.start != b.start) return a.start < b.start;
    return a.length > b.length;
}

}  // namespace

Arc normalize_arc(Arc arc, int n) {
    if (n <= 0) return arc;
    arc.start = mod(arc.start, n);
    if (arc.length <= 0 || arc.length >= n) return arc;
    if (arc.start == 0 || arc.start + arc.length > n) {
        return Arc{mod(arc.start + arc.length, n), n - arc.length};
    }
    return arc;
}

LabeledPolygon make_polygon(std::vector<int> word, std::vector<Arc> arcs) {
    const int n = static_cast<int>(word.size());
    for (auto& a : arcs) a = normalize_arc(a, n);
    std::sort(arcs.begin(), arcs.end());
    return LabeledPolygon{std::move(word), std::move(arcs)};
}

std::vector<ValidationError> validate(const LabeledPolygon& p) {
    std::vector<ValidationError> errors;
    const int n = p.n();

    std::vector<int> sorted = p.word;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = n >= 3;
    for (int i = 0; i < n && permutation; ++i) permutation = sorted[i] == i + 1;
    if (!permutation) {
        errors.push_back({PolygonIssue::labels_not_permutation, "label multiset not {1..n}"});
    }

    bool arcs_ok = true;
    for (const Arc& a : p.diagonals) {
        if (a.length < 2 || a.length > n - 2) {
            errors.push_back({PolygonIssue::small_region, "region with fewer than 3 sides"});
            arcs_ok = false;
            break;
        }
    }
    if (!arcs_ok) return errors;

    for (std::size_t i = 0; i < p.diagonals.size(); ++i) {
        for (std::size_t j = i + 1; j < p.diagonals.size(); ++j) {
            if (crosses(p.diagonals[i], p.diagonals[j])) {
                errors.push_back({PolygonIssue::crossing_diagonals, "crossing diagonals"});
                return errors;
            }
        }
    }

    for (const Component& c : regions(p)) {
        if (c.size() < 3) {
            errors.push_back({PolygonIssue::small_region, "region with fewer than 3 sides"});
            break;
        }
    }
    return errors;
}

LabeledPolygon twist(const LabeledPolygon& p, Arc d) {
    const int n = p.n();
    const Arc nd = normalize_arc(d, n);
    if (std::find(p.diagonals.begin(), p.diagonals.end(), nd) == p.diagonals.end()) {
        throw std::invalid_argument("twist: arc is not a diagonal of the polygon");
    }
    const int s = mod(d.start, n);
    const int len = d.length;
    auto reflect = [&](int pos) { return mod(s + len - 1 - mod(pos - s, n), n); };

    std::vector<int> word = p.word;
    for (int o = 0; o < len; ++o) {
        const int pos = mod(s + o, n);
        word[reflect(pos)] = p.word[pos];
    }

    std::vector<Arc> arcs;
    arcs.reserve(p.diagonals.size());
    bool skipped = false;
    for (const Arc& a : p.diagonals) {
        if (a == nd && !skipped) {
            skipped = true;
            arcs.push_back(a);
            continue;
        }
        const int o = mod(a.start - s, n);
        if (o + a.length <= len) {
            arcs.push_back(Arc{mod(s + len - o - a.length, n), a.length});
        } else {
            arcs.push_back(a);
        }
    }
    return make_polygon(std::move(word), std::move(arcs));
}

std::vector<LabeledPolygon> dihedral_images(const LabeledPolygon& p) {
    const int n = p.n();
    std::vector<LabeledPolygon> out;
    out.reserve(2 * static_cast<std::size_t>(n));
    std::vector<int> word(n);
    std::vector<Arc> arcs(p.diagonals.size());
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i < n; ++i) word[i] = p.word[mod(i + r, n)];
        for (std::size_t j = 0; j < arcs.size(); ++j) {
            arcs[j] = Arc{p.diagonals[j].start - r, p.diagonals[j].length};
        }
        out.push_back(make_polygon(word, arcs));
    }
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i < n; ++i) word[i] = p.word[mod(r - i, n)];
        for (std::size_t j = 0; j < arcs.size(); ++j) {
            const Arc& a = p.diagonals[j];
            arcs[j] = Arc{r - a.start - a.length + 1, a.length};
        }
        out.push_back(make_polygon(word, arcs));
    }
    return out;
}

std::vector<std::uint8_t> encode(const LabeledPolygon& p) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(2 + 2 * p.diagonals.size() + p.word.size());
    bytes.push_back(static_cast<std::uint8_t>(p.n()));
    bytes.push_back(static_cast<std::uint8_t>(p.diagonals.size()));
    for (const Arc& a : p.diagonals) {
        bytes.push_back(static_cast<std::uint8_t>(a.start));
        bytes.push_back(static_cast<std::uint8_t>(a.length));
    }
    for (int label : p.word) bytes.push_back(static_cast<std::uint8_t>(label));
    return bytes;
}

std::string CellKey::hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * bytes_.size());
    for (std::uint8_t b : bytes_) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

CellKey CellKey::from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length cell key");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::invalid_argument("cell key is not lowercase hex");
    };
    std::vector<std::uint8_t> bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        bytes.push_back(static_cast<std::uint8_t>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    }
    return CellKey(std::move(bytes));
}

LabeledPolygon CellKey::polygon() const {
    if (bytes_.size() < 2) throw std::invalid_argument("empty cell key");
    const int n = bytes_[0];
    const int k = bytes_[1];
    if (bytes_.size() != static_cast<std::size_t>(2 + 2 * k + n)) {
        throw std::invalid_argument("malformed cell key");
    }
    LabeledPolygon p;
    for (int j = 0; j < k; ++j) p.diagonals.push_back(Arc{bytes_[2 + 2 * j], bytes_[3 + 2 * j]});
    for (int i = 0; i < n; ++i) p.word.push_back(bytes_[2 + 2 * k + i]);
    return p;
}

std::vector<LabeledPolygon> twist_closure(const LabeledPolygon& p) {
    std::vector<LabeledPolygon> seen{p};
    seen.reserve(std::size_t{1} << std::min<std::size_t>(p.diagonals.size(), 12));
    for (std::size_t i = 0; i < seen.size(); ++i) {
        for (std::size_t j = 0; j < seen[i].diagonals.size(); ++j) {
            LabeledPolygon next = twist(seen[i], seen[i].diagonals[j]);
            if (std::find(seen.begin(), seen.end(), next) == seen.end()) seen.push_back(std::move(next));
        }
    }
    return seen;
}

std::vector<LabeledPolygon> orbit(const LabeledPolygon& p) {
    std::vector<LabeledPolygon> out;
    for (const LabeledPolygon& t : twist_closure(p)) {
        for (LabeledPolygon& img : dihedral_images(t)) {
            if (std::find(out.begin(), out.end(), img) == out.end()) out.push_back(std::move(img));
        }
    }
    return out;
}

CellKey canonical_key(const LabeledPolygon& p) {
    // Same minimum as encoding every member of orbit(p). The arc block
    // precedes the word in the encoding, so the word is only written for
    // images whose arc block ties the best one so far.
    const int n = p.n();
    const std::size_t k = p.diagonals.size();
    const std::size_t word_at = 2 + 2 * k;
    std::vector<std::uint8_t> best;
    std::vector<std::uint8_t> candidate(word_at + static_cast<std::size_t>(n));
    std::vector<Arc> arcs(k);
    candidate[0] = static_cast<std::uint8_t>(n);
    candidate[1] = static_cast<std::uint8_t>(k);

    auto consider = [&](const std::vector<int>& word, int r, bool reflected) {
        std::sort(arcs.begin(), arcs.end());
        for (std::size_t j = 0; j < k; ++j) {
            candidate[2 + 2 * j] = static_cast<std::uint8_t>(arcs[j].start);
            candidate[3 + 2 * j] = static_cast<std::uint8_t>(arcs[j].length);
        }
        if (!best.empty()) {
            const int c = std::memcmp(candidate.data(), best.data(), word_at);
            if (c > 0) return;
        }
        for (int i = 0; i < n; ++i) {
            candidate[word_at + i] = static_cast<std::uint8_t>(word[reflected ? mod(r - i, n) : mod(i + r, n)]);
        }
        if (best.empty() || candidate < best) best = candidate;
    };

    for (const LabeledPolygon& t : twist_closure(p)) {
        for (int r = 0; r < n; ++r) {
            for (std::size_t j = 0; j < k; ++j) {
                arcs[j] = normalize_arc(Arc{t.diagonals[j].start - r, t.diagonals[j].length}, n);
            }
            consider(t.word, r, false);
            for (std::size_t j = 0; j < k; ++j) {
                const Arc& a = t.diagonals[j];
                arcs[j] = normalize_arc(Arc{r - a.start - a.length + 1, a.length}, n);
            }
            consider(t.word, r, true);
        }
    }
    return CellKey(std::move(best));
}

std::vector<Component> regions(const LabeledPolygon& p) {
    const int n = p.n();
    std::vector<Arc> arcs = p.diagonals;
    std::stable_sort(arcs.begin(), arcs.end(), tree_order);

    // Node ids follow the order of p.diagonals (ascending start index).
    std::vector<int> node_id(arcs.size());
    {
        std::vector<bool> used(p.diagonals.size(), false);
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            for (std::size_t j = 0; j < p.diagonals.size(); ++j) {
                if (!used[j] && p.diagonals[j] == arcs[i]) {
                    used[j] = true;
                    node_id[i] = static_cast<int>(j) + 1;
                    break;
                }
            }
        }
    }

    // parent[i] = index of the innermost earlier arc containing arc i, or -1.
    std::vector<int> parent(arcs.size(), -1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        for (std::size_t j = i; j-- > 0;) {
            if (contains(arcs[j], arcs[i])) {
                parent[i] = static_cast<int>(j);
                break;
            }
        }
    }

    auto walk = [&](int lo, int hi, int owner) {
        Component items;
        int pos = lo;
        std::size_t next = 0;
        while (pos < hi) {
            while (next < arcs.size() && (parent[next] != owner || arcs[next].start < pos)) ++next;
            if (next < arcs.size() && arcs[next].start == pos) {
                items.push_back(-node_id[next]);
                pos += arcs[next].length;
                ++next;
            } else {
                items.push_back(p.word[pos]);
                ++pos;
            }
        }
        return items;
    };

    std::vector<Component> out(arcs.size() + 1);
    out[0] = walk(0, n, -1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        Component c = walk(arcs[i].start, arcs[i].start + arcs[i].length, static_cast<int>(i));
        c.push_back(-node_id[i]);
        out[node_id[i]] = std::move(c);
    }
    return out;
}

LabeledPolygon with_arc(const LabeledPolygon& p, Arc a) {
    std::vector<Arc> arcs = p.diagonals;
    arcs.push_back(a);
    return make_polygon(p.word, std::move(arcs));
}

std::vector<Arc> addable_arcs(const LabeledPolygon& p) {
    const int n = p.n();
    std::vector<Arc> out;
    for (int s = 1; s < n; ++s) {
        for (int len = 2; len <= n - 2 && s + len <= n; ++len) {
            const Arc a{s, len};
            if (std::find(p.diagonals.begin(), p.diagonals.end(), a) != p.diagonals.end()) continue;
            if (is_valid(with_arc(p, a))) out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> arc_labels(const LabeledPolygon& p, Arc a) {
    std::vector<int> out;
    for (int o = 0; o < a.length; ++o) out.push_back(p.word[mod(a.start + o, p.n())]);
    return out;
}

std::string display(const LabeledPolygon& p) {
    const bool separate = p.n() >= 10;
    auto join = [&](const std::vector<int>& labels) {
        std::string s;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (separate && i > 0) s += ',';
            s += std::to_string(labels[i]);
        }
        return s;
    };
    std::string out = join(p.word);
    for (const Arc& a : p.diagonals) out += "|" + join(arc_labels(p, a));
    return out;
}

}  // namespace m0n
