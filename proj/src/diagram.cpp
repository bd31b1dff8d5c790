#include "pbdiag/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace pbdiag {

std::string quotient_name(Quotient q) { return q == Quotient::D ? "D" : "Dbar"; }

Quotient quotient_from_name(const std::string& s) {
    if (s == "D") return Quotient::D;
    if (s == "Dbar") return Quotient::Dbar;
    throw DomainError("unknown quotient '" + s + "' (expected Dbar or D)");
}

Limits& default_limits() {
    static Limits limits;
    return limits;
}

Diagram make_diagram(const Context& ctx, int v, std::vector<Edge> edges) {
    return Diagram{ctx, v, std::move(edges)};
}

Diagram chord(const Context& ctx, int tail, int head) { return Diagram{ctx, 0, {{tail, head}}}; }

DiagramCombo as_combo(const Diagram& d, const Rational& c) {
    DiagramCombo x;
    if (auto k = canonicalize(d)) x.add(k->key, c * k->sign);
    return x;
}

DualCombo as_dual(const Diagram& d, const Rational& c) {
    DualCombo x;
    if (auto k = canonicalize(d)) x.add(k->key, c * k->sign);
    return x;
}

int degree(const Diagram& d) {
    return (d.ctx.n - 1) * static_cast<int>(d.edges.size()) - d.ctx.n * d.v;
}

std::vector<int> valences(const Diagram& d) {
    std::vector<int> val(d.vertex_count() + 1, 0);
    for (auto [a, b] : d.edges) {
        ++val[a];
        ++val[b];
    }
    return val;
}

bool has_multi_edge(const Diagram& d) {
    std::set<Edge> seen;
    for (auto [a, b] : d.edges)
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second) return true;
    return false;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

void check_labels(const Diagram& d) {
    if (d.v < 0) throw ConstraintError("negative free vertex count");
    for (auto [a, b] : d.edges) {
        if (a < 1 || b < 1 || a > d.vertex_count() || b > d.vertex_count())
            throw ConstraintError("edge endpoint out of range");
    }
}

bool has_self_loop(const Diagram& d) {
    return std::any_of(d.edges.begin(), d.edges.end(), [](const Edge& e) { return e.first == e.second; });
}

int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

int inversion_sign(const std::vector<Edge>& seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[j] < seq[i]) ++inv;
    return inv % 2 ? -1 : 1;
}

std::int64_t factorial(int k) {
    std::int64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Colour refinement on free vertices. Colours are ranks of labeling-invariant
// signatures, so equal inputs up to relabeling produce equal class sequences.
std::vector<std::vector<int>> free_vertex_classes(const Diagram& d) {
    const int m = d.ctx.m, v = d.v;
    std::vector<std::vector<int>> adj(v);
    for (auto [a, b] : d.edges) {
        if (a > m) adj[a - m - 1].push_back(b);
        if (b > m) adj[b - m - 1].push_back(a);
    }
    std::vector<int> color(v, 0);
    auto rerank = [&](std::vector<std::vector<std::int64_t>>& sigs) {
        std::vector<std::vector<std::int64_t>> uniq = sigs;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int f = 0; f < v; ++f)
            color[f] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sigs[f]) - uniq.begin());
        return static_cast<int>(uniq.size());
    };
    std::vector<std::vector<std::int64_t>> sigs(v);
    for (int f = 0; f < v; ++f) {
        std::vector<std::int64_t> segs;
        for (int x : adj[f])
            if (x <= m) segs.push_back(x);
        std::sort(segs.begin(), segs.end());
        sigs[f] = {static_cast<std::int64_t>(adj[f].size())};
        sigs[f].insert(sigs[f].end(), segs.begin(), segs.end());
    }
    int classes = rerank(sigs);
    while (true) {
        for (int f = 0; f < v; ++f) {
            std::vector<std::int64_t> nb;
            for (int x : adj[f])
                nb.push_back(x <= m ? -static_cast<std::int64_t>(x) : color[x - m - 1]);
            std::sort(nb.begin(), nb.end());
            sigs[f] = {color[f], -1000000};
            sigs[f].insert(sigs[f].end(), nb.begin(), nb.end());
        }
        int next = rerank(sigs);
        if (next == classes) break;
        classes = next;
    }
    std::vector<std::vector<int>> out(classes);
    for (int f = 0; f < v; ++f) out[color[f]].push_back(f);
    return out;
}

struct SearchResult {
    std::vector<Edge> key;  // sorted normalized pairs
    std::vector<int> best_perm;
    int sign = 1;
    bool zero = false;
    std::int64_t minimal_count = 0;
};

SearchResult search(const Diagram& d) {
    const int m = d.ctx.m, v = d.v;
    const bool odd = d.ctx.odd();
    auto classes = free_vertex_classes(d);
    std::int64_t total = 1;
    for (auto& c : classes) {
        total *= factorial(static_cast<int>(c.size()));
        if (total > default_limits().permutations)
            throw CapacityError("canonicalize: automorphism search exceeds permutation cap");
    }
    std::vector<int> offset(classes.size(), 0);
    for (std::size_t c = 1; c < classes.size(); ++c) offset[c] = offset[c - 1] + static_cast<int>(classes[c - 1].size());

    std::vector<std::vector<int>> arrangement = classes;
    std::vector<int> perm(v);  // old free index -> new free index
    std::vector<Edge> norm(d.edges.size());
    SearchResult res;
    bool have = false;

    for (std::int64_t iter = 0; iter < total; ++iter) {
        for (std::size_t c = 0; c < arrangement.size(); ++c)
            for (std::size_t k = 0; k < arrangement[c].size(); ++k) perm[arrangement[c][k]] = offset[c] + static_cast<int>(k);
        auto lab = [&](int x) { return x <= m ? x : m + 1 + perm[x - m - 1]; };
        int flips = 0;
        for (std::size_t e = 0; e < d.edges.size(); ++e) {
            int a = lab(d.edges[e].first), b = lab(d.edges[e].second);
            if (a > b) {
                std::swap(a, b);
                ++flips;
            }
            norm[e] = {a, b};
        }
        std::vector<Edge> key = norm;
        std::sort(key.begin(), key.end());
        int cmp = have ? (key < res.key ? -1 : (res.key < key ? 1 : 0)) : -1;
        if (cmp <= 0) {
            int s = odd ? permutation_sign(perm) * (flips % 2 ? -1 : 1) : inversion_sign(norm);
            if (cmp < 0) {
                res.key = std::move(key);
                res.best_perm = perm;
                res.sign = s;
                res.zero = false;
                res.minimal_count = 1;
                have = true;
            } else {
                ++res.minimal_count;
                if (s != res.sign) res.zero = true;
            }
        }
        // odometer over the per-class permutations
        for (std::size_t c = 0; c < arrangement.size(); ++c) {
            if (std::next_permutation(arrangement[c].begin(), arrangement[c].end())) break;
        }
    }
    return res;
}

}  // namespace

void validate(const Diagram& d) {
    check_labels(d);
    const int m = d.ctx.m;
    if (d.v > default_limits().max_free)
        throw CapacityError("diagram has more free vertices than the configured cap");
    auto val = valences(d);
    for (int x = m + 1; x <= m + d.v; ++x)
        if (val[x] < 3) throw ConstraintError("free vertex " + std::to_string(x) + " has valence < 3");
    UnionFind uf(d.vertex_count() + 1);
    for (auto [a, b] : d.edges) uf.unite(a, b);
    for (int x = m + 1; x <= m + d.v; ++x) {
        bool ok = false;
        for (int s = 1; s <= m && !ok; ++s) ok = uf.find(s) == uf.find(x);
        if (!ok) throw ConstraintError("free vertex " + std::to_string(x) + " is not joined to a segment vertex");
    }
}

std::optional<Canon> canonicalize(const Diagram& d) {
    check_labels(d);
    if (has_self_loop(d)) return std::nullopt;
    validate(d);
    if (d.ctx.quotient == Quotient::D && has_multi_edge(d)) return std::nullopt;
    if (!d.ctx.odd() && has_multi_edge(d)) return std::nullopt;  // swapping parallel edges is odd

    SearchResult r = search(d);
    if (r.zero) return std::nullopt;
    Canon c;
    c.key.ctx = d.ctx;
    c.key.v = d.v;
    c.key.edges = r.key;
    c.sign = r.sign;
    return c;
}

std::int64_t automorphism_count(const Diagram& d) {
    check_labels(d);
    validate(d);
    SearchResult r = search(d);
    std::int64_t count = r.minimal_count;
    std::vector<Edge> sorted = r.key;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        count *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return count;
}

std::vector<std::vector<int>> internal_components(const Diagram& d) {
    const int m = d.ctx.m;
    const int e = static_cast<int>(d.edges.size());
    UnionFind uf(e);
    std::vector<int> first_at(d.vertex_count() + 1, -1);
    for (int i = 0; i < e; ++i) {
        for (int x : {d.edges[i].first, d.edges[i].second}) {
            if (x <= m) continue;
            if (first_at[x] < 0)
                first_at[x] = i;
            else
                uf.unite(first_at[x], i);
        }
    }
    std::vector<std::vector<int>> groups;
    std::vector<int> index(e, -1);
    for (int i = 0; i < e; ++i) {
        int r = uf.find(i);
        if (index[r] < 0) {
            index[r] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[index[r]].push_back(i);
    }
    return groups;
}

Flags classify(const Diagram& d) {
    Flags f;
    const int m = d.ctx.m;
    f.internally_connected = !d.edges.empty() && internal_components(d).size() == 1;
    auto val = valences(d);
    f.unitrivalent_free = true;
    for (int x = m + 1; x <= m + d.v; ++x)
        if (val[x] != 3) f.unitrivalent_free = false;
    f.has_multi_edge = has_multi_edge(d);
    // Split every segment half-edge into its own leaf; forest iff no union closes a cycle.
    int leaves = 0;
    for (auto [a, b] : d.edges) leaves += (a <= m) + (b <= m);
    UnionFind uf(d.v + leaves);
    int next_leaf = d.v;
    f.internal_forest = true;
    for (auto [a, b] : d.edges) {
        int x = a <= m ? next_leaf++ : a - m - 1;
        int y = b <= m ? next_leaf++ : b - m - 1;
        if (!uf.unite(x, y)) f.internal_forest = false;
    }
    return f;
}

Diagram subdiagram(const Diagram& d, const std::vector<int>& edge_indices) {
    const int m = d.ctx.m;
    std::vector<int> used;
    for (int i : edge_indices)
        for (int x : {d.edges[i].first, d.edges[i].second})
            if (x > m) used.push_back(x);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    auto relabel = [&](int x) {
        if (x <= m) return x;
        return m + 1 + static_cast<int>(std::lower_bound(used.begin(), used.end(), x) - used.begin());
    };
    Diagram s{d.ctx, static_cast<int>(used.size()), {}};
    for (int i : edge_indices) s.edges.emplace_back(relabel(d.edges[i].first), relabel(d.edges[i].second));
    return s;
}

std::vector<Diagram> enumerate_diagrams(const Context& ctx, int edge_count, int free_count) {
    if (edge_count < 0 || free_count < 0) throw DomainError("negative edge or free count");
    if (free_count > default_limits().max_free)
        throw CapacityError("enumerate_diagrams: free count " + std::to_string(free_count) + " exceeds cap");
    const int m = ctx.m, N = m + free_count;
    std::set<Diagram> found;
    if (3 * free_count > 2 * edge_count) return {};
    if (edge_count == 0) {
        if (free_count == 0) return {Diagram{ctx, 0, {}}};
        return {};
    }
    std::vector<Edge> pairs;
    for (int a = 1; a <= N; ++a)
        for (int b = a + 1; b <= N; ++b) pairs.emplace_back(a, b);
    const bool simple = ctx.quotient == Quotient::D || !ctx.odd();
    std::vector<int> val(N + 1, 0);
    std::vector<Edge> chosen;
    std::int64_t visited = 0;

    auto deficit = [&]() {
        int need = 0;
        for (int x = m + 1; x <= N; ++x) need += std::max(0, 3 - val[x]);
        return need;
    };

    auto rec = [&](auto&& self, std::size_t start) -> void {
        int remaining = edge_count - static_cast<int>(chosen.size());
        if (deficit() > 2 * remaining) return;
        if (remaining == 0) {
            if (++visited > default_limits().candidates)
                throw CapacityError("enumerate_diagrams: candidate count exceeds cap at edges=" +
                                    std::to_string(edge_count) + " free=" + std::to_string(free_count));
            Diagram d{ctx, free_count, chosen};
            try {
                if (auto c = canonicalize(d)) found.insert(c->key);
            } catch (const ConstraintError&) {
            }
            return;
        }
        for (std::size_t p = start; p < pairs.size(); ++p) {
            chosen.push_back(pairs[p]);
            ++val[pairs[p].first];
            ++val[pairs[p].second];
            self(self, simple ? p + 1 : p);
            --val[pairs[p].first];
            --val[pairs[p].second];
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return {found.begin(), found.end()};
}

std::string to_text(const Diagram& d) {
    std::ostringstream os;
    os << "free=" << d.v << " ";
    if (d.ctx.odd()) {
        for (std::size_t i = 0; i < d.edges.size(); ++i)
            os << (i ? " " : "") << d.edges[i].first << ">" << d.edges[i].second;
    } else {
        for (std::size_t i = 0; i < d.edges.size(); ++i)
            os << (i ? " " : "") << "{" << d.edges[i].first << "," << d.edges[i].second << "}";
    }
    return os.str();
}

}  // namespace pbdiag
