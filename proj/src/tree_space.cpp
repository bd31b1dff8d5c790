#include "pbdiag/tree_space.hpp"

#include "pbdiag/cdga.hpp"
#include "pbdiag/cobar_bar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace pbdiag {

namespace {

Context tree_ctx(Context c) { return c.with_quotient(Quotient::Dbar); }

}  // namespace

Diagram tree_to_diagram(const LabeledTree& t) {
    const int L = static_cast<int>(t.leaf_labels.size());
    const int m = t.ctx.m;
    auto lab = [&](int x) {
        if (x < 0 || x >= L + t.internal) throw ConstraintError("tree vertex index out of range");
        return x < L ? t.leaf_labels[x] : m + 1 + (x - L);
    };
    for (int l : t.leaf_labels)
        if (l < 1 || l > m) throw ConstraintError("leaf label out of range");
    std::vector<int> deg(L + t.internal, 0);
    for (auto [a, b] : t.edges) {
        ++deg.at(a);
        ++deg.at(b);
    }
    for (int x = 0; x < L + t.internal; ++x) {
        if (x < L && deg[x] != 1) throw ConstraintError("tree leaf must be univalent");
        if (x >= L && deg[x] != 3) throw ConstraintError("tree internal vertex must be trivalent");
    }
    Diagram d{tree_ctx(t.ctx), t.internal, {}};
    for (auto [a, b] : t.edges) d.edges.emplace_back(lab(a), lab(b));
    return d;
}

LabeledTree diagram_to_tree(const Diagram& d) {
    const int m = d.ctx.m;
    LabeledTree t;
    t.ctx = d.ctx;
    t.internal = d.v;
    int leaves = 0;
    for (auto [a, b] : d.edges) leaves += (a <= m) + (b <= m);
    int next = 0;
    auto map = [&](int x) {
        if (x <= m) {
            t.leaf_labels.push_back(x);
            return next++;
        }
        return leaves + (x - m - 1);
    };
    for (auto [a, b] : d.edges) {
        int x = map(a);
        int y = map(b);
        t.edges.emplace_back(x, y);
    }
    return t;
}

std::optional<Canon> tree_canonicalize(const LabeledTree& t) { return canonicalize(tree_to_diagram(t)); }

bool is_tree_diagram(const Diagram& d) {
    Flags f = classify(d);
    return f.internally_connected && f.internal_forest && f.unitrivalent_free;
}

std::vector<int> leaf_multiset(const Diagram& d) {
    std::vector<int> out;
    for (auto [a, b] : d.edges)
        for (int x : {a, b})
            if (x <= d.ctx.m) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Segment half-edges at each free vertex, as label lists.
std::vector<std::vector<int>> leaves_at(const Diagram& d) {
    const int m = d.ctx.m;
    std::vector<std::vector<int>> at(d.v);
    for (auto [a, b] : d.edges) {
        if (a > m && b <= m) at[a - m - 1].push_back(b);
        if (b > m && a <= m) at[b - m - 1].push_back(a);
    }
    return at;
}

}  // namespace

bool is_caterpillar(const Diagram& d) {
    if (!is_tree_diagram(d)) return false;
    for (const auto& l : leaves_at(d))
        if (l.empty()) return false;
    return true;
}

bool is_preferred_caterpillar(const Diagram& d) {
    if (!is_caterpillar(d)) return false;
    auto ms = leaf_multiset(d);
    if (ms.size() <= 3) return true;
    const int lo = ms.front(), hi = ms.back();
    std::vector<std::vector<int>> ends;
    for (const auto& l : leaves_at(d))
        if (l.size() == 2) ends.push_back(l);
    if (ends.size() != 2) return false;
    auto has = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
    return (has(ends[0], lo) && has(ends[1], hi)) || (has(ends[1], lo) && has(ends[0], hi));
}

std::vector<Diagram> enumerate_trees(const Context& ctx_in, std::vector<int> leaves) {
    Context ctx = tree_ctx(ctx_in);
    std::sort(leaves.begin(), leaves.end());
    const int L = static_cast<int>(leaves.size());
    for (int l : leaves)
        if (l < 1 || l > ctx.m) throw DomainError("leaf label out of range");
    if (L < 2) return {};
    if (L == 2) {
        if (leaves[0] == leaves[1]) return {};
        auto c = canonicalize(chord(ctx, leaves[0], leaves[1]));
        return {c->key};
    }
    if (L > 10) throw CapacityError("enumerate_trees: too many leaves");
    if (L - 2 > default_limits().max_free) throw CapacityError("enumerate_trees: internal vertex count exceeds cap");

    std::set<Diagram> found;
    // Split-form trees grown by subdividing edges; internal vertex ids follow creation order.
    std::vector<Edge> edges{{0, L}, {1, L}, {2, L}};
    auto emit = [&](const std::vector<Edge>& es) {
        LabeledTree t{ctx, leaves, L - 2, es};
        if (auto c = tree_canonicalize(t)) found.insert(c->key);
    };
    auto rec = [&](auto&& self, int next_leaf, int next_internal) -> void {
        if (next_leaf == L) {
            emit(edges);
            return;
        }
        const std::size_t count = edges.size();
        for (std::size_t e = 0; e < count; ++e) {
            Edge old = edges[e];
            int w = next_internal;
            edges[e] = {old.first, w};
            edges.emplace_back(w, old.second);
            edges.emplace_back(next_leaf, w);
            self(self, next_leaf + 1, next_internal + 1);
            edges.pop_back();
            edges.pop_back();
            edges[e] = old;
        }
    };
    rec(rec, 3, L + 1);
    return {found.begin(), found.end()};
}

RelationMatrix ihx_relation_matrix(const std::vector<int>& leaves, const Context& ctx_in) {
    Context ctx = tree_ctx(ctx_in);
    RelationMatrix rm;
    rm.trees = enumerate_trees(ctx, leaves);
    std::map<Diagram, int> col;
    for (const auto& t : rm.trees) col.emplace(t, static_cast<int>(col.size()));
    rm.rows = SparseMatrix(0, static_cast<int>(rm.trees.size()));
    std::set<Diagram> four_valent;
    const int m = ctx.m;
    for (const auto& t : rm.trees)
        for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
            if (t.edges[e].first <= m || t.edges[e].second <= m) continue;
            if (auto y = canonicalize(contract_edge(t, e).result)) four_valent.insert(y->key);
        }
    for (const auto& y : four_valent) {
        std::vector<std::pair<int, Rational>> row;
        for (const auto& [g, c] : blow_ups(y, false).terms) {
            auto it = col.find(g);
            if (it == col.end()) throw DomainError("IHX blow-up produced a tree outside the enumeration");
            row.emplace_back(it->second, c);
        }
        rm.rows.push_row(std::move(row));
    }
    return rm;
}

std::vector<Diagram> TreeQuotient::basis() const {
    std::vector<Diagram> out;
    for (int c : basis_columns) out.push_back(columns[c]);
    return out;
}

TreeQuotient tree_quotient(const Context& ctx_in, const std::vector<int>& leaves_in,
                           const std::optional<Diagram>& priority) {
    Context ctx = tree_ctx(ctx_in);
    std::vector<int> leaves = leaves_in;
    std::sort(leaves.begin(), leaves.end());
    using CacheKey = std::tuple<Context, std::vector<int>, std::optional<Diagram>>;
    static std::mutex mu;
    static std::map<CacheKey, TreeQuotient> cache;
    CacheKey key{ctx, leaves, priority};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }

    RelationMatrix rm = ihx_relation_matrix(leaves, ctx);
    auto group = [&](const Diagram& t) {
        if (priority && t == *priority) return 3;
        if (is_preferred_caterpillar(t)) return 2;
        if (is_caterpillar(t)) return 1;
        return 0;
    };
    std::vector<int> order(rm.trees.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return group(rm.trees[a]) < group(rm.trees[b]); });
    std::vector<int> position(order.size());
    TreeQuotient q;
    for (std::size_t p = 0; p < order.size(); ++p) {
        position[order[p]] = static_cast<int>(p);
        q.columns.push_back(rm.trees[order[p]]);
    }
    SparseMatrix permuted(0, rm.rows.cols);
    for (const auto& row : rm.rows.data) {
        std::vector<std::pair<int, Rational>> e;
        for (const auto& [c, v] : row) e.emplace_back(position[c], v);
        permuted.push_row(std::move(e));
    }
    q.rref = rref_rank(permuted);
    std::vector<bool> pivot(q.columns.size(), false);
    for (int p : q.rref.pivots) pivot[p] = true;
    for (std::size_t c = 0; c < q.columns.size(); ++c)
        if (!pivot[c]) q.basis_columns.push_back(static_cast<int>(c));

    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, q);
    return q;
}

Coordinates tree_normal_form(const TreeCombo& x, const std::optional<Diagram>& priority) {
    std::map<std::pair<Context, std::vector<int>>, std::vector<std::pair<Diagram, Rational>>> blocks;
    for (const auto& [t, c] : x.terms) {
        if (!is_tree_diagram(t)) throw DomainError("tree_normal_form: term is not a uni-trivalent tree");
        blocks[{tree_ctx(t.ctx), leaf_multiset(t)}].emplace_back(t, c);
    }
    Coordinates out;
    for (const auto& [k, terms] : blocks) {
        std::optional<Diagram> pr;
        if (priority && leaf_multiset(*priority) == k.second && tree_ctx(priority->ctx) == k.first) pr = priority;
        TreeQuotient q = tree_quotient(k.first, k.second, pr);
        std::map<Diagram, int> col;
        for (std::size_t i = 0; i < q.columns.size(); ++i) col.emplace(q.columns[i], static_cast<int>(i));
        std::vector<Rational> vec(q.columns.size());
        for (const auto& [t, c] : terms) {
            Diagram key = t;
            key.ctx = k.first;
            vec[col.at(key)] += c;
        }
        reduce_against(q.rref, vec);
        for (int b : q.basis_columns)
            if (sgn(vec[b]) != 0) out.emplace_back(q.columns[b], vec[b]);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

TreeCombo tree_of_bracket(const BracketExpr& b, const Context& ctx_in) {
    Context ctx = tree_ctx(ctx_in);
    auto gens = b.leaves();
    const int j = gens.front().j;
    for (const Gen& g : gens) {
        if (g.j != j) throw DomainError("tree_of_bracket: generators must share the root index j");
        if (g.i >= g.j || g.i < 1 || g.j > ctx.m) throw DomainError("tree_of_bracket: generator index out of range");
    }
    const int m = ctx.m;
    Diagram d{ctx, 0, {}};
    // Internal vertices are numbered in post-order (innermost bracket first) from m+1 and
    // every edge points from the smaller label to the larger. For even n the edges are
    // ordered by (min, max) in the picture whose leaves carry their slot numbers 1..k
    // and whose root carries k+1, then the segment labels are substituted.
    const int k = static_cast<int>(gens.size());
    std::vector<std::pair<Edge, Edge>> slot_and_real;  // (slot-labeled edge, real edge)
    int slot = 0;
    auto build = [&](auto&& self, const BracketExpr& e) -> std::pair<int, int> {
        if (e.is_gen()) return {++slot, e.gen.i};
        auto l = self(self, *e.left);
        auto r = self(self, *e.right);
        const int w = m + 1 + d.v++;
        slot_and_real.push_back({{l.first, w}, {l.second, w}});
        slot_and_real.push_back({{r.first, w}, {r.second, w}});
        return {w, w};
    };
    const auto top = build(build, b);
    slot_and_real.push_back({{k + 1, top.first}, {j, top.second}});
    for (auto& [se, re] : slot_and_real) {
        if (se.first > se.second) std::swap(se.first, se.second);
        if (re.first > re.second) std::swap(re.first, re.second);
    }
    if (!ctx.odd()) std::stable_sort(slot_and_real.begin(), slot_and_real.end(),
                                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [se, re] : slot_and_real) d.edges.push_back(re);
    TreeCombo out;
    if (auto c = canonicalize(d)) out.add(c->key, c->sign);
    return out;
}

Rational tree_pair(const TreeCombo& x, const Diagram& basis_tree) {
    Diagram bt = basis_tree;
    bt.ctx = tree_ctx(bt.ctx);
    auto c = canonicalize(bt);
    if (!c) throw DomainError("tree_pair: basis tree is zero");
    auto ms = leaf_multiset(c->key);
    TreeQuotient q = tree_quotient(c->key.ctx, ms, c->key);
    if (q.basis_columns.empty() || !(q.columns[q.basis_columns.back()] == c->key))
        throw DomainError("tree_pair: basis tree vanishes modulo IHX");
    TreeCombo block;
    for (const auto& [t, coeff] : x.terms)
        if (leaf_multiset(t) == ms) block.add(t, coeff);
    for (const auto& [t, coeff] : tree_normal_form(block, c->key))
        if (t == c->key) return coeff * c->sign;
    return 0;
}

Rational tree_pair(const TreeCombo& x, const LabeledTree& basis_tree) {
    return tree_pair(x, tree_to_diagram(basis_tree));
}

}  // namespace pbdiag
