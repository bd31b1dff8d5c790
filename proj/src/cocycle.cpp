#include "pbdiag/cocycle.hpp"

#include "pbdiag/cdga.hpp"
#include "pbdiag/linalg.hpp"
#include "pbdiag/theta.hpp"

#include <map>

namespace pbdiag {

namespace {

// Nonempty canonical diagrams of degree d and weight w; for each w the vertex count is forced.
const std::vector<Diagram>& factors(const Context& ctx, int d, int w,
                                    std::map<std::pair<int, int>, std::vector<Diagram>>& cache) {
    auto [it, fresh] = cache.try_emplace({d, w});
    if (fresh) {
        const int v = (ctx.n - 1) * w - d;
        const int e = w + v;
        // Free vertices are at least trivalent and some edge must reach a segment vertex.
        if (v >= 0 && e >= 1 && 2 * e >= 3 * v + 1) it->second = enumerate_diagrams(ctx, e, v);
    }
    return it->second;
}

void compositions(int total, int parts, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int x = min_part; x <= total - min_part * (parts - 1); ++x) {
        cur.push_back(x);
        compositions(total - x, parts - 1, min_part, cur, out);
        cur.pop_back();
    }
}

std::vector<BarWord> words_for(const Context& ctx, const std::vector<int>& degs, const std::vector<int>& wts,
                               std::map<std::pair<int, int>, std::vector<Diagram>>& cache) {
    std::vector<BarWord> out{BarWord{}};
    for (std::size_t k = 0; k < degs.size(); ++k) {
        const auto& fs = factors(ctx, degs[k], wts[k], cache);
        std::vector<BarWord> next;
        for (const auto& w : out)
            for (const auto& f : fs) {
                BarWord nw = w;
                nw.push_back(f);
                next.push_back(std::move(nw));
            }
        out = std::move(next);
        if (out.size() > static_cast<std::size_t>(default_limits().candidates))
            throw CapacityError("bar_basis: word count exceeds cap");
    }
    return out;
}

struct Indexer {
    std::map<BarWord, int> index;
    int operator()(const BarWord& w) { return index.emplace(w, static_cast<int>(index.size())).first->second; }
};

}  // namespace

int word_weight(const BarWord& w) {
    int s = 0;
    for (const auto& d : w) s += weight(d);
    return s;
}

std::vector<BarWord> bar_basis(const Context& ctx, int p, int q, std::optional<int> weight) {
    if (p < 1) throw DomainError("bar_basis requires p >= 1");
    std::vector<int> weights;
    if (weight) {
        weights.push_back(*weight);
    } else {
        if (ctx.n <= 3) throw DomainError("bar_basis: n = 3 needs an explicit weight");
        // A factor of degree d and weight w satisfies (n-3)w + 1 <= d <= (n-1)w.
        for (int w = p; w * (ctx.n - 3) + p <= q; ++w) weights.push_back(w);
    }
    std::map<std::pair<int, int>, std::vector<Diagram>> cache;
    std::vector<BarWord> out;
    for (int w : weights) {
        std::vector<std::vector<int>> wcomps, dcomps;
        std::vector<int> cur;
        compositions(w, p, 1, cur, wcomps);
        compositions(q, p, 1, cur, dcomps);
        for (const auto& wc : wcomps)
            for (const auto& dc : dcomps) {
                auto ws = words_for(ctx, dc, wc, cache);
                out.insert(out.end(), ws.begin(), ws.end());
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BarCombo lift_cocycle(const DiagramCombo& z0) {
    BarCombo z;
    if (z0.is_zero()) return z;
    const auto q0 = combo_degree(z0);
    if (!q0) throw DomainError("lift_cocycle: z0 must be homogeneous");
    const Context ctx = z0.terms.begin()->first.ctx;
    const int w0 = weight(z0.terms.begin()->first);
    for (const auto& [d, c] : z0.terms) {
        if (weight(d) != w0) throw DomainError("lift_cocycle: z0 must have a single weight");
        if (!classify(d).internally_connected) throw DomainError("lift_cocycle: z0 must be internally connected");
    }

    BarCombo layer = as_length_one(z0);
    z.add(layer);
    for (int len = 1;; ++len) {
        BarCombo rhs = bar_internal(layer);
        if (rhs.is_zero()) break;
        if (len >= w0)
            throw DomainError("lift_cocycle: inconsistent system at bidegree (-" + std::to_string(len + 1) + "," +
                              std::to_string(*q0 + len) + ")");
        auto basis = bar_basis(ctx, len + 1, *q0 + len, w0);
        Indexer rows;
        for (const auto& [w, c] : rhs.terms) rows(w);
        std::vector<BarCombo> images;
        images.reserve(basis.size());
        for (const auto& w : basis) {
            images.push_back(bar_homological(word_combo(w)));
            for (const auto& [t, c] : images.back().terms) rows(t);
        }
        SparseMatrix mat(static_cast<int>(rows.index.size()), static_cast<int>(basis.size()));
        for (std::size_t k = 0; k < basis.size(); ++k)
            for (const auto& [t, c] : images[k].terms) mat.set(rows.index.at(t), static_cast<int>(k), c);
        std::vector<Rational> b(rows.index.size());
        for (const auto& [w, c] : rhs.terms) b[rows.index.at(w)] = c;
        auto x = solve(mat, b);
        if (!x)
            throw DomainError("lift_cocycle: inconsistent system at bidegree (-" + std::to_string(len + 1) + "," +
                              std::to_string(*q0 + len) + ")");
        BarCombo next;
        for (std::size_t k = 0; k < basis.size(); ++k) next.add(word_combo(basis[k], (*x)[k]));
        z.add(next);
        layer = std::move(next);
    }
    return z;
}

bool verify_bar_cocycle(const BarCombo& z) { return bar_differential(z).is_zero(); }

Rational pair_homotopy(const BracketExpr& b, const BarCombo& z) {
    if (z.is_zero()) return 0;
    const Context ctx = z.terms.begin()->first.front().ctx;
    return pair(as_length_one(theta(b, ctx)), z);
}

int primitive_homology_dim(const Context& ctx, int length) {
    if (length < 1) throw DomainError("primitive_homology_dim requires length >= 1");
    // Weight `length`, v free vertices: E = length + v; the middle term has v = length - 1.
    auto basis = [&](int v) {
        std::vector<Diagram> out;
        if (v < 0) return out;
        for (const auto& d : enumerate_diagrams(ctx, length + v, v))
            if (classify(d).internally_connected) out.push_back(d);
        return out;
    };
    auto rank_of = [&](const std::vector<Diagram>& src, const std::vector<Diagram>& dst) {
        if (src.empty() || dst.empty()) return 0;
        std::map<Diagram, int> col;
        for (const auto& d : dst) col.emplace(d, static_cast<int>(col.size()));
        SparseMatrix mat(0, static_cast<int>(dst.size()));
        for (const auto& s : src) {
            std::vector<std::pair<int, Rational>> row;
            for (const auto& [t, c] : blow_ups(s).terms) row.emplace_back(col.at(t), c);
            mat.push_row(std::move(row));
        }
        return rref_rank(mat).rank;
    };
    const auto lower = basis(length - 2), middle = basis(length - 1), upper = basis(length);
    return static_cast<int>(middle.size()) - rank_of(middle, upper) - rank_of(lower, middle);
}

}  // namespace pbdiag
