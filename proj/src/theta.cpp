#include "pbdiag/theta.hpp"

#include "pbdiag/linalg.hpp"

#include <map>

namespace pbdiag {

namespace {

DualCombo theta_rec(const BracketExpr& b, const Context& ctx, Convention conv) {
    if (b.is_gen()) {
        const Gen g = b.gen;
        if (g.i < 1 || g.j < 1 || g.i > ctx.m || g.j > ctx.m || g.i == g.j)
            throw DomainError("generator index out of range for m=" + std::to_string(ctx.m));
        return as_dual(chord(ctx, g.i, g.j));
    }
    if (ctx.quotient == Quotient::D && b.left->same_shape(*b.right))
        throw DomainError("theta in quotient D is undefined on a square bracket " + to_text(b));
    DualCombo ga = theta_rec(*b.left, ctx, conv);
    DualCombo gb = theta_rec(*b.right, ctx, conv);
    DualCombo out = dual_differential(dual_product(ga, gb));
    if (conv == Convention::samelson) {
        const int a = b.left->length() * (ctx.n - 2) + 1;
        if (a % 2) out = out.scaled(-1);
    }
    return out;
}

}  // namespace

DualCombo theta(const BracketExpr& b, const Context& ctx) { return theta_rec(b, ctx, b.convention); }

DualCombo theta(const BracketSum& s, const Context& ctx) {
    DualCombo out;
    for (const auto& [c, b] : s.terms) out.add(theta(b, ctx), c);
    return out;
}

TreeCombo theta_tilde(const DualCombo& x) {
    TreeCombo out;
    for (const auto& [d, c] : x.terms) {
        if (!is_tree_diagram(d)) continue;
        Diagram t = d;
        t.ctx.quotient = Quotient::Dbar;
        out.add(t, c);
    }
    return out;
}

int theta_sign(int n, int m, Convention c) {
    if (m < 3) throw DomainError("theta_sign requires m >= 3");
    if (n % 2 == 0) return (m % 4 == 0 || m % 4 == 1) ? 1 : -1;
    if (c == Convention::whitehead) return (m % 4 == 0 || m % 4 == 3) ? -1 : 1;
    return m % 2 ? 1 : -1;
}

bool is_exact(const DualCombo& x) {
    if (x.is_zero()) return true;
    // Split by weight |E| - v; δ* preserves it and raises v by one.
    std::map<std::pair<int, int>, DualCombo> blocks;
    for (const auto& [d, c] : x.terms) {
        if (!classify(d).internally_connected) throw DomainError("is_exact expects internally connected terms");
        blocks[{weight(d), d.v}].add(d, c);
    }
    for (const auto& [key, target] : blocks) {
        const auto [w, v] = key;
        if (v == 0) return false;
        const Context ctx = target.terms.begin()->first.ctx;
        std::vector<Diagram> sources;
        for (const auto& d : enumerate_diagrams(ctx, w + v - 1, v - 1))
            if (classify(d).internally_connected) sources.push_back(d);
        std::map<Diagram, int> row;
        for (const auto& [d, c] : target.terms) row.emplace(d, static_cast<int>(row.size()));
        std::vector<DualCombo> images;
        for (const auto& s : sources) {
            images.push_back(blow_ups(s));
            for (const auto& [d, c] : images.back().terms) row.emplace(d, static_cast<int>(row.size()));
        }
        SparseMatrix m(static_cast<int>(row.size()), static_cast<int>(sources.size()));
        for (std::size_t k = 0; k < sources.size(); ++k)
            for (const auto& [d, c] : images[k].terms) m.set(row.at(d), static_cast<int>(k), c);
        std::vector<Rational> rhs(row.size());
        for (const auto& [d, c] : target.terms) rhs[row.at(d)] = c;
        if (!solve(m, rhs)) return false;
    }
    return true;
}

}  // namespace pbdiag
