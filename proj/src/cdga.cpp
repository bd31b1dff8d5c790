#include "pbdiag/cdga.hpp"

#include <algorithm>

namespace pbdiag {

int edge_sign(const Diagram& d, int index) {
    const Edge& e = d.edges.at(index);
    if (!d.ctx.odd()) return (index + 1) % 2 ? -1 : 1;
    int j = std::max(e.first, e.second);
    int exponent = j - d.ctx.m + (e.first < e.second ? 0 : 1);
    return exponent % 2 ? -1 : 1;
}

Contraction contract_edge(const Diagram& d, int index) {
    const Edge e = d.edges.at(index);
    if (d.is_chord(e)) throw DomainError("cannot contract a chord");
    const int i = std::min(e.first, e.second), j = std::max(e.first, e.second);
    auto relabel = [&](int x) {
        if (x == j) return i;
        return x > j ? x - 1 : x;
    };
    Contraction c;
    c.result.ctx = d.ctx;
    c.result.v = d.v - 1;
    for (int k = 0; k < static_cast<int>(d.edges.size()); ++k) {
        if (k == index) continue;
        c.result.edges.emplace_back(relabel(d.edges[k].first), relabel(d.edges[k].second));
    }
    c.sign = edge_sign(d, index);
    return c;
}

DiagramCombo differential(const DiagramCombo& x) {
    DiagramCombo out;
    for (const auto& [d, coeff] : x.terms) {
        for (int k = 0; k < static_cast<int>(d.edges.size()); ++k) {
            if (d.is_chord(d.edges[k])) continue;
            Contraction c = contract_edge(d, k);
            if (auto canon = canonicalize(c.result)) out.add(canon->key, coeff * c.sign * canon->sign);
        }
    }
    return out;
}

Diagram raw_product(const Diagram& a, const Diagram& b) {
    if (a.ctx != b.ctx) throw DomainError("product: context mismatch");
    const int m = a.ctx.m;
    Diagram p{a.ctx, a.v + b.v, a.edges};
    auto shift = [&](int x) { return x <= m ? x : x + a.v; };
    for (auto [s, t] : b.edges) p.edges.emplace_back(shift(s), shift(t));
    return p;
}

DiagramCombo product(const DiagramCombo& x, const DiagramCombo& y) {
    DiagramCombo out;
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms)
            if (auto canon = canonicalize(raw_product(a, b))) out.add(canon->key, ca * cb * canon->sign);
    return out;
}

DiagramCombo project_to_D(const DiagramCombo& x) {
    DiagramCombo out;
    for (const auto& [d, c] : x.terms) {
        if (d.ctx.quotient != Quotient::Dbar) throw DomainError("project_to_D expects a Dbar combo");
        if (has_multi_edge(d)) continue;
        Diagram q = d;
        q.ctx.quotient = Quotient::D;
        out.add(q, c);
    }
    return out;
}

DiagramCombo indecomposable_projection(const DiagramCombo& x) {
    DiagramCombo out;
    for (const auto& [d, c] : x.terms)
        if (classify(d).internally_connected) out.add(d, c);
    return out;
}

}  // namespace pbdiag
