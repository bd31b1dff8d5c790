#include "pbdiag/cobar_bar.hpp"

#include "pbdiag/cdga.hpp"

#include <algorithm>
#include <sstream>

namespace pbdiag {

namespace {

int parity_sign(long long e) { return e % 2 ? -1 : 1; }

int sequence_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[j] < seq[i]) ++inv;
    return parity_sign(inv);
}

BarWord splice(const BarWord& w, std::size_t at, std::size_t len, const BarWord& mid) {
    BarWord out(w.begin(), w.begin() + at);
    out.insert(out.end(), mid.begin(), mid.end());
    out.insert(out.end(), w.begin() + at + len, w.end());
    return out;
}

}  // namespace

DualCombo blow_ups(const Diagram& key, bool segments) {
    DualCombo out;
    const int m = key.ctx.m, N = key.vertex_count();
    const int f = N + 1;
    for (int x = 1; x <= N; ++x) {
        std::vector<int> half;
        for (int e = 0; e < static_cast<int>(key.edges.size()); ++e)
            if (key.edges[e].first == x || key.edges[e].second == x) half.push_back(e);
        const int k = static_cast<int>(half.size());
        const bool seg = x <= m;
        if (seg && (!segments || k < 2)) continue;
        if (!seg && k < 4) continue;
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            int moved = __builtin_popcount(mask);
            if (moved < 2) continue;
            if (!seg && (k - moved < 2 || (mask & 1u))) continue;
            Diagram g{key.ctx, key.v + 1, key.edges};
            for (int b = 0; b < k; ++b) {
                if (!(mask & (1u << b))) continue;
                Edge& e = g.edges[half[b]];
                if (e.first == x) e.first = f;
                if (e.second == x) e.second = f;
            }
            g.edges.emplace_back(x, f);
            int eps = edge_sign(g, static_cast<int>(g.edges.size()) - 1);
            if (auto c = canonicalize(g)) out.add(c->key, eps * c->sign);
        }
    }
    return out;
}

DualCombo dual_differential(const DualCombo& x) {
    DualCombo out;
    for (const auto& [d, c] : x.terms) out.add(blow_ups(d), c);
    return out;
}

DualCombo dual_product(const DualCombo& x, const DualCombo& y) {
    DualCombo out;
    for (const auto& [a, ca] : x.terms)
        for (const auto& [b, cb] : y.terms)
            if (auto canon = canonicalize(raw_product(a, b))) out.add(canon->key, ca * cb * canon->sign);
    return out;
}

int word_degree(const BarWord& w) {
    int q = 0;
    for (const auto& d : w) q += degree(d);
    return q;
}

BarCombo bar_internal(const BarCombo& x) {
    BarCombo out;
    for (const auto& [w, c] : x.terms) {
        int prefix = 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            int s = parity_sign(i + 1) * prefix;
            DiagramCombo dd = differential(as_combo(w[i]));
            for (const auto& [t, ct] : dd.terms) out.add(splice(w, i, 1, {t}), c * s * ct);
            prefix *= parity_sign(degree(w[i]));
        }
    }
    return out;
}

BarCombo bar_homological(const BarCombo& x) {
    BarCombo out;
    for (const auto& [w, c] : x.terms) {
        int prefix = 1;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            int s = parity_sign(i + 1) * prefix * parity_sign(degree(w[i]));
            if (auto p = canonicalize(raw_product(w[i], w[i + 1])))
                out.add(splice(w, i, 2, {p->key}), c * s * p->sign);
            prefix *= parity_sign(degree(w[i]));
        }
    }
    return out;
}

BarCombo bar_differential(const BarCombo& x) { return bar_internal(x) - bar_homological(x); }

CobarCombo cobar_length_one(const Diagram& key) {
    CobarCombo out;
    for (const auto& [g, c] : blow_ups(key).terms) out.add({g}, -c);

    const bool odd = key.ctx.odd();
    const int m = key.ctx.m;
    auto comps = internal_components(key);
    const int k = static_cast<int>(comps.size());
    if (k < 2) return out;
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        std::vector<int> se, te;
        for (int c = 0; c < k; ++c) {
            auto& dst = (mask & (1u << c)) ? se : te;
            dst.insert(dst.end(), comps[c].begin(), comps[c].end());
        }
        std::sort(se.begin(), se.end());
        std::sort(te.begin(), te.end());
        int s_st;
        if (odd) {
            std::vector<int> fs, ft;
            for (int e : se)
                for (int x : {key.edges[e].first, key.edges[e].second})
                    if (x > m) fs.push_back(x);
            for (int e : te)
                for (int x : {key.edges[e].first, key.edges[e].second})
                    if (x > m) ft.push_back(x);
            auto uniq = [](std::vector<int>& v) {
                std::sort(v.begin(), v.end());
                v.erase(std::unique(v.begin(), v.end()), v.end());
            };
            uniq(fs);
            uniq(ft);
            fs.insert(fs.end(), ft.begin(), ft.end());
            s_st = sequence_sign(fs);
        } else {
            std::vector<int> order = se;
            order.insert(order.end(), te.begin(), te.end());
            s_st = sequence_sign(order);
        }
        auto a = canonicalize(subdiagram(key, se));
        auto b = canonicalize(subdiagram(key, te));
        if (!a || !b) continue;
        int s = parity_sign(degree(a->key)) * a->sign * b->sign * s_st;
        out.add({a->key, b->key}, s);
    }
    return out;
}

CobarCombo cobar_differential(const CobarCombo& x) {
    CobarCombo out;
    for (const auto& [w, c] : x.terms) {
        long long eps = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
            int s = parity_sign(eps);
            for (const auto& [piece, cp] : cobar_length_one(w[i]).terms) out.add(splice(w, i, 1, piece), c * s * cp);
            eps += degree(w[i]) - 1;
        }
    }
    return out;
}

BarCombo shuffle_product(const BarCombo& x, const BarCombo& y) {
    BarCombo out;
    for (const auto& [u, cu] : x.terms) {
        for (const auto& [w, cw] : y.terms) {
            if (!u.empty() && !w.empty() && u.front().ctx != w.front().ctx)
                throw DomainError("shuffle_product: context mismatch");
            const int r = static_cast<int>(u.size()), s = static_cast<int>(w.size());
            for (unsigned mask = 0; mask < (1u << (r + s)); ++mask) {
                if (__builtin_popcount(mask) != r) continue;  // bit set: position taken by u
                BarWord merged;
                int iu = 0, iw = 0, sign = 1;
                for (int p = 0; p < r + s; ++p) {
                    if (mask & (1u << p)) {
                        // every w-letter already placed is now passed by this u-letter
                        for (int q = 0; q < iw; ++q)
                            sign *= parity_sign(static_cast<long long>(degree(u[iu]) - 1) * (degree(w[q]) - 1));
                        merged.push_back(u[iu++]);
                    } else {
                        merged.push_back(w[iw++]);
                    }
                }
                out.add(merged, cu * cw * sign);
            }
        }
    }
    return out;
}

std::vector<std::pair<BarWord, BarWord>> deconcatenation(const BarWord& w) {
    std::vector<std::pair<BarWord, BarWord>> out;
    for (std::size_t i = 0; i <= w.size(); ++i)
        out.emplace_back(BarWord(w.begin(), w.begin() + i), BarWord(w.begin() + i, w.end()));
    return out;
}

std::vector<std::tuple<int, BarWord, BarWord>> coshuffle(const BarWord& w) {
    std::vector<std::tuple<int, BarWord, BarWord>> out;
    const int r = static_cast<int>(w.size());
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        BarWord left, right;
        int sign = 1;
        for (int p = 0; p < r; ++p) {
            if (mask & (1u << p)) {
                for (int q = 0; q < p; ++q)
                    if (!(mask & (1u << q)))
                        sign *= parity_sign(static_cast<long long>(degree(w[p]) - 1) * (degree(w[q]) - 1));
                left.push_back(w[p]);
            } else {
                right.push_back(w[p]);
            }
        }
        out.emplace_back(sign, std::move(left), std::move(right));
    }
    return out;
}

Rational pair(const DualCombo& x, const DiagramCombo& y) {
    Rational total = 0;
    for (const auto& [d, c] : x.terms) {
        auto it = y.terms.find(d);
        if (it != y.terms.end()) total += c * it->second * Rational(automorphism_count(d));
    }
    return total;
}

Rational pair(const CobarCombo& x, const BarCombo& y) {
    Rational total = 0;
    for (const auto& [w, c] : x.terms) {
        auto it = y.terms.find(w);
        if (it == y.terms.end()) continue;
        Rational p = c * it->second;
        for (const auto& d : w) p *= Rational(automorphism_count(d));
        total += p;
    }
    return total;
}

namespace {
template <class C>
C make_word(const BarWord& w, const Rational& c) {
    C out;
    BarWord canon;
    int sign = 1;
    for (const auto& d : w) {
        if (d.empty()) throw DomainError("bar words may not contain the empty diagram");
        auto k = canonicalize(d);
        if (!k) return out;
        canon.push_back(k->key);
        sign *= k->sign;
    }
    out.add(canon, c * sign);
    return out;
}
}  // namespace

BarCombo word_combo(const BarWord& w, const Rational& c) { return make_word<BarCombo>(w, c); }
CobarCombo dual_word_combo(const BarWord& w, const Rational& c) { return make_word<CobarCombo>(w, c); }

CobarCombo as_length_one(const DualCombo& x) {
    CobarCombo out;
    for (const auto& [d, c] : x.terms) out.add({d}, c);
    return out;
}

BarCombo as_length_one(const DiagramCombo& x) {
    BarCombo out;
    for (const auto& [d, c] : x.terms) out.add({d}, c);
    return out;
}

std::string to_text(const BarWord& w) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " | " : "") << to_text(w[i]);
    os << "]";
    return os.str();
}

}  // namespace pbdiag
