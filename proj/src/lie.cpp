#include "pbdiag/lie.hpp"

#include "pbdiag/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pbdiag {

namespace {

int parity_sign(long long e) { return e % 2 ? -1 : 1; }

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

constexpr long long kWordCap = 2'000'000;

}  // namespace

bool BracketExpr::same_shape(const BracketExpr& o) const {
    if (is_gen() != o.is_gen()) return false;
    if (is_gen()) return gen == o.gen;
    return left->same_shape(*o.left) && right->same_shape(*o.right);
}

std::vector<Gen> BracketExpr::leaves() const {
    if (is_gen()) return {gen};
    auto l = left->leaves();
    auto r = right->leaves();
    l.insert(l.end(), r.begin(), r.end());
    return l;
}

BracketExpr generator(int j, int i, Convention c) {
    if (i < 1 || j < 1 || i == j) throw DomainError("generator indices must be distinct positive integers");
    BracketExpr b;
    b.gen = {j, i};
    b.convention = c;
    return b;
}

BracketExpr bracket(const BracketExpr& a, const BracketExpr& b) {
    BracketExpr r;
    r.left = std::make_shared<const BracketExpr>(a);
    r.right = std::make_shared<const BracketExpr>(b);
    r.convention = a.convention;
    return r;
}

BracketExpr left_normed(const std::vector<Gen>& gens, Convention c) {
    if (gens.empty()) throw DomainError("empty bracket");
    BracketExpr acc = generator(gens[0].j, gens[0].i, c);
    for (std::size_t k = 1; k < gens.size(); ++k) acc = bracket(acc, generator(gens[k].j, gens[k].i, c));
    return acc;
}

BracketExpr left_normed(int j, const std::vector<int>& indices, Convention c) {
    std::vector<Gen> gens;
    for (int i : indices) gens.push_back({j, i});
    return left_normed(gens, c);
}

BracketExpr with_convention(const BracketExpr& b, Convention c) {
    if (b.is_gen()) return generator(b.gen.j, b.gen.i, c);
    BracketExpr r = bracket(with_convention(*b.left, c), with_convention(*b.right, c));
    r.convention = c;
    return r;
}

std::string to_text(const BracketExpr& b) {
    if (b.is_gen()) return "B" + std::to_string(b.gen.j) + "," + std::to_string(b.gen.i);
    return "[" + to_text(*b.left) + ", " + to_text(*b.right) + "]";
}

namespace {

// [X, B] for X a combination of left-normed words.
LieCombo bracket_with(const LieCombo& x, const BracketExpr& b, int d, int n, bool standardize) {
    LieCombo out;
    if (b.is_gen()) {
        Gen g = b.gen;
        int s = 1;
        if (standardize && g.j < g.i) {
            std::swap(g.j, g.i);
            s = parity_sign(n);
        }
        for (const auto& [w, c] : x.terms) {
            LieWord nw = w;
            nw.push_back(g);
            out.add(nw, c * s);
        }
        return out;
    }
    // [X,[Y,Z]] = [[X,Y],Z] - (-1)^{|Y||Z|} [[X,Z],Y]
    const long long dy = static_cast<long long>(b.left->length()) * d;
    const long long dz = static_cast<long long>(b.right->length()) * d;
    out.add(bracket_with(bracket_with(x, *b.left, d, n, standardize), *b.right, d, n, standardize));
    out.add(bracket_with(bracket_with(x, *b.right, d, n, standardize), *b.left, d, n, standardize),
            -parity_sign(dy * dz));
    return out;
}

LieCombo normalize_impl(const BracketExpr& b, int d, int n, bool standardize) {
    if (b.is_gen()) {
        LieCombo one;
        one.add(LieWord{}, 1);
        return bracket_with(one, b, d, n, standardize);
    }
    return bracket_with(normalize_impl(*b.left, d, n, standardize), *b.right, d, n, standardize);
}

}  // namespace

LieCombo left_normalize(const BracketExpr& b, int n) { return normalize_impl(b, n - 2, n, true); }

LieCombo left_normalize(const BracketSum& s, int n) {
    LieCombo out;
    for (const auto& [c, b] : s.terms) out.add(left_normalize(b, n), c);
    return out;
}

LieCombo left_normalize_graded(const BracketExpr& b, int generator_degree) {
    return normalize_impl(b, generator_degree, 0, false);
}

WordPoly pbw_expand_graded(const LieCombo& x, int d) {
    WordPoly out;
    for (const auto& [w, c] : x.terms) {
        if (w.empty()) continue;
        WordPoly p;
        p.add(LieWord{w[0]}, 1);
        for (std::size_t k = 1; k < w.size(); ++k) {
            // [P, x] = P x - (-1)^{|P||x|} x P
            const int s = parity_sign(static_cast<long long>(k) * d * d);
            WordPoly q;
            for (const auto& [u, cu] : p.terms) {
                LieWord a = u;
                a.push_back(w[k]);
                q.add(a, cu);
                LieWord b{w[k]};
                b.insert(b.end(), u.begin(), u.end());
                q.add(b, -s * cu);
            }
            p = std::move(q);
        }
        out.add(p, c);
    }
    return out;
}

WordPoly pbw_expand(const LieCombo& x, int n) { return pbw_expand_graded(x, n - 2); }
WordPoly pbw_expand(const BracketExpr& b, int n) {
    // Expands the bracket tree as nested graded commutators, independently of left_normalize.
    const int d = n - 2;
    auto rec = [&](auto&& self, const BracketExpr& e) -> WordPoly {
        WordPoly out;
        if (e.is_gen()) {
            Gen g = e.gen;
            int s = 1;
            if (g.j < g.i) {
                std::swap(g.j, g.i);
                s = parity_sign(n);
            }
            out.add(LieWord{g}, s);
            return out;
        }
        const WordPoly x = self(self, *e.left), y = self(self, *e.right);
        const int s = parity_sign(static_cast<long long>(e.left->length()) * e.right->length() * d * d);
        for (const auto& [u, cu] : x.terms)
            for (const auto& [w, cw] : y.terms) {
                LieWord uw = u, wu = w;
                uw.insert(uw.end(), w.begin(), w.end());
                wu.insert(wu.end(), u.begin(), u.end());
                out.add(uw, cu * cw);
                out.add(wu, -s * cu * cw);
            }
        return out;
    };
    return rec(rec, b);
}

long long free_lie_dimension(int g, int len, int d) {
    if (g < 1 || len < 1) return 0;
    if (ipow(g, len) > kWordCap) throw CapacityError("free_lie_dimension: g^length exceeds cap");
    // The free Lie algebra is multigraded by letter content, so rank block by block.
    std::map<LieWord, std::vector<LieWord>> blocks;
    LieWord w(len, Gen{0, 1});
    while (true) {
        LieWord content = w;
        std::sort(content.begin(), content.end());
        blocks[content].push_back(w);
        int pos = len - 1;
        while (pos >= 0 && w[pos].i == g) w[pos--].i = 1;
        if (pos < 0) break;
        ++w[pos].i;
    }
    long long total = 0;
    for (const auto& [content, words] : blocks) {
        std::map<LieWord, int> col;
        for (const auto& u : words) col.emplace(u, static_cast<int>(col.size()));
        SparseMatrix mat(0, static_cast<int>(col.size()));
        for (const auto& u : words) {
            LieCombo single;
            single.add(u, 1);
            std::vector<std::pair<int, Rational>> row;
            for (const auto& [t, c] : pbw_expand_graded(single, d).terms) row.emplace_back(col.at(t), c);
            mat.push_row(std::move(row));
        }
        total += rref_rank(mat).rank;
    }
    return total;
}

int mobius(int k) {
    int result = 1;
    for (int p = 2; p * p <= k; ++p) {
        if (k % p) continue;
        k /= p;
        if (k % p == 0) return 0;
        result = -result;
    }
    if (k > 1) result = -result;
    return result;
}

long long witt_dimension(int g, int len) {
    long long sum = 0;
    for (int e = 1; e <= len; ++e)
        if (len % e == 0) sum += mobius(len / e) * ipow(g, e);
    if (sum % len) throw DomainError("necklace count not integral");
    return sum / len;
}

MilnorDims milnor_dims(int m, int r) {
    if (m < 2 || r < 1) throw DomainError("milnor_dims requires m >= 2 and r >= 1");
    auto N = [](int mm, int rr) {
        long long s = 0;
        for (int e = 1; e <= rr; ++e)
            if (rr % e == 0) s += mobius(rr / e) * ipow(mm, e);
        if (s % rr) throw DomainError("N_r(m) not integral");
        return s / rr;
    };
    long long p = 0;
    for (int e = 1; e <= r; ++e) {
        if (r % e) continue;
        long long inner = 0;
        for (int i = 1; i <= m - 1; ++i) inner += ipow(i, e);
        p += mobius(r / e) * inner;
    }
    if (p % r) throw DomainError("dim P_r(m) not integral");
    return {p / r, m * N(m, r) - N(m, r + 1)};
}

std::vector<BracketSum> yang_baxter_elements(int m, int n) {
    std::vector<BracketSum> out;
    const Rational sn = parity_sign(n);
    std::vector<Gen> gens;
    for (int j = 2; j <= m; ++j)
        for (int i = 1; i < j; ++i) gens.push_back({j, i});
    auto g = [](int j, int i) { return generator(j, i); };

    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            Gen x = gens[a], y = gens[b];
            if (x.i == y.i || x.i == y.j || x.j == y.i || x.j == y.j) continue;
            BracketSum s;
            s.terms.emplace_back(1, bracket(g(x.j, x.i), g(y.j, y.i)));
            s.label = "[" + to_text(g(x.j, x.i)) + ", " + to_text(g(y.j, y.i)) + "]";
            out.push_back(std::move(s));
        }
    for (const Gen& x : gens) {
        BracketSum s;
        s.terms.emplace_back(1, g(x.i, x.j));
        s.terms.emplace_back(-sn, g(x.j, x.i));
        s.label = to_text(g(x.i, x.j)) + " - (-1)^n " + to_text(g(x.j, x.i));
        out.push_back(std::move(s));
    }
    for (int j = 1; j <= m; ++j)
        for (int t = j + 1; t <= m; ++t)
            for (int i = t + 1; i <= m; ++i) {
                BracketSum s;
                s.terms.emplace_back(1, bracket(g(i, j), g(i, t)));
                s.terms.emplace_back(sn, bracket(g(i, j), g(t, j)));
                s.label = "[" + to_text(g(i, j)) + ", " + to_text(g(i, t)) + " + (-1)^n " + to_text(g(t, j)) + "]";
                out.push_back(std::move(s));
                BracketSum u;
                u.terms.emplace_back(1, bracket(g(t, j), g(i, j)));
                u.terms.emplace_back(1, bracket(g(t, j), g(i, t)));
                u.label = "[" + to_text(g(t, j)) + ", " + to_text(g(i, j)) + " + " + to_text(g(i, t)) + "]";
                u.implied = true;
                out.push_back(std::move(u));
            }
    return out;
}

}  // namespace pbdiag
