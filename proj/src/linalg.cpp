#include "pbdiag/linalg.hpp"

#include <algorithm>
#include <map>

namespace pbdiag {

void SparseMatrix::push_row(std::vector<std::pair<int, Rational>> entries) {
    std::map<int, Rational> acc;
    for (auto& [c, v] : entries) {
        if (c < 0 || c >= cols) throw DomainError("column index out of range");
        acc[c] += v;
    }
    SparseRow row;
    for (auto& [c, v] : acc)
        if (sgn(v) != 0) row.emplace_back(c, v);
    data.push_back(std::move(row));
    ++rows;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
    auto& row = data.at(r);
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (sgn(v) == 0)
            row.erase(it);
        else
            it->second = v;
    } else if (sgn(v) != 0) {
        row.insert(it, {c, v});
    }
}

Rational SparseMatrix::at(int r, int c) const {
    for (const auto& [col, v] : data.at(r))
        if (col == c) return v;
    return 0;
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& x) const {
    std::vector<Rational> y(rows);
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : data[r]) y[r] += v * x.at(c);
    return y;
}

RrefResult rref_rank_dense(const SparseMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.data[r]) a[r][c] = v;

    RrefResult res;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int sel = -1;
        for (int r = row; r < m.rows; ++r)
            if (sgn(a[r][col]) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[row], a[sel]);
        Rational inv = 1 / a[row][col];
        for (int c = col; c < m.cols; ++c) a[row][c] *= inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || sgn(a[r][col]) == 0) continue;
            Rational f = a[r][col];
            for (int c = col; c < m.cols; ++c)
                if (sgn(a[row][c]) != 0) a[r][c] -= f * a[row][c];
        }
        res.pivots.push_back(col);
        ++row;
    }
    res.rank = row;
    res.reduced = SparseMatrix(0, m.cols);
    for (int r = 0; r < row; ++r) {
        std::vector<std::pair<int, Rational>> e;
        for (int c = 0; c < m.cols; ++c)
            if (sgn(a[r][c]) != 0) e.emplace_back(c, a[r][c]);
        res.reduced.push_row(std::move(e));
    }
    return res;
}

namespace {

// dst -= f * src, both sorted sparse rows
void axpy(SparseRow& dst, const Rational& f, const SparseRow& src) {
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(std::move(dst[i++]));
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            out.emplace_back(src[j].first, -f * src[j].second);
            ++j;
        } else {
            Rational v = dst[i].second - f * src[j].second;
            if (sgn(v) != 0) out.emplace_back(dst[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    dst = std::move(out);
}

Rational coeff_in(const SparseRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it->second : Rational(0);
}

}  // namespace

RrefResult rref_rank_sparse(const SparseMatrix& m) {
    std::map<int, SparseRow> basis;  // pivot column -> normalized, fully reduced row
    for (const auto& input : m.data) {
        SparseRow row = input;
        // Eliminate every pivot column present in the incoming row.
        for (const auto& [p, prow] : basis) {
            Rational f = coeff_in(row, p);
            if (sgn(f) != 0) axpy(row, f, prow);
        }
        if (row.empty()) continue;
        int lead = row.front().first;
        Rational inv = 1 / row.front().second;
        for (auto& e : row) e.second *= inv;
        for (auto& [p, prow] : basis) {
            Rational f = coeff_in(prow, lead);
            if (sgn(f) != 0) axpy(prow, f, row);
        }
        basis.emplace(lead, std::move(row));
    }
    RrefResult res;
    res.reduced = SparseMatrix(0, m.cols);
    for (auto& [p, row] : basis) {
        res.pivots.push_back(p);
        res.reduced.data.push_back(std::move(row));
        ++res.reduced.rows;
    }
    res.rank = static_cast<int>(res.pivots.size());
    return res;
}

RrefResult rref_rank(const SparseMatrix& m) {
    return m.cols < kDenseColumnLimit ? rref_rank_dense(m) : rref_rank_sparse(m);
}

std::optional<std::vector<Rational>> solve(const SparseMatrix& m, const std::vector<Rational>& b) {
    if (static_cast<int>(b.size()) != m.rows) throw DomainError("solve: shape mismatch");
    SparseMatrix aug(0, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        std::vector<std::pair<int, Rational>> e(m.data[r].begin(), m.data[r].end());
        if (sgn(b[r]) != 0) e.emplace_back(m.cols, b[r]);
        aug.push_row(std::move(e));
    }
    RrefResult red = rref_rank(aug);
    std::vector<Rational> x(m.cols);
    for (int r = 0; r < red.rank; ++r) {
        int p = red.pivots[r];
        if (p == m.cols) return std::nullopt;
        x[p] = coeff_in(red.reduced.data[r], m.cols);
    }
    return x;
}

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m) {
    RrefResult red = rref_rank(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : red.pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> out;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> k(m.cols);
        k[f] = 1;
        for (int r = 0; r < red.rank; ++r) k[red.pivots[r]] = -coeff_in(red.reduced.data[r], f);
        out.push_back(std::move(k));
    }
    return out;
}

std::vector<Rational>& reduce_against(const RrefResult& r, std::vector<Rational>& v) {
    for (int i = 0; i < r.rank; ++i) {
        Rational f = v.at(r.pivots[i]);
        if (sgn(f) == 0) continue;
        for (const auto& [c, val] : r.reduced.data[i]) v[c] -= f * val;
    }
    return v;
}

}  // namespace pbdiag
