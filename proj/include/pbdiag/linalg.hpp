#pragma once

#include "pbdiag/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pbdiag {

// Sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<int, Rational>>;

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseRow> data;  // one entry per row

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), data(r) {}

    // Appends a row given as (column, value) pairs in any order; duplicates are summed.
    void push_row(std::vector<std::pair<int, Rational>> entries);
    void set(int r, int c, const Rational& v);
    Rational at(int r, int c) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;
};

struct RrefResult {
    SparseMatrix reduced;     // exactly `rank` rows, each with leading coefficient 1
    int rank = 0;
    std::vector<int> pivots;  // pivot column of each reduced row, increasing
};

// The reduced row echelon form is unique, so the dense and sparse paths agree exactly.
RrefResult rref_rank(const SparseMatrix& m);
RrefResult rref_rank_dense(const SparseMatrix& m);
RrefResult rref_rank_sparse(const SparseMatrix& m);

// Particular solution with every free variable set to zero, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const SparseMatrix& m, const std::vector<Rational>& b);

std::vector<std::vector<Rational>> kernel_basis(const SparseMatrix& m);

// Reduces `v` (dense, length = cols) against an RREF in place; returns it.
std::vector<Rational>& reduce_against(const RrefResult& r, std::vector<Rational>& v);

inline constexpr int kDenseColumnLimit = 1000;

}  // namespace pbdiag
