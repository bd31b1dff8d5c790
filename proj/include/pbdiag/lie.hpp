#pragma once

#include "pbdiag/rational.hpp"

#include <compare>
#include <memory>
#include <string>
#include <vector>

namespace pbdiag {

enum class Convention { samelson, whitehead };

// Generator B_{j,i}. Normally j > i; a reversed pair stands for (-1)^n B_{i,j}.
struct Gen {
    int j = 0;
    int i = 0;
    auto operator<=>(const Gen&) const = default;
};

struct BracketExpr {
    Gen gen{};
    std::shared_ptr<const BracketExpr> left, right;
    Convention convention = Convention::samelson;

    bool is_gen() const { return !left; }
    int length() const { return is_gen() ? 1 : left->length() + right->length(); }
    bool same_shape(const BracketExpr& o) const;
    std::vector<Gen> leaves() const;
};

BracketExpr generator(int j, int i, Convention c = Convention::samelson);
BracketExpr bracket(const BracketExpr& a, const BracketExpr& b);
// [[..[B_{j,i1},B_{j,i2}],..],B_{j,ik}]
BracketExpr left_normed(int j, const std::vector<int>& indices, Convention c = Convention::samelson);
BracketExpr left_normed(const std::vector<Gen>& gens, Convention c = Convention::samelson);
BracketExpr with_convention(const BracketExpr& b, Convention c);
std::string to_text(const BracketExpr& b);

// A rational combination of bracket expressions (relation elements are such sums).
struct BracketSum {
    std::vector<std::pair<Rational, BracketExpr>> terms;
    std::string label;
    bool implied = false;
};

using LieWord = std::vector<Gen>;
using LieCombo = Combo<LieWord, struct LieTag>;    // keys are left-normed monomials
using WordPoly = Combo<LieWord, struct AssocTag>;  // free associative algebra

// Generator degree is n - 2 throughout (Samelson grading).
LieCombo left_normalize(const BracketExpr& b, int n);
LieCombo left_normalize(const BracketSum& s, int n);
WordPoly pbw_expand(const LieCombo& x, int n);
WordPoly pbw_expand(const BracketExpr& b, int n);

// Same machinery with an explicit generator degree, independent of any ambient n.
LieCombo left_normalize_graded(const BracketExpr& b, int generator_degree);
WordPoly pbw_expand_graded(const LieCombo& x, int generator_degree);

long long free_lie_dimension(int generators, int length, int generator_degree);
long long witt_dimension(int generators, int length);  // necklace count, ungraded
int mobius(int k);

struct MilnorDims {
    long long P = 0;
    long long M = 0;
};
MilnorDims milnor_dims(int m, int r);

std::vector<BracketSum> yang_baxter_elements(int m, int n);

}  // namespace pbdiag
