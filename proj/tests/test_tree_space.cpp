#include "pbdiag/tree_space.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace pbdiag;

namespace {

TreeCombo row_combo(const RelationMatrix& rm, int r) {
    TreeCombo out;
    for (const auto& [col, c] : rm.rows.data[r]) out.add(rm.trees[col], c);
    return out;
}

TreeCombo single(const Diagram& d, const Rational& c = 1) {
    TreeCombo out;
    out.add(d, c);
    return out;
}

}  // namespace

TEST(TreeQuotient, DistinctLeafDimensionsAreFactorials) {
    for (int n : {3, 4}) {
        Context ctx{6, n, Quotient::Dbar};
        int fact = 1;
        for (int k = 3; k <= 6; ++k) {
            std::vector<int> leaves(k);
            std::iota(leaves.begin(), leaves.end(), 1);
            EXPECT_EQ(tree_quotient(ctx, leaves).dimension(), fact) << "n=" << n << " k=" << k;
            fact *= k - 1;
        }
    }
}

TEST(TreeQuotient, RepeatedLeaves) {
    Context odd{3, 3, Quotient::Dbar}, even{3, 4, Quotient::Dbar};
    EXPECT_EQ(tree_quotient(odd, {1, 1, 2}).dimension(), 1);
    // Two equal leaves on a trivalent vertex: antisymmetry kills the tripod when n is even.
    EXPECT_EQ(tree_quotient(even, {1, 1, 2}).dimension(), 0);
    EXPECT_EQ(tree_quotient(odd, {1, 1, 1, 2}).dimension(), 0);
}

TEST(TreeQuotient, EvenTripodWithRepeatedLeafVanishes) {
    Context even{2, 4, Quotient::Dbar};
    EXPECT_FALSE(canonicalize(make_diagram(even, 1, {{1, 3}, {1, 3}, {2, 3}})).has_value());
    Context odd{2, 3, Quotient::Dbar};
    EXPECT_TRUE(canonicalize(make_diagram(odd, 1, {{1, 3}, {1, 3}, {2, 3}})).has_value());
}

TEST(TreeQuotient, RelationsVanishInNormalForm) {
    for (int n : {3, 4}) {
        Context ctx{4, n, Quotient::Dbar};
        RelationMatrix rm = ihx_relation_matrix({1, 2, 3, 4}, ctx);
        ASSERT_GT(rm.rows.data.size(), 0u);
        for (std::size_t r = 0; r < rm.rows.data.size(); ++r) {
            TreeCombo rel = row_combo(rm, static_cast<int>(r));
            EXPECT_EQ(rel.size(), 3u);
            EXPECT_TRUE(tree_normal_form(rel).empty());
        }
    }
}

TEST(TreeQuotient, NormalFormIgnoresAddedRelations) {
    Context ctx{5, 3, Quotient::Dbar};
    const std::vector<int> leaves{1, 2, 3, 4, 5};
    RelationMatrix rm = ihx_relation_matrix(leaves, ctx);
    auto trees = enumerate_trees(ctx, leaves);
    ASSERT_GT(trees.size(), 3u);
    TreeCombo x = single(trees[0], 2) + single(trees[3], -1);
    TreeCombo y = x + row_combo(rm, 0).scaled(5) - row_combo(rm, 7);
    EXPECT_EQ(tree_normal_form(x), tree_normal_form(y));
}

TEST(TreePair, BasisIsDualToItself) {
    Context ctx{4, 3, Quotient::Dbar};
    TreeQuotient q = tree_quotient(ctx, {1, 2, 3, 4});
    auto basis = q.basis();
    ASSERT_EQ(basis.size(), 2u);
    for (const auto& b : basis) {
        EXPECT_EQ(tree_pair(single(b), b), 1);
        for (const auto& other : basis)
            if (!(other == b)) EXPECT_EQ(tree_pair(single(other), b), 0);
    }
}

TEST(TreePair, IHXElementPairsToZero) {
    Context ctx{4, 4, Quotient::Dbar};
    RelationMatrix rm = ihx_relation_matrix({1, 2, 3, 4}, ctx);
    for (const auto& t : enumerate_trees(ctx, {1, 2, 3, 4})) EXPECT_EQ(tree_pair(row_combo(rm, 0), t), 0);
}

TEST(TreePair, LeafMultisetMismatchIsZero) {
    Context ctx{4, 3, Quotient::Dbar};
    Diagram t = tree_of_bracket(left_normed(4, {1, 2, 3}), ctx).terms.begin()->first;
    Diagram other = tree_of_bracket(left_normed(3, {1, 2}), ctx).terms.begin()->first;
    EXPECT_EQ(tree_pair(single(other), t), 0);
}

TEST(TreeOfBracket, Tripod) {
    Context ctx{3, 3, Quotient::Dbar};
    TreeCombo t = tree_of_bracket(left_normed(3, {1, 2}), ctx);
    ASSERT_EQ(t.size(), 1u);
    const Diagram& d = t.terms.begin()->first;
    EXPECT_EQ(d.v, 1);
    EXPECT_EQ(leaf_multiset(d), (std::vector<int>{1, 2, 3}));
    EXPECT_EQ(abs(t.terms.begin()->second), 1);
}

TEST(TreeOfBracket, LeftNormedGivesPreferredCaterpillars) {
    for (int n : {3, 4})
        for (int m = 3; m <= 6; ++m) {
            Context ctx{m, n, Quotient::Dbar};
            std::vector<int> idx(m - 1);
            std::iota(idx.begin(), idx.end(), 1);
            TreeCombo t = tree_of_bracket(left_normed(m, idx), ctx);
            ASSERT_EQ(t.size(), 1u);
            const Diagram& d = t.terms.begin()->first;
            EXPECT_TRUE(is_caterpillar(d));
            EXPECT_TRUE(is_preferred_caterpillar(d));
            EXPECT_EQ(abs(tree_pair(t, d)), 1);
        }
}

TEST(TreeOfBracket, NonCaterpillar) {
    Context ctx{6, 3, Quotient::Dbar};
    BracketExpr b = bracket(bracket(bracket(generator(6, 1), generator(6, 2)), bracket(generator(6, 3), generator(6, 4))),
                            generator(6, 5));
    const Diagram d = tree_of_bracket(b, ctx).terms.begin()->first;
    EXPECT_TRUE(is_tree_diagram(d));
    EXPECT_FALSE(is_caterpillar(d));
}

TEST(TreeOfBracket, RejectsMixedIndices) {
    Context ctx{4, 3, Quotient::Dbar};
    EXPECT_THROW(tree_of_bracket(bracket(generator(4, 1), generator(3, 2)), ctx), DomainError);
}

TEST(LabeledTrees, RoundTrip) {
    Context ctx{4, 3, Quotient::Dbar};
    for (const auto& t : enumerate_trees(ctx, {1, 2, 3, 4})) {
        LabeledTree lt = diagram_to_tree(t);
        EXPECT_EQ(lt.leaf_labels.size(), 4u);
        auto c = tree_canonicalize(lt);
        ASSERT_TRUE(c.has_value());
        EXPECT_EQ(c->key, t);
        EXPECT_EQ(c->sign, 1);
        EXPECT_EQ(tree_pair(single(t), lt), tree_pair(single(t), t));
    }
}

TEST(TreePair, VanishingBasisTreeIsRejected) {
    Context ctx{2, 3, Quotient::Dbar};
    // Three equal leaves: IHX and AS kill the quotient.
    TreeCombo t = tree_of_bracket(left_normed(2, {1, 1, 1}), ctx);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_THROW(tree_pair(t, t.terms.begin()->first), DomainError);
}
