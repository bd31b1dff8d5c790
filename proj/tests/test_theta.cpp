#include "pbdiag/theta.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace pbdiag;

namespace {

Diagram canon(const Diagram& d) { return canonicalize(d)->key; }

BracketSum as_sum(const LieCombo& x) {
    BracketSum s;
    for (const auto& [w, c] : x.terms) s.terms.emplace_back(c, left_normed(w));
    return s;
}

BracketExpr random_bracket(std::mt19937_64& rng, int j, int length) {
    if (length == 1) return generator(j, 1 + static_cast<int>(rng() % (j - 1)));
    const int left = 1 + static_cast<int>(rng() % (length - 1));
    return bracket(random_bracket(rng, j, left), random_bracket(rng, j, length - left));
}

}  // namespace

TEST(Theta, Generator) {
    Context ctx{3, 3, Quotient::Dbar};
    EXPECT_EQ(theta(generator(3, 1), ctx), as_dual(chord(ctx, 1, 3)));
    EXPECT_THROW(theta(generator(4, 1), ctx), DomainError);
}

TEST(Theta, SquareOfChord) {
    Context ctx{2, 3, Quotient::Dbar};
    DualCombo x = theta(bracket(generator(2, 1), generator(2, 1)), ctx);
    DualCombo expected = as_dual(canon(make_diagram(ctx, 1, {{1, 3}, {1, 3}, {2, 3}})), -1) +
                         as_dual(canon(make_diagram(ctx, 1, {{1, 3}, {2, 3}, {2, 3}})), -1);
    EXPECT_EQ(x, expected);
    TreeCombo t = theta_tilde(x);
    ASSERT_EQ(t.size(), 2u);
    std::vector<std::vector<int>> leaves;
    for (const auto& [d, c] : t.terms) leaves.push_back(leaf_multiset(d));
    EXPECT_EQ(leaves, (std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 2}}));
}

TEST(Theta, SquareIsRejectedInD) {
    Context ctx{2, 3, Quotient::D};
    EXPECT_THROW(theta(bracket(generator(2, 1), generator(2, 1)), ctx), DomainError);
    Context ctx3{3, 3, Quotient::D};
    EXPECT_NO_THROW(theta(left_normed(3, {1, 2, 2}), ctx3));
}

TEST(Theta, SingleTripod) {
    for (int n : {3, 4}) {
        Context ctx{3, n, Quotient::Dbar};
        DualCombo x = theta(left_normed(3, {1, 2}), ctx);
        ASSERT_EQ(x.size(), 1u);
        const auto& [d, c] = *x.terms.begin();
        EXPECT_EQ(d, canon(make_diagram(ctx, 1, {{1, 4}, {2, 4}, {3, 4}})));
        EXPECT_EQ(abs(c), 1);
    }
}

TEST(Theta, TermCounts) {
    for (int n : {3, 4}) {
        Context ctx{3, n, Quotient::Dbar};
        EXPECT_EQ(theta(left_normed(3, {1, 2, 1}), ctx).size(), 2u);
        DualCombo x = theta(left_normed(3, {1, 2, 2, 2}), ctx);
        EXPECT_EQ(x.size(), 6u);
        int non_trees = 0;
        for (const auto& [d, c] : x.terms) non_trees += !is_tree_diagram(d);
        EXPECT_EQ(non_trees, 2);
        EXPECT_EQ(theta_tilde(x).size(), 4u);
    }
}

TEST(Theta, ClosedPrimitiveAndUnitCoefficients) {
    for (int n : {3, 4})
        for (int m = 2; m <= 4; ++m) {
            Context ctx{m, n, Quotient::Dbar};
            for (int len = 2; len <= 4; ++len) {
                std::vector<int> idx(len, 1);
                while (true) {
                    BracketExpr b = left_normed(m, idx);
                    std::vector<int> sorted = idx;
                    std::sort(sorted.begin(), sorted.end());
                    const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
                    DualCombo x = theta(b, ctx);
                    EXPECT_TRUE(dual_differential(x).is_zero()) << to_text(b);
                    for (const auto& [d, c] : x.terms) {
                        EXPECT_TRUE(classify(d).internally_connected);
                        EXPECT_EQ(degree(d) - 1, len * (n - 2));
                        // Repeated indices can merge isomorphic blow-ups into one term.
                        if (distinct) EXPECT_EQ(abs(c), 1) << to_text(b) << " " << to_text(d);
                    }
                    int t = 0;
                    while (t < len && idx[t] == m - 1) idx[t++] = 1;
                    if (t == len) break;
                    ++idx[t];
                }
            }
        }
}

TEST(Theta, WhiteheadDropsSign) {
    Context ctx{3, 3, Quotient::Dbar};
    BracketExpr s = left_normed(3, {1, 2, 2});
    BracketExpr w = with_convention(s, Convention::whitehead);
    // Inner bracket: a = 1*(n-2)+1 = 2, outer: a = 2*(n-2)+1 = 3.
    EXPECT_EQ(theta(w, ctx), theta(s, ctx).scaled(-1));
    Context even{3, 4, Quotient::Dbar};
    // n even: a is odd at both levels.
    EXPECT_EQ(theta(w, even), theta(s, even));
}

TEST(Theta, SumsAreLinear) {
    Context ctx{3, 3, Quotient::Dbar};
    BracketSum s;
    s.terms = {{2, left_normed(3, {1, 2})}, {-1, left_normed(3, {2, 1})}};
    EXPECT_EQ(theta(s, ctx),
              theta(left_normed(3, {1, 2}), ctx).scaled(2) - theta(left_normed(3, {2, 1}), ctx));
}

TEST(Exactness, Examples) {
    Context c4{4, 3, Quotient::Dbar};
    EXPECT_TRUE(is_exact(DualCombo{}));
    EXPECT_TRUE(is_exact(theta(bracket(generator(2, 1), generator(4, 3)), c4)));
    Context c3{3, 3, Quotient::Dbar};
    EXPECT_FALSE(is_exact(theta(left_normed(3, {1, 2}), c3)));
    EXPECT_FALSE(is_exact(as_dual(chord(c3, 1, 2))));
}

TEST(Exactness, RewritingIsInvisibleInHomology) {
    std::mt19937_64 rng(5);
    for (int n : {3, 4}) {
        Context ctx{3, n, Quotient::Dbar};
        for (int trial = 0; trial < 12; ++trial) {
            BracketExpr b = random_bracket(rng, 3, 2 + static_cast<int>(rng() % 3));
            DualCombo lhs = theta(b, ctx);
            DualCombo rhs = theta(as_sum(left_normalize(b, n)), ctx);
            EXPECT_TRUE(is_exact(lhs - rhs)) << to_text(b) << " n=" << n;
            EXPECT_EQ(tree_normal_form(theta_tilde(lhs)), tree_normal_form(theta_tilde(rhs))) << to_text(b);
        }
    }
}

TEST(Exactness, RequiresPrimitiveInput) {
    Context ctx{3, 3, Quotient::Dbar};
    EXPECT_THROW(is_exact(as_dual(canon(make_diagram(ctx, 0, {{1, 2}, {1, 3}})))), DomainError);
}

TEST(Signs, TableLookups) {
    EXPECT_EQ(theta_sign(4, 4), 1);
    EXPECT_EQ(theta_sign(3, 4), -1);
    EXPECT_EQ(theta_sign(3, 5), 1);
    EXPECT_EQ(theta_sign(4, 6, Convention::whitehead), theta_sign(4, 6));
    EXPECT_EQ(theta_sign(3, 3, Convention::whitehead), -1);
    EXPECT_EQ(theta_sign(3, 5, Convention::whitehead), 1);
    EXPECT_THROW(theta_sign(3, 2), DomainError);
}
