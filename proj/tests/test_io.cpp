#include "pbdiag/cocycle.hpp"
#include "pbdiag/io.hpp"
#include "pbdiag/theta.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

using namespace pbdiag;

namespace {

Json load(const std::string& name) {
    std::ifstream in(std::string(PBDIAG_FIXTURES) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

}  // namespace

TEST(Json, DiagramRoundTrip) {
    for (int n : {3, 4}) {
        Context ctx{3, n, Quotient::Dbar};
        for (const auto& d : enumerate_diagrams(ctx, 5, 2)) EXPECT_EQ(diagram_from_json(to_json(d)), d);
    }
}

TEST(Json, DiagramFields) {
    Json j = to_json(chord(Context{3, 3, Quotient::D}, 1, 3));
    EXPECT_EQ(j["m"], 3);
    EXPECT_EQ(j["quotient"], "D");
    EXPECT_EQ(j["free"], 0);
    EXPECT_EQ(j["edges"][0]["t"], 1);
    EXPECT_EQ(j["edges"][0]["h"], 3);
}

TEST(Json, FreeLabelGapsAreReindexed) {
    Json j = parse_json(R"({"m":3,"n":3,"quotient":"Dbar","free":1,
        "edges":[{"t":1,"h":7},{"t":2,"h":7},{"t":3,"h":7}]})");
    Diagram d = diagram_from_json(j);
    EXPECT_EQ(d.v, 1);
    EXPECT_EQ(d.edges.back(), (Edge{3, 4}));
}

TEST(Json, Errors) {
    EXPECT_THROW(parse_json("{\"m\": 3,"), DomainError);
    EXPECT_THROW(diagram_from_json(parse_json(R"({"m":2,"n":3,"quotient":"X","free":0,"edges":[]})")), DomainError);
    // Even n expects increasing endpoints.
    EXPECT_ANY_THROW(diagram_from_json(parse_json(R"({"m":2,"n":4,"quotient":"D","free":0,"edges":[{"t":2,"h":1}]})")));
    // A free vertex of valence 2 is not a valid diagram.
    EXPECT_ANY_THROW(diagram_combo_from_json(parse_json(
        R"({"terms":[{"coeff":"1","diagram":{"m":2,"n":3,"quotient":"Dbar","free":1,"edges":[{"t":1,"h":3},{"t":2,"h":3}]}}]})")));
}

TEST(Json, ComboRoundTripsCanonicalize) {
    Context ctx{3, 3, Quotient::Dbar};
    DualCombo x = theta(left_normed(3, {1, 2, 2}), ctx);
    EXPECT_EQ(dual_combo_from_json(to_json(x)), x);
    DiagramCombo y;
    for (const auto& [d, c] : x.terms) y.add(d, c * 3);
    EXPECT_EQ(diagram_combo_from_json(to_json(y)), y);
    EXPECT_NE(to_text(y).find("\t"), std::string::npos);
    EXPECT_EQ(to_text(DiagramCombo{}), "0\n");
}

TEST(Json, BarSides) {
    BarCombo z = bar_combo_from_json(load("z211.json"));
    EXPECT_EQ(to_json(z)["side"], "bar");
    EXPECT_EQ(bar_combo_from_json(to_json(z)), z);
    CobarCombo c = dual_word_combo(z.terms.begin()->first, 2);
    EXPECT_EQ(to_json(c)["side"], "cobar");
    EXPECT_EQ(cobar_combo_from_json(to_json(c)), c);
}

TEST(Brackets, ParseForms) {
    BracketExpr b = parse_bracket("[[[3,1],[3,2]],[3,2]]");
    EXPECT_EQ(to_text(b), "[[B3,1, B3,2], B3,2]");
    EXPECT_EQ(to_text(parse_bracket("[[3,1],[3,2],[3,2]]")), to_text(b));  // flat list is left-normed
    EXPECT_EQ(to_text(bracket_from_json(to_json(b))), to_text(b));
    EXPECT_EQ(parse_bracket("[[2,1],[2,1]]", Convention::whitehead).convention, Convention::whitehead);
    EXPECT_ANY_THROW(parse_bracket("[[3,1]"));
    EXPECT_ANY_THROW(parse_bracket("[[3,3],[3,1]]"));
}

TEST(Fixtures, SmallestCocycle) {
    BarCombo z = bar_combo_from_json(load("z211.json"));
    EXPECT_EQ(z.size(), 2u);
    EXPECT_TRUE(verify_bar_cocycle(z));
    EXPECT_EQ(pair_homotopy(parse_bracket("[[2,1],[2,1]]"), z), 2);
}

TEST(Fixtures, LengthThreeCocycle) {
    BarCombo z = bar_combo_from_json(load("z3122.json"));
    EXPECT_EQ(z.size(), 8u);
    EXPECT_TRUE(verify_bar_cocycle(z));
}

TEST(Fixtures, SquareOfChord) {
    Json f = load("ex42.json");
    Context ctx{f["m"].get<int>(), f["n"].get<int>(), quotient_from_name(f["quotient"].get<std::string>())};
    DualCombo x = theta(bracket_from_json(f["bracket"]), ctx);
    EXPECT_EQ(x, dual_combo_from_json(f["expected"]));
    std::vector<long long> autos;
    for (const auto& [d, c] : x.terms) autos.push_back(automorphism_count(d));
    EXPECT_EQ(Json(autos), f["automorphisms"]);
    std::vector<std::vector<int>> leaves;
    for (const auto& [d, c] : theta_tilde(x).terms) leaves.push_back(leaf_multiset(d));
    EXPECT_EQ(Json(leaves), f["tree_leaves"]);
}
