#pragma once

#include "pbdiag/diagram.hpp"
#include "pbdiag/lie.hpp"
#include "pbdiag/linalg.hpp"

#include <optional>
#include <vector>

namespace pbdiag {

// Leaf-split form: vertices 0..L-1 are leaves, L..L+internal-1 are internal.
// Odd n: internal order plus edge directions; even n: edge order.
struct LabeledTree {
    Context ctx;
    std::vector<int> leaf_labels;
    int internal = 0;
    std::vector<Edge> edges;
};

// Keys are the unsplit diagrams (leaves glued onto their segment vertex), always in Dbar.
using TreeCombo = Combo<Diagram, struct TreeTag>;

Diagram tree_to_diagram(const LabeledTree& t);
LabeledTree diagram_to_tree(const Diagram& d);
std::optional<Canon> tree_canonicalize(const LabeledTree& t);

bool is_tree_diagram(const Diagram& d);
std::vector<int> leaf_multiset(const Diagram& d);
bool is_caterpillar(const Diagram& d);
// Caterpillar with the smallest label in one end pair and the largest in the other.
bool is_preferred_caterpillar(const Diagram& d);

std::vector<Diagram> enumerate_trees(const Context& ctx, std::vector<int> leaves);

struct RelationMatrix {
    std::vector<Diagram> trees;
    SparseMatrix rows;
};
RelationMatrix ihx_relation_matrix(const std::vector<int>& leaves, const Context& ctx);

// Relation-matrix quotient with columns ordered least-preferred first, so that
// positional pivoting eliminates the least-preferred trees.
struct TreeQuotient {
    std::vector<Diagram> columns;
    RrefResult rref;
    std::vector<int> basis_columns;
    std::vector<Diagram> basis() const;
    int dimension() const { return static_cast<int>(basis_columns.size()); }
};
TreeQuotient tree_quotient(const Context& ctx, const std::vector<int>& leaves,
                           const std::optional<Diagram>& priority = std::nullopt);

using Coordinates = std::vector<std::pair<Diagram, Rational>>;
Coordinates tree_normal_form(const TreeCombo& x, const std::optional<Diagram>& priority = std::nullopt);

TreeCombo tree_of_bracket(const BracketExpr& b, const Context& ctx);
Rational tree_pair(const TreeCombo& x, const Diagram& basis_tree);
Rational tree_pair(const TreeCombo& x, const LabeledTree& basis_tree);

}  // namespace pbdiag
