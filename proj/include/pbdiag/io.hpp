#pragma once

#include "pbdiag/cobar_bar.hpp"
#include "pbdiag/lie.hpp"
#include "pbdiag/tree_space.hpp"

#include "json.hpp"

#include <string>

namespace pbdiag {

using Json = nlohmann::ordered_json;

// {"m","n","quotient","free","edges":[{"t","h"},...]}
Json to_json(const Diagram& d);
// Raw diagram as written; free labels with gaps are re-indexed in increasing order.
Diagram diagram_from_json(const Json& j);

// {"terms":[{"coeff":"p/q","diagram":{...}},...]}. Parsing canonicalizes every term.
Json to_json(const DiagramCombo& x);
Json to_json(const DualCombo& x);
Json to_json(const TreeCombo& x);
DiagramCombo diagram_combo_from_json(const Json& j);
DualCombo dual_combo_from_json(const Json& j);

// {"side":"bar"|"cobar","terms":[{"coeff":"p/q","word":[diagram,...]},...]}
Json to_json(const BarCombo& x);
Json to_json(const CobarCombo& x);
BarCombo bar_combo_from_json(const Json& j);
CobarCombo cobar_combo_from_json(const Json& j);

// Generators are [j,i]; a list of two or more sub-expressions is their left-normed bracket,
// so "[[3,1],[3,2],[3,2]]" means [[B3,1, B3,2], B3,2].
Json to_json(const BracketExpr& b);
BracketExpr bracket_from_json(const Json& j, Convention c = Convention::samelson);
BracketExpr parse_bracket(const std::string& text, Convention c = Convention::samelson);

// Parses JSON text; syntax errors become DomainError carrying the byte position.
Json parse_json(const std::string& text);

std::string to_text(const DiagramCombo& x);
std::string to_text(const DualCombo& x);
std::string to_text(const TreeCombo& x);
std::string to_text(const BarCombo& x);
std::string to_text(const CobarCombo& x);

}  // namespace pbdiag
