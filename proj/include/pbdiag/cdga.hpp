#pragma once

#include "pbdiag/diagram.hpp"

namespace pbdiag {

// Raw contraction of edge `index` (no canonicalization). Merges the larger endpoint
// into the smaller and shifts higher free labels down; for even n the edge labels
// above the removed one shift down too. Returns the sign ε(Γ,e).
// Throws DomainError when the edge is a chord.
struct Contraction {
    Diagram result;
    int sign = 1;
};
Contraction contract_edge(const Diagram& d, int index);

int edge_sign(const Diagram& d, int index);

DiagramCombo differential(const DiagramCombo& x);
DiagramCombo product(const DiagramCombo& x, const DiagramCombo& y);
Diagram raw_product(const Diagram& a, const Diagram& b);
DiagramCombo project_to_D(const DiagramCombo& x);
DiagramCombo indecomposable_projection(const DiagramCombo& x);

}  // namespace pbdiag
