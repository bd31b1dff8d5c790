#pragma once

#include "pbdiag/cobar_bar.hpp"
#include "pbdiag/lie.hpp"
#include "pbdiag/tree_space.hpp"

namespace pbdiag {

// Θ(B_{j,i}) is the chord oriented i -> j; Θ([A,B]) = (-1)^a δ*((Γ_A·Γ_B)*) with
// a the diagram degree of Γ_A. The whitehead convention drops (-1)^a.
DualCombo theta(const BracketExpr& b, const Context& ctx);
DualCombo theta(const BracketSum& s, const Context& ctx);

TreeCombo theta_tilde(const DualCombo& x);

int theta_sign(int n, int m, Convention c = Convention::samelson);

// Whether δ*Y = x has a solution among internally connected diagrams one vertex smaller.
bool is_exact(const DualCombo& x);

}  // namespace pbdiag
