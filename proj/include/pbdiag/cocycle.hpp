#pragma once

#include "pbdiag/cobar_bar.hpp"
#include "pbdiag/lie.hpp"

#include <optional>
#include <vector>

namespace pbdiag {

// Canonical words of length p and internal degree q. The differentials preserve the
// total weight Σ(E - v), so the basis can be restricted to one weight; for n = 3 the
// degree alone does not bound the search and a weight is required.
std::vector<BarWord> bar_basis(const Context& ctx, int p, int q, std::optional<int> weight = std::nullopt);

int word_weight(const BarWord& w);

// Extends a primitive z0 with δ̃z0 = 0 to z = z(1) + z(2) + ... with d_B z = 0 by
// solving D_B z(i+1) = δ_B z(i) length by length. Each step takes the basic solution
// (free variables zeroed) in the deterministic basis order. z0 = 0 gives 0.
BarCombo lift_cocycle(const DiagramCombo& z0);

bool verify_bar_cocycle(const BarCombo& z);

// ⟨Θ(b), z⟩ with Θ computed in the context of z.
Rational pair_homotopy(const BracketExpr& b, const BarCombo& z);

// Homology of δ* on internally connected dual diagrams of weight `length`, taken at the
// degree length·(n-2) + 1 where Θ of a length-`length` bracket lives.
int primitive_homology_dim(const Context& ctx, int length);

}  // namespace pbdiag
