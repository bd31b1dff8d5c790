#pragma once

#include "pbdiag/diagram.hpp"

#include <tuple>
#include <vector>

namespace pbdiag {

using BarWord = std::vector<Diagram>;
using BarCombo = Combo<BarWord, struct BarTag>;
using CobarCombo = Combo<BarWord, struct CobarTag>;

// All vertex blow-ups Γ' of a canonical diagram with their coefficients in δ*(Γ*).
// With segments=false only free vertices of valence >= 4 are split.
DualCombo blow_ups(const Diagram& key, bool segments = true);
DualCombo dual_differential(const DualCombo& x);

// Dual product: (Σ a_K K*)(Σ b_L L*) = Σ a_K b_L (K·L)*.
DualCombo dual_product(const DualCombo& x, const DualCombo& y);

int word_degree(const BarWord& w);  // internal degree q
BarCombo bar_differential(const BarCombo& x);
BarCombo bar_internal(const BarCombo& x);  // δ_B
BarCombo bar_homological(const BarCombo& x);  // D_B, so that d_B = δ_B - D_B

// d_B* on a single dual diagram: -[δ*Γ*] plus the length-2 factorization terms.
CobarCombo cobar_length_one(const Diagram& key);
CobarCombo cobar_differential(const CobarCombo& x);

BarCombo shuffle_product(const BarCombo& x, const BarCombo& y);
std::vector<std::pair<BarWord, BarWord>> deconcatenation(const BarWord& w);
std::vector<std::tuple<int, BarWord, BarWord>> coshuffle(const BarWord& w);

Rational pair(const DualCombo& x, const DiagramCombo& y);
Rational pair(const CobarCombo& x, const BarCombo& y);

BarCombo word_combo(const BarWord& w, const Rational& c = 1);  // canonicalizes factors
CobarCombo dual_word_combo(const BarWord& w, const Rational& c = 1);
CobarCombo as_length_one(const DualCombo& x);
BarCombo as_length_one(const DiagramCombo& x);

std::string to_text(const BarWord& w);

}  // namespace pbdiag
