#pragma once

#include <vector>

#include "lpa/chen.hpp"

namespace lpa {

/// β = quotient·(c - 1) + remainder with remainder ∈ G.
struct DivisionResult {
  Element quotient;
  GElement remainder;
};

/// Division by c - 1. The quotient is assembled from explicit geometric-sum
/// identities per monomial; the remainder is checked against σ(ρ_{c^∞}(β)),
/// and the identity β = q(c - 1) + r is verified before returning.
DivisionResult divide(const ChenModule& chen, const Element& beta);

/// (g_1, ..., g_n) with x ≡ Σ g_t (c - 1)^{t-1} mod L(c - 1)^n, by iterated division.
std::vector<GElement> g_representation(const ChenModule& chen, const Element& x, unsigned n);

/// Σ g_t (c - 1)^{t-1}.
Element reconstruct(const BasicCycle& cycle, const std::vector<GElement>& coefficients);

/// x ∈ L(c - 1)^n.
bool in_ideal_power(const ChenModule& chen, const Element& x, unsigned n);

/// For a source loop c: x ∈ Ann(U_{E,c-1}) = ⟨E^0 \ {s(c)}⟩.
bool ann_U_membership(const BasicCycle& cycle, const Element& x);

/// For a source loop c and j in the annihilator: the least n >= 1 with
/// (c*)^n j = 0; 0 when j = 0.
unsigned cstar_nilpotence_index(const BasicCycle& cycle, const Element& j);

}  // namespace lpa
