#pragma once

#include <utility>
#include <vector>

#include "mzv/algebra.hpp"

namespace mzv {

/// The action of H^1 ≅ QSym on Q<x,y>: 1·w = w, z_k·1 = z_k·x = 0,
/// z_k·y = x^k y, extended to longer words through the deconcatenation
/// coproduct, u·(w1 w2) = Σ (u'·w1)(u''·w2). Throws DomainError if u ∉ H^1.
NCPoly dot(const Word& u, const Word& w);
NCPoly dot(const NCPoly& u, const NCPoly& w);

/// D_n(w) = z_n·w.
NCPoly D_n(const NCPoly& w, int n);
/// τ D_n τ.
NCPoly Dbar_n(const NCPoly& w, int n);
/// D_n as the derivation x ↦ 0, y ↦ x^n y.
LinearOperator D_operator(int n);
LinearOperator Dbar_operator(int n);

/// Kaneko's derivation ∂_n(x) = −∂_n(y) = x(x+y)^{n−1}y.
LinearOperator kaneko_operator(int n);
NCPoly kaneko_partial(const NCPoly& w, int n);

/// Action of a QSym[[t]] element Σ g_n t^n (g_n in H^1) on a series.
TruncSeries act_series(const std::vector<NCPoly>& g, const TruncSeries& s);

/// σ_t(w) = H(t)·w: order-n coefficient h_n·w.
TruncSeries sigma_t(const NCPoly& w, int order);
/// σ_t^{-1}(w) = E(−t)·w: order-n coefficient (−1)^n e_n·w.
TruncSeries sigma_t_inv(const NCPoly& w, int order);
/// σ̄_t = τ σ_t τ, applied to a whole series.
TruncSeries sigma_bar_t(const TruncSeries& s);

/// σ̄_t σ_t^{-1}(test) − exp(Σ_n t^n/n ∂_n)(test) through t-order `order`.
TruncSeries sigma_exp_residual(const NCPoly& test, int order);

/// n = 2: D̄₂ − D₂ − [D̄₁,D₁].
/// n = 3: D̄₃ − D₃ − ¾[D̄₁,D₂] − ¾[D̄₂,D₁] + ¼[[D̄₁,D₁],D₁] − ¼[D̄₁,[D̄₁,D₁]].
LinearOperator partial_commutator_formula(int n);
/// formula(w) − ∂_n(w).
NCPoly partial_commutator_residual(int n, const NCPoly& w);
/// Words of weight ≤ max_weight whose residual is nonzero (empty on success).
std::vector<std::pair<Word, NCPoly>> partial_commutator_check(int n, int max_weight);

/// Ĉ_n: the bimodule derivation x ↦ 0, y ↦ y ⊗ x^n.
TensorPoly hatC(const NCPoly& w, int n = 1);
/// C_n = μ̃ ∘ Ĉ_n with μ̃(a ⊗ b) = ba.
NCPoly C(const NCPoly& w, int n = 1);
LinearOperator C_operator(int n = 1);

/// With u = x + t y:
/// (C(u^{n−1}) − (n−1) t x u^{n−2} y,  τCτ(u^{n−1}) − (n−1) x u^{n−2} y).
std::pair<TruncSeries, TruncSeries> cyclic_sum_identity(int n);

}  // namespace mzv
