#ifndef GRASSCALC_SCHUBERT_HPP
#define GRASSCALC_SCHUBERT_HPP

#include <span>
#include <vector>

#include "grasscalc/grassmann.hpp"
#include "grasscalc/partition.hpp"

namespace grasscalc {

// omega^{ij} = sum_s psi_s^i psibar_s^j: a degree-2 element with N-k terms.
AlgebraElement build_omega(const GrassmannContext& ctx, int i, int j);

// The k x k matrix Phi of omega entries. All entries are even, hence
// pairwise commuting.
class OmegaTable {
 public:
  explicit OmegaTable(const GrassmannContext& ctx);

  int k() const { return k_; }
  const AlgebraElement& at(int i, int j) const;  // colors are 1-based

  AlgebraElement trace() const;         // tr Phi
  AlgebraElement trace_square() const;  // tr Phi^2 = sum_ij w^{ij} w^{ji}

 private:
  int k_;
  std::vector<AlgebraElement> entries_;
};

// Determinant of a matrix of pairwise commuting elements, expanded over
// permutations (division-free).
AlgebraElement det_commuting(const std::vector<std::vector<AlgebraElement>>& m);

// tau_m = m-th coefficient of det(I + t Phi) = sum of m x m principal minors.
AlgebraElement build_tau(const GrassmannContext& ctx, const OmegaTable& omegas,
                         int m);

// tau_0..tau_k precomputed; tau(m) is zero outside [0, k].
class TauBasis {
 public:
  TauBasis(const GrassmannContext& ctx, const OmegaTable& omegas);
  const AlgebraElement& tau(int m) const;
  int k() const { return static_cast<int>(taus_.size()) - 1; }

 private:
  std::vector<AlgebraElement> taus_;
  AlgebraElement zero_;
};

// prod_{j=0}^{k-1} j! / prod_{j=N-k}^{N-1} j!, the constant that rescales a
// raw fermion integral to a Grassmannian integral. Always in (0, 1].
Rational normalization_constant(int k, int N);

// Schur class sigma_a as an element of the tau ring, via the dual
// Jacobi-Trudi determinant det(tau_{a'_u - u + v}) of size a_1.
// For a = (1^i) this is exactly tau_i.
AlgebraElement schubert_class(const GrassmannContext& ctx, const TauBasis& taus,
                              const Partition& a);

// Integral over G(k,N) of the product of Schubert classes: multiplies the
// class elements left to right, Berezin-integrates, and rescales. Exact; an
// integer whenever the weights sum to k(N-k), and 0 otherwise.
Rational integrate_product(const GrassmannContext& ctx,
                           std::span<const Partition> classes);

// Caches Phi and the tau basis for repeated integrals in one context.
class SchubertEngine {
 public:
  explicit SchubertEngine(GrassmannContext ctx);

  const GrassmannContext& context() const { return ctx_; }
  const OmegaTable& omegas() const { return omegas_; }
  const TauBasis& taus() const { return taus_; }

  AlgebraElement schubert_class(const Partition& a) const;
  Rational integrate_product(std::span<const Partition> classes) const;

 private:
  GrassmannContext ctx_;
  OmegaTable omegas_;
  TauBasis taus_;
};

}  // namespace grasscalc

#endif
