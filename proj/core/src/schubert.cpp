#include "grasscalc/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grasscalc {

AlgebraElement build_omega(const GrassmannContext& ctx, int i, int j) {
  if (i < 1 || i > ctx.k() || j < 1 || j > ctx.k())
    throw std::domain_error("omega color index out of range [1, k]");
  AlgebraElement out;
  for (int s = 1; s <= ctx.num_sheets(); ++s) {
    const Monomial unbarred = ctx.generator_monomial({false, s, i});
    const Monomial barred = ctx.generator_monomial({true, s, j});
    const MonomialProduct p = monomial_mul(unbarred, barred);
    out += AlgebraElement::monomial(p.product, p.coeff);
  }
  return out;
}

OmegaTable::OmegaTable(const GrassmannContext& ctx) : k_(ctx.k()) {
  entries_.reserve(static_cast<std::size_t>(k_) * k_);
  for (int i = 1; i <= k_; ++i)
    for (int j = 1; j <= k_; ++j) entries_.push_back(build_omega(ctx, i, j));
}

const AlgebraElement& OmegaTable::at(int i, int j) const {
  if (i < 1 || i > k_ || j < 1 || j > k_)
    throw std::domain_error("omega table index out of range");
  return entries_[static_cast<std::size_t>(i - 1) * k_ +
                  static_cast<std::size_t>(j - 1)];
}

AlgebraElement OmegaTable::trace() const {
  AlgebraElement out;
  for (int i = 1; i <= k_; ++i) out += at(i, i);
  return out;
}

AlgebraElement OmegaTable::trace_square() const {
  AlgebraElement out;
  for (int i = 1; i <= k_; ++i)
    for (int j = 1; j <= k_; ++j) out += at(i, j) * at(j, i);
  return out;
}

AlgebraElement det_commuting(
    const std::vector<std::vector<AlgebraElement>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return AlgebraElement::unit();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  AlgebraElement det;
  do {
    int inversions = 0;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (perm[u] > perm[v]) ++inversions;
    AlgebraElement term = AlgebraElement::unit();
    for (std::size_t u = 0; u < n && !term.is_zero(); ++u)
      term = term * m[u][perm[u]];
    det += (inversions & 1) ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

AlgebraElement build_tau(const GrassmannContext& ctx, const OmegaTable& omegas,
                         int m) {
  const int k = ctx.k();
  if (m < 0 || m > k)
    throw std::domain_error("tau index out of range [0, k]");
  if (m == 0) return AlgebraElement::unit();

  // Sum of all m x m principal minors of Phi.
  AlgebraElement out;
  std::vector<int> rows(static_cast<std::size_t>(m));
  std::iota(rows.begin(), rows.end(), 1);
  while (true) {
    std::vector<std::vector<AlgebraElement>> minor(
        static_cast<std::size_t>(m));
    for (int u = 0; u < m; ++u) {
      minor[static_cast<std::size_t>(u)].reserve(static_cast<std::size_t>(m));
      for (int v = 0; v < m; ++v)
        minor[static_cast<std::size_t>(u)].push_back(
            omegas.at(rows[static_cast<std::size_t>(u)],
                      rows[static_cast<std::size_t>(v)]));
    }
    out += det_commuting(minor);

    // next m-combination of {1..k}
    int i = m - 1;
    while (i >= 0 && rows[static_cast<std::size_t>(i)] == k - (m - 1 - i)) --i;
    if (i < 0) break;
    ++rows[static_cast<std::size_t>(i)];
    for (int u = i + 1; u < m; ++u)
      rows[static_cast<std::size_t>(u)] = rows[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

TauBasis::TauBasis(const GrassmannContext& ctx, const OmegaTable& omegas) {
  taus_.reserve(static_cast<std::size_t>(ctx.k()) + 1);
  for (int m = 0; m <= ctx.k(); ++m)
    taus_.push_back(build_tau(ctx, omegas, m));
}

const AlgebraElement& TauBasis::tau(int m) const {
  if (m < 0 || m >= static_cast<int>(taus_.size())) return zero_;
  return taus_[static_cast<std::size_t>(m)];
}

Rational normalization_constant(int k, int N) {
  if (k < 1 || k >= N)
    throw std::domain_error("normalization constant requires 1 <= k < N");
  Integer num(1), den(1);
  for (int j = 0; j <= k - 1; ++j) num *= factorial(j);
  for (int j = N - k; j <= N - 1; ++j) den *= factorial(j);
  return make_rational(num, den);
}

AlgebraElement schubert_class(const GrassmannContext& ctx, const TauBasis& taus,
                              const Partition& a) {
  if (!a.fits_box(ctx.k(), ctx.num_sheets()))
    throw std::domain_error("partition " + a.to_string() +
                            " outside the " + std::to_string(ctx.k()) + "x" +
                            std::to_string(ctx.num_sheets()) + " box");
  const int n = a.part(0);
  if (n == 0) return AlgebraElement::unit();
  const Partition conj = a.conjugate();
  std::vector<std::vector<AlgebraElement>> jt(static_cast<std::size_t>(n));
  for (int u = 1; u <= n; ++u) {
    jt[static_cast<std::size_t>(u - 1)].reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
      jt[static_cast<std::size_t>(u - 1)].push_back(
          taus.tau(conj.part(u - 1) - u + v));
  }
  return det_commuting(jt);
}

Rational integrate_product(const GrassmannContext& ctx,
                           std::span<const Partition> classes) {
  SchubertEngine engine(ctx);
  return engine.integrate_product(classes);
}

SchubertEngine::SchubertEngine(GrassmannContext ctx)
    : ctx_(ctx), omegas_(ctx_), taus_(ctx_, omegas_) {}

AlgebraElement SchubertEngine::schubert_class(const Partition& a) const {
  return grasscalc::schubert_class(ctx_, taus_, a);
}

Rational SchubertEngine::integrate_product(
    std::span<const Partition> classes) const {
  AlgebraElement product = AlgebraElement::unit();
  for (const Partition& a : classes) product = product * schubert_class(a);
  const Integer raw = berezin_integral(ctx_, product);
  return normalization_constant(ctx_.k(), ctx_.N()) * Rational(raw);
}

}  // namespace grasscalc
