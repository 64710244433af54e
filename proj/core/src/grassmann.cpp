#include "grasscalc/grassmann.hpp"

#include <stdexcept>

namespace grasscalc {

MonomialProduct monomial_mul(Monomial a, Monomial b) {
  if ((a.mask() & b.mask()) != 0) return {0, Monomial::one()};
  // Count pairs (h in a, g in b) with position(h) > position(g): the
  // transpositions needed to merge the two ascending sequences.
  int inversions = 0;
  std::uint64_t bm = b.mask();
  while (bm != 0) {
    const int g = std::countr_zero(bm);
    if (g < 63) inversions += std::popcount(a.mask() >> (g + 1));
    bm &= bm - 1;
  }
  const int sign = (inversions & 1) ? -1 : 1;
  return {sign, Monomial::from_mask(a.mask() | b.mask())};
}

GrassmannContext::GrassmannContext(int k, int N) : k_(k), N_(N) {
  if (k < 1 || k >= N)
    throw std::domain_error("GrassmannContext requires 1 <= k < N (got k=" +
                            std::to_string(k) + ", N=" + std::to_string(N) +
                            ")");
  dim_top_ = 2 * k * (N - k);
  if (dim_top_ > 64)
    throw std::domain_error(
        "2k(N-k) = " + std::to_string(dim_top_) +
        " generators exceed the 64-bit monomial encoding of this build");
  top_mask_ = Monomial::from_mask(
      dim_top_ == 64 ? ~std::uint64_t{0}
                     : (std::uint64_t{1} << dim_top_) - 1);
}

int GrassmannContext::bit_position(GeneratorId g) const {
  if (g.sheet < 1 || g.sheet > num_sheets() || g.color < 1 || g.color > k_)
    throw std::domain_error("generator index out of range: sheet=" +
                            std::to_string(g.sheet) +
                            " color=" + std::to_string(g.color));
  return 2 * k_ * (g.sheet - 1) + 2 * (g.color - 1) + (g.barred ? 1 : 0);
}

GeneratorId GrassmannContext::generator_at(int bit) const {
  if (bit < 0 || bit >= dim_top_)
    throw std::domain_error("generator bit out of range");
  GeneratorId g;
  g.barred = (bit & 1) != 0;
  g.sheet = bit / (2 * k_) + 1;
  g.color = (bit % (2 * k_)) / 2 + 1;
  return g;
}

AlgebraElement AlgebraElement::monomial(Monomial m, Integer coeff) {
  AlgebraElement x;
  if (coeff != 0) x.terms_.emplace(m, std::move(coeff));
  return x;
}

Integer AlgebraElement::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

int AlgebraElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool AlgebraElement::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    if (d == -1)
      d = m.degree();
    else if (m.degree() != d)
      return false;
  }
  return true;
}

bool AlgebraElement::is_even() const {
  for (const auto& [m, c] : terms_)
    if (m.degree() & 1) return false;
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& lhs, const AlgebraElement& rhs) {
  AlgebraElement out;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      const MonomialProduct p = monomial_mul(ma, mb);
      if (p.coeff == 0) continue;
      auto [it, inserted] = out.terms_.try_emplace(p.product, 0);
      if (p.coeff > 0)
        it->second += ca * cb;  // gmpxx fuses this into addmul
      else
        it->second -= ca * cb;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

AlgebraElement pow(const AlgebraElement& x, int n) {
  if (n < 0) throw std::domain_error("negative power of algebra element");
  AlgebraElement acc = AlgebraElement::unit();
  // Iterated multiplication rather than binary powering: in this algebra the
  // middle-degree squares are far denser than any linear chain step.
  for (int i = 0; i < n; ++i) acc = acc * x;
  return acc;
}

Integer berezin_integral(const GrassmannContext& ctx, const AlgebraElement& x) {
  return x.coeff(ctx.top_mask());
}

std::string to_string(const GrassmannContext& ctx, const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) out += c >= 0 ? " + " : " - ";
    if (first && c < 0) out += "-";
    first = false;
    Integer a = abs(c);
    if (a != 1 || m == Monomial::one()) out += a.get_str();
    for (int bit = 0; bit < ctx.dim_top(); ++bit) {
      if (!m.contains(bit)) continue;
      const GeneratorId g = ctx.generator_at(bit);
      out += g.barred ? " pb(" : " p(";
      out += std::to_string(g.sheet) + "," + std::to_string(g.color) + ")";
    }
  }
  return out;
}

}  // namespace grasscalc
