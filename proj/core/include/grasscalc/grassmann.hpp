#ifndef GRASSCALC_GRASSMANN_HPP
#define GRASSCALC_GRASSMANN_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include "grasscalc/bigint.hpp"

namespace grasscalc {

// One anticommuting generator: psi^color_sheet (unbarred) or its barred
// partner. sheet runs over 1..N-k, color over 1..k.
struct GeneratorId {
  bool barred = false;
  int sheet = 1;
  int color = 1;
};

// Product of distinct generators, encoded as a bit set. The generators at
// the set bit positions are multiplied in ascending position order, so a
// repeated generator cannot be represented and squares vanish structurally.
class Monomial {
 public:
  constexpr Monomial() = default;
  static constexpr Monomial one() { return Monomial{}; }
  static constexpr Monomial from_mask(std::uint64_t mask) {
    return Monomial{mask};
  }
  static constexpr Monomial single(int bit) {
    return Monomial{std::uint64_t{1} << bit};
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool contains(int bit) const {
    return (mask_ >> bit) & std::uint64_t{1};
  }
  constexpr bool disjoint(Monomial other) const {
    return (mask_ & other.mask_) == 0;
  }

  auto operator<=>(const Monomial&) const = default;

 private:
  constexpr explicit Monomial(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

struct MonomialProduct {
  int coeff = 0;  // -1, 0 or +1
  Monomial product;
};

// Signed merge of two ascending generator sequences. Returns coefficient 0
// when the masks intersect; otherwise (-1)^I with I the number of
// transpositions needed to interleave b's generators into a's.
MonomialProduct monomial_mul(Monomial a, Monomial b);

// (k, N) plus the derived constants of the 2k(N-k)-generator algebra.
class GrassmannContext {
 public:
  GrassmannContext(int k, int N);

  int k() const { return k_; }
  int N() const { return N_; }
  int num_sheets() const { return N_ - k_; }
  int dim_top() const { return dim_top_; }
  Monomial top_mask() const { return top_mask_; }

  // sheet-major, color-minor, unbarred before barred; a bijection onto
  // [0, dim_top). This ordering makes the canonical ascending product of
  // all generators the reference top form, so the Berezin integral needs
  // no extra sign.
  int bit_position(GeneratorId g) const;
  GeneratorId generator_at(int bit) const;
  Monomial generator_monomial(GeneratorId g) const {
    return Monomial::single(bit_position(g));
  }

  bool valid_monomial(Monomial m) const {
    return (m.mask() & ~top_mask_.mask()) == 0;
  }

 private:
  int k_ = 0;
  int N_ = 0;
  int dim_top_ = 0;
  Monomial top_mask_;
};

// Sparse exact-integer linear combination of monomials; the universal value
// type of the engine. Zero coefficients are never stored, so equality is
// structural. Immutable value semantics: all operations return new values.
class AlgebraElement {
 public:
  AlgebraElement() = default;  // zero
  static AlgebraElement unit() { return monomial(Monomial::one()); }
  static AlgebraElement monomial(Monomial m, Integer coeff = 1);
  static AlgebraElement scalar(Integer c) {
    return monomial(Monomial::one(), std::move(c));
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  Integer coeff(Monomial m) const;

  // -1 for the zero element, otherwise the max degree over terms.
  int degree() const;
  bool is_homogeneous() const;
  // true when every term has even degree (such elements are central).
  bool is_even() const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Integer& c);

  friend AlgebraElement operator+(AlgebraElement lhs,
                                  const AlgebraElement& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend AlgebraElement operator-(AlgebraElement lhs,
                                  const AlgebraElement& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend AlgebraElement operator*(AlgebraElement lhs, const Integer& c) {
    lhs *= c;
    return lhs;
  }
  friend AlgebraElement operator*(const Integer& c, AlgebraElement rhs) {
    rhs *= c;
    return rhs;
  }
  friend AlgebraElement operator-(AlgebraElement x) {
    x *= Integer(-1);
    return x;
  }
  friend AlgebraElement operator*(const AlgebraElement& lhs,
                                  const AlgebraElement& rhs);

  bool operator==(const AlgebraElement&) const = default;

 private:
  std::map<Monomial, Integer> terms_;
};

// n-fold product by iterated multiplication; x^0 is the unit.
AlgebraElement pow(const AlgebraElement& x, int n);

// Coefficient of the top form. With this engine's generator ordering the
// reference integrand is the ascending product of all generators, so no
// sign correction applies.
Integer berezin_integral(const GrassmannContext& ctx, const AlgebraElement& x);

// Debug rendering, e.g. "2 p(1,1) pb(1,1) - p(1,2) pb(2,1)".
std::string to_string(const GrassmannContext& ctx, const AlgebraElement& x);

}  // namespace grasscalc

#endif
