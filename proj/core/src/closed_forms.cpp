#include "grasscalc/closed_forms.hpp"

#include <stdexcept>
#include <string>

#include "grasscalc/schubert.hpp"

namespace grasscalc {

namespace {

void check_context(int k, int N) {
  if (k < 1 || k >= N)
    throw std::domain_error("closed form requires 1 <= k < N");
}

void require_exponent(int k, int N, int drop) {
  const int e = k * N - k * k - drop;
  if (e < 0)
    throw std::domain_error("requires kN-k^2-" + std::to_string(drop) +
                            " >= 0 (got " + std::to_string(e) + ")");
}

}  // namespace

Integer intersect_sigma1_power(int k, int N) {
  check_context(k, N);
  const Rational v =
      Rational(factorial(k * N - k * k)) * normalization_constant(k, N);
  return exact_integer(v);
}

Integer intersect_sigma1_sigma11(int k, int N) {
  check_context(k, N);
  require_exponent(k, N, 2);
  const Integer pre = factorial(k * N - k * k - 2) * (N - k) * (N - k + 1) *
                      k * (k - 1);
  const Rational v =
      make_rational(pre, 2) * normalization_constant(k, N);
  return exact_integer(v);
}

Integer intersect_sigma1_sigma11_sq(int k, int N) {
  check_context(k, N);
  require_exponent(k, N, 4);
  const Integer bracket = Integer(k) * (k - 1) * (N - k) * (N - k - 1) +
                          Integer(2) * (k - 2) * (k - 3) * (N - k) +
                          Integer(4) * (k - 2) * (N - k - 1);
  const Integer pre = factorial(k * N - k * k - 4) * (N - k) * (N - k + 1) *
                      k * (k - 1);
  const Rational v =
      make_rational(pre * bracket, 4) * normalization_constant(k, N);
  return exact_integer(v);
}

Integer p_moment(int m, int k, int N) {
  check_context(k, N);
  const int nk = N - k;
  switch (m) {
    case 0:
      return factorial(k * N - k * k);
    case 1:
      require_exponent(k, N, 2);
      return factorial(k * N - k * k - 2) * k * nk * (N - 2 * k);
    case 2: {
      require_exponent(k, N, 4);
      const Integer bracket = Integer(k) * nk * nk * nk -
                              Integer(2) * nk * nk * (k * k + 2) +
                              Integer(nk) * (k * k * k + 10 * k) -
                              Integer(4) * k * k - 2;
      return factorial(k * N - k * k - 4) * k * nk * bracket;
    }
    default:
      throw std::domain_error("p_moment defined for m in {0, 1, 2}");
  }
}

QDecomposition q_decomposition(int k, int N) {
  check_context(k, N);
  require_exponent(k, N, 4);
  const int nk = N - k;
  const Integer f = factorial(k * N - k * k - 4);
  QDecomposition q;
  q.q1 = f * k * nk *
         (Integer(nk - 1) * (nk - 2) * (nk - 3) +
          Integer(k - 1) * nk * (nk - 1) * (nk - 1));
  q.q2 = f * k * nk * (k - 1) *
         (Integer(-4) * (nk - 1) * (nk - 2) -
          Integer(2) * nk * (nk - 1) * (k - 2));
  q.q3 = f * k * nk *
         (Integer(4) * (k - 1) * (k - 1) * (nk - 1) +
          Integer(k - 1) * (k - 2) * (k - 3) * nk);
  return q;
}

Integer g2n_family(int N, int l) {
  if (N < 2) throw std::domain_error("G(2,N) family requires N >= 2");
  if (l < 0 || l > N - 2)
    throw std::domain_error("G(2,N) family requires 0 <= l <= N-2 (got l=" +
                            std::to_string(l) + ")");
  const Rational v = make_rational(
      factorial(2 * (N - 2 - l)), factorial(N - 2 - l) * factorial(N - 1 - l));
  return exact_integer(v);
}

}  // namespace grasscalc
