#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "grasscalc/schubert.hpp"

using namespace grasscalc;

TEST_CASE("omega entries: term counts and signs") {
  const GrassmannContext ctx(2, 4);

  const AlgebraElement w11 = build_omega(ctx, 1, 1);
  REQUIRE(w11.term_count() == 2);
  for (const auto& [m, c] : w11.terms()) {
    CHECK(c == 1);
    CHECK(m.degree() == 2);
  }

  // psibar bit precedes the psi bit when the row color exceeds the column
  // color, so each term picks up one inversion.
  const AlgebraElement w21 = build_omega(ctx, 2, 1);
  REQUIRE(w21.term_count() == 2);
  for (const auto& [m, c] : w21.terms()) CHECK(c == -1);

  CHECK_THROWS_AS(build_omega(ctx, 0, 1), std::domain_error);
  CHECK_THROWS_AS(build_omega(ctx, 1, 3), std::domain_error);
}

TEST_CASE("off-diagonal pair integral at G(2,4) is -2") {
  const GrassmannContext ctx(2, 4);
  const OmegaTable w(ctx);
  const AlgebraElement x = w.at(1, 1) * w.at(2, 2) * w.at(1, 2) * w.at(2, 1);
  CHECK(berezin_integral(ctx, x) == -2);
}

TEST_CASE("omega entries commute pairwise") {
  const GrassmannContext ctx(2, 4);
  const OmegaTable w(ctx);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
          CHECK(w.at(i, j) * w.at(a, b) == w.at(a, b) * w.at(i, j));
}

TEST_CASE("tau: trace, determinant and the half identity") {
  for (const auto& [k, N] :
       std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    const GrassmannContext ctx(k, N);
    const OmegaTable w(ctx);

    CHECK(build_tau(ctx, w, 0) == AlgebraElement::unit());
    CHECK(build_tau(ctx, w, 1) == w.trace());

    std::vector<std::vector<AlgebraElement>> full(
        static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        full[static_cast<std::size_t>(i - 1)].push_back(w.at(i, j));
    CHECK(build_tau(ctx, w, k) == det_commuting(full));

    // 2 tau_2 = (tr Phi)^2 - tr(Phi^2), exact at the element level
    const AlgebraElement lhs = w.trace() * w.trace() - w.trace_square();
    CHECK(lhs == Integer(2) * build_tau(ctx, w, 2));

    CHECK_THROWS_AS(build_tau(ctx, w, k + 1), std::domain_error);
    CHECK_THROWS_AS(build_tau(ctx, w, -1), std::domain_error);
  }
}

TEST_CASE("tau degrees and commutativity") {
  const GrassmannContext ctx(3, 6);
  const OmegaTable w(ctx);
  const TauBasis taus(ctx, w);
  for (int m = 1; m <= 3; ++m) {
    CHECK(taus.tau(m).is_homogeneous());
    CHECK(taus.tau(m).degree() == 2 * m);
  }
  CHECK(taus.tau(-1).is_zero());
  CHECK(taus.tau(4).is_zero());
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      CHECK(taus.tau(m) * taus.tau(n) == taus.tau(n) * taus.tau(m));
}

TEST_CASE("trace power integrates to a factorial at G(2,4)") {
  const GrassmannContext ctx(2, 4);
  const OmegaTable w(ctx);
  CHECK(berezin_integral(ctx, pow(w.trace(), 4)) == 24);
}

TEST_CASE("normalization constant") {
  CHECK(normalization_constant(1, 5) == make_rational(1, factorial(4)));
  CHECK(normalization_constant(2, 4) == make_rational(1, 12));
  for (const auto& [k, N] :
       std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}}) {
    const Rational c = normalization_constant(k, N);
    CHECK(c > 0);
    CHECK(c <= 1);
    const GrassmannContext ctx(k, N);
    const OmegaTable w(ctx);
    const AlgebraElement det_phi = build_tau(ctx, w, k);
    CHECK(c * Rational(berezin_integral(ctx, pow(det_phi, N - k))) == 1);
  }
}

TEST_CASE("schubert classes in the tau basis") {
  const GrassmannContext ctx(2, 4);
  const OmegaTable w(ctx);
  const TauBasis taus(ctx, w);

  CHECK(schubert_class(ctx, taus, Partition{}) == AlgebraElement::unit());
  CHECK(schubert_class(ctx, taus, Partition{1}) == taus.tau(1));
  CHECK(schubert_class(ctx, taus, Partition{1, 1}) == taus.tau(2));

  // dual Jacobi-Trudi 2x2 determinant; sigma_2 pairs with itself
  const AlgebraElement sigma2 = schubert_class(ctx, taus, Partition{2});
  CHECK(sigma2 == taus.tau(1) * taus.tau(1) - taus.tau(2));
  const std::vector<Partition> conics = {Partition{2}, Partition{2}};
  CHECK(integrate_product(ctx, conics) == 1);

  CHECK_THROWS_AS(schubert_class(ctx, taus, Partition{3}), std::domain_error);
  CHECK_THROWS_AS(schubert_class(ctx, taus, Partition{1, 1, 1}),
                  std::domain_error);
}

TEST_CASE("schubert classes are concentrated in degree 2|a|") {
  const GrassmannContext ctx(3, 6);
  const SchubertEngine se{ctx};
  for (const Partition& a :
       {Partition{1}, Partition{2, 1}, Partition{3, 2, 1}, Partition{2, 2}}) {
    const AlgebraElement x = se.schubert_class(a);
    CHECK(x.is_homogeneous());
    CHECK(x.degree() == 2 * a.weight());
  }
}

TEST_CASE("integrate_product examples at G(2,4)") {
  const GrassmannContext ctx(2, 4);

  const std::vector<Partition> full_box = {Partition{2, 2}};
  CHECK(integrate_product(ctx, full_box) == 1);

  const std::vector<Partition> four_lines(4, Partition{1});
  CHECK(integrate_product(ctx, four_lines) == 2);

  const std::vector<Partition> three_lines(3, Partition{1});
  CHECK(integrate_product(ctx, three_lines) == 0);

  const std::vector<Partition> outside = {Partition{3}};
  CHECK_THROWS_AS(integrate_product(ctx, outside), std::domain_error);
}

TEST_CASE("integrate_product is order independent and integral") {
  const GrassmannContext ctx(2, 5);
  const SchubertEngine se{ctx};
  std::vector<Partition> classes = {Partition{2, 1}, Partition{1, 1},
                                    Partition{1}};
  const Rational v = se.integrate_product(classes);
  CHECK(is_integral(v));
  std::mt19937 rng(11);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(classes.begin(), classes.end(), rng);
    CHECK(se.integrate_product(classes) == v);
  }
}

TEST_CASE("full box class annihilates any positive-weight class") {
  const GrassmannContext ctx(2, 4);
  const std::vector<Partition> overflow = {Partition{2, 2}, Partition{1}};
  CHECK(integrate_product(ctx, overflow) == 0);
}
