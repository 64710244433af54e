#include "grasscalc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>

#include "grasscalc/closed_forms.hpp"
#include "grasscalc/grassmann.hpp"
#include "grasscalc/oracle.hpp"
#include "grasscalc/partition.hpp"
#include "grasscalc/schubert.hpp"

namespace grasscalc {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    default:
      return "skipped";
  }
}

const char* criterion_label(int criterion) {
  switch (criterion) {
    case 1:
      return "normalization of the fermion measure";
    case 2:
      return "sigma_1 power three-way";
    case 3:
      return "sigma_{1,1} mixed products three-way";
    case 4:
      return "trace-moment integrals";
    case 5:
      return "q-decomposition of the second trace moment";
    case 6:
      return "off-diagonal pair integral";
    case 7:
      return "G(2,N) family";
    case 8:
      return "duality pairing";
    case 9:
      return "algebra property suites";
    default:
      return "extended checks";
  }
}

namespace {

struct Engine {
  bool mutate_sign = false;
  Integer berezin(const GrassmannContext& ctx, const AlgebraElement& x) const {
    Integer v = berezin_integral(ctx, x);
    if (mutate_sign) v = -v;
    return v;
  }
};

struct Outcome {
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct CheckSpec {
  std::string id;
  int criterion;
  int max_dim;  // dim_top of the heaviest context touched; quick keeps <= 12
  std::function<Outcome(const Engine&)> fn;
};

constexpr int kQuickDimCap = 12;

Outcome expect_equal(const std::string& lhs, const std::string& rhs) {
  return {lhs == rhs, lhs, rhs};
}

// The (k,N) grid every numbered criterion runs over.
const std::vector<std::pair<int, int>> kContexts = {
    {1, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {3, 7}};

int dim_top_of(int k, int N) { return 2 * k * (N - k); }

std::string gkn(int k, int N) {
  return "G(" + std::to_string(k) + "," + std::to_string(N) + ")";
}

Rational integrate_raw(const Engine& eng, const GrassmannContext& ctx,
                       const AlgebraElement& x) {
  return normalization_constant(ctx.k(), ctx.N()) *
         Rational(eng.berezin(ctx, x));
}

// sigma_1^p * sigma_{1,1}^l through the tau ring; valid for any k because
// tau_2 is simply the zero element when k = 1.
AlgebraElement tau_power_product(const SchubertEngine& se, int p, int l) {
  return pow(se.taus().tau(1), p) * pow(se.taus().tau(2), l);
}

std::vector<Partition> sigma_classes(int p, int l) {
  std::vector<Partition> classes;
  classes.reserve(static_cast<std::size_t>(p + l));
  for (int i = 0; i < p; ++i) classes.push_back(Partition{1});
  for (int i = 0; i < l; ++i) classes.push_back(Partition{1, 1});
  return classes;
}

// Three-way comparison; the oracle leg is optional (sigma_{1,1} does not
// exist on G(1,N)).
Outcome three_way(const Rational& berezin_value,
                  const std::optional<Integer>& closed_value,
                  const std::optional<Integer>& oracle_value,
                  const std::optional<Integer>& frozen) {
  std::string lhs = "berezin=" + to_string(berezin_value);
  bool pass = true;
  if (closed_value) {
    lhs += ";closed=" + to_string(*closed_value);
    pass = pass && berezin_value == Rational(*closed_value);
  }
  if (oracle_value) {
    lhs += ";oracle=" + to_string(*oracle_value);
    pass = pass && berezin_value == Rational(*oracle_value);
  }
  std::string rhs;
  if (frozen) {
    rhs = to_string(*frozen);
    pass = pass && berezin_value == Rational(*frozen);
  } else {
    rhs = "all legs equal";
  }
  return {pass, lhs, rhs};
}

// Homogeneous sparse element with `nterms` random monomials of arbitrary
// degree, coefficients in [-9, 9] \ {0}.
AlgebraElement random_element(std::mt19937_64& rng, const GrassmannContext& ctx,
                              int nterms) {
  std::uniform_int_distribution<std::uint64_t> mask_dist(
      0, ctx.top_mask().mask());
  std::uniform_int_distribution<int> coeff_dist(-9, 9);
  AlgebraElement x;
  for (int t = 0; t < nterms; ++t) {
    int c = coeff_dist(rng);
    if (c == 0) c = 1;
    x += AlgebraElement::monomial(Monomial::from_mask(mask_dist(rng)), c);
  }
  return x;
}

// Random element with every term of exactly the given degree.
AlgebraElement random_homogeneous(std::mt19937_64& rng,
                                  const GrassmannContext& ctx, int degree,
                                  int nterms) {
  std::vector<int> bits(static_cast<std::size_t>(ctx.dim_top()));
  std::iota(bits.begin(), bits.end(), 0);
  std::uniform_int_distribution<int> coeff_dist(-9, 9);
  AlgebraElement x;
  for (int t = 0; t < nterms; ++t) {
    std::shuffle(bits.begin(), bits.end(), rng);
    std::uint64_t mask = 0;
    for (int i = 0; i < degree; ++i)
      mask |= std::uint64_t{1} << bits[static_cast<std::size_t>(i)];
    int c = coeff_dist(rng);
    if (c == 0) c = 1;
    x += AlgebraElement::monomial(Monomial::from_mask(mask), c);
  }
  return x;
}

AlgebraElement random_even_element(std::mt19937_64& rng,
                                   const GrassmannContext& ctx, int nterms) {
  std::uniform_int_distribution<std::uint64_t> mask_dist(
      0, ctx.top_mask().mask());
  std::uniform_int_distribution<int> coeff_dist(-9, 9);
  AlgebraElement x;
  while (x.term_count() < static_cast<std::size_t>(nterms)) {
    const Monomial m = Monomial::from_mask(mask_dist(rng));
    if (m.degree() & 1) continue;
    int c = coeff_dist(rng);
    if (c == 0) c = 1;
    x += AlgebraElement::monomial(m, c);
  }
  return x;
}

std::vector<Partition> box_partitions(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> parts;
  const std::function<void(int, int)> rec = [&](int row, int maxpart) {
    if (row == rows) {
      out.emplace_back(parts);
      return;
    }
    for (int p = maxpart; p >= 0; --p) {
      parts.push_back(p);
      rec(row + 1, p);
      parts.pop_back();
    }
  };
  rec(0, cols);
  return out;
}

// ---------------------------------------------------------------------
// Check catalogue
// ---------------------------------------------------------------------

void add_normalization_checks(std::vector<CheckSpec>& specs) {
  for (const auto& [k, N] : kContexts) {
    specs.push_back(
        {"c1.normalization." + gkn(k, N), 1, dim_top_of(k, N),
         [k = k, N = N](const Engine& eng) {
           const GrassmannContext ctx(k, N);
           const OmegaTable omegas(ctx);
           const AlgebraElement det_phi = build_tau(ctx, omegas, k);
           const Rational v =
               integrate_raw(eng, ctx, pow(det_phi, N - k));
           return expect_equal(to_string(v), "1");
         }});
  }
}

void add_sigma1_power_checks(std::vector<CheckSpec>& specs) {
  // Classical degrees of the Grassmannians, frozen independently.
  const std::map<std::pair<int, int>, Integer> frozen = {
      {{1, 3}, 1},  {{2, 4}, 2},  {{2, 5}, 5},
      {{2, 6}, 14}, {{3, 6}, 42}, {{3, 7}, 462}};
  for (const auto& [k, N] : kContexts) {
    specs.push_back(
        {"c2.sigma1_power." + gkn(k, N), 2, dim_top_of(k, N),
         [k = k, N = N, spot = frozen.at({k, N})](const Engine& eng) {
           const int d = k * (N - k);
           const SchubertEngine se{GrassmannContext(k, N)};
           const Rational b =
               integrate_raw(eng, se.context(), tau_power_product(se, d, 0));
           const Integer c = intersect_sigma1_power(k, N);
           const auto classes = sigma_classes(d, 0);
           const Integer o = oracle::intersection(k, N, classes);
           return three_way(b, c, o, spot);
         }});
  }
}

void add_mixed_product_checks(std::vector<CheckSpec>& specs) {
  const std::map<std::pair<int, int>, Integer> frozen_one = {
      {{1, 3}, 0}, {{2, 4}, 1}, {{2, 5}, 2}};
  const std::map<std::pair<int, int>, Integer> frozen_two = {
      {{2, 4}, 1}, {{2, 5}, 1}, {{2, 6}, 2}};
  for (const auto& [k, N] : kContexts) {
    if (k * N - k * k - 2 >= 0) {
      std::optional<Integer> spot;
      if (auto it = frozen_one.find({k, N}); it != frozen_one.end())
        spot = it->second;
      specs.push_back(
          {"c3.sigma1_sigma11." + gkn(k, N), 3, dim_top_of(k, N),
           [k = k, N = N, spot](const Engine& eng) {
             const int p = k * N - k * k - 2;
             const SchubertEngine se{GrassmannContext(k, N)};
             const Rational b =
                 integrate_raw(eng, se.context(), tau_power_product(se, p, 1));
             const Integer c = intersect_sigma1_sigma11(k, N);
             std::optional<Integer> o;
             if (k >= 2) {
               const auto classes = sigma_classes(p, 1);
               o = oracle::intersection(k, N, classes);
             }
             return three_way(b, c, o, spot);
           }});
    }
    if (k * N - k * k - 4 >= 0) {
      std::optional<Integer> spot;
      if (auto it = frozen_two.find({k, N}); it != frozen_two.end())
        spot = it->second;
      specs.push_back(
          {"c3.sigma1_sigma11_sq." + gkn(k, N), 3, dim_top_of(k, N),
           [k = k, N = N, spot](const Engine& eng) {
             const int p = k * N - k * k - 4;
             const SchubertEngine se{GrassmannContext(k, N)};
             const Rational b =
                 integrate_raw(eng, se.context(), tau_power_product(se, p, 2));
             const Integer c = intersect_sigma1_sigma11_sq(k, N);
             std::optional<Integer> o;
             if (k >= 2) {
               const auto classes = sigma_classes(p, 2);
               o = oracle::intersection(k, N, classes);
             }
             return three_way(b, c, o, spot);
           }});
    }
  }
}

void add_trace_moment_checks(std::vector<CheckSpec>& specs) {
  const std::vector<std::pair<int, int>> grid = {
      {2, 5}, {2, 6}, {3, 6}, {3, 7}};
  for (const auto& [k, N] : grid) {
    for (int m = 1; m <= 2; ++m) {
      if (k * N - k * k - 2 * m < 0) continue;
      specs.push_back(
          {"c4.p" + std::to_string(m) + "." + gkn(k, N), 4, dim_top_of(k, N),
           [k = k, N = N, m](const Engine& eng) {
             const GrassmannContext ctx(k, N);
             const OmegaTable omegas(ctx);
             const AlgebraElement x =
                 pow(omegas.trace(), k * N - k * k - 2 * m) *
                 pow(omegas.trace_square(), m);
             return expect_equal(to_string(eng.berezin(ctx, x)),
                                 to_string(p_moment(m, k, N)));
           }});
    }
  }
  // Negative regime: P_1 < 0 whenever N < 2k.
  specs.push_back({"c4.p1_negative.G(3,5)", 4, dim_top_of(3, 5),
                   [](const Engine& eng) {
                     const GrassmannContext ctx(3, 5);
                     const OmegaTable omegas(ctx);
                     const AlgebraElement x =
                         pow(omegas.trace(), 4) * omegas.trace_square();
                     const Integer b = eng.berezin(ctx, x);
                     const Integer p = p_moment(1, 3, 5);
                     const bool pass = b == p && p < 0 && b == -144;
                     return Outcome{pass, to_string(b),
                                    "-144 (negative regime)"};
                   }});
}

void add_q_decomposition_checks(std::vector<CheckSpec>& specs) {
  specs.push_back(
      {"c5.q_sum_identity.k2-4.N<=8", 5, kQuickDimCap, [](const Engine&) {
         int mismatches = 0, cases = 0;
         for (int k = 2; k <= 4; ++k) {
           for (int N = k + 1; N <= 8; ++N) {
             if (k * N - k * k - 4 < 0) continue;
             ++cases;
             const QDecomposition q = q_decomposition(k, N);
             if (q.sum() != p_moment(2, k, N)) ++mismatches;
           }
         }
         return expect_equal(std::to_string(mismatches) + " mismatches in " +
                                 std::to_string(cases) + " cases",
                             "0 mismatches in " + std::to_string(cases) +
                                 " cases");
       }});

  // Each Q_i against its own restricted fermion integral at (3,7).
  const int k = 3, N = 7;
  const auto restricted = [](const Engine& eng, int which) {
    const GrassmannContext ctx(3, 7);
    const OmegaTable omegas(ctx);
    const AlgebraElement t4 = pow(omegas.trace(), 3 * 7 - 9 - 4);
    Integer total = 0;
    if (which == 1) {
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          const AlgebraElement pair = omegas.at(i, i) * omegas.at(j, j);
          total += eng.berezin(ctx, t4 * (pair * pair));
        }
    } else if (which == 2) {
      for (int m = 1; m <= 3; ++m)
        for (int i = 1; i <= 3; ++i)
          for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            const AlgebraElement x = t4 * omegas.at(m, m) * omegas.at(m, m) *
                                     omegas.at(i, j) * omegas.at(j, i);
            total += 2 * eng.berezin(ctx, x);
          }
    } else {
      for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
          if (a == b) continue;
          for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
              if (i == j) continue;
              const AlgebraElement x = t4 * omegas.at(a, b) * omegas.at(b, a) *
                                       omegas.at(i, j) * omegas.at(j, i);
              total += eng.berezin(ctx, x);
            }
        }
    }
    return total;
  };
  for (int which = 1; which <= 3; ++which) {
    specs.push_back(
        {"c5.q" + std::to_string(which) + ".berezin." + gkn(k, N), 5,
         dim_top_of(k, N), [restricted, which](const Engine& eng) {
           const QDecomposition q = q_decomposition(3, 7);
           const Integer formula =
               which == 1 ? q.q1 : (which == 2 ? q.q2 : q.q3);
           return expect_equal(to_string(restricted(eng, which)),
                               to_string(formula));
         }});
  }
}

void add_offdiagonal_pair_checks(std::vector<CheckSpec>& specs) {
  for (const auto& [k, N] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}}) {
    specs.push_back(
        {"c6.offdiag_pair." + gkn(k, N), 6, dim_top_of(k, N),
         [k = k, N = N](const Engine& eng) {
           const GrassmannContext ctx(k, N);
           const OmegaTable omegas(ctx);
           const int nk = N - k;
           // Columns for every color other than i=1, j=2, saturated in the
           // written order psi^n_1 psibar^n_1 psi^n_2 ...
           AlgebraElement x = AlgebraElement::unit();
           for (int n = 3; n <= k; ++n)
             for (int s = 1; s <= nk; ++s) {
               x = x * AlgebraElement::monomial(
                           ctx.generator_monomial({false, s, n}));
               x = x * AlgebraElement::monomial(
                           ctx.generator_monomial({true, s, n}));
             }
           x = x * pow(omegas.at(1, 1) * omegas.at(2, 2), nk - 1);
           x = x * omegas.at(1, 2) * omegas.at(2, 1);
           const Integer expected =
               -Integer(nk) * factorial(nk - 1) * factorial(nk - 1);
           return expect_equal(to_string(eng.berezin(ctx, x)),
                               to_string(expected));
         }});
  }
}

void add_g2n_family_checks(std::vector<CheckSpec>& specs) {
  for (int N = 4; N <= 8; ++N) {
    for (int l = 0; l <= 2; ++l) {
      specs.push_back(
          {"c7.g2n.N" + std::to_string(N) + ".l" + std::to_string(l), 7,
           dim_top_of(2, N), [N, l](const Engine& eng) {
             const int p = 2 * N - 4 - 2 * l;
             const SchubertEngine se{GrassmannContext(2, N)};
             const Rational b =
                 integrate_raw(eng, se.context(), tau_power_product(se, p, l));
             const Integer c = g2n_family(N, l);
             const auto classes = sigma_classes(p, l);
             const Integer o = oracle::intersection(2, N, classes);
             return three_way(b, c, o, c);
           }});
    }
  }
}

void add_duality_checks(std::vector<CheckSpec>& specs) {
  for (const auto& [k, N] : std::vector<std::pair<int, int>>{{2, 5}, {3, 6}}) {
    const int dim = k * (N - k);
    specs.push_back(
        {"c8.duality.oracle." + gkn(k, N), 8, dim_top_of(k, N),
         [k = k, N = N, dim](const Engine&) {
           const auto box = box_partitions(k, N - k);
           int mismatches = 0, pairs = 0;
           for (const Partition& a : box) {
             const Partition dual = oracle::complement_dual(k, N, a);
             for (const Partition& b : box) {
               if (a.weight() + b.weight() != dim) continue;
               ++pairs;
               const std::vector<Partition> classes = {a, b};
               const Integer v = oracle::intersection(k, N, classes);
               if (v != (b == dual ? 1 : 0)) ++mismatches;
             }
           }
           return expect_equal(std::to_string(mismatches) + " mismatches in " +
                                   std::to_string(pairs) + " pairs",
                               "0 mismatches in " + std::to_string(pairs) +
                                   " pairs");
         }});
    specs.push_back(
        {"c8.duality.berezin." + gkn(k, N), 8, dim_top_of(k, N),
         [k = k, N = N, dim](const Engine& eng) {
           const SchubertEngine se{GrassmannContext(k, N)};
           const auto box = box_partitions(k, N - k);
           std::vector<AlgebraElement> elems;
           elems.reserve(box.size());
           for (const Partition& a : box) elems.push_back(se.schubert_class(a));
           int mismatches = 0, pairs = 0;
           for (std::size_t ia = 0; ia < box.size(); ++ia) {
             const Partition dual =
                 oracle::complement_dual(k, N, box[ia]);
             for (std::size_t ib = 0; ib < box.size(); ++ib) {
               if (box[ia].weight() + box[ib].weight() != dim) continue;
               ++pairs;
               const Rational v =
                   integrate_raw(eng, se.context(), elems[ia] * elems[ib]);
               if (v != Rational(box[ib] == dual ? 1 : 0)) ++mismatches;
             }
           }
           return expect_equal(std::to_string(mismatches) + " mismatches in " +
                                   std::to_string(pairs) + " pairs",
                               "0 mismatches in " + std::to_string(pairs) +
                                   " pairs");
         }});
  }
}

void add_property_checks(std::vector<CheckSpec>& specs) {
  const std::vector<std::pair<int, int>> grid = {{2, 4}, {2, 5}, {3, 6}};
  constexpr int rounds = 1000;

  for (const auto& [k, N] : grid) {
    const std::string suffix = "." + gkn(k, N);
    specs.push_back(
        {"c9.anticommutativity" + suffix, 9, dim_top_of(k, N),
         [k = k, N = N](const Engine&) {
           const GrassmannContext ctx(k, N);
           std::mt19937_64 rng(0x5ca1ab1e);
           std::uniform_int_distribution<std::uint64_t> mask_dist(
               0, ctx.top_mask().mask());
           int bad = 0;
           for (int t = 0; t < rounds; ++t) {
             const Monomial a = Monomial::from_mask(mask_dist(rng));
             Monomial b = Monomial::from_mask(mask_dist(rng) & ~a.mask());
             const int sign =
                 (a.degree() * b.degree()) % 2 == 0 ? 1 : -1;
             const auto ab = monomial_mul(a, b);
             const auto ba = monomial_mul(b, a);
             if (ab.coeff != sign * ba.coeff || ab.product != ba.product)
               ++bad;
           }
           return expect_equal(std::to_string(bad) + " violations",
                               "0 violations");
         }});
    specs.push_back(
        {"c9.associativity" + suffix, 9, dim_top_of(k, N),
         [k = k, N = N](const Engine&) {
           const GrassmannContext ctx(k, N);
           std::mt19937_64 rng(0xdecafbad ^ static_cast<std::uint64_t>(N));
           int bad = 0;
           for (int t = 0; t < rounds; ++t) {
             const AlgebraElement x = random_element(rng, ctx, 4);
             const AlgebraElement y = random_element(rng, ctx, 4);
             const AlgebraElement z = random_element(rng, ctx, 4);
             if ((x * y) * z != x * (y * z)) ++bad;
           }
           return expect_equal(std::to_string(bad) + " violations",
                               "0 violations");
         }});
    specs.push_back(
        {"c9.grading" + suffix, 9, dim_top_of(k, N),
         [k = k, N = N](const Engine&) {
           const GrassmannContext ctx(k, N);
           std::mt19937_64 rng(0x9ead ^ static_cast<std::uint64_t>(k * N));
           std::uniform_int_distribution<int> deg_dist(0, ctx.dim_top() / 2);
           int bad = 0;
           for (int t = 0; t < rounds; ++t) {
             const int da = deg_dist(rng), db = deg_dist(rng);
             const AlgebraElement x = random_homogeneous(rng, ctx, da, 4);
             const AlgebraElement y = random_homogeneous(rng, ctx, db, 4);
             const AlgebraElement xy = x * y;
             if (xy.is_zero()) continue;
             if (!xy.is_homogeneous() || xy.degree() != da + db) ++bad;
           }
           return expect_equal(std::to_string(bad) + " violations",
                               "0 violations");
         }});
    specs.push_back(
        {"c9.even_center" + suffix, 9, dim_top_of(k, N),
         [k = k, N = N](const Engine&) {
           const GrassmannContext ctx(k, N);
           std::mt19937_64 rng(0xeeee ^ static_cast<std::uint64_t>(N));
           int bad = 0;
           for (int t = 0; t < rounds / 4; ++t) {
             const AlgebraElement x = random_even_element(rng, ctx, 3);
             const AlgebraElement y = random_even_element(rng, ctx, 3);
             if (x * y != y * x) ++bad;
           }
           return expect_equal(std::to_string(bad) + " violations",
                               "0 violations");
         }});
    specs.push_back(
        {"c9.berezin_linearity" + suffix, 9, dim_top_of(k, N),
         [k = k, N = N](const Engine& eng) {
           const GrassmannContext ctx(k, N);
           std::mt19937_64 rng(0xbee ^ static_cast<std::uint64_t>(k * N));
           std::uniform_int_distribution<int> scalar_dist(-20, 20);
           int bad = 0;
           for (int t = 0; t < rounds; ++t) {
             const AlgebraElement x = random_element(rng, ctx, 5);
             const AlgebraElement y = random_element(rng, ctx, 5);
             const Integer alpha = scalar_dist(rng);
             const Integer beta = scalar_dist(rng);
             const Integer lhs = eng.berezin(ctx, alpha * x + beta * y);
             const Integer rhs = alpha * eng.berezin(ctx, x) +
                                 beta * eng.berezin(ctx, y);
             if (lhs != rhs) ++bad;
           }
           return expect_equal(std::to_string(bad) + " violations",
                               "0 violations");
         }});
    specs.push_back(
        {"c9.tau2_identity" + suffix, 9, dim_top_of(k, N),
         [k = k, N = N](const Engine&) {
           const GrassmannContext ctx(k, N);
           const OmegaTable omegas(ctx);
           const AlgebraElement tr = omegas.trace();
           const AlgebraElement lhs = tr * tr - omegas.trace_square();
           const AlgebraElement rhs =
               Integer(2) * build_tau(ctx, omegas, 2);
           return Outcome{lhs == rhs, lhs == rhs ? "identical elements"
                                                 : "element mismatch",
                          "identical elements"};
         }});
  }

  specs.push_back(
      {"c9.duality_symmetry.N<=10", 9, kQuickDimCap, [](const Engine&) {
         int bad = 0;
         for (int N = 2; N <= 10; ++N)
           for (int k = 1; k < N; ++k)
             if (intersect_sigma1_power(k, N) !=
                 intersect_sigma1_power(N - k, N))
               ++bad;
         return expect_equal(std::to_string(bad) + " violations",
                             "0 violations");
       }});
}

void add_extended_checks(std::vector<CheckSpec>& specs) {
  specs.push_back({"ext.sigma1_power.G(4,8)", 0, dim_top_of(4, 8),
                   [](const Engine& eng) {
                     const SchubertEngine se{GrassmannContext(4, 8)};
                     const Rational b = integrate_raw(
                         eng, se.context(), tau_power_product(se, 16, 0));
                     const Integer c = intersect_sigma1_power(4, 8);
                     const auto classes = sigma_classes(16, 0);
                     const Integer o = oracle::intersection(4, 8, classes);
                     return three_way(b, c, o, Integer(24024));
                   }});
}

std::vector<CheckSpec> build_catalogue(VerifyLevel level) {
  std::vector<CheckSpec> specs;
  add_normalization_checks(specs);
  add_sigma1_power_checks(specs);
  add_mixed_product_checks(specs);
  add_trace_moment_checks(specs);
  add_q_decomposition_checks(specs);
  add_offdiagonal_pair_checks(specs);
  add_g2n_family_checks(specs);
  add_duality_checks(specs);
  add_property_checks(specs);
  if (level == VerifyLevel::full) add_extended_checks(specs);

  if (level == VerifyLevel::quick) {
    std::erase_if(specs, [](const CheckSpec& s) {
      return s.max_dim > kQuickDimCap;
    });
  }
  return specs;
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts,
                                          const CheckProgress& progress) {
  const Engine eng{opts.mutate_berezin_sign};
  const auto specs = build_catalogue(opts.level);

  std::vector<CheckResult> results;
  results.reserve(specs.size());
  const auto start = std::chrono::steady_clock::now();
  for (const CheckSpec& spec : specs) {
    CheckResult r;
    r.id = spec.id;
    r.criterion = spec.criterion;
    const double elapsed_total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (opts.budget_seconds && elapsed_total >= *opts.budget_seconds) {
      r.status = CheckStatus::skipped;
      r.rhs = "skipped: wall-clock budget exhausted";
    } else {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const Outcome o = spec.fn(eng);
        r.status = o.pass ? CheckStatus::pass : CheckStatus::fail;
        r.lhs = o.lhs;
        r.rhs = o.rhs;
      } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.lhs = std::string("exception: ") + e.what();
        r.rhs = "no exception";
      }
      r.elapsed_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
    }
    if (progress) progress(r);
    results.push_back(std::move(r));
  }
  return results;
}

VerifySummary summarize(const std::vector<CheckResult>& results) {
  VerifySummary s;
  for (const CheckResult& r : results) {
    switch (r.status) {
      case CheckStatus::pass:
        ++s.passed;
        break;
      case CheckStatus::fail:
        ++s.failed;
        break;
      case CheckStatus::skipped:
        ++s.skipped;
        break;
    }
  }
  return s;
}

}  // namespace grasscalc
