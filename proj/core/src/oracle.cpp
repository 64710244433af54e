#include "grasscalc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace grasscalc::oracle {

namespace {

// Oracle-local partition helpers; the fermionic modules have their own.
bool inside_box(const Partition& p, int rows, int cols) {
  return p.length() <= rows && p.part(0) <= cols;
}

void check_box(const Partition& p, int rows, int cols) {
  if (!inside_box(p, rows, cols))
    throw std::domain_error("partition " + p.to_string() + " outside the " +
                            std::to_string(rows) + "x" + std::to_string(cols) +
                            " box");
}

std::vector<int> conjugate_parts(const Partition& p) {
  std::vector<int> conj(static_cast<std::size_t>(p.part(0)), 0);
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p.part(i); ++j) ++conj[static_cast<std::size_t>(j)];
  return conj;
}

Partition box_full(int rows, int cols) {
  if (cols == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

}  // namespace

BoxClass::BoxClass(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1)
    throw std::domain_error("box must have positive dimensions");
}

BoxClass BoxClass::unit(int rows, int cols) {
  BoxClass c(rows, cols);
  c.add(Partition{}, 1);
  return c;
}

void BoxClass::add(const Partition& p, const Integer& c) {
  check_box(p, rows_, cols_);
  if (c == 0) return;
  if (!coeffs_.empty() && coeffs_.begin()->first.weight() != p.weight())
    throw std::logic_error("BoxClass must stay homogeneous in weight");
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

Integer BoxClass::coeff(const Partition& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

BoxClass& BoxClass::operator+=(const BoxClass& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::logic_error("BoxClass addition across different boxes");
  for (const auto& [p, c] : rhs.coeffs_) add(p, c);
  return *this;
}

BoxClass& BoxClass::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

BoxClass pieri_e(int m, const BoxClass& c) {
  if (m < 1 || m > c.rows())
    throw std::domain_error("pieri_e index must satisfy 1 <= m <= k");
  BoxClass out(c.rows(), c.cols());
  const int rows = c.rows();
  for (const auto& [p, coeff] : c.coeffs()) {
    // Choose the m rows that each get one extra box.
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << rows);
         ++subset) {
      if (std::popcount(subset) != m) continue;
      std::vector<int> parts(static_cast<std::size_t>(rows));
      for (int r = 0; r < rows; ++r)
        parts[static_cast<std::size_t>(r)] =
            p.part(r) + ((subset >> r) & 1u ? 1 : 0);
      bool decreasing = true;
      for (int r = 0; r + 1 < rows && decreasing; ++r)
        decreasing = parts[static_cast<std::size_t>(r)] >=
                     parts[static_cast<std::size_t>(r + 1)];
      if (!decreasing || parts[0] > c.cols()) continue;
      out.add(Partition(parts), coeff);
    }
  }
  return out;
}

std::map<std::vector<int>, Integer> schur_in_e(const Partition& a, int rows,
                                               int cols) {
  check_box(a, rows, cols);
  std::map<std::vector<int>, Integer> out;
  const int n = a.part(0);
  if (n == 0) {
    out[{}] = 1;
    return out;
  }
  const std::vector<int> conj = conjugate_parts(a);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t u = 0; u < perm.size(); ++u)
      for (std::size_t v = u + 1; v < perm.size(); ++v)
        if (perm[u] > perm[v]) ++inversions;
    std::vector<int> indices;
    bool zero = false;
    for (int u = 0; u < n && !zero; ++u) {
      const int e = conj[static_cast<std::size_t>(u)] - (u + 1) +
                    (perm[static_cast<std::size_t>(u)] + 1);
      if (e < 0 || e > rows) zero = true;  // e_m = 0 outside [0, k]
      else if (e > 0) indices.push_back(e);
    }
    if (zero) continue;
    std::sort(indices.begin(), indices.end());
    auto [it, inserted] =
        out.try_emplace(std::move(indices), (inversions & 1) ? -1 : 1);
    if (!inserted) {
      it->second += (inversions & 1) ? -1 : 1;
      if (it->second == 0) out.erase(it);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Integer intersection(int k, int N, std::span<const Partition> classes) {
  if (k < 1 || k >= N)
    throw std::domain_error("oracle intersection requires 1 <= k < N");
  const int cols = N - k;
  for (const Partition& a : classes) check_box(a, k, cols);

  BoxClass acc = BoxClass::unit(k, cols);
  for (const Partition& a : classes) {
    if (acc.is_zero()) break;
    BoxClass next(k, cols);
    for (const auto& [indices, c] : schur_in_e(a, k, cols)) {
      BoxClass piece = acc;
      for (int m : indices) {
        piece = pieri_e(m, piece);
        if (piece.is_zero()) break;
      }
      piece *= c;
      next += piece;
    }
    acc = std::move(next);
  }
  return acc.coeff(box_full(k, cols));
}

Partition complement_dual(int k, int N, const Partition& a) {
  const int cols = N - k;
  check_box(a, k, cols);
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    parts[static_cast<std::size_t>(i)] = cols - a.part(k - 1 - i);
  return Partition(std::move(parts));
}

}  // namespace grasscalc::oracle
