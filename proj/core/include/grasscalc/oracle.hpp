#ifndef GRASSCALC_ORACLE_HPP
#define GRASSCALC_ORACLE_HPP

#include <map>
#include <span>
#include <vector>

#include "grasscalc/bigint.hpp"
#include "grasscalc/partition.hpp"

// Fermion-free Schubert calculus on the k x (N-k) box: a box-truncated
// Pieri rule plus the dual Jacobi-Trudi expansion. Ground truth for the
// engine, so it deliberately shares no code with the fermionic path.
namespace grasscalc::oracle {

// Exact-integer linear combination of partitions inside a fixed box.
// Values stay homogeneous in weight; add() enforces this.
class BoxClass {
 public:
  BoxClass(int rows, int cols);
  static BoxClass unit(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_zero() const { return coeffs_.empty(); }

  void add(const Partition& p, const Integer& c);
  Integer coeff(const Partition& p) const;
  const std::map<Partition, Integer>& coeffs() const { return coeffs_; }

  BoxClass& operator+=(const BoxClass& rhs);
  BoxClass& operator*=(const Integer& c);

  bool operator==(const BoxClass&) const = default;

 private:
  int rows_;
  int cols_;
  std::map<Partition, Integer> coeffs_;
};

// Multiplication by e_m = sigma_{1^m}: adds all vertical strips of m boxes
// (at most one per row), silently discarding shapes that leave the box.
BoxClass pieri_e(int m, const BoxClass& c);

// Dual Jacobi-Trudi expansion of sigma_a as a signed combination of
// products of e's, keyed by the sorted multiset of e-indices. Indices
// above `rows` are dropped (e_m vanishes in k variables for m > k).
std::map<std::vector<int>, Integer> schur_in_e(const Partition& a, int rows,
                                               int cols);

// Intersection number of the given classes on G(k,N): expand each class in
// e's, push Pieri chains through the box, and read off the coefficient of
// the full box. 0 on degree mismatch.
Integer intersection(int k, int N, std::span<const Partition> classes);

// b_i = (N-k) - a_{k+1-i}: the unique partner pairing to 1 against a.
Partition complement_dual(int k, int N, const Partition& a);

}  // namespace grasscalc::oracle

#endif
