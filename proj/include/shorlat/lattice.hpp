#pragma once

// Gauss (Lagrange) reduction of rank-2 lattices in Z^d, its relaxed Gauss(t)
// variant, and an enumeration oracle for the shortest nonzero vector.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "shorlat/numtheory.hpp"

namespace shorlat {

class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<BigInt> entries) : entries_(std::move(entries)) {}
  IntVector(std::initializer_list<BigInt> entries) : entries_(entries) {}
  IntVector(std::initializer_list<long long> entries);

  std::size_t dim() const noexcept { return entries_.size(); }
  const BigInt& operator[](std::size_t i) const { return entries_[i]; }
  BigInt& operator[](std::size_t i) { return entries_[i]; }
  std::span<const BigInt> entries() const noexcept { return entries_; }

  bool is_zero() const;
  BigInt norm2() const { return dot(*this); }
  BigInt dot(const IntVector& other) const;

  IntVector& operator+=(const IntVector& o);
  IntVector& operator-=(const IntVector& o);
  IntVector& operator*=(const BigInt& c);
  IntVector operator-() const;
  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(const BigInt& c, IntVector a) { return a *= c; }

  friend bool operator==(const IntVector&, const IntVector&) = default;

  std::string to_string() const;

 private:
  std::vector<BigInt> entries_;
};

inline BigInt dot(const IntVector& a, const IntVector& b) { return a.dot(b); }

/// Ordered generator pair of a rank-2 lattice. The constructor only checks
/// shapes (equal dimension, d >= 2); linear dependence is detected lazily by
/// the operations that care.
struct Basis {
  IntVector u;
  IntVector v;

  Basis() = default;
  Basis(IntVector u_, IntVector v_);

  std::size_t dim() const noexcept { return u.dim(); }
  /// max(|u|^2, |v|^2), the squared "length" of the basis.
  BigInt length_squared() const;
  /// |u|^2 |v|^2 - (u.v)^2; zero iff u, v are dependent.
  BigInt gram_determinant() const;

  friend bool operator==(const Basis&, const Basis&) = default;
};

/// Integer 2x2 matrix T with (u', v') = T (u, v), i.e. u' = a u + b v and
/// v' = c u + d v.
struct Unimodular {
  BigInt a = 1, b = 0, c = 0, d = 1;

  BigInt determinant() const { return a * d - b * c; }
  friend bool operator==(const Unimodular&, const Unimodular&) = default;
};

struct ReductionTrace {
  std::uint64_t iterations = 0;
  std::uint64_t swaps = 0;
  BigInt initial_length_M2 = 0;  ///< max squared norm of the input basis
  Rational t_squared = 1;        ///< 1 for plain Gauss
  /// (|u|^2, |v|^2) after step 2 of each iteration.
  std::vector<std::pair<BigInt, BigInt>> per_iteration_norms;
  /// Maps the input basis onto the output basis.
  Unimodular transform;
};

struct Reduction {
  Basis basis;
  ReductionTrace trace;
};

/// The shortest element of { e (v - m u) : m in Z, e = +-1 } that makes a
/// nonnegative inner product with u: m = [f], e = sign(f - m) where
/// f = u.v / |u|^2. Throws ZeroVector if u = 0.
IntVector chi(const IntVector& v, const IntVector& u);

/// Plain Gauss reduction (loop until |u|^2 <= |v|^2). The output u is a
/// shortest nonzero vector of the lattice. Throws DegenerateLattice if the
/// inputs turn out to be linearly dependent.
Reduction gauss_reduce(const Basis& b);

/// Gauss(t): loop until |u|^2 <= t_squared |v|^2. Requires t_squared > 1.
Reduction gauss_reduce_t(const Basis& b, const Rational& t_squared);

/// ceil(log_3(M^2)) + 1, the iteration ceiling for plain Gauss on a basis of
/// squared length M^2 >= 1.
std::uint64_t iteration_bound(const BigInt& M_squared);

/// Ceiling on Gauss(t) iterations: max(1, ceil(log_{t^2}(M^2))).
std::uint64_t iteration_bound_t(const BigInt& M_squared, const Rational& t_squared);

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

struct ShortestVector {
  IntVector vector;
  BigInt norm2;
  /// Coefficients with vector = m u + n v.
  BigInt m, n;
  /// Number of minimal vectors counted up to sign (1 means unique up to +-).
  std::uint64_t minimal_classes = 0;
  /// Lattice points examined.
  std::uint64_t cells_visited = 0;
};

/// Brute-force enumeration of a shortest nonzero vector. Walks n = 0, 1, 2, ...
/// and, for each n, every m whose point m u + n v can still beat the current
/// best; stops once |n| exceeds |c| / |v*| for the best candidate c, where v*
/// is the part of v orthogonal to u. Throws DegenerateLattice or TooLarge
/// when more than `cell_budget` points would be visited.
ShortestVector shortest_vector_oracle(const Basis& b,
                                      std::uint64_t cell_budget = kDefaultOracleBudget);

}  // namespace shorlat
