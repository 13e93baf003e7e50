#pragma once

// Exact integer and rational primitives. Nothing in here touches floating
// point; every comparison involving an irrational bound is done by squaring.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "shorlat/error.hpp"

namespace shorlat {

using BigInt = boost::multiprecision::cpp_int;

/// Parse a decimal integer with optional leading sign. Throws Errc::Parse.
BigInt parse_bigint(std::string_view text);

/// Floor and ceiling of a/b for b != 0 (cpp_int division truncates toward zero).
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// Canonical exact rational: denominator > 0 and gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT: implicit by design of a number type
  Rational(std::int64_t value) : num_(value), den_(1) {}      // NOLINT
  Rational(int value) : num_(value), den_(1) {}               // NOLINT
  Rational(BigInt num, BigInt den);

  /// Accepts "p", "p/q" with optional sign on p.
  static Rational parse(std::string_view text);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return ceil_div(num_, den_); }

  Rational operator-() const { return Rational(-num_, den_, Canonical{}); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string to_string() const;

 private:
  struct Canonical {};
  Rational(BigInt num, BigInt den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational abs(const Rational& q);

/// The unique m with f - m in (-1/2, 1/2]. Exact halves round down:
/// [1/2] = 0 and [-1/2] = -1.
BigInt closest_integer(const Rational& f);

/// +1 when f >= 0 (including zero), -1 otherwise.
int sign(const Rational& f);

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// a^e mod n with result in [0, n). Requires n >= 1 and e >= 0.
BigInt modpow(const BigInt& a, const BigInt& e, const BigInt& n);

/// Floor of the square root, n >= 0.
BigInt isqrt(const BigInt& n);

/// Smallest integer c with c^2 >= 2 s^2, i.e. ceil(sqrt(2) * s), for s >= 0.
BigInt ceil_sqrt2_times(const BigInt& s);

/// Smallest power of two >= m, for m >= 1.
BigInt next_pow2(const BigInt& m);

/// Smallest j >= 0 with base^j >= value, for base > 1 and value >= 1.
std::uint64_t ceil_log(const Rational& base, const BigInt& value);

inline constexpr std::uint64_t kDefaultOrderBudget = 10'000'000;

/// Smallest r >= 1 with a^r = 1 (mod n) by repeated multiplication.
/// Deliberately naive: a ground-truth oracle for desk-scale moduli only.
/// Throws NotAUnit when gcd(a, n) != 1 and OrderOracleBudgetExceeded after
/// `budget` multiplications.
BigInt multiplicative_order(const BigInt& a, const BigInt& n,
                            std::uint64_t budget = kDefaultOrderBudget);

}  // namespace shorlat
