#include "shorlat/numtheory.hpp"

#include <cctype>
#include <ostream>

namespace shorlat {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::DegenerateLattice: return "DegenerateLattice";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidN: return "InvalidN";
    case Errc::NotNMultiple: return "NotNMultiple";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::Exhausted: return "Exhausted";
    case Errc::OrderOracleBudgetExceeded: return "OrderOracleBudgetExceeded";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw Error(Errc::Parse, "expected an integer, got '" + std::string(text) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::Parse, "expected an integer, got '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(Errc::DivisionByZero, "floor_div by zero");
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(Errc::DivisionByZero, "ceil_div by zero");
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

// --- Rational ---------------------------------------------------------------

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(Errc::DivisionByZero, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(Errc::DivisionByZero, "rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational abs(const Rational& q) { return q.num() < 0 ? -q : q; }

// --- integer helpers --------------------------------------------------------

BigInt closest_integer(const Rational& f) {
  // m = ceil(f - 1/2) = ceil((2p - q) / 2q)
  return ceil_div(2 * f.num() - f.den(), 2 * f.den());
}

int sign(const Rational& f) { return f.num() >= 0 ? 1 : -1; }

BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

BigInt modpow(const BigInt& a, const BigInt& e, const BigInt& n) {
  if (n < 1) throw Error(Errc::InvalidParameter, "modpow needs n >= 1");
  if (e < 0) throw Error(Errc::InvalidParameter, "modpow needs e >= 0");
  if (n == 1) return 0;
  BigInt base = a % n;
  if (base < 0) base += n;
  return boost::multiprecision::powm(base, e, n);
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(Errc::InvalidParameter, "isqrt of a negative number");
  return boost::multiprecision::sqrt(n);
}

BigInt ceil_sqrt2_times(const BigInt& s) {
  if (s < 0) throw Error(Errc::InvalidParameter, "ceil_sqrt2_times needs s >= 0");
  const BigInt target = 2 * s * s;
  BigInt c = isqrt(target);
  if (c * c < target) ++c;
  return c;
}

BigInt next_pow2(const BigInt& m) {
  if (m < 1) throw Error(Errc::InvalidParameter, "next_pow2 needs m >= 1");
  BigInt p = 1;
  p <<= boost::multiprecision::msb(m);
  if (p < m) p <<= 1;
  return p;
}

std::uint64_t ceil_log(const Rational& base, const BigInt& value) {
  if (base <= Rational(1)) throw Error(Errc::InvalidParameter, "ceil_log needs base > 1");
  if (value < 1) throw Error(Errc::InvalidParameter, "ceil_log needs value >= 1");
  std::uint64_t j = 0;
  Rational power(1);
  const Rational target(value);
  while (power < target) {
    power *= base;
    ++j;
  }
  return j;
}

BigInt multiplicative_order(const BigInt& a, const BigInt& n, std::uint64_t budget) {
  if (n < 2) throw Error(Errc::InvalidParameter, "multiplicative_order needs n >= 2");
  BigInt base = a % n;
  if (base < 0) base += n;
  if (gcd(base, n) != 1)
    throw Error(Errc::NotAUnit, a.str() + " is not a unit modulo " + n.str());

  if (n <= BigInt(0xFFFFFFFFu)) {
    const auto mod = n.convert_to<std::uint64_t>();
    const auto b = base.convert_to<std::uint64_t>();
    std::uint64_t acc = b;
    for (std::uint64_t r = 1; r <= budget; ++r) {
      if (acc == 1) return BigInt(r);
      acc = acc * b % mod;
    }
  } else {
    BigInt acc = base;
    for (std::uint64_t r = 1; r <= budget; ++r) {
      if (acc == 1) return BigInt(r);
      acc = acc * base % n;
    }
  }
  throw Error(Errc::OrderOracleBudgetExceeded,
              "order of " + a.str() + " mod " + n.str() + " exceeds " + std::to_string(budget));
}

}  // namespace shorlat
