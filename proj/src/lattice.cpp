#include "shorlat/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace shorlat {

IntVector::IntVector(std::initializer_list<long long> entries) {
  entries_.reserve(entries.size());
  for (long long e : entries) entries_.emplace_back(e);
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& e) { return e == 0; });
}

BigInt IntVector::dot(const IntVector& other) const {
  if (dim() != other.dim()) throw Error(Errc::InvalidParameter, "dimension mismatch in dot product");
  BigInt acc = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) acc += entries_[i] * other.entries_[i];
  return acc;
}

IntVector& IntVector::operator+=(const IntVector& o) {
  if (dim() != o.dim()) throw Error(Errc::InvalidParameter, "dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& o) {
  if (dim() != o.dim()) throw Error(Errc::InvalidParameter, "dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

IntVector& IntVector::operator*=(const BigInt& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

IntVector IntVector::operator-() const {
  IntVector out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

std::string IntVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? ", " : "") << entries_[i];
  os << ')';
  return os.str();
}

Basis::Basis(IntVector u_, IntVector v_) : u(std::move(u_)), v(std::move(v_)) {
  if (u.dim() != v.dim()) throw Error(Errc::InvalidParameter, "basis vectors differ in dimension");
  if (u.dim() < 2) throw Error(Errc::InvalidParameter, "basis vectors need dimension >= 2");
}

BigInt Basis::length_squared() const { return std::max(u.norm2(), v.norm2()); }

BigInt Basis::gram_determinant() const {
  const BigInt uv = u.dot(v);
  return u.norm2() * v.norm2() - uv * uv;
}

namespace {

struct ChiStep {
  BigInt m;
  int eps;
};

// m = [uv / uu] and eps = sign(uv/uu - m), all in integers.
ChiStep chi_coefficients(const BigInt& uv, const BigInt& uu) {
  BigInt m = ceil_div(2 * uv - uu, 2 * uu);
  const int eps = (uv - m * uu) >= 0 ? 1 : -1;
  return {std::move(m), eps};
}

void apply_chi(IntVector& v, const IntVector& u, const ChiStep& step) {
  if (step.m != 0) {
    for (std::size_t i = 0; i < v.dim(); ++i) v[i] -= step.m * u[i];
  }
  if (step.eps < 0) v = -v;
}

Reduction reduce(const Basis& input, const Rational& tau) {
  if (input.u.is_zero() || input.v.is_zero())
    throw Error(Errc::DegenerateLattice, "zero vector in basis");

  Reduction out;
  out.trace.t_squared = tau;
  out.trace.initial_length_M2 = input.length_squared();

  IntVector u = input.u;
  IntVector v = input.v;
  BigInt uu = u.norm2();
  BigInt vv = v.norm2();
  // rows of the transform: u = ua*u0 + ub*v0, v = vc*u0 + vd*v0
  BigInt ua = 1, ub = 0, vc = 0, vd = 1;

  for (;;) {
    ++out.trace.iterations;
    if (uu > vv) {
      std::swap(u, v);
      std::swap(uu, vv);
      std::swap(ua, vc);
      std::swap(ub, vd);
      ++out.trace.swaps;
    }
    const ChiStep step = chi_coefficients(u.dot(v), uu);
    apply_chi(v, u, step);
    vc = step.eps * (vc - step.m * ua);
    vd = step.eps * (vd - step.m * ub);
    vv = v.norm2();
    if (vv == 0) throw Error(Errc::DegenerateLattice, "basis vectors are linearly dependent");
    out.trace.per_iteration_norms.emplace_back(uu, vv);
    if (uu * tau.den() <= tau.num() * vv) break;
  }

  out.basis.u = std::move(u);
  out.basis.v = std::move(v);
  out.trace.transform = Unimodular{std::move(ua), std::move(ub), std::move(vc), std::move(vd)};
  return out;
}

}  // namespace

IntVector chi(const IntVector& v, const IntVector& u) {
  if (u.dim() != v.dim()) throw Error(Errc::InvalidParameter, "dimension mismatch in chi");
  if (u.is_zero()) throw Error(Errc::ZeroVector, "chi(v, u) needs u != 0");
  IntVector w = v;
  apply_chi(w, u, chi_coefficients(u.dot(v), u.norm2()));
  return w;
}

Reduction gauss_reduce(const Basis& b) { return reduce(b, Rational(1)); }

Reduction gauss_reduce_t(const Basis& b, const Rational& t_squared) {
  if (t_squared <= Rational(1))
    throw Error(Errc::InvalidParameter, "Gauss(t) needs t^2 > 1, got " + t_squared.to_string());
  return reduce(b, t_squared);
}

std::uint64_t iteration_bound(const BigInt& M_squared) {
  if (M_squared < 1) throw Error(Errc::InvalidParameter, "iteration_bound needs M^2 >= 1");
  return ceil_log(Rational(3), M_squared) + 1;
}

std::uint64_t iteration_bound_t(const BigInt& M_squared, const Rational& t_squared) {
  if (M_squared < 1) throw Error(Errc::InvalidParameter, "iteration_bound_t needs M^2 >= 1");
  return std::max<std::uint64_t>(1, ceil_log(t_squared, M_squared));
}

ShortestVector shortest_vector_oracle(const Basis& b, std::uint64_t cell_budget) {
  const BigInt uu = b.u.norm2();
  const BigInt vv = b.v.norm2();
  const BigInt uv = b.u.dot(b.v);
  const BigInt G = uu * vv - uv * uv;
  if (G == 0) throw Error(Errc::DegenerateLattice, "basis vectors are linearly dependent");

  // Points with |m u + n v|^2 <= R satisfy n^2 G <= uu R (and m^2 G <= vv R).
  BigInt R = std::min(uu, vv);
  // Every row n costs at least one probe, so a starting n-range beyond the
  // budget can be rejected up front.
  if (isqrt(uu * R / G) + 1 > BigInt(cell_budget))
    throw Error(Errc::TooLarge, "enumeration box exceeds the cell budget");

  ShortestVector best;
  bool have_best = false;
  std::uint64_t visited = 0;

  auto visit = [&](const BigInt& m, const BigInt& n, const BigInt& q) {
    if (!have_best || q < R) {
      R = q;
      best.m = m;
      best.n = n;
      best.minimal_classes = 1;
      have_best = true;
    } else if (q == R) {
      ++best.minimal_classes;
    }
  };

  for (BigInt n = 0; n * n * G <= uu * R; ++n) {
    const BigInt two_n_uv = 2 * n * uv;
    const BigInt n2_vv = n * n * vv;
    auto q_at = [&](const BigInt& m) { return (m * uu + two_n_uv) * m + n2_vv; };
    auto charge = [&] {
      if (++visited > cell_budget) throw Error(Errc::TooLarge, "enumeration exceeded the cell budget");
    };

    // q(m) is convex in m with its minimum at -n uv / uu.
    const BigInt m0 = (n == 0) ? BigInt(0) : floor_div(-n * uv, uu);
    for (BigInt m = (n == 0) ? BigInt(1) : m0 + 1;; ++m) {
      charge();
      const BigInt q = q_at(m);
      if (q > R) break;
      visit(m, n, q);
    }
    if (n == 0) continue;  // (m, 0) and (-m, 0) are the same class
    for (BigInt m = m0;; --m) {
      charge();
      const BigInt q = q_at(m);
      if (q > R) break;
      visit(m, n, q);
    }
  }

  best.norm2 = R;
  best.vector = best.m * b.u + best.n * b.v;
  best.cells_visited = visited;
  return best;
}

}  // namespace shorlat
