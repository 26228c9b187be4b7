#pragma once

// Rank-n Weyl algebra D_n and its weight modules F(a), G(a) and the
// Shale-Weil module S, with exact operator actions.

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "oak/lattice.hpp"
#include "oak/scalar.hpp"

namespace oak {

/// Normally ordered monomial t^alpha d^beta.
struct WeylMonomial {
  std::vector<std::uint8_t> t;
  std::vector<std::uint8_t> d;

  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
};

class WeylElement {
 public:
  using Terms = std::map<WeylMonomial, Scalar>;

  explicit WeylElement(int rank) : rank_(rank) {}
  static WeylElement constant(int rank, const Scalar& c);
  static WeylElement t(int rank, int i);  // 1-based
  static WeylElement d(int rank, int i);  // 1-based, the derivation d/dt_i

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const;

  void add(const WeylMonomial& m, const Scalar& c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const Scalar& c);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const Scalar& c, WeylElement a) { return a *= c; }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  int rank_;
  Terms terms_;
};

WeylElement weyl_multiply(const WeylElement& p, const WeylElement& q);
inline WeylElement operator*(const WeylElement& p, const WeylElement& q) { return weyl_multiply(p, q); }
WeylElement commutator(const WeylElement& p, const WeylElement& q);

/// Product of normally ordered monomials as (monomial, integer coefficient) pairs.
std::vector<std::pair<WeylMonomial, Rational>> multiply_monomials(const WeylMonomial& a, const WeylMonomial& b);

/// sum_m c_m t^(a + m) for a fixed base exponent a.
struct LaurentVector {
  std::vector<Scalar> base;
  std::map<Offset, Scalar> terms;

  static LaurentVector basis(const std::vector<Scalar>& base, const Offset& m);
  int rank() const noexcept { return static_cast<int>(base.size()); }
  bool is_zero() const noexcept { return terms.empty(); }
  void add(const Offset& m, const Scalar& c);
  LaurentVector& operator+=(const LaurentVector& o);
  LaurentVector& operator-=(const LaurentVector& o);
  LaurentVector& operator*=(const Scalar& c);
  friend LaurentVector operator+(LaurentVector a, const LaurentVector& b) { return a += b; }
  friend LaurentVector operator-(LaurentVector a, const LaurentVector& b) { return a -= b; }
  friend bool operator==(const LaurentVector&, const LaurentVector&) = default;
};

/// F(a), the quotient G(a) = F(a) / sum_{j in Int} D_n C[t_j], or the Shale-Weil module S.
class ModuleDescriptor {
 public:
  enum class Kind { FullLaurent, Quotient, ShaleWeil };

  static ModuleDescriptor full(std::vector<Scalar> a);
  /// Int_a is read off from `a`: entries that are the rational 0 are quotiented;
  /// other integer entries are rejected.
  static ModuleDescriptor quotient(std::vector<Scalar> a);
  static ModuleDescriptor shale_weil(int n);

  Kind kind() const noexcept { return kind_; }
  int rank() const noexcept { return static_cast<int>(a_.size()); }
  const std::vector<Scalar>& base() const noexcept { return a_; }
  /// Int_a membership, 1-based.
  bool quotiented(int i) const { return quotiented_.at(static_cast<std::size_t>(i - 1)); }
  /// True if t^(a+m) is zero in this module.
  bool vanishes(const Offset& m) const;

  friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;

 private:
  ModuleDescriptor(Kind kind, std::vector<Scalar> a, std::vector<bool> q)
      : kind_(kind), a_(std::move(a)), quotiented_(std::move(q)) {}

  Kind kind_;
  std::vector<Scalar> a_;
  std::vector<bool> quotiented_;
};

/// Drops every term that vanishes in the module.
LaurentVector project(const LaurentVector& v, const ModuleDescriptor& m);

/// p . v in the module; throws std::invalid_argument if v's base differs from the module's.
LaurentVector apply(const WeylElement& p, const LaurentVector& v, const ModuleDescriptor& m);

/// (-d_i^2)^(-power) . v: t^(a+m) -> -t^(a+m+2e_i) / ((a_i+m_i+2)(a_i+m_i+1)) per step.
/// Throws DivisionByZero when a factor vanishes and std::invalid_argument on a
/// quotiented index.
LaurentVector apply_inverse_long_root(int i, unsigned power, const LaurentVector& v, const ModuleDescriptor& m);

/// Element of a finite direct sum of copies of one module.
using SumVector = std::vector<LaurentVector>;

SumVector apply(const WeylElement& p, const SumVector& v, const ModuleDescriptor& m);

/// Smallest l with t_i^(l+1) w = 0; throws std::invalid_argument if t_i is not
/// nilpotent on w within the support bound.
unsigned nilpotency_index(const SumVector& w, int i, const ModuleDescriptor& m);

/// w + sum_{k=1}^{l} (1/k!) d_i^k t_i^k w, which is killed by t_i. Rejects w = 0.
SumVector straighten_highest(const SumVector& w, int i, const ModuleDescriptor& m);
LaurentVector straighten_highest(const LaurentVector& w, int i, const ModuleDescriptor& m);

/// Applies straighten_highest for i = 1..n in ascending order.
SumVector make_highest(const SumVector& w, const ModuleDescriptor& m);

/// h-weights (h_i acting as t_i d_i + 1/2) of the nonzero basis vectors t^(a+m), m in box,
/// listed in lexicographic offset order.
std::vector<std::vector<Scalar>> support(const ModuleDescriptor& m, const Box& box);

}  // namespace oak
