#pragma once

// Exact scalars: multivariate polynomials and rational functions over Q.
//
// Every Scalar is kept in a canonical reduced form (numerator and denominator
// coprime, denominator monic in lexicographic order with variables ordered by
// name), so equality is syntactic.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oak {

using Rational = mpq_class;

/// Interned symbol name. Ordering is by name.
class Symbol {
 public:
  explicit Symbol(std::string_view name);

  const std::string& name() const noexcept { return *name_; }

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.name_ == b.name_; }
  friend bool operator<(Symbol a, Symbol b) noexcept {
    return a.name_ != b.name_ && *a.name_ < *b.name_;
  }

 private:
  const std::string* name_;
};

using SymbolSet = std::set<std::string>;

/// Power product of symbols, stored sorted by symbol with positive exponents.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  explicit Monomial(Symbol s, unsigned exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  unsigned degree(Symbol s) const;
  unsigned total_degree() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial without(Symbol s) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// Lexicographic order, earliest-named variable most significant; greater first.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, LexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(Symbol s);
  Polynomial(const Monomial& m, const Rational& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term value; requires is_constant().
  Rational constant_value() const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  std::set<Symbol> symbols() const;
  std::optional<Symbol> first_symbol() const;
  unsigned degree(Symbol s) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Coefficients as a univariate polynomial in s: degree -> coefficient.
  std::map<unsigned, Polynomial> as_univariate(Symbol s) const;
  static Polynomial from_univariate(Symbol s, const std::map<unsigned, Polynomial>& coeffs);

  /// Divides by the leading coefficient (zero stays zero).
  Polynomial monic() const;

  /// Rational content c and primitive integer polynomial p with positive leading
  /// coefficient such that *this == c * p.
  std::pair<Rational, Polynomial> integer_primitive() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Exact quotient; throws std::invalid_argument when `den` does not divide `num`.
Polynomial divide_exact(const Polynomial& num, const Polynomial& den);

/// Monic greatest common divisor over Q (gcd(0, 0) == 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Element of Q(symbols), canonical reduced form.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long v) : Scalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& v);               // NOLINT(google-explicit-constructor)
  Scalar(const Polynomial& p);             // NOLINT(google-explicit-constructor)
  Scalar(const Polynomial& num, const Polynomial& den);

  static Scalar symbol(std::string_view name) { return Scalar(Polynomial(Symbol(name))); }
  static Scalar fraction(long p, long q) { return Scalar(Rational(p, q)); }

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const noexcept { return num_.is_constant() && den_.is_constant(); }
  /// Requires is_rational().
  Rational to_rational() const;
  bool is_integer() const;
  /// Sign of the leading numerator coefficient (0 for zero).
  int leading_sign() const;

  std::set<Symbol> symbols() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  /// Integer power; negative exponents invert (DivisionByZero on zero).
  Scalar pow(long e) const;

  /// Replaces symbols by scalars. Throws DivisionByZero if the denominator vanishes.
  Scalar substitute(const std::map<Symbol, Scalar>& values) const;
  /// Full evaluation; throws std::invalid_argument if a symbol is left unassigned.
  Rational evaluate(const std::map<Symbol, Rational>& values) const;

  friend bool operator==(const Scalar&, const Scalar&) = default;

  /// Compact re-parseable form, e.g. "(s^2-1)/2".
  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

/// Parses a rational-function literal ("(s^2-1)/2", "a1+1/2", "-3/4").
/// Symbols outside `allowed` (when given) are rejected with ParseError.
Scalar parse_scalar(std::string_view text, const SymbolSet* allowed = nullptr);

/// Binomial coefficient C(x, k) = x(x-1)...(x-k+1)/k! for a scalar x.
Scalar binomial(const Scalar& x, unsigned k);

}  // namespace oak
