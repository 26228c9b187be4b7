#pragma once

// PBW normal ordering in U(g_n), the central quotient z -> s^2 and the action
// of U(g_n) on Verma modules M(zdot, lambda).

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "oak/lie.hpp"
#include "oak/scalar.hpp"

namespace oak {

/// Sequence of basis positions (indices into LieAlgebra::basis()). A sorted word
/// is a PBW monomial; the position order is the default PBW order.
using Word = std::vector<std::uint8_t>;

/// Exponent vector of a PBW monomial over the ordered basis.
std::vector<unsigned> exponents(const Word& sorted_word, std::size_t dim);

class UEAElement {
 public:
  using Terms = std::map<Word, Scalar>;

  explicit UEAElement(int rank) : rank_(rank) {}
  static UEAElement unit(int rank) { return monomial(rank, {}, Scalar(1)); }
  /// Requires a sorted word.
  static UEAElement monomial(int rank, const Word& sorted_word, const Scalar& c = Scalar(1));
  static UEAElement from_lie(const LieElement& x);

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t degree() const;
  Scalar coefficient(const Word& sorted_word) const;

  void add(const Word& sorted_word, const Scalar& c);

  UEAElement& operator+=(const UEAElement& o);
  UEAElement& operator-=(const UEAElement& o);
  UEAElement& operator*=(const Scalar& c);
  friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
  friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
  friend UEAElement operator*(const Scalar& c, UEAElement a) { return a *= c; }

  friend bool operator==(const UEAElement&, const UEAElement&) = default;

 private:
  int rank_;
  Terms terms_;
};

enum class RewriteStrategy { Rightmost, Leftmost, Random };

/// Canonical PBW form of a product of basis elements. Uses the rightmost
/// inversion first and memoizes every intermediate word.
UEAElement normal_order(const Word& word, int n);
UEAElement normal_order(const std::vector<BasisElement>& word, int n);

/// Same result computed without memoization under an explicit strategy
/// (used to check confluence). `rng` is required for RewriteStrategy::Random.
UEAElement normal_order_with(const Word& word, int n, RewriteStrategy strategy,
                             std::mt19937_64* rng = nullptr);

UEAElement multiply(const UEAElement& u, const UEAElement& v);

/// Substitutes s^2 for every factor z.
UEAElement reduce_central(const UEAElement& u);

/// Element of M(zdot, lambda): U(n_-) applied to the highest weight vector.
struct VermaVector {
  Weight lambda;
  std::map<Word, Scalar> terms;  // sorted words over n_- letters only

  static VermaVector highest(const Weight& lambda);
  int rank() const noexcept { return static_cast<int>(lambda.h.size()); }
  bool is_zero() const noexcept { return terms.empty(); }
  friend bool operator==(const VermaVector&, const VermaVector&) = default;
};

VermaVector act_on_verma(const UEAElement& u, const VermaVector& v);

/// Number of cached normal forms (all ranks); exposed for diagnostics.
std::size_t normal_order_cache_size();

}  // namespace oak
