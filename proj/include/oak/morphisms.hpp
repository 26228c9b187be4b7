#pragma once

// The oscillator realization f: g_n -> D_n, the algebra map
// phi: U(g_n)/<z - s^2> -> U(sp_2n) (x) D_n, and the localization twists theta_b.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oak/lie.hpp"
#include "oak/uea.hpp"
#include "oak/weyl.hpp"

namespace oak {

/// Image of a Lie element in D_n (z goes to s^2).
WeylElement f_map(const LieElement& x);
/// Image of a single basis element.
WeylElement f_map(const BasisElement& b, int n);
/// Multiplicative extension to U(g_n).
WeylElement f_map(const UEAElement& u);

/// Element of U(sp_2n) (x) D_n. The left factor is a sorted word over the
/// symplectic basis positions of LieAlgebra::of_rank(n).
class TensorElement {
 public:
  using Key = std::pair<Word, WeylMonomial>;
  using Terms = std::map<Key, Scalar>;

  explicit TensorElement(int rank) : rank_(rank) {}
  static TensorElement unit(int rank);
  /// u (x) 1 for u in U(sp_2n); throws if u involves a Heisenberg letter.
  static TensorElement left(const UEAElement& u);
  /// 1 (x) p.
  static TensorElement right(const WeylElement& p);

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Key& k, const Scalar& c);

  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement& operator*=(const Scalar& c);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const Scalar& c, TensorElement a) { return a *= c; }

  friend bool operator==(const TensorElement&, const TensorElement&) = default;

 private:
  int rank_;
  Terms terms_;
};

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b);
inline TensorElement operator*(const TensorElement& a, const TensorElement& b) { return tensor_multiply(a, b); }

/// phi on a basis element other than z: X (x) 1 + 1 (x) f(X) on sp_2n, 1 (x) f(X) on H_n.
TensorElement phi_map(const BasisElement& b, int n);
/// Multiplicative extension; throws std::invalid_argument if u contains z
/// (apply reduce_central first).
TensorElement phi_map(const UEAElement& u);

enum class HomMap { F, Phi };

struct HomViolation {  // also used for passing pairs (residual "0")
  BasisElement x;
  BasisElement y;
  std::string residual;  // image([x,y]) - [image(x), image(y)] in element syntax
};

struct HomReport {
  HomMap map = HomMap::F;
  int rank = 0;
  std::size_t pairs_checked = 0;
  std::vector<HomViolation> pairs;       // every checked pair with its residual
  std::vector<HomViolation> violations;  // pairs with a nonzero residual
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks image([x,y]) = [image(x), image(y)] for every unordered pair of basis
/// elements (diagonal included).
HomReport verify_lie_hom(HomMap map, int n);

// ---------------------------------------------------------------------------
// Localization twists

/// Index set I (1-based, distinct) with one parameter per index.
struct TwistSpec {
  std::vector<int> indices;
  std::vector<Scalar> b;

  void validate(int n) const;
  /// Parameter attached to index i; throws std::invalid_argument if i is not in I.
  const Scalar& parameter(int i) const;
};

/// Finite sum of terms u * prod_i X_{-2eps_i}^{-r_i}, u a PBW monomial.
class LocalizedOperator {
 public:
  using Key = std::pair<Word, std::vector<unsigned>>;
  using Terms = std::map<Key, Scalar>;

  explicit LocalizedOperator(int rank) : rank_(rank) {}
  static LocalizedOperator from_uea(const UEAElement& u);

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  void add(const Word& sorted_word, const std::vector<unsigned>& inverse_powers, const Scalar& c);

  friend bool operator==(const LocalizedOperator&, const LocalizedOperator&) = default;

 private:
  int rank_;
  Terms terms_;
};

/// Applies the inverse factors first, then the UEA part through f.
LaurentVector apply(const LocalizedOperator& op, const LaurentVector& v, const ModuleDescriptor& m);

/// Closed form of theta_b on X_{-eps_i}, X_{eps_i}, X_{2eps_i} (i in I), with X = X_{-2eps_i}:
///   X_{-eps_i}  ->  X_{-eps_i}
///   X_{eps_i}   ->  X_{eps_i} + 2 b X_{-eps_i} X^-1
///   X_{2eps_i}  ->  X_{2eps_i} - 4 b (h_i + b - 1) X^-1
/// Throws std::invalid_argument for other generators or indices outside I.
LocalizedOperator theta_generator(const BasisElement& g, const TwistSpec& spec);

/// sum_j binom(b, j) ad_X^j(g) X^-j, summed until ad_X^j(g) vanishes, with pure
/// powers of X cancelled against X^-j. b may be symbolic.
LocalizedOperator theta_series(const BasisElement& g, const TwistSpec& spec);

/// Generators twisted by theta_b: X_{-eps_i}, X_{eps_i}, X_{2eps_i} for i in I.
std::vector<BasisElement> twist_generators(const TwistSpec& spec, int n);

struct TwistMismatch {
  BasisElement generator;
  Offset offset;
  std::string expected;
  std::string actual;
};

struct TwistReport {
  int rank = 0;
  TwistSpec spec;
  std::vector<Scalar> base;
  int depth = 0;
  std::size_t checks = 0;
  std::vector<TwistMismatch> mismatches;
  bool series_matches_closed_form = true;
  bool ok() const noexcept { return mismatches.empty() && series_matches_closed_form; }
};

/// For every twisted generator g and every offset m with |m_i| <= depth, compares
/// theta_generator(g) . t^(a+m) with X^b g X^-b . t^(a+m) in F(a), where
/// X^b = prod_i X_{-2eps_i}^{b_i}. Requires nonnegative integer b.
TwistReport verify_theta_conjugation(const TwistSpec& spec, const std::vector<Scalar>& a, int depth);

}  // namespace oak
