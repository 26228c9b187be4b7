#pragma once

// Root data, distinguished basis and exact bracket of the symplectic
// oscillator algebra g_n = sp_2n ⋉ H_n.
//
// Structure constants are derived once per rank from the matrix realization
// (sp_2n acting on C^2n, Heisenberg bracket from the standard symplectic form)
// and cached.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oak/scalar.hpp"

namespace oak {

/// Integer vector in the epsilon basis: eps_i - eps_j  <->  e_i - e_j.
using Root = std::vector<int>;

/// Largest supported rank (basis indices must fit in a byte).
inline constexpr int kMaxRank = 10;

/// True if the first nonzero coordinate is positive.
bool is_positive_root(const Root& r);

struct BasisElement {
  enum class Kind : std::uint8_t { RootVector, Cartan, Central };

  Kind kind = Kind::Central;
  Root root;      // RootVector only
  int index = 0;  // Cartan only, 1-based

  static BasisElement root_vector(Root r) { return {Kind::RootVector, std::move(r), 0}; }
  static BasisElement cartan(int i) { return {Kind::Cartan, {}, i}; }
  static BasisElement central() { return {Kind::Central, {}, 0}; }

  /// PBW block: 0 = n_-, 1 = Cartan h_i, 2 = z, 3 = n_+.
  int block() const;

  /// Default PBW order: n_- (lexicographic on roots), h_1..h_n, z, n_+ (lexicographic).
  friend std::strong_ordering operator<=>(const BasisElement& a, const BasisElement& b);
  friend bool operator==(const BasisElement& a, const BasisElement& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

/// Values lambda(h_1..h_n) plus the central eigenvalue.
struct Weight {
  std::vector<Scalar> h;
  Scalar z;

  friend bool operator==(const Weight&, const Weight&) = default;
  Weight operator+(const Weight& o) const;
};

/// Structure constants and basis bookkeeping for one rank. Immutable once built.
class LieAlgebra {
 public:
  using Term = std::pair<std::uint8_t, Rational>;

  /// Cached, thread-safe accessor. Throws std::out_of_range unless 1 <= n <= kMaxRank.
  static const LieAlgebra& of_rank(int n);

  int rank() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<BasisElement>& basis() const noexcept { return basis_; }
  const BasisElement& element(std::size_t i) const { return basis_.at(i); }

  /// Position in PBW order; throws std::out_of_range for elements invalid at this rank.
  std::size_t index_of(const BasisElement& b) const;
  bool contains(const BasisElement& b) const;

  /// [basis_i, basis_j] as a sparse list of (index, coefficient).
  const std::vector<Term>& bracket(std::size_t i, std::size_t j) const {
    return table_[i * basis_.size() + j];
  }

  std::size_t central_index() const noexcept { return central_; }
  std::size_t cartan_index(int i) const { return index_of(BasisElement::cartan(i)); }
  int block(std::size_t i) const { return basis_[i].block(); }
  const Root& weight(std::size_t i) const { return weights_[i]; }

  /// Basis indices of the symplectic part (everything except X_{±eps_i} and z).
  bool in_sp(std::size_t i) const;

 private:
  explicit LieAlgebra(int n);

  int n_;
  std::vector<BasisElement> basis_;
  std::vector<Root> weights_;
  std::map<BasisElement, std::size_t> lookup_;
  std::vector<std::vector<Term>> table_;
  std::size_t central_ = 0;
};

/// Sparse linear combination of basis elements with scalar coefficients.
class LieElement {
 public:
  using Terms = std::map<BasisElement, Scalar>;

  explicit LieElement(int rank) : rank_(rank) {}
  LieElement(int rank, const BasisElement& b, const Scalar& c = Scalar(1));

  int rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const BasisElement& b) const;

  void add(const BasisElement& b, const Scalar& c);

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Scalar& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
  LieElement operator-() const { return Scalar(-1) * *this; }

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  int rank_;
  Terms terms_;
};

/// Bilinear bracket. Throws std::out_of_range if an element is not valid at rank n.
LieElement bracket(const LieElement& x, const LieElement& y, int n);

struct RootSystem {
  std::vector<Root> roots;     // Delta, positive roots first then their negatives
  std::vector<Root> positive;  // Delta_+
};

/// Delta = {±eps_i ± eps_j, ±eps_j} \ {0} and the positive system; throws for n < 1.
RootSystem root_system(int n);

/// Positive roots of sp_2n: eps_i - eps_j (i<j), eps_k + eps_l (k<=l).
std::vector<Root> sp_positive_roots(int n);

enum class DecompositionKind { Standard, Parabolic };

struct TriangularDecomposition {
  std::vector<BasisElement> negative;
  std::vector<BasisElement> zero;
  std::vector<BasisElement> positive;
};

/// n_- + h_n + n_+ (Standard) or g^- + g^0 + g^+ (Parabolic). Each part is
/// checked to be closed under the bracket; a failure throws std::logic_error.
TriangularDecomposition decomposition_parts(int n, DecompositionKind kind);

/// Root of a root vector; the zero vector of length n for h_i and z.
Root weight_of(const BasisElement& x, int n);

}  // namespace oak
