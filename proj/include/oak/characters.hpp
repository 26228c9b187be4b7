#pragma once

// Weight multiplicities inside finite boxes: partition functions, Verma and
// generalized Verma characters, characters of F(a), G(a) and S, convolution,
// and the flag-set classifier.
//
// Offsets are integer epsilon-coordinate vectors relative to a reference
// weight; the reference weight carries any half-integral or symbolic part.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oak/lattice.hpp"
#include "oak/lie.hpp"
#include "oak/weyl.hpp"

namespace oak {

struct CharTable {
  Weight reference;
  Box box;
  std::map<Offset, std::uint64_t> entries;  // nonzero multiplicities, all inside box
  /// Support is contained in apex + C with C = {x : x_1 + ... + x_k <= 0 for all k}.
  std::optional<Offset> apex;
  /// Support is finite and entirely inside the box.
  bool finite = false;

  int rank() const noexcept { return box.rank(); }
  std::uint64_t at(const Offset& m) const;
  void set(const Offset& m, std::uint64_t mult);

  friend bool operator==(const CharTable&, const CharTable&) = default;
};

struct FlagSets {
  std::vector<int> I, F, F_plus, F_minus;  // 1-based indices
  int probe_depth = 0;
  friend bool operator==(const FlagSets&, const FlagSets&) = default;
};

enum class AlgebraKind { G, Sp };

/// Number of ways to write mu as a Z_+-combination of `roots`; each root must be
/// lexicographically positive (std::invalid_argument otherwise).
std::uint64_t kostant_partition(const Offset& mu, const std::vector<Root>& roots);

/// Box lo_k = -k d, hi_k = k d; it contains every offset x of the cone C with
/// |x_1 + ... + x_k| <= d k.
Box cone_box(int n, int depth);

/// Character of U(n) v_0 where n has negative roots -roots: multiplicity at -mu is
/// kostant_partition(mu, roots), exact on cone_box(n, depth), apex 0.
CharTable partition_char(const Weight& reference, const std::vector<Root>& roots, int depth);

/// Verma character over the positive roots of g_n or sp_2n.
CharTable verma_char(const Weight& lambda, AlgebraKind algebra, int depth);

/// Multiplicity-one character of F(a), G(a) or S. The reference weight is
/// a_i + 1/2 on free indices and -1/2 on quotiented ones, z = s^2; offsets on a
/// quotiented index are <= 0. S and G(0,..,0) get the cone box and apex 0, the
/// others the cube of radius depth.
CharTable char_module(const ModuleDescriptor& m, int depth);

/// Character of a tensor product, exact on the returned box. Fails with
/// std::invalid_argument when neither side is finite or cone-supported.
CharTable convolve(const CharTable& a, const CharTable& b);

struct CharComparison {
  bool equal = true;
  std::size_t points = 0;  // offsets compared
  Box region;              // in a's offsets
  std::optional<Offset> first_mismatch;
  std::uint64_t lhs = 0, rhs = 0;
};

/// Compares on the intersection of the boxes after aligning reference weights
/// by an integer shift; throws if the reference weights differ by a non-integer.
CharComparison compare(const CharTable& a, const CharTable& b);

struct FactorizationReport {
  int rank = 0;
  int depth = 0;
  Weight lambda;
  CharComparison comparison;
  bool ok() const noexcept { return comparison.equal; }
};

/// verma_char(lambda, g_n) against verma_char(lambda + 1/2 sum eps, sp_2n) * char(S).
FactorizationReport verify_verma_factorization(const Weight& lambda, int n, int depth);

/// Positive roots whose negatives span g_n^- (eps_i + eps_j with i <= j, and eps_i)
/// or sp_2n^- (eps_i + eps_j with i <= j).
std::vector<Root> parabolic_roots(int n, AlgebraKind algebra);

/// V * (partition character of U(g^-)); V must be finite.
CharTable generalized_verma_char(const CharTable& v, AlgebraKind algebra, int depth);

/// generalized Verma over g_n against the sp_2n one (V shifted by +1/2 sum eps) times char(S).
FactorizationReport verify_prop8b(const CharTable& v, int depth);

/// Finite characters of gl_n / sp_2n modules.
CharTable trivial_char(int n, const Weight& reference);
CharTable natural_char(int n, const Weight& reference);  // weights +-eps_i
CharTable sl2_string_char(unsigned k, const Weight& reference);  // n = 1: k, k-2, ..., -k

/// sp_2 character M(k) - M(-k-2) computed from two Verma tables.
CharTable sp2_simple_from_vermas(unsigned k, int depth);

/// Default probe depth 12, or OAK_PROBE_DEPTH if set to a positive integer.
int default_probe_depth();

/// Direction +-2eps_i continues if some occupied offset has all of its in-box
/// steps along that direction occupied, with at least `depth` such steps; it
/// terminates otherwise. Both continue: I; both terminate: F; + terminates
/// and - continues: F+; the reverse: F-. Throws std::invalid_argument if no
/// occupied offset has `depth` steps of room in some direction.
/// A finite table puts every index in F.
FlagSets classify_flags(const CharTable& table, int depth);

Weight shift_weight(const Weight& w, const std::vector<Scalar>& by);
Weight half_sum_shift(const Weight& w, int sign);

}  // namespace oak
