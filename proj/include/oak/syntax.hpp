#pragma once

// Textual syntax for elements, shared by the CLI, the reports and the bindings.
//
//   basis elements   X[+e1-e2]  X[+2e1] (= X[+e1+e1])  X[-e1]  h1  z
//   UEA / Lie        (s^2-1)/2 X[-e1] X[+e1] + h1^2 - 3 z
//   Weyl             t1^2 d1 - 1/2
//   Laurent vectors  t1^-1 t2^-3 + a1 t1^-2     (offsets from the base t^a)
//   modules          F a1,a2   G a1,0   S
//
// Products in UEA and Weyl input are taken in the written order and normal
// ordered. Every printed element parses back to an equal value.

#include <string>
#include <string_view>
#include <vector>

#include "oak/lattice.hpp"
#include "oak/lie.hpp"
#include "oak/morphisms.hpp"
#include "oak/scalar.hpp"
#include "oak/uea.hpp"
#include "oak/weyl.hpp"

namespace oak {

/// s, a1..an, b1..bn.
SymbolSet default_symbols(int n);

std::string to_string(const Root& r);
std::string to_string(const BasisElement& b);
std::string to_string(const LieElement& x);
std::string word_to_string(const Word& sorted_word, int n);
std::string to_string(const UEAElement& u);
std::string to_string(const WeylMonomial& m);
std::string to_string(const WeylElement& p);
std::string offset_monomial(const Offset& m);
std::string to_string(const LaurentVector& v);
std::string to_string(const TensorElement& x);
std::string to_string(const LocalizedOperator& op);
std::string to_string(const ModuleDescriptor& m);
std::string offset_to_string(const Offset& m);

/// Coefficient-and-monomial term joiner used by every printer: "a - b + c".
std::string join_terms(const std::vector<std::pair<Scalar, std::string>>& terms);

BasisElement parse_basis_element(std::string_view text, int n);
UEAElement parse_uea(std::string_view text, int n, const SymbolSet* allowed = nullptr);
/// A UEA expression of degree at most one with no constant part.
LieElement parse_lie(std::string_view text, int n, const SymbolSet* allowed = nullptr);
WeylElement parse_weyl(std::string_view text, int n, const SymbolSet* allowed = nullptr);
LaurentVector parse_laurent(std::string_view text, const std::vector<Scalar>& base,
                            const SymbolSet* allowed = nullptr);
/// `F a1,a2`, `G a1,0` or `S`; F and G need exactly n entries.
ModuleDescriptor parse_module(std::string_view text, int n, const SymbolSet* allowed = nullptr);

/// Comma-separated scalars ("0,1/2,a1"). A single entry is broadcast to all n slots.
std::vector<Scalar> parse_scalar_list(std::string_view text, int n, const SymbolSet* allowed = nullptr);
/// Comma-separated integers with exactly n entries.
Offset parse_offset(std::string_view text, int n);

}  // namespace oak
