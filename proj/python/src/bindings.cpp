#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "oak/characters.hpp"
#include "oak/cli.hpp"
#include "oak/errors.hpp"
#include "oak/morphisms.hpp"
#include "oak/reports.hpp"
#include "oak/syntax.hpp"

namespace py = pybind11;
using namespace oak;

namespace {

std::vector<Scalar> scalars(const std::vector<std::string>& items, int n) {
  const SymbolSet syms = default_symbols(n);
  std::vector<Scalar> out;
  for (const auto& s : items) out.push_back(parse_scalar(s, &syms));
  return out;
}

Weight weight(const std::vector<std::string>& lambda, int n) {
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("lambda needs one entry per index");
  return {scalars(lambda, n), Scalar::symbol("s").pow(2)};
}

}  // namespace

PYBIND11_MODULE(_oak, m) {
  m.doc() = "Exact computations in the symplectic oscillator algebra sp_2n x H_n";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);

  m.def("dim", [](int n) { return LieAlgebra::of_rank(n).dim(); }, py::arg("rank"));

  m.def("basis", [](int n) {
    std::vector<std::string> out;
    for (const auto& b : LieAlgebra::of_rank(n).basis()) out.push_back(to_string(b));
    return out;
  }, py::arg("rank"));

  m.def("bracket", [](const std::string& x, const std::string& y, int n) {
    const SymbolSet syms = default_symbols(n);
    return to_string(bracket(parse_lie(x, n, &syms), parse_lie(y, n, &syms), n));
  }, py::arg("x"), py::arg("y"), py::arg("rank"));

  m.def("normal_order", [](const std::string& expr, int n) {
    const SymbolSet syms = default_symbols(n);
    return to_string(parse_uea(expr, n, &syms));
  }, py::arg("expr"), py::arg("rank"));

  m.def("f_map", [](const std::string& expr, int n) {
    const SymbolSet syms = default_symbols(n);
    return to_string(f_map(parse_uea(expr, n, &syms)));
  }, py::arg("expr"), py::arg("rank"));

  m.def("act", [](const std::string& module, const std::string& op, const std::string& vec, int n) {
    const SymbolSet syms = default_symbols(n);
    const ModuleDescriptor md = parse_module(module, n, &syms);
    return to_string(apply(parse_weyl(op, n, &syms), project(parse_laurent(vec, md.base(), &syms), md), md));
  }, py::arg("module"), py::arg("op"), py::arg("vector"), py::arg("rank"));

  m.def("verify_hom", [](const std::string& map, int n) {
    if (map != "f" && map != "phi") throw std::invalid_argument("map must be 'f' or 'phi'");
    return to_json(verify_lie_hom(map == "f" ? HomMap::F : HomMap::Phi, n)).dump();
  }, py::arg("map"), py::arg("rank"));

  m.def("verify_twist", [](const std::vector<int>& indices, const std::vector<std::string>& b, int n,
                           std::optional<std::vector<std::string>> a, int depth) {
    std::vector<Scalar> base;
    if (a) base = scalars(*a, n);
    else
      for (int i = 1; i <= n; ++i) base.push_back(Scalar::symbol("a" + std::to_string(i)));
    return to_json(verify_theta_conjugation({indices, scalars(b, n)}, base, depth)).dump();
  }, py::arg("indices"), py::arg("b"), py::arg("rank"), py::arg("a") = py::none(), py::arg("depth") = 4);

  m.def("verma_char", [](const std::vector<std::string>& lambda, const std::string& algebra, int depth) {
    const int n = static_cast<int>(lambda.size());
    if (algebra != "g" && algebra != "sp") throw std::invalid_argument("algebra must be 'g' or 'sp'");
    Weight w = weight(lambda, n);
    if (algebra == "sp") w.z = Scalar();
    return to_json(verma_char(w, algebra == "g" ? AlgebraKind::G : AlgebraKind::Sp, depth)).dump();
  }, py::arg("lambda_"), py::arg("algebra") = "g", py::arg("depth") = 4);

  m.def("verify_verma_factorization", [](const std::vector<std::string>& lambda, int depth) {
    const int n = static_cast<int>(lambda.size());
    return to_json(verify_verma_factorization(weight(lambda, n), n, depth)).dump();
  }, py::arg("lambda_"), py::arg("depth") = 6);

  m.def("classify", [](const std::string& table_json, int depth) {
    const CharTable t = char_table_from_json(Json::parse(table_json));
    return to_json(classify_flags(t, depth > 0 ? depth : default_probe_depth())).dump();
  }, py::arg("table"), py::arg("depth") = 0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
