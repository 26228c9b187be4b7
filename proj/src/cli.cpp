#include "oak/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <iostream>
#include <random>
#include <sstream>

#include "oak/characters.hpp"
#include "oak/errors.hpp"
#include "oak/morphisms.hpp"
#include "oak/reports.hpp"
#include "oak/syntax.hpp"

namespace oak::cli {

namespace {

enum class Format { Auto, Json, Text };

struct Options {
  Format format = Format::Auto;
  std::uint64_t seed = 1;
  std::string symbols;
  int rank = 1;

  // command-specific
  std::vector<std::string> elements;
  std::string module, op, vector, map = "f", b, indices, a, algebra = "g", lambda, offset, support_file, tensor = "trivial",
              v_kind = "one-dim";
  int depth = 0;
  int radius = 0;
  int samples = 5;
  bool uea = false;
  std::optional<std::string> expect_i;
};

class Context {
 public:
  Context(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  SymbolSet symbols() const {
    if (o_.symbols.empty()) return default_symbols(o_.rank);
    SymbolSet s{"s"};
    std::stringstream in(o_.symbols);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty()) throw ParseError("empty symbol name", o_.symbols, 0);
      if (item == "z" || item.find_first_not_of("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_") !=
                             std::string::npos)
        throw ParseError("invalid symbol name", item, 0);
      s.insert(item);
    }
    return s;
  }

  bool json(Format fallback) const {
    const Format f = o_.format == Format::Auto ? fallback : o_.format;
    return f == Format::Json;
  }

  void emit(const Json& j) const { out_ << j.dump(2) << '\n'; }
  void line(const std::string& s) const { out_ << s << '\n'; }

 private:
  const Options& o_;
  std::ostream& out_;
};

Weight parse_weight(const std::string& text, int n, const SymbolSet& syms) {
  Weight w{parse_scalar_list(text.empty() ? "0" : text, n, &syms), Scalar::symbol("s").pow(2)};
  return w;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

std::string index_list(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

void require_depth(int d) {
  if (d < 1) throw std::invalid_argument("depth must be at least 1");
}

// ---------------------------------------------------------------------------

int cmd_bracket(const Options& o, const Context& ctx) {
  if (o.elements.size() != 2) throw std::invalid_argument("bracket needs exactly two elements");
  const SymbolSet syms = ctx.symbols();
  const LieElement x = parse_lie(o.elements[0], o.rank, &syms);
  const LieElement y = parse_lie(o.elements[1], o.rank, &syms);
  const LieElement r = bracket(x, y, o.rank);
  if (ctx.json(Format::Text))
    ctx.emit(Json{{"command", "bracket"}, {"rank", o.rank}, {"x", to_string(x)}, {"y", to_string(y)}, {"result", to_string(r)}});
  else
    ctx.line(to_string(r));
  return kExitOk;
}

int cmd_normal_order(const Options& o, const Context& ctx) {
  if (o.elements.empty()) throw std::invalid_argument("normal-order needs at least one element");
  const SymbolSet syms = ctx.symbols();
  const UEAElement u = parse_uea(join(o.elements), o.rank, &syms);
  if (ctx.json(Format::Json))
    ctx.emit(Json{{"command", "normal-order"}, {"rank", o.rank}, {"terms", to_json(u)}, {"text", to_string(u)}});
  else
    ctx.line(to_string(u));
  return kExitOk;
}

int cmd_act(const Options& o, const Context& ctx) {
  const SymbolSet syms = ctx.symbols();
  const ModuleDescriptor m = parse_module(o.module, o.rank, &syms);
  const WeylElement p = o.uea ? f_map(parse_uea(o.op, o.rank, &syms)) : parse_weyl(o.op, o.rank, &syms);
  const LaurentVector v = project(parse_laurent(o.vector, m.base(), &syms), m);
  const LaurentVector r = apply(p, v, m);
  if (ctx.json(Format::Json))
    ctx.emit(Json{{"command", "act"},
                  {"rank", o.rank},
                  {"module", to_string(m)},
                  {"operator", to_string(p)},
                  {"vector", to_string(v)},
                  {"result", to_json(r)},
                  {"text", to_string(r)}});
  else
    ctx.line(to_string(r));
  return kExitOk;
}

int cmd_verify_hom(const Options& o, const Context& ctx) {
  if (o.map != "f" && o.map != "phi") throw std::invalid_argument("--map must be f or phi");
  const HomReport r = verify_lie_hom(o.map == "f" ? HomMap::F : HomMap::Phi, o.rank);
  if (ctx.json(Format::Json)) {
    ctx.emit(to_json(r));
  } else {
    ctx.line("verify-hom map=" + o.map + " rank=" + std::to_string(o.rank) + ": " + std::to_string(r.pairs_checked) +
             " pairs, " + std::to_string(r.violations.size()) + " violations");
    for (const auto& v : r.violations) ctx.line("  [" + to_string(v.x) + ", " + to_string(v.y) + "]: " + v.residual);
  }
  return r.ok() ? kExitOk : kExitMismatch;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  std::size_t pos = 0;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("expected an integer index", item, pos);
    }
    if (used != item.size()) throw ParseError("expected an integer index", item, pos);
    out.push_back(v);
    pos += item.size() + 1;
  }
  return out;
}

int cmd_verify_twist(const Options& o, const Context& ctx) {
  const SymbolSet syms = ctx.symbols();
  TwistSpec spec;
  if (o.b.empty()) throw std::invalid_argument("--b is required");
  {
    std::stringstream in(o.b);
    std::string item;
    std::size_t pos = 0;
    while (std::getline(in, item, ',')) {
      try {
        spec.b.push_back(parse_scalar(item, &syms));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), e.token(), pos + e.position());
      }
      pos += item.size() + 1;
    }
  }
  if (o.indices.empty())
    for (std::size_t i = 0; i < spec.b.size(); ++i) spec.indices.push_back(static_cast<int>(i) + 1);
  else
    spec.indices = parse_index_list(o.indices);
  std::vector<Scalar> a;
  if (o.a.empty())
    for (int i = 1; i <= o.rank; ++i) a.push_back(Scalar::symbol("a" + std::to_string(i)));
  else
    a = parse_scalar_list(o.a, o.rank, &syms);
  const TwistReport r = verify_theta_conjugation(spec, a, o.depth == 0 ? 4 : o.depth);
  if (ctx.json(Format::Json)) {
    ctx.emit(to_json(r));
  } else {
    ctx.line("verify-twist rank=" + std::to_string(o.rank) + ": " + std::to_string(r.checks) + " checks, " +
             std::to_string(r.mismatches.size()) + " mismatches, series " +
             (r.series_matches_closed_form ? "matches" : "differs from") + " closed form");
  }
  return r.ok() ? kExitOk : kExitMismatch;
}

AlgebraKind parse_algebra(const std::string& s) {
  if (s == "g") return AlgebraKind::G;
  if (s == "sp") return AlgebraKind::Sp;
  throw std::invalid_argument("--algebra must be g or sp");
}

int cmd_verma_mult(const Options& o, const Context& ctx) {
  const SymbolSet syms = ctx.symbols();
  const int depth = o.depth == 0 ? 4 : o.depth;
  require_depth(depth);
  Weight lambda = parse_weight(o.lambda, o.rank, syms);
  const AlgebraKind alg = parse_algebra(o.algebra);
  if (alg == AlgebraKind::Sp) lambda.z = Scalar();
  const CharTable t = verma_char(lambda, alg, depth);
  if (!o.offset.empty()) {
    Offset mu = parse_offset(o.offset, o.rank);
    for (auto& c : mu) c = -c;
    if (!t.box.contains(mu)) throw std::invalid_argument("offset lies outside the depth box; increase --depth");
    const auto mult = t.at(mu);
    if (ctx.json(Format::Text))
      ctx.emit(Json{{"command", "verma-mult"}, {"offset", o.offset}, {"multiplicity", mult}});
    else
      ctx.line(std::to_string(mult));
    return kExitOk;
  }
  if (ctx.json(Format::Json)) {
    ctx.emit(to_json(t));
  } else {
    for (const auto& [m, k] : t.entries) ctx.line(offset_to_string(m) + " " + std::to_string(k));
  }
  return kExitOk;
}

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  return Scalar(Rational(num(rng), den(rng)));
}

int emit_factorizations(const std::string& command, const std::vector<FactorizationReport>& reports, const Context& ctx) {
  bool ok = true;
  Json list = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    list.push_back(to_json(r));
  }
  if (ctx.json(Format::Json)) {
    ctx.emit(Json{{"command", command}, {"cases", std::move(list)}, {"status", ok ? "ok" : "mismatch"}});
  } else {
    for (const auto& r : reports) {
      std::string lam;
      for (const auto& c : r.lambda.h) lam += (lam.empty() ? "" : ",") + c.to_string();
      ctx.line(command + " lambda=" + lam + " depth=" + std::to_string(r.depth) + ": " +
               std::to_string(r.comparison.points) + " offsets, " + (r.ok() ? "equal" : "MISMATCH"));
    }
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_prop4b(const Options& o, const Context& ctx) {
  const SymbolSet syms = ctx.symbols();
  const int depth = o.depth == 0 ? 6 : o.depth;
  require_depth(depth);
  std::vector<Weight> lambdas;
  if (!o.lambda.empty()) {
    lambdas.push_back(parse_weight(o.lambda, o.rank, syms));
  } else {
    std::mt19937_64 rng(o.seed);
    for (int k = 0; k < o.samples; ++k) {
      Weight w{{}, Scalar::symbol("s").pow(2)};
      for (int i = 0; i < o.rank; ++i) w.h.push_back(random_rational(rng));
      lambdas.push_back(w);
    }
  }
  std::vector<FactorizationReport> reports;
  for (const auto& l : lambdas) reports.push_back(verify_verma_factorization(l, o.rank, depth));
  return emit_factorizations("verify-prop4b", reports, ctx);
}

int cmd_prop8b(const Options& o, const Context& ctx) {
  const SymbolSet syms = ctx.symbols();
  const int depth = o.depth == 0 ? 5 : o.depth;
  require_depth(depth);
  const Weight w = parse_weight(o.lambda, o.rank, syms);
  CharTable v = trivial_char(o.rank, w);
  if (o.v_kind == "standard") {
    v = CharTable{w, Box{Offset(static_cast<std::size_t>(o.rank), 0), Offset(static_cast<std::size_t>(o.rank), 1)}, {},
                  std::nullopt, true};
    for (int i = 0; i < o.rank; ++i) {
      Offset e(static_cast<std::size_t>(o.rank), 0);
      e[static_cast<std::size_t>(i)] = 1;
      v.entries.emplace(e, 1);
    }
  } else if (o.v_kind != "one-dim") {
    throw std::invalid_argument("--v must be one-dim or standard");
  }
  return emit_factorizations("verify-prop8b", {verify_prop8b(v, depth)}, ctx);
}

int cmd_classify(const Options& o, const Context& ctx) {
  const SymbolSet syms = ctx.symbols();
  const int depth = o.depth == 0 ? default_probe_depth() : o.depth;
  require_depth(depth);
  CharTable t;
  if (!o.support_file.empty()) {
    std::ifstream in(o.support_file);
    if (!in) throw std::invalid_argument("cannot open " + o.support_file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), o.support_file, e.byte);
    }
    t = char_table_from_json(j, &syms);
  } else if (!o.module.empty()) {
    const ModuleDescriptor m = parse_module(o.module, o.rank, &syms);
    const int radius = o.radius == 0 ? 2 * depth + 2 : o.radius;
    const CharTable base = char_module(m, radius);
    const Weight zero{std::vector<Scalar>(static_cast<std::size_t>(o.rank)), Scalar()};
    if (o.tensor == "trivial") t = base;
    else if (o.tensor == "natural") t = convolve(natural_char(o.rank, zero), base);
    else throw std::invalid_argument("--tensor must be trivial or natural");
  } else {
    throw std::invalid_argument("classify needs --support or --module");
  }
  const FlagSets f = classify_flags(t, depth);
  bool ok = true;
  if (o.expect_i) ok = (o.expect_i->empty() ? std::vector<int>{} : parse_index_list(*o.expect_i)) == f.I;
  if (ctx.json(Format::Json)) {
    Json j = to_json(f);
    Json report{{"command", "classify"}, {"flags", j}};
    if (o.expect_i) report["status"] = ok ? "ok" : "mismatch";
    ctx.emit(report);
  } else {
    ctx.line("I=" + index_list(f.I) + " F=" + index_list(f.F) + " F+=" + index_list(f.F_plus) +
             " F-=" + index_list(f.F_minus) + " (probe depth " + std::to_string(f.probe_depth) + ")");
    if (!ok) ctx.line("expected I=" + index_list(parse_index_list(*o.expect_i)));
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_support(const Options& o, const Context& ctx) {
  const SymbolSet syms = ctx.symbols();
  const ModuleDescriptor m = parse_module(o.module, o.rank, &syms);
  const int radius = o.radius == 0 ? 3 : o.radius;
  const auto weights = support(m, Box::cube(o.rank, radius));
  if (ctx.json(Format::Json)) {
    Json list = Json::array();
    for (const auto& w : weights) {
      Json row = Json::array();
      for (const auto& c : w) row.push_back(c.to_string());
      list.push_back(std::move(row));
    }
    ctx.emit(Json{{"command", "support"}, {"module", to_string(m)}, {"radius", radius}, {"weights", std::move(list)}});
  } else {
    for (const auto& w : weights) {
      std::string row;
      for (const auto& c : w) row += (row.empty() ? "" : ",") + c.to_string();
      ctx.line(row);
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in the symplectic oscillator algebra sp_2n x H_n", "oak"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "auto";
  app.add_option("--format", format, "Output format: json or text")->check(CLI::IsMember({"auto", "json", "text"}));
  app.add_option("--seed", o.seed, "Seed for randomized sweeps");
  app.add_option("--symbols", o.symbols, "Comma-separated symbol names allowed in scalars (default s,a1..an,b1..bn)");

  auto rank_opt = [&](CLI::App* sub) {
    sub->add_option("--rank,-n", o.rank, "Rank n")->check(CLI::Range(1, kMaxRank));
  };

  std::function<int(const Options&, const Context&)> handler;
  auto command = [&](const char* name, const char* help, int (*fn)(const Options&, const Context&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&handler, fn] { handler = fn; });
    rank_opt(sub);
    return sub;
  };

  auto* s = command("bracket", "Lie bracket of two elements", cmd_bracket);
  s->add_option("elements", o.elements, "Two Lie elements")->required()->expected(2);

  s = command("normal-order", "PBW normal form of a product", cmd_normal_order);
  s->add_option("elements", o.elements, "Factors (whitespace separated)")->required();

  s = command("act", "Apply a Weyl operator to a vector of F(a), G(a) or S", cmd_act);
  s->add_option("module", o.module, "F a1,..,an | G a1,..,an | S")->required();
  s->add_option("operator", o.op, "Weyl element, e.g. 't1^2 d1'")->required();
  s->add_option("vector", o.vector, "Laurent vector relative to t^a, e.g. 't1^-1'")->required();
  s->add_flag("--uea", o.uea, "Read the operator as an element of U(g_n) and map it through f");

  s = command("verify-hom", "Check the homomorphism property on all basis pairs", cmd_verify_hom);
  s->add_option("--map", o.map, "f or phi");

  s = command("verify-twist", "Compare theta_b with conjugation on F(a)", cmd_verify_twist);
  s->add_option("--b", o.b, "Comma-separated nonnegative integers")->required();
  s->add_option("--indices", o.indices, "Comma-separated twist indices (default 1..k)");
  s->add_option("--a", o.a, "Base exponent (default symbolic a1..an)");
  s->add_option("--depth", o.depth, "Probe box radius (default 4)");

  s = command("verma-mult", "Verma module weight multiplicities", cmd_verma_mult);
  s->add_option("--algebra", o.algebra, "g or sp");
  s->add_option("--lambda", o.lambda, "Highest weight as comma-separated scalars (default 0)");
  s->add_option("--depth", o.depth, "Depth (default 4)");
  s->add_option("--offset", o.offset, "mu: report the multiplicity of lambda - mu");

  s = command("verify-prop4b", "Verma factorization over sp_2n and S", cmd_prop4b);
  s->add_option("--lambda", o.lambda, "Highest weight (default: random rationals from --seed)");
  s->add_option("--samples", o.samples, "Number of random weights")->check(CLI::Range(1, 1000));
  s->add_option("--depth", o.depth, "Depth (default 6)");

  s = command("verify-prop8b", "Generalized Verma factorization", cmd_prop8b);
  s->add_option("--lambda", o.lambda, "Weight of V's reference vector (default 0)");
  s->add_option("--v", o.v_kind, "one-dim or standard");
  s->add_option("--depth", o.depth, "Depth (default 5)");

  s = command("classify", "Flag sets I, F, F+, F- of a support", cmd_classify);
  s->add_option("--support", o.support_file, "Character table JSON file");
  s->add_option("--module", o.module, "Build the support from F, G or S instead");
  s->add_option("--tensor", o.tensor, "trivial or natural finite factor for --module");
  s->add_option("--radius", o.radius, "Box radius for --module (default 2*depth+2)");
  s->add_option("--depth", o.depth, "Probe depth (default 12 or OAK_PROBE_DEPTH)");
  s->add_option("--expect-i", o.expect_i, "Expected injective index set; exit 1 if it differs");

  s = command("support", "Weights of basis vectors in a box", cmd_support);
  s->add_option("--module", o.module, "F a1,..,an | G a1,..,an | S")->required();
  s->add_option("--radius", o.radius, "Box radius (default 3)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }
  o.format = format == "json" ? Format::Json : format == "text" ? Format::Text : Format::Auto;

  const Context ctx(o, out);
  try {
    return handler(o, ctx);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const DivisionByZero& e) {
    err << "error: division by zero: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitMalformed;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace oak::cli
