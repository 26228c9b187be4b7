#include "oak/reports.hpp"

#include <stdexcept>
#include <string>

#include "oak/syntax.hpp"

namespace oak {

namespace {

Json offset_json(const Offset& m) {
  Json a = Json::array();
  for (int c : m) a.push_back(c);
  return a;
}

Offset offset_from(const Json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw std::invalid_argument(std::string(what) + " must be an array of " + std::to_string(n) + " integers");
  Offset out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Scalar scalar_from(const Json& j, const SymbolSet* allowed) {
  if (j.is_string()) return parse_scalar(j.get<std::string>(), allowed);
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw std::invalid_argument("scalars must be strings or integers");
}

const char* status(bool ok) { return ok ? "ok" : "mismatch"; }

}  // namespace

Json to_json(const Weight& w) {
  Json h = Json::array();
  for (const auto& c : w.h) h.push_back(c.to_string());
  Json out;
  out["h"] = std::move(h);
  out["z"] = w.z.to_string();
  return out;
}

Json to_json(const CharTable& t) {
  Json out;
  out["reference_weight"] = to_json(t.reference);
  out["box"] = {{"lo", offset_json(t.box.lo)}, {"hi", offset_json(t.box.hi)}};
  out["support"] = {{"finite", t.finite}, {"apex", t.apex ? offset_json(*t.apex) : Json(nullptr)}};
  Json entries = Json::array();
  for (const auto& [m, k] : t.entries) entries.push_back({{"offset", offset_json(m)}, {"mult", k}});
  out["entries"] = std::move(entries);
  return out;
}

CharTable char_table_from_json(const Json& j, const SymbolSet* allowed) {
  try {
    const Json& ref = j.at("reference_weight");
    Weight w;
    for (const auto& c : ref.at("h")) w.h.push_back(scalar_from(c, allowed));
    w.z = ref.contains("z") ? scalar_from(ref.at("z"), allowed) : Scalar();
    const int n = static_cast<int>(w.h.size());
    if (n < 1) throw std::invalid_argument("reference weight must have at least one entry");
    CharTable t{w, {offset_from(j.at("box").at("lo"), n, "box.lo"), offset_from(j.at("box").at("hi"), n, "box.hi")}, {},
                std::nullopt, false};
    if (j.contains("support")) {
      const Json& s = j.at("support");
      t.finite = s.value("finite", false);
      if (s.contains("apex") && !s.at("apex").is_null()) t.apex = offset_from(s.at("apex"), n, "support.apex");
    }
    for (const auto& e : j.at("entries")) {
      const Offset m = offset_from(e.at("offset"), n, "entry offset");
      const Json& k = e.at("mult");
      if (!k.is_number_unsigned() && !(k.is_number_integer() && k.get<long>() >= 0))
        throw std::invalid_argument("multiplicities must be nonnegative integers");
      if (!t.box.contains(m)) throw std::invalid_argument("entry offset " + offset_to_string(m) + " lies outside the box");
      t.set(m, k.get<std::uint64_t>());
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed character table: ") + e.what());
  }
}

Json to_json(const HomReport& r) {
  Json out;
  out["command"] = "verify-hom";
  out["map"] = r.map == HomMap::F ? "f" : "phi";
  out["rank"] = r.rank;
  out["pairs_checked"] = r.pairs_checked;
  out["violations"] = r.violations.size();
  Json pairs = Json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"x", to_string(p.x)}, {"y", to_string(p.y)}, {"residual", p.residual}});
  out["pairs"] = std::move(pairs);
  out["status"] = status(r.ok());
  return out;
}

Json to_json(const TwistReport& r) {
  Json out;
  out["command"] = "verify-twist";
  out["rank"] = r.rank;
  Json idx = Json::array(), b = Json::array(), a = Json::array();
  for (int i : r.spec.indices) idx.push_back(i);
  for (const auto& c : r.spec.b) b.push_back(c.to_string());
  for (const auto& c : r.base) a.push_back(c.to_string());
  out["indices"] = std::move(idx);
  out["b"] = std::move(b);
  out["a"] = std::move(a);
  out["depth"] = r.depth;
  out["checks"] = r.checks;
  out["series_matches_closed_form"] = r.series_matches_closed_form;
  Json mism = Json::array();
  for (const auto& m : r.mismatches)
    mism.push_back({{"generator", to_string(m.generator)},
                    {"offset", offset_json(m.offset)},
                    {"conjugation", m.expected},
                    {"closed_form", m.actual}});
  out["mismatches"] = std::move(mism);
  out["status"] = status(r.ok());
  return out;
}

Json to_json(const FactorizationReport& r) {
  Json out;
  out["rank"] = r.rank;
  out["depth"] = r.depth;
  out["lambda"] = to_json(r.lambda);
  out["region"] = {{"lo", offset_json(r.comparison.region.lo)}, {"hi", offset_json(r.comparison.region.hi)}};
  out["points_compared"] = r.comparison.points;
  if (r.comparison.first_mismatch)
    out["first_mismatch"] = {{"offset", offset_json(*r.comparison.first_mismatch)},
                             {"lhs", r.comparison.lhs},
                             {"rhs", r.comparison.rhs}};
  else
    out["first_mismatch"] = nullptr;
  out["status"] = status(r.ok());
  return out;
}

Json to_json(const FlagSets& f) {
  auto list = [](const std::vector<int>& v) {
    Json a = Json::array();
    for (int i : v) a.push_back(i);
    return a;
  };
  Json out;
  out["I"] = list(f.I);
  out["F"] = list(f.F);
  out["F+"] = list(f.F_plus);
  out["F-"] = list(f.F_minus);
  out["probe_depth"] = f.probe_depth;
  return out;
}

Json to_json(const UEAElement& u) {
  Json out = Json::array();
  for (const auto& [w, c] : u.terms()) {
    const std::string mono = word_to_string(w, u.rank());
    out.push_back({{"monomial", mono.empty() ? "1" : mono}, {"coefficient", c.to_string()}});
  }
  return out;
}

Json to_json(const LaurentVector& v) {
  Json out = Json::array();
  for (const auto& [m, c] : v.terms) out.push_back({{"offset", offset_json(m)}, {"coefficient", c.to_string()}});
  return out;
}

}  // namespace oak
