#include "hardy/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

double number(const json& j, const char* what) {
  if (!j.is_number()) throw InvalidArgument(std::string("expected a number for ") + what);
  return j.get<double>();
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* key : allowed) ok = ok || it.key() == key;
    if (!ok) throw InvalidArgument("unknown key '" + it.key() + "' in " + where);
  }
}

}  // namespace

json to_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const std::vector<cplx>& zs) {
  json out = json::array();
  for (const auto& z : zs) out.push_back(to_json(z));
  return out;
}

json to_json(const FunctionSpec& f) {
  json out = json::object();
  if (f.blaschke) {
    out["blaschke"] = {{"zeros", to_json(f.blaschke->zeros())}, {"rotation", to_json(f.blaschke->rotation())}};
  }
  json atoms = json::array();
  for (const auto& a : f.atoms) atoms.push_back({{"mass", a.mass}, {"point", to_json(a.point)}});
  out["atoms"] = atoms;
  out["outer_poly"] = to_json(f.outer_poly);
  return out;
}

cplx complex_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_object()) throw InvalidArgument("complex value must be a number or {\"re\", \"im\"}");
  reject_unknown(j, {"re", "im"}, "complex value");
  const double re = j.contains("re") ? number(j["re"], "re") : 0.0;
  const double im = j.contains("im") ? number(j["im"], "im") : 0.0;
  return {re, im};
}

std::vector<cplx> complex_list_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of complex values");
  std::vector<cplx> out;
  for (const auto& v : j) out.push_back(complex_from_json(v));
  return out;
}

FunctionSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw InvalidArgument("function spec must be a JSON object");
  reject_unknown(j, {"blaschke", "atoms", "outer_poly"}, "function spec");
  FunctionSpec f;
  if (j.contains("blaschke") && !j["blaschke"].is_null()) {
    const auto& b = j["blaschke"];
    if (!b.is_object()) throw InvalidArgument("blaschke must be an object");
    reject_unknown(b, {"zeros", "rotation"}, "blaschke");
    auto zeros = b.contains("zeros") ? complex_list_from_json(b["zeros"]) : std::vector<cplx>{};
    const cplx rotation = b.contains("rotation") ? complex_from_json(b["rotation"]) : cplx{1.0};
    if (!zeros.empty() || rotation != 1.0) f.blaschke = BlaschkeProduct(std::move(zeros), rotation);
  }
  if (j.contains("atoms")) {
    if (!j["atoms"].is_array()) throw InvalidArgument("atoms must be an array");
    for (const auto& a : j["atoms"]) {
      if (!a.is_object()) throw InvalidArgument("atom must be an object");
      reject_unknown(a, {"mass", "point"}, "atom");
      SingularAtom atom;
      if (a.contains("mass")) atom.mass = number(a["mass"], "mass");
      if (a.contains("point")) atom.point = complex_from_json(a["point"]);
      atom.validate();
      f.atoms.push_back(atom);
    }
  }
  if (j.contains("outer_poly")) {
    f.outer_poly = complex_list_from_json(j["outer_poly"]);
    if (f.outer_poly.empty()) throw InvalidArgument("outer_poly must have at least one coefficient");
  }
  return f;
}

std::vector<cplx> parse_zero_list(const std::string& text) {
  std::vector<cplx> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("cannot parse zero '" + item + "'");
    }
    for (std::size_t k = used; k < item.size(); ++k) {
      if (!std::isspace(static_cast<unsigned char>(item[k]))) {
        throw InvalidArgument("cannot parse zero '" + item + "'");
      }
    }
    out.emplace_back(v, 0.0);
  }
  if (out.empty()) throw InvalidArgument("empty zero list");
  return out;
}

json load_json_input(const std::string& path_or_inline) {
  const auto first = path_or_inline.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InvalidArgument("empty input");
  std::string text;
  if (path_or_inline[first] == '{' || path_or_inline[first] == '[') {
    text = path_or_inline;
  } else {
    std::ifstream in(path_or_inline);
    if (!in) throw InvalidArgument("cannot read input file " + path_or_inline);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace hardy
