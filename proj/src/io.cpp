#include "lieherm/io.hpp"

#include <fstream>

namespace lieherm {

namespace {

Json parse_stream(std::istream& in, const std::string& what) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  return parse_stream(in, path);
}

int get_int(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw ParseError(std::string("missing or non-integer field '") + key +
                     "'");
  return doc[key].get<int>();
}

Rational get_value(const Json& entry) {
  if (!entry.contains("value") || !entry["value"].is_string())
    throw ParseError("component 'value' must be a rational string");
  return rat_parse(entry["value"].get<std::string>());
}

const Json& get_array(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array())
    throw ParseError(std::string("missing or non-array field '") + key + "'");
  return doc[key];
}

} // namespace

LieAlgebra algebra_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("algebra document must be an object");
  const int dim = get_int(doc, "dim");
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
    name = doc["name"].get<std::string>();
  }
  std::vector<BracketEntry> entries;
  for (const Json& e : get_array(doc, "brackets"))
    entries.push_back(
        {get_int(e, "a"), get_int(e, "b"), get_int(e, "c"), get_value(e)});
  return LieAlgebra(dim, entries, name);
}

LieAlgebra load_algebra_file(const std::string& path) {
  return algebra_from_json(load_file(path));
}

Json algebra_to_json(const LieAlgebra& L) {
  Json doc;
  doc["name"] = L.name();
  doc["dim"] = L.dim();
  Json brackets = Json::array();
  for (const BracketEntry& e : L.entries()) {
    Json o;
    o["a"] = e.a;
    o["b"] = e.b;
    o["c"] = e.c;
    o["value"] = rat_str(e.value);
    brackets.push_back(std::move(o));
  }
  doc["brackets"] = std::move(brackets);
  return doc;
}

void save_algebra_file(const LieAlgebra& L, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << algebra_to_json(L).dump(2) << "\n";
}

AlphaForm alpha_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("alpha document must be an object");
  const int n = get_int(doc, "n");
  if (n < 1) throw ValidationError("alpha 'n' must be positive");
  VectorTwoForm v(n);
  for (const Json& e : get_array(doc, "components")) {
    const int a = get_int(e, "a");
    const int b = get_int(e, "b");
    const int c = get_int(e, "c");
    if (a < 1 || a > 2 * n || b < 1 || b > 2 * n || c < 1 || c > 2 * n)
      throw IndexOutOfRange("alpha component index out of range");
    if (a >= b)
      throw ValidationError("alpha components must have a < b");
    if (v(a, b, c) != 0)
      throw DuplicateEntry("duplicate alpha component (" + std::to_string(a) +
                           "," + std::to_string(b) + "," + std::to_string(c) +
                           ")");
    v.set_pair(a, b, c, get_value(e));
  }
  return AlphaForm(std::move(v));
}

AlphaForm load_alpha_file(const std::string& path) {
  return alpha_from_json(load_file(path));
}

namespace {

Json component(int a, int b, int c, const Rational& v) {
  Json o;
  o["a"] = a;
  o["b"] = b;
  o["c"] = c;
  o["value"] = rat_str(v);
  return o;
}

} // namespace

Json two_form_components(const VectorTwoForm& T) {
  Json out = Json::array();
  const int d = T.dim();
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        if (T(a, b, c) != 0) out.push_back(component(a, b, c, T(a, b, c)));
  return out;
}

Json three_form_components(const ThreeForm& f) {
  Json out = Json::array();
  const int d = f.dim();
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = b + 1; c <= d; ++c)
        if (f(a, b, c) != 0) out.push_back(component(a, b, c, f(a, b, c)));
  return out;
}

Json connection_components(const Connection& G) {
  Json out = Json::array();
  const int d = G.dim();
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        if (G(a, b, c) != 0) out.push_back(component(a, b, c, G(a, b, c)));
  return out;
}

Json rank4_components(const Rank4Table& R) {
  Json out = Json::array();
  const int n = R.dim();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          if (R(a, b, c, d) != 0) {
            Json o;
            o["a"] = a;
            o["b"] = b;
            o["c"] = c;
            o["d"] = d;
            o["value"] = rat_str(R(a, b, c, d));
            out.push_back(std::move(o));
          }
  return out;
}

Json matrix_components(const SquareMatrix& M) {
  Json out = Json::array();
  const int d = M.dim();
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b)
      if (M(a, b) != 0) {
        Json o;
        o["a"] = a;
        o["b"] = b;
        o["value"] = rat_str(M(a, b));
        out.push_back(std::move(o));
      }
  return out;
}

Json tpoly_json(const TPoly& p) {
  Json o;
  o["c0"] = rat_str(p.c0);
  o["c1"] = rat_str(p.c1);
  o["c2"] = rat_str(p.c2);
  return o;
}

Json tpoly3_components(const TPolyTensor3& P) {
  Json out = Json::array();
  const int d = P.dim();
  for (int a = 1; a <= d; ++a)
    for (int b = a + 1; b <= d; ++b)
      for (int c = 1; c <= d; ++c)
        if (!P(a, b, c).is_zero()) {
          Json o;
          o["a"] = a;
          o["b"] = b;
          o["c"] = c;
          o["poly"] = tpoly_json(P(a, b, c));
          out.push_back(std::move(o));
        }
  return out;
}

Json tpoly4_components(const TPolyTensor4& P) {
  Json out = Json::array();
  const int n = P.dim();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          if (!P(a, b, c, d).is_zero()) {
            Json o;
            o["a"] = a;
            o["b"] = b;
            o["c"] = c;
            o["d"] = d;
            o["poly"] = tpoly_json(P(a, b, c, d));
            out.push_back(std::move(o));
          }
  return out;
}

} // namespace lieherm
