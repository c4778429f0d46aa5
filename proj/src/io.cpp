#include "vcopy/io.hpp"

#include <fstream>
#include <set>

#include "vcopy/errors.hpp"

namespace vcopy {

namespace {

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string as_string(const Json& v, const char* what) {
  if (!v.is_string()) throw MalformedInput(std::string(what) + " must be a string");
  return v.get<std::string>();
}

Rational as_rational(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw MalformedInput("coefficient must be a \"p/q\" string or an integer");
}

std::vector<std::string> string_list(const Json& v, const char* what) {
  if (!v.is_array()) throw MalformedInput(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(as_string(x, what));
  return out;
}

}  // namespace

Json algebra_to_json(const LieAlgebra& algebra) {
  Json doc;
  doc["names"] = algebra.names();
  Json brackets = Json::array();
  for (const auto& [key, comb] : algebra.brackets()) {
    Json terms = Json::array();
    for (const auto& [k, c] : comb) terms.push_back({{"k", algebra.name(k)}, {"c", to_string(c)}});
    brackets.push_back({{"i", algebra.name(key.first)}, {"j", algebra.name(key.second)}, {"terms", terms}});
  }
  doc["brackets"] = brackets;
  Json levi = Json::array(), radical = Json::array();
  for (GenIndex i : algebra.levi()) levi.push_back(algebra.name(i));
  for (GenIndex i : algebra.radical()) radical.push_back(algebra.name(i));
  doc["levi"] = levi;
  doc["radical"] = radical;
  doc["latex"] = algebra.latex_names();
  return doc;
}

AlgebraPtr algebra_from_json(const Json& doc) {
  if (!doc.is_object()) throw MalformedInput("algebra document must be an object");
  std::vector<std::string> names = string_list(field(doc, "names"), "names");
  std::map<std::string, GenIndex> idx;
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!idx.emplace(names[i], static_cast<GenIndex>(i)).second)
      throw MalformedInput("duplicate generator name '" + names[i] + "'");
  auto lookup = [&](const Json& v) {
    std::string n = as_string(v, "generator reference");
    auto it = idx.find(n);
    if (it == idx.end()) throw MalformedInput("unknown generator '" + n + "'");
    return it->second;
  };
  std::vector<BracketSpec> brackets;
  if (doc.contains("brackets")) {
    const Json& list = doc.at("brackets");
    if (!list.is_array()) throw MalformedInput("brackets must be an array");
    for (const auto& b : list) {
      BracketSpec spec{lookup(field(b, "i")), lookup(field(b, "j")), {}};
      const Json& terms = field(b, "terms");
      if (!terms.is_array()) throw MalformedInput("terms must be an array");
      for (const auto& t : terms) {
        GenIndex k = lookup(field(t, "k"));
        Rational c = as_rational(field(t, "c"));
        if (c == 0) throw MalformedInput("zero structure constant listed explicitly");
        if (spec.terms.count(k)) throw MalformedInput("repeated term in bracket");
        spec.terms.emplace(k, c);
      }
      brackets.push_back(std::move(spec));
    }
  }
  std::vector<GenIndex> levi;
  std::set<GenIndex> levi_set;
  if (doc.contains("levi"))
    for (const auto& v : doc.at("levi")) {
      GenIndex g = lookup(v);
      if (!levi_set.insert(g).second) throw MalformedInput("duplicate Levi generator");
      levi.push_back(g);
    }
  if (doc.contains("radical")) {
    std::set<GenIndex> radical;
    for (const auto& v : doc.at("radical")) {
      GenIndex g = lookup(v);
      if (levi_set.count(g)) throw MalformedInput("generator declared both Levi and radical");
      radical.insert(g);
    }
    if (radical.size() + levi_set.size() != names.size())
      throw MalformedInput("Levi and radical sets do not cover all generators");
  }
  std::vector<std::string> latex;
  if (doc.contains("latex")) latex = string_list(doc.at("latex"), "latex");
  return std::make_shared<const LieAlgebra>(std::move(names), brackets, levi, std::move(latex));
}

Json pbw_to_json(const PbwElement& e) {
  Json out = Json::array();
  for (const auto& [w, c] : e.terms()) {
    Json word = Json::array();
    for (char16_t g : w) word.push_back(e.lie().name(static_cast<GenIndex>(g)));
    out.push_back({{"word", word}, {"coeff", to_string(c)}});
  }
  return out;
}

PbwElement pbw_from_json(const AlgebraPtr& algebra, const Json& doc) {
  if (doc.is_string()) return parse_pbw(algebra, doc.get<std::string>());
  if (!doc.is_array()) throw MalformedInput("PBW expression must be a list of terms or a string");
  PbwElement out(algebra);
  for (const auto& t : doc) {
    Word w;
    for (const auto& g : field(t, "word")) w.push_back(static_cast<char16_t>(algebra->index(as_string(g, "word letter"))));
    out += pbw_normalize(algebra, w, as_rational(field(t, "coeff")));
  }
  return out;
}

Json poly_to_json(const CommPoly& p, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json mono = Json::object();
    for (const auto& [v, e] : it->first.factors())
      mono[v < names.size() ? names[v] : std::to_string(v)] = e;
    out.push_back({{"monomial", mono}, {"coeff", to_string(it->second)}});
  }
  return out;
}

Json spec_to_json(const LieAlgebra& algebra, const VirtualCopySpec& spec) {
  Json P = Json::object();
  for (const auto& [i, p] : spec.P) P[algebra.name(i)] = pbw_to_json(p);
  return {{"f", pbw_to_json(spec.f)}, {"P", P}, {"k", spec.k}};
}

VirtualCopySpec spec_from_json(const AlgebraPtr& algebra, const Json& doc) {
  try {
    if (!doc.is_object()) throw MalformedInput("spec document must be an object");
    PbwElement f = pbw_from_json(algebra, field(doc, "f"));
    std::map<GenIndex, PbwElement> P;
    if (doc.contains("P")) {
      const Json& p = doc.at("P");
      if (!p.is_object()) throw MalformedInput("P must be an object keyed by generator name");
      for (const auto& [name, expr] : p.items()) P.emplace(algebra->index(name), pbw_from_json(algebra, expr));
    }
    VirtualCopySpec spec = make_spec(algebra, std::move(f), std::move(P));
    if (doc.contains("k") && doc.at("k").get<unsigned>() != spec.k)
      throw MalformedSpec("declared k does not match the degree of f");
    return spec;
  } catch (const MalformedSpec&) {
    throw;
  } catch (const Error& e) {
    throw MalformedSpec(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw MalformedSpec(e.what());
  }
}

std::map<std::string, int> weights_from_json(const Json& doc) {
  if (!doc.is_object()) throw MalformedInput("weights must be an object {name: integer}");
  std::map<std::string, int> out;
  for (const auto& [name, v] : doc.items()) {
    if (!v.is_number_integer()) throw MalformedInput("weight of '" + name + "' is not an integer");
    out.emplace(name, v.get<int>());
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace vcopy
