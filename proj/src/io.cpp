#include "doubling/io.hpp"

#include <fstream>
#include <sstream>

#include "doubling/errors.hpp"

namespace doubling {
namespace {

Json int_to_json(const mpz_class& z) {
  if (!z.fits_slong_p())
    throw Error("integer " + z.get_str() + " does not fit the serialization range");
  return Json(static_cast<long long>(z.get_si()));
}

mpz_class int_from_json(const Json& j) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw ParseError("expected an integer, got " + j.dump());
  return mpz_class(j.get<long>());
}

GroupKind kind_from_name(const std::string& name) {
  if (name == "integers") return GroupKind::integers;
  if (name == "zlex") return GroupKind::zlex;
  if (name == "heisenberg") return GroupKind::heisenberg;
  if (name == "bs12") return GroupKind::bs12;
  if (name == "free2") return GroupKind::free2;
  throw ParseError("unknown group kind \"" + name + "\"");
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
}

}  // namespace

Json group_to_json(const GroupDescriptor& d) {
  Json j;
  j["kind"] = kind_name(d.kind);
  if (d.kind == GroupKind::zlex) j["dim"] = d.dim;
  if (d.kind == GroupKind::free2) j["magnus_cap"] = d.magnus_degree_cap;
  return j;
}

GroupDescriptor group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("group must be an object with a \"kind\" string");
  switch (kind_from_name(j["kind"].get<std::string>())) {
    case GroupKind::integers:
      return GroupDescriptor::integers();
    case GroupKind::zlex: {
      if (!j.contains("dim"))
        throw ParseError("zlex needs a \"dim\" field");
      return GroupDescriptor::zlex(static_cast<int>(int_from_json(j["dim"]).get_si()));
    }
    case GroupKind::heisenberg:
      return GroupDescriptor::heisenberg();
    case GroupKind::bs12:
      return GroupDescriptor::bs12();
    case GroupKind::free2: {
      int cap = kDefaultMagnusCap;
      if (j.contains("magnus_cap")) cap = static_cast<int>(int_from_json(j["magnus_cap"]).get_si());
      return GroupDescriptor::free2(cap);
    }
  }
  throw ParseError("unknown group kind");
}

Json element_to_json(const GroupElement& a) {
  switch (a.kind()) {
    case GroupKind::integers:
      return int_to_json(a.as_int().n);
    case GroupKind::zlex: {
      Json arr = Json::array();
      for (const auto& c : a.as_lex().v) arr.push_back(int_to_json(c));
      return arr;
    }
    case GroupKind::heisenberg: {
      const auto& h = a.as_heisenberg();
      return Json::array({int_to_json(h.a), int_to_json(h.b), int_to_json(h.c)});
    }
    case GroupKind::bs12: {
      const auto& b = a.as_bs12();
      Json j;
      j["m"] = int_to_json(b.q.m);
      j["e"] = int_to_json(b.q.e);
      j["n"] = int_to_json(b.n);
      return j;
    }
    case GroupKind::free2:
      return Json(a.as_word().letters);
  }
  throw Error("unhandled element kind");
}

GroupElement element_from_json(const Group& g, const Json& j) {
  switch (g.kind()) {
    case GroupKind::integers:
      return g.integer(int_from_json(j));
    case GroupKind::zlex: {
      if (!j.is_array())
        throw ParseError("zlex element must be an array, got " + j.dump());
      std::vector<mpz_class> v;
      v.reserve(j.size());
      for (const auto& c : j) v.push_back(int_from_json(c));
      return g.lex_vector(std::move(v));
    }
    case GroupKind::heisenberg: {
      if (!j.is_array() || j.size() != 3)
        throw ParseError("heisenberg element must be an array [a,b,c], got " + j.dump());
      return g.heisenberg_element(int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]));
    }
    case GroupKind::bs12: {
      if (!j.is_object() || !j.contains("m") || !j.contains("e") || !j.contains("n"))
        throw ParseError("bs12 element must be an object {\"m\":..,\"e\":..,\"n\":..}, got " +
                         j.dump());
      return g.bs12_element(int_from_json(j["m"]), int_from_json(j["e"]), int_from_json(j["n"]));
    }
    case GroupKind::free2: {
      if (!j.is_string())
        throw ParseError("free2 element must be a string of letters, got " + j.dump());
      return g.word(j.get<std::string>());
    }
  }
  throw ParseError("unhandled element kind");
}

GroupElement parse_element(const Group& g, const std::string& text) {
  if (g.kind() == GroupKind::free2) return g.word(text);
  return element_from_json(g, parse_json_text(text));
}

std::string format_element(const GroupElement& a) {
  if (a.kind() == GroupKind::free2) return a.as_word().letters;
  return element_to_json(a).dump();
}

Json set_to_json(const OrderedSet& s) {
  Json j;
  j["group"] = group_to_json(s.group.descriptor());
  Json arr = Json::array();
  for (const auto& a : s.elements) arr.push_back(element_to_json(a));
  j["elements"] = arr;
  return j;
}

OrderedSet set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("elements"))
    throw ParseError("set file must be an object with \"group\" and \"elements\"");
  Group g(group_from_json(j["group"]));
  const Json& arr = j["elements"];
  if (!arr.is_array() || arr.empty())
    throw ParseError("\"elements\" must be a nonempty array");
  std::vector<GroupElement> raw;
  raw.reserve(arr.size());
  for (const auto& e : arr) raw.push_back(element_from_json(g, e));
  return make_ordered_set(g, std::move(raw));
}

OrderedSet load_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return set_from_json(parse_json_text(buf.str()));
}

Json witness_to_json(const ProgressionWitness& w) {
  Json j;
  j["y"] = element_to_json(w.base);
  j["x"] = element_to_json(w.step);
  Json exps = Json::array();
  for (const auto& t : w.exponents) exps.push_back(int_to_json(t));
  j["exponents"] = exps;
  j["N"] = int_to_json(w.bound);
  j["normalized"] = w.normalized;
  return j;
}

Json record_to_json(const DerivationRecord& r) {
  Json arr = Json::array();
  for (const auto& step : r.steps) {
    Json j;
    j["lhs"] = step.lhs_label;
    j["rhs"] = step.rhs_label;
    j["lhs_value"] = element_to_json(step.lhs_value);
    j["rhs_value"] = element_to_json(step.rhs_value);
    j["justification"] = justification_name(step.tag);
    j["holds"] = step.holds;
    arr.push_back(j);
  }
  return arr;
}

Json doubling_report_to_json(const DoublingReport& r) {
  Json j;
  j["k"] = r.k;
  j["doubling"] = r.doubling;
  j["slack"] = r.slack;
  j["class"] = doubling_class_name(r.doubling_class);
  return j;
}

Json report_to_json(const CorpusReport& r) {
  Json j;
  j["group"] = group_to_json(r.group);
  j["radius"] = r.radius;
  j["k"] = Json{{"lo", r.k_lo}, {"hi", r.k_hi}};
  j["ball_size"] = r.ball_count;
  j["subsets_checked"] = r.subsets_checked;
  j["skipped_undecided"] = r.skipped_undecided;
  j["recovered"] = r.recovered;
  Json counts;
  for (std::size_t i = 0; i < r.class_counts.size(); ++i)
    counts[doubling_class_name(static_cast<DoublingClass>(i))] = r.class_counts[i];
  j["class_counts"] = counts;
  Json viols = Json::array();
  for (const auto& v : r.violations) {
    Json jv;
    jv["check"] = v.check;
    jv["detail"] = v.detail;
    Json elems = Json::array();
    for (const auto& e : v.elements) elems.push_back(element_to_json(e));
    jv["elements"] = elems;
    viols.push_back(jv);
  }
  j["violations"] = viols;
  Json sharps = Json::array();
  for (const auto& set : r.sharp_witnesses) {
    Json elems = Json::array();
    for (const auto& e : set) elems.push_back(element_to_json(e));
    sharps.push_back(elems);
  }
  j["sharp_witnesses"] = sharps;
  return j;
}

std::string report_to_csv(const CorpusReport& r) {
  std::ostringstream out;
  out << "group,radius,k_lo,k_hi,ball_size,subsets_checked,skipped_undecided,recovered,"
         "minimal_gp,at_least_2k,within_freiman_bound,within_abelian_bound,above,"
         "violations,sharp_witnesses\n";
  out << kind_name(r.group.kind) << ',' << r.radius << ',' << r.k_lo << ',' << r.k_hi << ','
      << r.ball_count << ',' << r.subsets_checked << ',' << r.skipped_undecided << ','
      << r.recovered;
  for (const auto& c : r.class_counts) out << ',' << c;
  out << ',' << r.violations.size() << ',' << r.sharp_witnesses.size() << '\n';
  return out.str();
}

}  // namespace doubling
