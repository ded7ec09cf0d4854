#include "kpg/series_json.hpp"

#include <json.hpp>

#include "kpg/error.hpp"

namespace kpg {

namespace {

using nlohmann::json;

BigInt read_integer(const json& v, const char* field) {
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    BigInt out;
    if (out.set_str(v.get<std::string>(), 10) != 0) {
      throw ParseError(std::string("field '") + field + "' is not a decimal integer", 0);
    }
    return out;
  }
  throw ParseError(std::string("field '") + field + "' must be an integer or a string", 0);
}

Variable read_variable(const json& v) {
  if (v == "p") return Variable::p;
  if (v == "q") return Variable::q;
  throw ParseError("field 'variable' must be \"p\" or \"q\"", 0);
}

void read_terms(const json& terms, TruncSeries& out) {
  if (!terms.is_array()) throw ParseError("series terms must be an array", 0);
  for (const json& t : terms) {
    if (!t.is_object() || !t.contains("exponents") || !t.contains("numerator")) {
      throw ParseError("each term needs 'exponents' and 'numerator'", 0);
    }
    const json& exps = t.at("exponents");
    if (!exps.is_array() || exps.size() > static_cast<std::size_t>(kMaxVariable)) {
      throw ParseError("'exponents' must be an array of at most " + std::to_string(kMaxVariable) +
                           " entries",
                       0);
    }
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (!exps[i].is_number_integer() || exps[i].get<long long>() < 0 ||
          exps[i].get<long long>() > 255) {
        throw ParseError("exponents must be integers in 0..255", 0);
      }
      const int e = exps[i].get<int>();
      if (e > 0) m = m * Monomial::variable(static_cast<int>(i) + 1, e);
    }
    const BigInt num = read_integer(t.at("numerator"), "numerator");
    const BigInt den = t.contains("denominator") ? read_integer(t.at("denominator"), "denominator")
                                                 : BigInt(1);
    if (den == 0) throw ParseError("zero denominator", 0);
    if (m.weight() > out.order()) {
      throw OutOfTruncationError("term of weight " + std::to_string(m.weight()) +
                                 " exceeds order " + std::to_string(out.order()));
    }
    out.add_term(m, make_rational(num, den));
  }
}

}  // namespace

std::string to_json(const TruncSeries& a, int indent) {
  json terms = json::array();
  for (const auto& [m, c] : a.terms()) {
    terms.push_back({{"exponents", m.exponents()},
                     {"numerator", c.get_num().get_str()},
                     {"denominator", c.get_den().get_str()}});
  }
  json doc = {{"variable", std::string(1, static_cast<char>(a.variable()))},
              {"order", a.order()},
              {"terms", std::move(terms)}};
  return doc.dump(indent);
}

TruncSeries series_from_json(std::string_view text, int default_order, Variable default_var) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (doc.is_array()) {
    TruncSeries out(default_order, default_var);
    read_terms(doc, out);
    return out;
  }
  if (!doc.is_object() || !doc.contains("terms")) {
    throw ParseError("expected a terms array or an object with 'terms'", 0);
  }
  int order = default_order;
  if (doc.contains("order")) {
    if (!doc["order"].is_number_integer()) throw ParseError("field 'order' must be an integer", 0);
    order = doc["order"].get<int>();
    if (order < 0 || order > kMaxOrder) {
      throw SizeError("order " + std::to_string(order) + " outside 0.." + std::to_string(kMaxOrder));
    }
  }
  const Variable var = doc.contains("variable") ? read_variable(doc["variable"]) : default_var;
  TruncSeries out(order, var);
  read_terms(doc["terms"], out);
  return out;
}

}  // namespace kpg
