#include "bolano/render.hpp"

#include <optional>
#include <set>

#include "bolano/errors.hpp"

namespace bolano {

namespace {

using json = nlohmann::json;

// One printed summand: coeff * monomial * (operator or expectation value).
struct PrintedTerm {
  Rational coeff;
  const ScalarMonomial* scalar = nullptr;
  const NormalSignature* ops = nullptr;
  bool bracket = false;
};

void collect(std::vector<PrintedTerm>& out, const Scalar& s,
             const NormalSignature* ops, bool bracket) {
  for (const auto& [key, coeff] : s.terms()) {
    out.push_back({coeff, &key, ops && !ops->empty() ? ops : nullptr, bracket});
  }
}

std::vector<PrintedTerm> printed_terms(const NormalPoly& n, bool bracket) {
  std::vector<PrintedTerm> out;
  for (const auto& [sig, coeff] : n.entries()) collect(out, coeff, &sig, bracket);
  return out;
}

std::vector<PrintedTerm> printed_terms(const Expectation& e) {
  std::vector<PrintedTerm> out;
  collect(out, e.constant, nullptr, false);
  for (const auto& [ev, coeff] : e.terms) collect(out, coeff, &ev.signature, true);
  return out;
}

// ---------------------------------------------------------------- plain

std::string plain_ops(const NormalSignature& sig) {
  std::vector<std::string> parts;
  auto power = [](std::string name, unsigned e) {
    return e == 1 ? name : name + "^" + std::to_string(e);
  };
  auto label = [](const ModeLabel& m) { return m.empty() ? "" : "_" + m.label; };
  for (const auto& e : sig.entries()) {
    if (e.p) parts.push_back(power("bd" + label(e.mode), e.p));
  }
  for (const auto& e : sig.entries()) {
    if (e.q) parts.push_back(power("b" + label(e.mode), e.q));
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "*") + p;
  return out;
}

std::string plain_exponent(const Rational& e) {
  if (is_integer(e) && e > 0) return "^" + to_string(e);
  return "^(" + to_string(e) + ")";
}

std::string plain_body(const PrintedTerm& t) {
  std::vector<std::string> factors;
  if (t.scalar->imaginary) factors.emplace_back("I");
  for (const auto& [atom, e] : t.scalar->powers) {
    factors.push_back(e == 1 ? atom.name : atom.name + plain_exponent(e));
  }
  for (const auto& [atom, mult] : t.scalar->phases) {
    std::string arg;
    if (mult == 1) {
      arg = "I*";
    } else if (mult == -1) {
      arg = "-I*";
    } else {
      arg = to_string(mult) + "*I*";
    }
    factors.push_back("exp(" + arg + atom.name + ")");
  }
  if (t.ops) {
    factors.push_back(t.bracket ? "<" + plain_ops(*t.ops) + ">" : plain_ops(*t.ops));
  }
  const Rational magnitude = abs(t.coeff);
  std::string out = factors.empty() || magnitude != 1 ? to_string(magnitude) : "";
  for (const auto& f : factors) out += (out.empty() ? "" : "*") + f;
  return out;
}

std::string join_plain(const std::vector<PrintedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    const bool negative = t.coeff < 0;
    if (out.empty()) {
      out = (negative ? "-" : "") + plain_body(t);
    } else {
      out += (negative ? " - " : " + ") + plain_body(t);
    }
  }
  return out;
}

// ---------------------------------------------------------------- latex

const std::set<std::string>& greek_names() {
  static const std::set<std::string> names{
      "alpha", "beta",  "gamma",   "delta", "epsilon", "zeta",   "eta",   "theta",
      "iota",  "kappa", "lambda",  "mu",    "nu",      "xi",     "pi",    "rho",
      "sigma", "tau",   "upsilon", "phi",   "chi",     "psi",    "omega", "Gamma",
      "Delta", "Theta", "Lambda",  "Xi",    "Pi",      "Sigma",  "Upsilon", "Phi",
      "Psi",   "Omega", "hbar"};
  return names;
}

std::string latex_word(const std::string& w) {
  return greek_names().count(w) ? "\\" + w : w;
}

std::string latex_symbol(const std::string& name) {
  const auto us = name.find('_');
  if (us == std::string::npos) return latex_word(name);
  return latex_word(name.substr(0, us)) + "_{" + latex_word(name.substr(us + 1)) + "}";
}

std::string latex_rational(const Rational& r) {
  if (is_integer(r)) return to_string(r);
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (num < 0) return "- \\frac{" + BigInt(-num).str() + "}{" + den.str() + "}";
  return "\\frac{" + num.str() + "}{" + den.str() + "}";
}

std::string latex_ops(const NormalSignature& sig) {
  std::vector<std::string> parts;
  for (const auto& e : sig.entries()) {
    if (!e.p) continue;
    std::string s = "{b^\\dagger_{" + e.mode.label + "}}";
    if (e.p != 1) s += "^{" + std::to_string(e.p) + "}";
    parts.push_back(s);
  }
  for (const auto& e : sig.entries()) {
    if (!e.q) continue;
    std::string s = "b_{" + e.mode.label + "}";
    if (e.q != 1) s += "^{" + std::to_string(e.q) + "}";
    parts.push_back(s);
  }
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

std::string latex_expval(const std::string& inner) {
  return "{\\left\\langle " + inner + " \\right\\rangle}";
}

std::string latex_body(const PrintedTerm& t) {
  std::vector<std::string> factors;
  if (t.scalar->imaginary) factors.emplace_back("i");
  for (const auto& [atom, e] : t.scalar->powers) {
    std::string s = latex_symbol(atom.name);
    if (e != 1) s += "^{" + latex_rational(e) + "}";
    factors.push_back(s);
  }
  if (t.ops) {
    factors.push_back(t.bracket ? latex_expval(latex_ops(*t.ops)) : latex_ops(*t.ops));
  }
  for (const auto& [atom, mult] : t.scalar->phases) {
    std::string arg;
    if (mult == 1) {
      arg = "i ";
    } else if (mult == -1) {
      arg = "- i ";
    } else {
      arg = latex_rational(mult) + " i ";
    }
    factors.push_back("e^{" + arg + latex_symbol(atom.name) + "}");
  }
  const Rational magnitude = abs(t.coeff);
  if (factors.empty()) return latex_rational(magnitude);
  const BigInt num = boost::multiprecision::numerator(magnitude);
  const BigInt den = boost::multiprecision::denominator(magnitude);
  std::string body = num == 1 ? "" : num.str();
  for (const auto& f : factors) body += (body.empty() ? "" : " ") + f;
  if (den == 1) return body;
  return "\\frac{" + body + "}{" + den.str() + "}";
}

std::string join_latex(const std::vector<PrintedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    const bool negative = t.coeff < 0;
    const bool bare_number = t.scalar->is_one() && !t.ops;
    if (out.empty()) {
      out = negative ? (bare_number ? "-" : "- ") + latex_body(t) : latex_body(t);
    } else {
      out += (negative ? " - " : " + ") + latex_body(t);
    }
  }
  return out;
}

std::string latex_observable(const NormalPoly& observable) {
  if (observable.size() == 1 && observable.entries().begin()->second == Scalar(1) &&
      !observable.entries().begin()->first.empty()) {
    return latex_expval(latex_ops(observable.entries().begin()->first));
  }
  return latex_expval(join_latex(printed_terms(observable, false)));
}

std::string plain_observable(const NormalPoly& observable) {
  if (observable.size() == 1 && observable.entries().begin()->second == Scalar(1) &&
      !observable.entries().begin()->first.empty()) {
    return "<" + plain_ops(observable.entries().begin()->first) + ">";
  }
  return "<" + join_plain(printed_terms(observable, false)) + ">";
}

// ---------------------------------------------------------------- record

json scalar_record(const Scalar& s) {
  json terms = json::array();
  for (const auto& [key, coeff] : s.terms()) {
    json symbols = json::array();
    for (const auto& [atom, e] : key.powers) {
      symbols.push_back({{"name", atom.name}, {"exponent", to_string(e)},
                         {"real", atom.assumed_real}});
    }
    json phases = json::array();
    for (const auto& [atom, mult] : key.phases) {
      phases.push_back({{"name", atom.name}, {"multiplier", to_string(mult)}});
    }
    terms.push_back({{"coeff", to_string(coeff)},
                     {"i_power", key.i_power()},
                     {"symbols", std::move(symbols)},
                     {"phases", std::move(phases)}});
  }
  return terms;
}

json signature_record(const NormalSignature& sig) {
  json out = json::array();
  for (const auto& e : sig.entries()) {
    out.push_back({{"mode", e.mode.label}, {"p", e.p}, {"q", e.q}});
  }
  return out;
}

json poly_terms_record(const NormalPoly& n) {
  json terms = json::array();
  for (const auto& [sig, coeff] : n.entries()) {
    terms.push_back({{"coeff", scalar_record(coeff)}, {"signature", signature_record(sig)}});
  }
  return terms;
}

void require_keys(const json& obj, const std::set<std::string>& keys, const char* what) {
  if (!obj.is_object()) throw RecordError(std::string(what) + " must be an object");
  for (const auto& [k, v] : obj.items()) {
    if (!keys.count(k)) {
      throw RecordError("unknown field '" + k + "' in " + what);
    }
  }
  for (const auto& k : keys) {
    if (!obj.contains(k)) throw RecordError("missing field '" + k + "' in " + what);
  }
}

const json& require_array(const json& v, const char* what) {
  if (!v.is_array()) throw RecordError(std::string(what) + " must be an array");
  return v;
}

Rational rational_field(const json& v, const char* what) {
  if (!v.is_string()) throw RecordError(std::string(what) + " must be a string");
  try {
    return rational_from_string(v.get<std::string>());
  } catch (const ParseError&) {
    throw RecordError(std::string("malformed rational in ") + what);
  }
}

std::string string_field(const json& v, const char* what) {
  if (!v.is_string()) throw RecordError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

unsigned unsigned_field(const json& v, const char* what) {
  if (!v.is_number_unsigned()) {
    throw RecordError(std::string(what) + " must be a nonnegative integer");
  }
  return v.get<unsigned>();
}

Scalar scalar_from_record(const json& v) {
  Scalar out;
  for (const auto& t : require_array(v, "coeff")) {
    require_keys(t, {"coeff", "i_power", "symbols", "phases"}, "scalar term");
    if (!t["i_power"].is_number_integer()) throw RecordError("i_power must be an integer");
    Scalar term(rational_field(t["coeff"], "coeff"));
    const int ip = t["i_power"].get<int>();
    if (ip < 0 || ip > 3) throw RecordError("i_power must be in 0..3");
    term *= Scalar::imaginary_unit().pow(ip);
    for (const auto& s : require_array(t["symbols"], "symbols")) {
      require_keys(s, {"name", "exponent", "real"}, "symbol");
      if (!s["real"].is_boolean()) throw RecordError("real must be a boolean");
      const std::string name = string_field(s["name"], "name");
      if (name.empty()) throw RecordError("empty symbol name");
      term *= Scalar::symbol(SymbolAtom{name, s["real"].get<bool>()},
                             rational_field(s["exponent"], "exponent"));
    }
    for (const auto& p : require_array(t["phases"], "phases")) {
      require_keys(p, {"name", "multiplier"}, "phase");
      const std::string name = string_field(p["name"], "name");
      if (name.empty()) throw RecordError("empty symbol name");
      term *= Scalar::phase(SymbolAtom{name}, rational_field(p["multiplier"], "multiplier"));
    }
    out += term;
  }
  return out;
}

NormalSignature signature_from_record(const json& v) {
  std::vector<ModePowers> entries;
  for (const auto& e : require_array(v, "signature")) {
    require_keys(e, {"mode", "p", "q"}, "signature entry");
    entries.push_back({ModeLabel(string_field(e["mode"], "mode")),
                       unsigned_field(e["p"], "p"), unsigned_field(e["q"], "q")});
  }
  try {
    return NormalSignature(std::move(entries));
  } catch (const InvariantViolation& e) {
    throw RecordError(e.what());
  }
}

NormalPoly poly_from_record(const json& v) {
  NormalPoly out;
  for (const auto& t : require_array(v, "terms")) {
    require_keys(t, {"coeff", "signature"}, "term");
    out.add(signature_from_record(t["signature"]), scalar_from_record(t["coeff"]));
  }
  return out;
}

}  // namespace

std::string render(const NormalPoly& n, Format format) {
  switch (format) {
    case Format::Plain: return join_plain(printed_terms(n, false));
    case Format::Latex: return join_latex(printed_terms(n, false));
    case Format::Record: return to_record(n).dump();
  }
  return {};
}

std::string render(const EvolutionEquation& eq, Format format) {
  switch (format) {
    case Format::Plain:
      return "d/dt " + plain_observable(eq.observable) + " = " +
             join_plain(printed_terms(eq.rhs));
    case Format::Latex:
      return "\\frac{d}{d t} " + latex_observable(eq.observable) + " = " +
             join_latex(printed_terms(eq.rhs));
    case Format::Record: return to_record(eq).dump();
  }
  return {};
}

std::string render(const Scalar& s, Format format) {
  return render(NormalPoly(s), format);
}

nlohmann::json to_record(const NormalPoly& n) {
  return {{"schema_version", kRecordSchemaVersion},
          {"kind", "normal_poly"},
          {"terms", poly_terms_record(n)}};
}

nlohmann::json to_record(const EvolutionEquation& eq) {
  json rhs = json::array();
  for (const auto& [ev, coeff] : eq.rhs.terms) {
    rhs.push_back({{"coeff", scalar_record(coeff)}, {"signature", signature_record(ev.signature)}});
  }
  return {{"schema_version", kRecordSchemaVersion},
          {"kind", "evolution_equation"},
          {"observable", poly_terms_record(eq.observable)},
          {"rhs", std::move(rhs)},
          {"constant", scalar_record(eq.rhs.constant)}};
}

RecordValue read_record(const nlohmann::json& doc) {
  if (!doc.is_object()) throw RecordError("record must be a JSON object");
  if (!doc.contains("schema_version")) throw RecordError("missing field 'schema_version'");
  if (!doc["schema_version"].is_number_integer() ||
      doc["schema_version"].get<int>() != kRecordSchemaVersion) {
    throw RecordError("unsupported schema_version");
  }
  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw RecordError("missing field 'kind'");
  }
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "normal_poly") {
    require_keys(doc, {"schema_version", "kind", "terms"}, "record");
    return poly_from_record(doc["terms"]);
  }
  if (kind == "evolution_equation") {
    require_keys(doc, {"schema_version", "kind", "observable", "rhs", "constant"}, "record");
    EvolutionEquation eq;
    eq.observable = poly_from_record(doc["observable"]);
    NormalPoly rhs = poly_from_record(doc["rhs"]);
    if (!rhs.coeff(NormalSignature{}).is_zero()) {
      throw RecordError("rhs terms must have nonempty signatures");
    }
    eq.rhs = wrap_expectation(rhs);
    eq.rhs.constant = scalar_from_record(doc["constant"]);
    return eq;
  }
  throw RecordError("unknown record kind '" + kind + "'");
}

RecordValue parse_record(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw RecordError(std::string("invalid JSON: ") + e.what());
  }
  return read_record(doc);
}

}  // namespace bolano
