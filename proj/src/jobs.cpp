#include "qsh/jobs.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qsh/cartan.hpp"
#include "qsh/errors.hpp"
#include "qsh/parse.hpp"
#include "qsh/serre.hpp"
#include "qsh/yangian.hpp"

namespace qsh::jobs {

namespace {

const std::vector<std::string> kSetupKeys{"quiver", "fgl", "specialization", "substitute"};

std::vector<std::string> with_setup(std::vector<std::string> keys) {
  keys.insert(keys.end(), kSetupKeys.begin(), kSetupKeys.end());
  return keys;
}

std::string key_str(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InvalidInput(what + " must be a string or an integer");
}

bool has(const json& job, const char* key) { return job.contains(key) && !job.at(key).is_null(); }

int get_int(const json& job, const char* key, int fallback) {
  if (!has(job, key)) return fallback;
  const json& v = job.at(key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

bool get_bool(const json& job, const char* key, bool fallback) {
  if (!has(job, key)) return fallback;
  const json& v = job.at(key);
  if (!v.is_boolean()) throw InvalidInput(std::string("'") + key + "' must be a boolean");
  return v.get<bool>();
}

std::string get_str(const json& job, const char* key, const std::string& fallback) {
  if (!has(job, key)) return fallback;
  return key_str(job.at(key), std::string("'") + key + "'");
}

std::string require_str(const json& job, const char* key) {
  if (!has(job, key)) throw InvalidInput(std::string("missing '") + key + "'");
  return key_str(job.at(key), std::string("'") + key + "'");
}

std::string choice(const json& job, const char* key, const std::vector<std::string>& allowed) {
  const std::string v = get_str(job, key, allowed.front());
  if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
    throw InvalidInput(std::string("unsupported value '") + v + "' for '" + key + "'");
  return v;
}

RatFunc expr(const json& j, const std::string& what) {
  if (j.is_number_integer()) return RatFunc(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) throw InvalidInput(what + " must be an expression string");
  return parse_expression(j.get<std::string>());
}

void check_keys(const json& job, const std::string& command, const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : job.items()) {
    if (key == "command" || key == "id") continue;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw InvalidInput("unknown key '" + key + "' for command '" + command + "'");
  }
}

std::map<VarId, RatFunc> parse_substitutions(const json& job) {
  std::map<VarId, RatFunc> out;
  if (!has(job, "substitute")) return out;
  auto add = [&](const std::string& name, const RatFunc& value) {
    const VarId v = VarId::parse(name);
    if (v.is_lambda()) throw InvalidInput("only parameters can be substituted, not " + name);
    out.insert_or_assign(v, value);
  };
  const json& s = job.at("substitute");
  if (s.is_object()) {
    for (const auto& [k, v] : s.items()) add(k, expr(v, "substitution for " + k));
  } else if (s.is_array()) {
    for (const auto& item : s) {
      if (!item.is_string()) throw InvalidInput("substitutions are \"name=expr\" strings");
      const std::string text = item.get<std::string>();
      const auto eq = text.find('=');
      if (eq == std::string::npos) throw InvalidInput("substitution '" + text + "' lacks '='");
      add(text.substr(0, eq), parse_expression(text.substr(eq + 1)));
    }
  } else {
    throw InvalidInput("'substitute' must be an object or an array of \"name=expr\" strings");
  }
  return out;
}

RatFunc substituted(const RatFunc& f, const std::map<VarId, RatFunc>& subs) { return subs.empty() ? f : f.substitute(subs); }

ShuffleSetup parse_setup(const json& job, const std::map<VarId, RatFunc>& subs) {
  const Quiver q = parse_quiver(has(job, "quiver") ? job.at("quiver") : json("A1"));
  const FormalGroupLaw F = parse_fgl(has(job, "fgl") ? job.at("fgl") : json("additive"));
  const std::string mode = choice(job, "specialization", {"symbolic", "case2", "case2-full"});
  ShuffleSetup s = mode == "symbolic" ? ShuffleSetup::symbolic(F, q) : ShuffleSetup::case2(F, q, mode == "case2-full");
  s.t1 = substituted(s.t1, subs);
  s.t2 = substituted(s.t2, subs);
  return s;
}

json verdict_json(const RelationCheck& r) {
  json out{{"verified", r.verified}};
  if (!r.verified) out["witness"] = r.witness.str();
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

int verdict_code(const json& out) { return out.at("verified").get<bool>() ? Ok : VerificationFailed; }

Result product_job(const json& job, const std::string& command) {
  const auto subs = parse_substitutions(job);
  const ShuffleSetup s = parse_setup(job, subs);
  if (!has(job, "a") || !has(job, "b")) throw InvalidInput("products need 'a' and 'b'");
  const ShuffleElement a = parse_element(job.at("a"), s.quiver), b = parse_element(job.at("b"), s.quiver);
  ShuffleElement r = command == "product"           ? shuffle_product(s, a, b)
                     : command == "twisted-product" ? twisted_product(s, a, b)
                                                    : coha_formal_product(s, a, b);
  r.f = substituted(r.f, subs);
  return {element_json(r), Ok};
}

Result pushforward_job(const json& job) {
  const auto subs = parse_substitutions(job);
  const FormalGroupLaw F = parse_fgl(has(job, "fgl") ? job.at("fgl") : json("additive"));
  const std::string kind = choice(job, "kind", {"grass", "flag", "proj"});
  const std::string vertex = get_str(job, "vertex", "1");
  if (!has(job, "f")) throw InvalidInput("pushforward needs 'f'");
  const RatFunc f = expr(job.at("f"), "'f'");
  RatFunc value;
  if (kind == "grass") {
    if (!has(job, "r") || !has(job, "n")) throw InvalidInput("grass pushforward needs 'r' and 'n'");
    value = grass_pushforward(F, f, get_int(job, "r", 0), get_int(job, "n", 0), vertex);
  } else if (kind == "flag") {
    if (!has(job, "blocks") || !job.at("blocks").is_array()) throw InvalidInput("flag pushforward needs 'blocks'");
    std::vector<int> blocks;
    for (const auto& b : job.at("blocks")) {
      if (!b.is_number_integer()) throw InvalidInput("block sizes must be integers");
      blocks.push_back(b.get<int>());
    }
    value = flag_pushforward(F, f, blocks, vertex);
  } else {
    if (!has(job, "n")) throw InvalidInput("proj pushforward needs 'n'");
    const VarId t = VarId::parse(get_str(job, "variable", "t"));
    if (t.is_lambda()) throw InvalidInput("the projective variable must be a parameter");
    value = proj_pushforward(F, f, t, get_int(job, "n", 0), vertex);
  }
  return {json{{"value", ratfunc_json(substituted(value, subs))}}, Ok};
}

Result phi_hat_job(const json& job) {
  const auto subs = parse_substitutions(job);
  const Quiver q = parse_quiver(has(job, "quiver") ? job.at("quiver") : json("A1"));
  const FormalGroupLaw F = parse_fgl(has(job, "fgl") ? job.at("fgl") : json("additive"));
  const std::string k = require_str(job, "k");
  const DimVector v = has(job, "v") ? parse_dim_json(job.at("v"), q) : DimVector();
  const std::string c = choice(job, "case", {"case2", "case1"});
  const int order = get_int(job, "order", 5);
  if (order < 1) throw InvalidInput("'order' must be positive");
  const CartanSeries s = phi_hat(F, q, k, v, c == "case1" ? WeightCase::Case1 : WeightCase::Case2, order);
  json coeffs = json::array();
  for (const auto& x : s.tail.coeffs()) coeffs.push_back(ratfunc_json(substituted(x, subs)));
  return {json{{"vertex", k}, {"case", c}, {"order", order}, {"coefficients", coeffs}}, Ok};
}

Result quadratic_job(const json& job) {
  const Quiver q = parse_quiver(has(job, "quiver") ? job.at("quiver") : json("A2"));
  const std::string k = require_str(job, "k"), l = require_str(job, "l");
  const bool full = choice(job, "hbar", {"half", "full"}) == "full";
  const std::string route = choice(job, "route", {"series", "coefficients", "both"});
  RelationCheck r{true, RatFunc(), ""};
  if (route != "coefficients") r = check_quadratic(q, k, l, full);
  if (r.verified && route != "series") r = check_quadratic_coefficients(q, k, l, get_int(job, "max_power", 2), full);
  json out = verdict_json(r);
  return {out, verdict_code(out)};
}

Result serre_job(const json& job) {
  const Quiver q = parse_quiver(has(job, "quiver") ? job.at("quiver") : json("A2"));
  const bool full = choice(job, "hbar", {"half", "full"}) == "full";
  json out = verdict_json(check_serre(q, require_str(job, "k"), require_str(job, "l"), full));
  return {out, verdict_code(out)};
}

Result serre_table_job(const json& job) {
  const int n_max = get_int(job, "n_max", 5);
  const int limit = get_int(job, "limit", kSerreDefaultLimit);
  if (n_max < 1) throw InvalidInput("'n_max' must be at least 1");
  if (n_max > limit)
    throw LimitExceeded("n_max = " + std::to_string(n_max) + " exceeds the limit " + std::to_string(limit));
  const RatFunc hbar = RatFunc::variable(hbar_var());
  const RatFunc b = has(job, "b") ? expr(job.at("b"), "'b'") : RatFunc::variable(b_var());
  json rows = json::array();
  bool all = true;
  for (int n = 1; n <= n_max; ++n) {
    const RatFunc direct = s_direct(n, b, hbar, limit);
    const RatFunc rec = s_recursive(n, b, hbar);
    const bool free = lambda_free(direct), agrees = direct == rec;
    const bool critical = s_direct(n, RatFunc(ratio(n - 1, 2)), hbar, limit).is_zero();
    const bool plus = residue_identity_difference(n, true, b, hbar, limit).is_zero();
    const bool minus = residue_identity_difference(n, false, b, hbar, limit).is_zero();
    all = all && free && agrees && critical && plus && minus;
    rows.push_back(json{{"n", n},
                        {"direct", direct.str()},
                        {"recursive", rec.str()},
                        {"lambda_free", free},
                        {"agrees", agrees},
                        {"vanishes_at_critical_b", critical},
                        {"residue_plus", plus},
                        {"residue_minus", minus}});
  }
  return {json{{"rows", rows}, {"verified", all}}, all ? Ok : VerificationFailed};
}

Result spherical_job(const json& job) {
  const auto subs = parse_substitutions(job);
  const ShuffleSetup s = parse_setup(job, subs);
  if (!has(job, "max_dim")) throw InvalidInput("spherical-table needs 'max_dim'");
  SphericalLimits limits;
  limits.max_words = static_cast<std::size_t>(get_int(job, "max_words", static_cast<int>(limits.max_words)));
  limits.max_shuffle_terms =
      static_cast<std::size_t>(get_int(job, "max_terms", static_cast<int>(limits.max_shuffle_terms)));
  const auto table = spherical_span(s, get_int(job, "max_deg", 0), parse_dim_json(job.at("max_dim"), s.quiver),
                                    get_bool(job, "twisted", false), limits);
  json entries = json::array();
  for (const auto& e : table) {
    json row{{"word", word_str(e.word)}};
    ShuffleElement v = e.value;
    v.f = substituted(v.f, subs);
    const json element = element_json(v);
    for (const auto& [key, value] : element.items()) row[key] = value;
    entries.push_back(row);
  }
  return {json{{"entries", entries}}, Ok};
}

Result fo_job(const json& job) {
  const int n_max = get_int(job, "n_max", 2);
  if (n_max < 1) throw InvalidInput("'n_max' must be at least 1");
  if (n_max > 3) throw LimitExceeded("fo-check supports n_max <= 3");
  const Quiver J = Quiver::preset("Jordan");
  std::vector<ShuffleElement> elems;
  if (has(job, "elements")) {
    if (!job.at("elements").is_array()) throw InvalidInput("'elements' must be an array");
    for (const auto& e : job.at("elements")) elems.push_back(parse_element(e, J));
  } else {
    for (const char* f : {"1@e", "L1_1@e", "L1_1^-1@e", "L1_1^2+3@e", "1@2e", "L1_1+L1_2@2e"})
      elems.push_back(parse_element(json(f), J));
  }
  int pairs = 0;
  for (const auto& a : elems)
    for (const auto& b : elems) {
      if ((a.dim + b.dim).total() > n_max) continue;
      ++pairs;
      const auto lhs = fo_embed(fo_product(a, b));
      const auto rhs = ktheory_product(J, fo_embed(a), fo_embed(b), KConvention::Jordan);
      if (lhs != rhs) {
        json out{{"verified", false},
                 {"pairs_checked", pairs},
                 {"witness", (lhs.f - rhs.f).str()},
                 {"note", "homomorphism fails on " + element_json(a).dump() + " * " + element_json(b).dump()}};
        return {out, VerificationFailed};
      }
    }
  return {json{{"verified", true}, {"pairs_checked", pairs}}, Ok};
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const InvalidInput*>(&e)) return "InvalidInput";
  if (dynamic_cast<const LimitExceeded*>(&e)) return "LimitExceeded";
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const BadPermutation*>(&e)) return "BadPermutation";
  if (dynamic_cast<const NotTruncatable*>(&e)) return "NotTruncatable";
  if (dynamic_cast<const PoleNotCancelled*>(&e)) return "PoleNotCancelled";
  if (dynamic_cast<const EvaluationPole*>(&e)) return "EvaluationPole";
  if (dynamic_cast<const EdgeLoopRejected*>(&e)) return "EdgeLoopRejected";
  if (dynamic_cast<const json::exception*>(&e)) return "InvalidInput";
  return "Error";
}

int error_code(const std::exception& e) {
  if (dynamic_cast<const LimitExceeded*>(&e)) return Limit;
  if (dynamic_cast<const PoleNotCancelled*>(&e)) return VerificationFailed;
  return Malformed;
}

Result failure(const std::exception& e) {
  return {json{{"error", json{{"kind", error_kind(e)}, {"message", e.what()}}}}, error_code(e)};
}

Result run_one(const json& job) {
  try {
    if (!job.is_object()) throw InvalidInput("a job must be a JSON object");
    if (!has(job, "command") || !job.at("command").is_string()) throw InvalidInput("missing 'command'");
    const std::string command = job.at("command").get<std::string>();
    const auto& table = command_keys();
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == command; });
    if (it == table.end()) throw InvalidInput("unknown command '" + command + "'");
    check_keys(job, command, it->second);

    Result r;
    if (command == "product" || command == "twisted-product" || command == "coha-product")
      r = product_job(job, command);
    else if (command == "pushforward")
      r = pushforward_job(job);
    else if (command == "phi-hat")
      r = phi_hat_job(job);
    else if (command == "check-quadratic")
      r = quadratic_job(job);
    else if (command == "check-serre")
      r = serre_job(job);
    else if (command == "serre-table")
      r = serre_table_job(job);
    else if (command == "spherical-table")
      r = spherical_job(job);
    else
      r = fo_job(job);
    if (has(job, "id")) {
      json tagged{{"id", job.at("id")}};
      for (auto& [k, v] : r.output.items()) tagged[k] = v;
      r.output = tagged;
    }
    return r;
  } catch (const Error& e) {
    return failure(e);
  } catch (const json::exception& e) {
    return failure(e);
  }
}

}  // namespace

const std::vector<std::pair<std::string, std::vector<std::string>>>& command_keys() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> table{
      {"product", with_setup({"a", "b"})},
      {"coha-product", with_setup({"a", "b"})},
      {"twisted-product", with_setup({"a", "b"})},
      {"pushforward", {"fgl", "kind", "f", "r", "n", "blocks", "variable", "vertex", "substitute"}},
      {"phi-hat", {"quiver", "fgl", "k", "v", "case", "order", "substitute"}},
      {"check-quadratic", {"quiver", "k", "l", "hbar", "route", "max_power"}},
      {"check-serre", {"quiver", "k", "l", "hbar"}},
      {"serre-table", {"n_max", "b", "limit"}},
      {"spherical-table", with_setup({"max_deg", "max_dim", "twisted", "max_words", "max_terms"})},
      {"fo-check", {"n_max", "elements"}},
  };
  return table;
}

Quiver parse_quiver(const json& j) {
  if (j.is_string()) return Quiver::preset(j.get<std::string>());
  if (!j.is_object()) throw InvalidInput("a quiver is a preset name or an object");
  for (const auto& [key, value] : j.items())
    if (key != "vertices" && key != "arrows") throw InvalidInput("unknown quiver key '" + key + "'");
  if (!j.contains("vertices") || !j.at("vertices").is_array()) throw InvalidInput("quiver needs 'vertices'");
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(key_str(v, "a vertex id"));
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    if (!j.at("arrows").is_array()) throw InvalidInput("'arrows' must be an array");
    for (const auto& a : j.at("arrows")) {
      if (!a.is_object()) throw InvalidInput("an arrow is an object");
      for (const auto& [key, value] : a.items())
        if (key != "out" && key != "inc" && key != "m_h" && key != "m_hstar")
          throw InvalidInput("unknown arrow key '" + key + "'");
      if (!a.contains("out") || !a.contains("inc")) throw InvalidInput("an arrow needs 'out' and 'inc'");
      Arrow h{key_str(a.at("out"), "'out'"), key_str(a.at("inc"), "'inc'")};
      h.m_h = get_int(a, "m_h", 1);
      h.m_hstar = get_int(a, "m_hstar", 1);
      arrows.push_back(h);
    }
  }
  return Quiver(vertices, arrows);
}

FormalGroupLaw parse_fgl(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "additive") return FormalGroupLaw::additive();
    if (s == "multiplicative") return FormalGroupLaw::multiplicative(RatFunc(1L));
    throw InvalidInput("unknown formal group law '" + s + "'");
  }
  if (!j.is_object()) throw InvalidInput("a formal group law is a name or an object");
  const std::string kind = require_str(j, "kind");
  auto only = [&](const std::set<std::string>& keys) {
    for (const auto& [key, value] : j.items())
      if (!keys.count(key)) throw InvalidInput("unknown key '" + key + "' for the " + kind + " law");
  };
  if (kind == "additive") {
    only({"kind"});
    return FormalGroupLaw::additive();
  }
  if (kind == "multiplicative") {
    only({"kind", "beta"});
    return FormalGroupLaw::multiplicative(has(j, "beta") ? expr(j.at("beta"), "'beta'") : RatFunc(1L));
  }
  if (kind == "truncated") {
    only({"kind", "order", "coeffs"});
    FormalGroupLaw::Coeffs coeffs;
    if (has(j, "coeffs")) {
      if (!j.at("coeffs").is_array()) throw InvalidInput("'coeffs' must be an array of [i, j, \"p/q\"]");
      for (const auto& c : j.at("coeffs")) {
        if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer() || !c[1].is_number_integer())
          throw InvalidInput("'coeffs' entries are [i, j, \"p/q\"]");
        const Rational a = c[2].is_string() ? parse_rational(c[2].get<std::string>())
                           : c[2].is_number_integer() ? Rational(c[2].get<long>())
                                                      : throw InvalidInput("coefficients are \"p/q\" strings");
        coeffs[{c[0].get<int>(), c[1].get<int>()}] = a;
      }
    }
    if (!has(j, "order")) throw InvalidInput("a truncated law needs 'order'");
    return FormalGroupLaw::truncated(coeffs, get_int(j, "order", 0));
  }
  throw InvalidInput("unknown formal group law kind '" + kind + "'");
}

DimVector parse_dim(std::string_view text, const Quiver& q) {
  auto fail = [&] { return InvalidInput("malformed dimension vector '" + std::string(text) + "'"); };
  auto vertex = [&](const std::string& v) {
    if (!q.has_vertex(v)) throw InvalidInput("unknown vertex '" + v + "' in dimension vector");
    return v;
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  DimVector d;
  if (s == "0") return d;
  if (s.empty()) throw fail();
  if (s.find(':') != std::string::npos) {
    std::size_t pos = 0;
    while (pos < s.size()) {
      const auto comma = std::min(s.find(',', pos), s.size());
      const std::string part = s.substr(pos, comma - pos);
      const auto colon = part.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == part.size()) throw fail();
      const std::string count = part.substr(colon + 1);
      if (!std::all_of(count.begin(), count.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw fail();
      const std::string v = vertex(part.substr(0, colon));
      d.set(v, d[v] + std::stoi(count));
      pos = comma + 1;
    }
    return d;
  }
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto plus = std::min(s.find('+', pos), s.size());
    const std::string part = s.substr(pos, plus - pos);
    std::size_t i = 0;
    while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i]))) ++i;
    const int count = i ? std::stoi(part.substr(0, i)) : 1;
    if (i >= part.size() || part[i] != 'e') throw fail();
    std::string v = part.substr(i + 1);
    if (v.empty()) {
      if (q.vertices().size() != 1) throw InvalidInput("'e' needs a single-vertex quiver; write e<vertex>");
      v = q.vertices().front();
    }
    v = vertex(v);
    d.set(v, d[v] + count);
    pos = plus + 1;
  }
  return d;
}

DimVector parse_dim_json(const json& j, const Quiver& q) {
  if (j.is_string()) return parse_dim(std::string_view(j.get_ref<const std::string&>()), q);
  if (!j.is_object()) throw InvalidInput("a dimension vector is a string or an object");
  DimVector d;
  for (const auto& [key, value] : j.items()) {
    if (!q.has_vertex(key)) throw InvalidInput("unknown vertex '" + key + "' in dimension vector");
    if (!value.is_number_integer() || value.get<int>() < 0)
      throw InvalidInput("dimension entries are non-negative integers");
    d.set(key, value.get<int>());
  }
  return d;
}

ShuffleElement parse_element(const json& j, const Quiver& q) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto at = s.rfind('@');
    if (at == std::string::npos) throw InvalidInput("element shorthand is EXPR@DIM: '" + s + "'");
    return ShuffleElement{parse_dim(std::string_view(s).substr(at + 1), q), parse_expression(s.substr(0, at))};
  }
  if (!j.is_object()) throw InvalidInput("an element is \"EXPR@DIM\" or an object");
  for (const auto& [key, value] : j.items())
    if (key != "dim" && key != "num" && key != "den") throw InvalidInput("unknown element key '" + key + "'");
  if (!j.contains("dim") || !j.contains("num")) throw InvalidInput("an element needs 'dim' and 'num'");
  const RatFunc num = expr(j.at("num"), "'num'");
  const RatFunc den = j.contains("den") ? expr(j.at("den"), "'den'") : RatFunc(1L);
  return ShuffleElement{parse_dim_json(j.at("dim"), q), num / den};
}

json ratfunc_json(const RatFunc& f) { return json{{"num", f.num().str()}, {"den", f.den().str()}}; }

json element_json(const ShuffleElement& e) {
  json dim = json::object();
  for (const auto& [v, n] : e.dim.entries()) dim[v] = n;
  json out{{"dim", dim}};
  const json f = ratfunc_json(e.f);
  for (const auto& [k, v] : f.items()) out[k] = v;
  return out;
}

Result run(const json& input) {
  if (!input.is_array()) return run_one(input);
  Result all{json::array(), Ok};
  for (const auto& job : input) {
    Result r = run_one(job);
    all.output.push_back(std::move(r.output));
    all.exit_code = std::max(all.exit_code, r.exit_code);
  }
  return all;
}

Result run_text(std::string_view text) {
  json input;
  try {
    input = json::parse(text);
  } catch (const json::parse_error& e) {
    return {json{{"error", json{{"kind", "ParseError"}, {"message", e.what()}}}}, Malformed};
  }
  return run(input);
}

}  // namespace qsh::jobs
