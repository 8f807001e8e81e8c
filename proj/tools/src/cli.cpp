#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmweil/error.hpp"
#include "cmweil/jacobian.hpp"
#include "cmweil/weilgen.hpp"

namespace cmweil::cli {

namespace {

using Json = nlohmann::ordered_json;

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double round6(double x) { return std::round(x * 1e6) / 1e6; }

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(c.get_str());
  return out;
}

Json element_json(const FieldElement& x) {
  return Json{{"numerators", integers(x.numerators())}, {"denominator", x.denominator().get_str()}};
}

Integer json_integer(const Json& j, const std::string& what) {
  try {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_unsigned()) return Integer(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  } catch (const std::invalid_argument&) {
  }
  throw RecordError("record field '" + what + "' is not an integer");
}

const Json& require_key(const Json& j, const std::string& key) {
  if (!j.is_object() || !j.contains(key)) throw RecordError("record is missing '" + key + "'");
  return j.at(key);
}

FieldElement element_from_json(const FieldPtr& field, const Json& j, const std::string& what) {
  const Json& nums = require_key(j, "numerators");
  if (!nums.is_array()) throw RecordError("record field '" + what + ".numerators' is not an array");
  std::vector<Integer> num;
  for (const auto& c : nums) num.push_back(json_integer(c, what));
  Integer den = j.contains("denominator") ? json_integer(j.at("denominator"), what + ".denominator") : Integer(1);
  if (static_cast<int>(num.size()) != field->degree() || den == 0) {
    throw RecordError("record field '" + what + "' does not fit the field");
  }
  return FieldElement(field, std::move(num), std::move(den));
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

CMType resolve_cm_type(const SpecPtr& spec, const std::string& text) {
  if (text == "auto") return auto_cm_type(spec);
  std::vector<std::uint64_t> labels;
  for (const auto& item : split(text, ',')) labels.push_back(std::stoull(item));
  if (spec->kind == FamilyKind::Cyclotomic) return cm_type_from_exponents(spec, labels);
  return cm_type_from_indices(spec, std::vector<std::size_t>(labels.begin(), labels.end()));
}

Json labels_json(const CMType& t) {
  Json out = Json::array();
  for (auto l : cm_type_labels(t)) out.push_back(l);
  return out;
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  // text and csv share a flat key/value layout for scalars.
  const char sep = format == "csv" ? ',' : ':';
  for (const auto& [key, value] : j.items()) {
    if (value.is_structured()) continue;
    out << key << sep << (format == "csv" ? "" : " ") << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
  }
}

void check_hint(const Factorization& hint, const Integer& r) {
  Integer prod = 1;
  for (const auto& pp : hint) {
    if (!is_prime(pp.prime)) throw PreconditionError("--r-minus-one-factors: " + pp.prime.get_str() + " is not prime");
    Integer t;
    mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
    prod *= t;
  }
  if (prod != r - 1) throw PreconditionError("--r-minus-one-factors: product is not r - 1");
}

struct Options {
  std::string field;
  std::string cm_type = "auto";
  std::uint64_t k = 0;
  std::string r;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t max_iters = 0;
  std::string hint;
  std::string format = "json";
  std::uint64_t budget = 100000000;
  std::size_t base_root = 0;
  bool all_zetas = false;
  unsigned count = 1;
  std::string record;
  std::string curve;
  std::string order;
  int trials = 10;
  unsigned twist_p = 0;
  std::string q;
  std::string a_bound = "100";
};

Json weil_record(const WeilNumber& w, const CMType& type, const Options& opt, const Factorization* hint) {
  const ValidationReport rep = validate_weil(w);
  Json j;
  j["command"] = "generate";
  j["field"] = w.spec->description();
  j["defining_polynomial"] = integers(w.spec->field->defining_poly().coefficients());
  j["cm_type"] = labels_json(type);
  j["k"] = w.k;
  j["r"] = w.r.get_str();
  j["q"] = w.q.get_str();
  j["q_bits"] = bit_length(w.q);
  j["pi"] = element_json(w.pi);
  j["xi"] = element_json(w.xi);
  j["group_order"] = w.group_order.get_str();
  j["rho"] = round6(w.rho);
  j["rho_bound"] = round6(rho_bound(reflex(type), w.r));
  j["flags"] = Json{{"ordinary", w.ordinary}, {"generates_k", w.generates_k}, {"q_unramified", w.q_unramified}};
  Json checks;
  for (const auto& [name, ok] : rep.checks()) checks[name] = ok;
  j["checks"] = checks;
  if (hint) j["order_of_q_mod_r"] = multiplicative_order(w.q, w.r, hint).get_str();
  j["seed"] = opt.seed;
  j["iterations"] = w.iterations;
  return j;
}

int cmd_generate(const Options& opt, std::ostream& out) {
  const SpecPtr spec = parse_field_spec(opt.field);
  const CMType type = resolve_cm_type(spec, opt.cm_type);
  const Integer r = parse_integer_expr(opt.r);
  std::optional<Factorization> hint;
  if (!opt.hint.empty()) {
    hint = parse_factorization(opt.hint);
    check_hint(*hint, r);
  }
  Rng rng(opt.seed);
  ConstructOptions co;
  co.max_iters = opt.max_iters;
  co.threads = opt.threads;
  co.base_root = opt.base_root;
  std::vector<Json> records;
  for (unsigned i = 0; i < opt.count; ++i) {
    records.push_back(weil_record(construct_pi(type, opt.k, r, rng, co), type, opt, hint ? &*hint : nullptr));
  }
  if (opt.count == 1) {
    emit(out, records.front(), opt.format);
  } else if (opt.format == "json") {
    out << Json(records).dump(2) << "\n";
  } else {
    for (const auto& rec : records) emit(out, rec, opt.format);
  }
  return kOk;
}

int cmd_exhaust(const Options& opt, std::ostream& out) {
  const SpecPtr spec = parse_field_spec(opt.field);
  const CMType type = resolve_cm_type(spec, opt.cm_type);
  const Integer r = parse_integer_expr(opt.r);
  if (!is_prime(r)) throw PreconditionError("r = " + r.get_str() + " is not prime");
  SearchOptions so;
  so.budget = opt.budget;
  so.threads = opt.threads;
  so.base_root = opt.base_root;
  so.all_zetas = opt.all_zetas;
  const SearchReport rep = exhaustive_search(type, opt.k, r, so);

  Json j;
  j["command"] = "exhaust";
  j["field"] = spec->description();
  j["cm_type"] = labels_json(type);
  j["k"] = opt.k;
  j["r"] = r.get_str();
  j["base_root"] = opt.base_root;
  j["all_zetas"] = opt.all_zetas;
  j["candidates"] = rep.candidates;
  j["prime_count"] = rep.prime_count;
  j["step8_failures"] = rep.step8_failures;
  j["min_q"] = rep.winner ? Json(rep.winner->q.get_str()) : Json(nullptr);
  if (rep.winner) {
    const SearchWinner& w = *rep.winner;
    Json alphas = Json::array(), betas = Json::array();
    for (const auto& a : w.assignment.alphas) alphas.push_back(a.value().get_str());
    for (const auto& b : w.assignment.betas) betas.push_back(b.value().get_str());
    j["winner"] = Json{{"q", w.q.get_str()},
                       {"rho", round6(w.rho)},
                       {"group_order", w.group_order.get_str()},
                       {"pi", element_json(w.pi)},
                       {"xi", element_json(w.xi)},
                       {"zeta", w.assignment.zeta.value().get_str()},
                       {"alphas", alphas},
                       {"betas", betas}};
  }
  Json hist = Json::array();
  for (const auto& [bin, count] : rep.rho_histogram) {
    hist.push_back(Json{{"bin_start", std::round(bin * 5.0) / 100.0}, {"count", count}});
  }
  j["rho_histogram"] = hist;

  if (opt.format == "json") {
    out << j.dump(2) << "\n";
    return kOk;
  }
  emit(out, j, opt.format);
  if (rep.winner) {
    const char* sep = opt.format == "csv" ? "," : ": ";
    out << "winner_rho" << sep << round6(rep.winner->rho) << "\n";
    out << "winner_group_order" << sep << rep.winner->group_order.get_str() << "\n";
  }
  out << (opt.format == "csv" ? "bin_start,count\n" : "histogram (bin_start count)\n");
  for (const auto& h : hist) {
    out << h["bin_start"].dump() << (opt.format == "csv" ? "," : " ") << h["count"].dump() << "\n";
  }
  return kOk;
}

int cmd_validate(const Options& opt, std::ostream& out) {
  Json rec;
  try {
    if (opt.record == "-") {
      rec = Json::parse(std::cin);
    } else {
      std::ifstream in(opt.record);
      if (!in) throw RecordError("cannot open record file " + opt.record);
      rec = Json::parse(in);
    }
  } catch (const Json::parse_error& e) {
    throw RecordError(std::string("malformed JSON: ") + e.what());
  }
  const Json& field_j = require_key(rec, "field");
  if (!field_j.is_string()) throw RecordError("record field 'field' is not a string");
  SpecPtr spec;
  try {
    spec = parse_field_spec(field_j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw RecordError(e.what());
  } catch (const PreconditionError& e) {
    throw RecordError(e.what());
  }
  if (rec.contains("defining_polynomial")) {
    std::vector<Integer> f;
    for (const auto& c : rec.at("defining_polynomial")) f.push_back(json_integer(c, "defining_polynomial"));
    if (IntPolynomial(f) != spec->field->defining_poly()) {
      throw RecordError("defining polynomial does not match the field specification");
    }
  }
  WeilNumber w;
  w.spec = spec;
  w.pi = element_from_json(spec->field, require_key(rec, "pi"), "pi");
  w.q = json_integer(require_key(rec, "q"), "q");
  w.r = json_integer(require_key(rec, "r"), "r");
  const Json& kj = require_key(rec, "k");
  if (!kj.is_number_unsigned()) throw RecordError("record field 'k' is not a positive integer");
  w.k = kj.get<std::uint64_t>();

  const ValidationReport rep = validate_weil(w);
  Json j;
  j["command"] = "validate";
  j["q"] = w.q.get_str();
  Json checks;
  for (const auto& [name, ok] : rep.checks()) checks[name] = ok;
  j["checks"] = checks;
  if (rec.contains("group_order")) {
    j["group_order_matches"] = json_integer(rec.at("group_order"), "group_order") == group_order(w.pi);
  }
  if (!opt.hint.empty() && w.r > 2) {
    const Factorization hint = parse_factorization(opt.hint);
    check_hint(hint, w.r);
    j["order_of_q_mod_r"] = multiplicative_order(w.q, w.r, &hint).get_str();
  }
  const bool pass = rep.all() && j.value("group_order_matches", true);
  j["passed"] = pass;
  emit(out, j, opt.format);
  if (opt.format != "json") {
    for (const auto& [name, ok] : rep.checks()) out << name << (opt.format == "csv" ? "," : ": ") << (ok ? "true" : "false") << "\n";
  }
  return pass ? kOk : kCheckFailed;
}

int cmd_curve_check(const Options& opt, std::ostream& out) {
  Rng rng(opt.seed);
  const Integer order = parse_integer_expr(opt.order);
  Json j;
  j["command"] = "curve-check";
  if (opt.twist_p) {
    if (opt.q.empty()) throw PreconditionError("twist search needs --q");
    const Integer q = parse_integer_expr(opt.q);
    const auto a = twist_search(opt.twist_p, order, q, parse_integer_expr(opt.a_bound), rng, opt.trials);
    j["mode"] = "twist";
    j["p"] = opt.twist_p;
    j["q"] = q.get_str();
    j["order"] = order.get_str();
    j["a"] = a ? Json(a->get_str()) : Json(nullptr);
    if (a) {
      std::string curve = "hyperelliptic:" + q.get_str() + ":" + a->get_str();
      for (unsigned i = 1; i < opt.twist_p; ++i) curve += ",0";
      j["curve"] = curve + ",1";
    }
    emit(out, j, opt.format);
    return a ? kOk : kNotFound;
  }
  if (opt.curve.empty()) throw PreconditionError("curve-check needs --curve or --twist-p");
  const HyperellipticCurve curve = HyperellipticCurve::parse(opt.curve);
  const OrderCheckResult res = probable_order_check_report(curve, order, opt.trials, rng);
  j["mode"] = "order";
  j["curve"] = curve.to_string();
  j["genus"] = curve.genus();
  j["order"] = order.get_str();
  j["in_weil_interval"] = res.in_weil_interval;
  j["trials"] = res.trials;
  j["trials_killed"] = res.trials_killed;
  j["exponent_lower_bound"] = res.exponent_lower_bound.get_str();
  j["multiples_in_interval"] = res.multiples_in_interval.get_str();
  j["passed"] = res.passed;
  emit(out, j, opt.format);
  return res.passed ? kOk : kCheckFailed;
}

}  // namespace

Integer parse_integer_expr(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("cannot parse integer '" + text + "'"); };
  if (text.empty()) throw bad();
  if (text.rfind("2^", 0) == 0) {
    std::size_t pos = 2;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == 2) throw bad();
    const unsigned long e = std::stoul(text.substr(2, pos - 2));
    if (e > 100000) throw bad();
    Integer v = Integer(1) << e;
    if (pos == text.size()) return v;
    const char op = text[pos];
    const std::string rest = text.substr(pos + 1);
    if ((op != '+' && op != '-') || rest.empty() ||
        rest.find_first_not_of("0123456789") != std::string::npos) {
      throw bad();
    }
    return op == '+' ? Integer(v + Integer(rest)) : Integer(v - Integer(rest));
  }
  const std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size() || text.find_first_not_of("0123456789", start) != std::string::npos) throw bad();
  return Integer(text);
}

Factorization parse_factorization(const std::string& text) {
  Factorization out;
  for (const auto& item : split(text, ',')) {
    const auto caret = item.find('^');
    PrimePower pp;
    pp.prime = parse_integer_expr(item.substr(0, caret));
    pp.exponent = caret == std::string::npos ? 1u : static_cast<unsigned>(std::stoul(item.substr(caret + 1)));
    out.push_back(pp);
  }
  if (out.empty()) throw std::invalid_argument("empty factorization");
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"q-Weil numbers in CM-fields with prescribed subgroup order and embedding degree", "cmweil"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto add_field_opts = [&](CLI::App* sub) {
    sub->add_option("--field", opt.field, "cyclotomic:<m> or quartic:<a>,<b>,<d>")->required();
    sub->add_option("--cm-type", opt.cm_type, "auto, or comma-separated embedding labels");
    sub->add_option("--k", opt.k, "embedding degree")->required();
    sub->add_option("--r", opt.r, "subgroup order: decimal or 2^e+-c")->required();
    sub->add_option("--threads", opt.threads)->check(CLI::PositiveNumber);
    sub->add_option("--base-root", opt.base_root, "root of K's polynomial mod r fixing the prime above r");
    sub->add_option("--format", opt.format)->check(CLI::IsMember(formats));
  };

  CLI::App* gen = app.add_subcommand("generate", "construct a validated q-Weil number");
  add_field_opts(gen);
  gen->add_option("--seed", opt.seed);
  gen->add_option("--max-iters", opt.max_iters);
  gen->add_option("--r-minus-one-factors", opt.hint, "factorization of r-1, e.g. 2^2,3,5");
  gen->add_option("--count", opt.count, "number of records")->check(CLI::PositiveNumber);

  CLI::App* exh = app.add_subcommand("exhaust", "enumerate all residue assignments");
  add_field_opts(exh);
  exh->add_option("--budget", opt.budget, "maximum number of candidates");
  exh->add_flag("--all-zetas", opt.all_zetas, "enumerate every primitive k-th root of unity");

  CLI::App* val = app.add_subcommand("validate", "re-check a generate record");
  val->add_option("--record", opt.record, "record file, or - for stdin")->required();
  val->add_option("--r-minus-one-factors", opt.hint);
  val->add_option("--format", opt.format)->check(CLI::IsMember(formats));

  CLI::App* cc = app.add_subcommand("curve-check", "probable group order check on a hyperelliptic Jacobian");
  cc->add_option("--curve", opt.curve, "hyperelliptic:<q>:<c0,c1,...>");
  cc->add_option("--order", opt.order, "expected group order")->required();
  cc->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
  cc->add_option("--seed", opt.seed);
  cc->add_option("--twist-p", opt.twist_p, "search y^2 = x^p + a");
  cc->add_option("--q", opt.q);
  cc->add_option("--a-bound", opt.a_bound);
  cc->add_option("--format", opt.format)->check(CLI::IsMember(formats));

  std::vector<const char*> argv{"cmweil"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (gen->parsed()) code = cmd_generate(opt, buffer);
    else if (exh->parsed()) code = cmd_exhaust(opt, buffer);
    else if (val->parsed()) code = cmd_validate(opt, buffer);
    else code = cmd_curve_check(opt, buffer);
  } catch (const RecordError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const MaxItersExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kMaxIters;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  out << buffer.str();
  return code;
}

}  // namespace cmweil::cli
