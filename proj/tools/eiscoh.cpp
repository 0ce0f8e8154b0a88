#include "eiscoh/acceptance.hpp"
#include "eiscoh/denominator.hpp"
#include "eiscoh/hecke.hpp"
#include "eiscoh/periods.hpp"
#include "eiscoh/recognition.hpp"
#include "eiscoh/sczech.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

using namespace eiscoh;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kUnsupported = 2, kUnderflow = 3, kRecognition = 4, kAcceptance = 5 };

struct Config {
  long d = 0;
  int bits = 384;
  int tol_exp = -30;
  std::uint64_t seed = 0;
  std::string format = "human";
};

struct Record {
  ordered_json input;
  Complex value;
  std::optional<std::string> recognized;
  std::optional<Real> residual;
};

const Int kHeight(1000000);

std::string dec(const Real& x, int bits) { return to_decimal(x, decimal_digits(bits)); }

ordered_json to_json(const Record& r, int bits) {
  ordered_json j;
  j["input"] = r.input;
  j["value_re"] = dec(r.value.re, bits);
  j["value_im"] = dec(r.value.im, bits);
  j["recognized"] = r.recognized ? ordered_json(*r.recognized) : ordered_json(nullptr);
  j["residual"] = r.residual ? ordered_json(to_decimal(*r.residual, 6)) : ordered_json(nullptr);
  return j;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_line(const Record& r, int bits) {
  std::ostringstream os;
  os << csv_field(r.input.dump()) << ',' << dec(r.value.re, bits) << ',' << dec(r.value.im, bits) << ','
     << (r.recognized ? csv_field(*r.recognized) : "") << ',' << (r.residual ? to_decimal(*r.residual, 6) : "");
  return os.str();
}

const char* kCsvHeader = "input,value_re,value_im,recognized,residual";

std::string human_complex(const Complex& z) {
  const int digits = 40;
  std::string s = to_decimal(z.re, digits);
  s += (z.im.sign() < 0) ? " - " : " + ";
  s += to_decimal(abs(z.im), digits) + "i";
  return s;
}

// Emits a single-record result in the requested format.
void emit(const Config& cfg, const Record& r, const std::vector<std::string>& human) {
  if (cfg.format == "json") {
    std::cout << to_json(r, cfg.bits).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << kCsvHeader << '\n' << csv_line(r, cfg.bits) << '\n';
  } else {
    for (const auto& line : human) std::cout << line << '\n';
  }
}

PrecisionContext make_ctx(const Config& cfg) {
  if (cfg.bits < 128) throw Error(ErrorKind::Usage, "--bits must be at least 128");
  if (cfg.tol_exp > -10) throw Error(ErrorKind::Usage, "--tol-exp must be at most -10");
  return PrecisionContext(cfg.bits, std::pow(10.0L, static_cast<long double>(cfg.tol_exp)));
}

Field field_for(long label) {
  long d = normalize_discriminant(label);
  if (d == -3 || d == -4) throw Error(ErrorKind::Unsupported, "fields with units other than +-1 are not supported");
  return make_field(d);
}

// "x" or "x:y" for x + y*omega
QuadElem parse_elem(long d, const std::string& s) {
  auto to_int = [&](const std::string& t) {
    try {
      size_t pos = 0;
      long v = std::stol(t, &pos);
      if (pos != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "bad element '" + s + "', expected x or x:y");
    }
  };
  auto colon = s.find(':');
  if (colon == std::string::npos) return QuadElem(d, to_int(s), 0);
  return QuadElem(d, to_int(s.substr(0, colon)), to_int(s.substr(colon + 1)));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::optional<PeriodData> maybe_period(long d, const PrecisionContext& ctx) {
  try {
    return period_for(d, ctx);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Unsupported) return std::nullopt;
    throw;
  }
}

std::optional<std::string> table1_entry(long d) {
  try {
    return table1_value(d);
  } catch (const Error&) {
    return std::nullopt;
  }
}

int cmd_g2(const Config& cfg) {
  PrecisionContext ctx = make_ctx(cfg);
  Field F = field_for(cfg.d);
  const long d = F->d();
  if (!maybe_period(d, ctx))
    throw Error(ErrorKind::Unsupported, "no canonical period for d_K = " + std::to_string(d) +
                                            " (class number " + std::to_string(F->h()) +
                                            "; periods are available for class number one and d_K = 1 mod 8)");
  auto g2_at = [d](const PrecisionContext& c) { return G2_canonical(period_for(d, c), c); };
  Complex value;
  {
    PrecGuard pg(ctx.bits());
    value = g2_at(ctx);
  }
  RecognitionResult r = recognize_rational_stable(g2_at, kHeight, ctx);
  auto table = table1_entry(d);
  Record rec{{{"command", "g2"}, {"d", d}, {"bits", cfg.bits}}, value, std::nullopt, std::nullopt};
  std::string verdict;
  int code = kOk;
  if (r.ok()) {
    rec.recognized = r.str();
    rec.residual = r.residual;
    if (table) {
      bool match = Rat(*table) == r.rational;
      verdict = r.str() + (match ? " (matches Table 1)" : " (Table 1 lists " + *table + ")");
      if (!match) code = kRecognition;
    } else {
      verdict = r.str() + " (no Table 1 entry)";
    }
  } else {
    verdict = "not recognized as a rational number";
    code = kRecognition;
  }
  emit(cfg, rec,
       {"G2(L_O) for d_K = " + std::to_string(d) + ": " + human_complex(value), verdict,
        rec.residual ? "residual " + to_decimal(*rec.residual, 6) : "residual n/a"});
  if (code == kRecognition) std::cerr << "eiscoh: recognition failed for G2(L_O) at d_K = " << d << '\n';
  return code;
}

int cmd_cocycle(const Config& cfg, const std::string& gamma_text) {
  PrecisionContext ctx = make_ctx(cfg);
  Field F = field_for(cfg.d);
  const long d = F->d();
  auto parts = split(gamma_text, ',');
  if (parts.size() != 4) throw Error(ErrorKind::Usage, "--gamma needs four entries a,b,c,d");
  GammaMatrix g{parse_elem(d, parts[0]), parse_elem(d, parts[1]), parse_elem(d, parts[2]), parse_elem(d, parts[3])};
  if (!g.is_valid()) throw Error(ErrorKind::Usage, "gamma must have entries in O and determinant 1");
  Complex value;
  {
    PrecGuard pg(ctx.bits());
    value = sczech_phi(g, FracIdeal(d), ctx).value;
  }
  Record rec{{{"command", "cocycle"}, {"d", d}, {"gamma", g.str()}, {"bits", cfg.bits}}, value, std::nullopt,
             std::nullopt};
  std::vector<std::string> human = {"Phi_O(" + g.str() + ") for d_K = " + std::to_string(d) + ": " +
                                    human_complex(value)};
  int code = kOk;
  if (F->h() == 1) {
    auto scaled = [&](const PrecisionContext& c) {
      PeriodData pd = period_for(d, c);
      Complex om = pd.Omega;
      return sczech_phi(g, FracIdeal(d), c).value * Real(2) / (om * om);
    };
    RecognitionResult r = recognize_in_O_stable(scaled, d, kHeight, ctx);
    if (r.ok()) {
      rec.recognized = r.str();
      rec.residual = r.residual;
      human.push_back("2 Omega^-2 Phi_O = " + r.str() + " in O");
      human.push_back("residual " + to_decimal(r.residual, 6));
    } else {
      human.push_back("2 Omega^-2 Phi_O not recognized in O");
      std::cerr << "eiscoh: 2 Omega^-2 Phi_O not recognized in O\n";
      code = kRecognition;
    }
  } else {
    human.push_back("class number " + std::to_string(F->h()) + "; integrality in O is only checked at class number one");
  }
  emit(cfg, rec, human);
  return code;
}

int cmd_dedekind(const Config& cfg, const std::string& a_text, const std::string& c_text) {
  PrecisionContext ctx = make_ctx(cfg);
  Field F = field_for(cfg.d);
  const long d = F->d();
  QuadElem a = parse_elem(d, a_text), c = parse_elem(d, c_text);
  Complex value;
  {
    PrecGuard pg(ctx.bits());
    value = dedekind_sum(a, c, FracIdeal(d), ctx);
  }
  Record rec{{{"command", "dedekind-sum"}, {"d", d}, {"a", a.str()}, {"c", c.str()}, {"bits", cfg.bits}}, value,
             std::nullopt, std::nullopt};
  emit(cfg, rec, {"D(" + a.str() + ", " + c.str() + "; O) for d_K = " + std::to_string(d) + ": " + human_complex(value)});
  return kOk;
}

int cmd_lvalue(const Config& cfg, const std::string& roots_text) {
  PrecisionContext ctx = make_ctx(cfg);
  Field F = field_for(cfg.d);
  const long d = F->d();
  std::vector<long> roots;
  if (roots_text.empty()) {
    roots.assign(F->orders().size(), 0);
  } else {
    for (const auto& t : split(roots_text, ',')) {
      try {
        roots.push_back(std::stol(t));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Usage, "bad root choice '" + t + "'");
      }
    }
  }
  PrecGuard pg(ctx.bits());
  HeckeCharacter chi = build_character(F, roots, ctx);
  Complex L = L_value_at_0(chi, ctx);
  ordered_json rj = roots;
  Record rec{{{"command", "lvalue"}, {"d", d}, {"roots", rj}, {"bits", cfg.bits}}, L, std::nullopt, std::nullopt};
  std::vector<std::string> human = {"L(chi, 0) for d_K = " + std::to_string(d) + ": " + human_complex(L)};
  int code = kOk;
  if (auto pd = maybe_period(d, ctx)) {
    auto [alg, in] = L_alg_int(chi, *pd, ctx);
    rec.value = alg;
    rec.input["normalization"] = "L_alg";
    human.push_back("L_alg(chi, 0) = Omega^-2 L: " + human_complex(alg));
    human.push_back("L_int(chi, 0) = 4 sqrt(d_K) L_alg: " + human_complex(in));
    if (F->h() == 1) {
      auto alg_at = [&](const PrecisionContext& c) {
        return L_alg_int(build_character(F, roots, c), period_for(d, c), c).first;
      };
      RecognitionResult r = recognize_rational_stable(alg_at, kHeight, ctx);
      if (r.ok()) {
        rec.recognized = r.str();
        rec.residual = r.residual;
        human.push_back("L_alg recognized: " + r.str() + ", residual " + to_decimal(r.residual, 6));
      } else {
        human.push_back("L_alg not recognized");
        std::cerr << "eiscoh: L_alg not recognized at d_K = " << d << '\n';
        code = kRecognition;
      }
    }
  } else {
    rec.input["normalization"] = "L";
    human.push_back("no canonical period for this field; L_alg not available");
  }
  emit(cfg, rec, human);
  return code;
}

const char* kFootnote =
    "note: the tables in the source list d = -167; these rows are computed at d_K = -163, where "
    "j(O) = -262537412640768000 and G2(L_O) = 724.";

int cmd_table(const Config& cfg, const std::string& name) {
  PrecisionContext ctx = make_ctx(cfg);
  if (name != "table1" && name != "table2") throw Error(ErrorKind::Usage, "table must be table1 or table2");
  std::vector<Record> rows;
  std::vector<std::string> human;
  bool all_ok = true;
  PrecGuard pg(ctx.bits());
  if (name == "table1") {
    human.push_back("d_K    G2(L_O)                                     recognized  Table 1");
    for (long d : table_discriminants()) {
      auto g2_at = [d](const PrecisionContext& c) { return G2_canonical(period_from_table(d, c), c); };
      Complex v = g2_at(ctx);
      RecognitionResult r = recognize_rational_stable(g2_at, kHeight, ctx);
      std::string tv = table1_value(d);
      bool ok = r.ok() && r.rational == Rat(tv);
      all_ok = all_ok && ok;
      Record rec{{{"table", "table1"}, {"d", d}, {"tabulated", tv}}, v, std::nullopt, std::nullopt};
      if (r.ok()) {
        rec.recognized = r.str();
        rec.residual = r.residual;
      }
      rows.push_back(rec);
      std::ostringstream os;
      os << std::left << std::setw(7) << d << std::setw(44) << to_decimal(v.re, 36) << std::setw(12)
         << (r.ok() ? r.str() : "?") << tv << (ok ? "" : "  MISMATCH");
      human.push_back(os.str());
    }
  } else {
    human.push_back("d_K    a (computed)        b (computed)        Table 2 (a, b)             max rel dev");
    for (long d : table_discriminants()) {
      PeriodData pd = period_from_table(d, ctx);
      auto [g2, g3] = g2_g3(embed(FracIdeal(d), ctx).scaled(pd.Omega), ctx);
      Rat a(pd.exact->first), b(pd.exact->second);
      Real dev(0);
      std::string shown[2];
      int k = 0;
      for (auto [val, exact, label] : {std::tuple{g2, a, "g2"}, std::tuple{g3, b, "g3"}}) {
        RecognitionResult r = recognize_rational(val, Int(1), ctx);
        Real rel = abs(val - Complex(Real(exact))) / abs(Complex(Real(exact)));
        if (rel > dev) dev = rel;
        bool ok = r.ok() && r.rational == exact && rel < Real(static_cast<double>(ctx.tol()));
        all_ok = all_ok && ok;
        Record rec{{{"table", "table2"}, {"d", d}, {"invariant", label}, {"tabulated", exact.get_str()}}, val,
                   std::nullopt, std::nullopt};
        if (r.ok()) {
          rec.recognized = r.str();
          rec.residual = r.residual;
        }
        shown[k++] = r.ok() ? r.str() : "?";
        rows.push_back(rec);
      }
      std::ostringstream os;
      os << std::left << std::setw(7) << d << std::setw(20) << shown[0] << std::setw(20) << shown[1] << std::setw(27)
         << ("(" + a.get_str() + ", " + b.get_str() + ")") << to_decimal(dev, 3);
      human.push_back(os.str());
    }
  }
  if (cfg.format == "json") {
    ordered_json j;
    j["table"] = name;
    j["bits"] = cfg.bits;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) j["rows"].push_back(to_json(r, cfg.bits));
    j["footnote"] = kFootnote;
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << kCsvHeader << '\n';
    for (const auto& r : rows) std::cout << csv_line(r, cfg.bits) << '\n';
    std::cout << "# " << kFootnote << '\n';
  } else {
    for (const auto& l : human) std::cout << l << '\n';
    std::cout << kFootnote << '\n';
  }
  if (!all_ok) {
    std::cerr << "eiscoh: table entries did not match\n";
    return kRecognition;
  }
  return kOk;
}

int cmd_verify(const Config& cfg, const std::vector<std::string>& which) {
  make_ctx(cfg);
  AcceptanceOptions opt;
  opt.bits = cfg.bits;
  opt.seed = cfg.seed;
  for (const auto& w : which) {
    if (w == "all") continue;
    try {
      int id = std::stoi(w);
      if (id < 1 || id > kCriteriaCount) throw std::out_of_range(w);
      opt.only.push_back(id);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "unknown criterion '" + w + "' (use all or 1.." + std::to_string(kCriteriaCount) + ")");
    }
  }
  bool human = cfg.format == "human";
  auto results = run_acceptance(opt, human ? &std::cout : nullptr);
  int passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  const int total = static_cast<int>(results.size());
  if (cfg.format == "json") {
    ordered_json j;
    j["input"] = {{"command", "verify"}, {"bits", cfg.bits}, {"seed", cfg.seed}};
    j["criteria"] = ordered_json::array();
    for (const auto& r : results)
      j["criteria"].push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    j["passed"] = passed;
    j["total"] = total;
    std::cout << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "id,name,pass,detail\n";
    for (const auto& r : results)
      std::cout << r.id << ',' << csv_field(r.name) << ',' << (r.pass ? "true" : "false") << ',' << csv_field(r.detail)
                << '\n';
  } else {
    std::cout << (passed == total ? "PASSED " : "FAILED ") << passed << "/" << total << " criteria at " << cfg.bits
              << " bits\n";
  }
  return passed == total ? kOk : kAcceptance;
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Unsupported: return kUnsupported;
    case ErrorKind::Underflow: return kUnderflow;
    case ErrorKind::Recognition: return kRecognition;
    default: return kUsage;
  }
}

int default_bits() {
  const char* env = std::getenv("EISCOH_BITS");
  if (!env || !*env) return 384;
  try {
    size_t pos = 0;
    int b = std::stoi(env, &pos);
    if (pos == std::string(env).size()) return b;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Usage, std::string("EISCOH_BITS is not an integer: ") + env);
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  try {
    cfg.bits = default_bits();
  } catch (const Error& e) {
    std::cerr << "eiscoh: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Eisenstein cohomology computations over imaginary quadratic fields"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  auto add_common = [&](CLI::App* sub, bool needs_d) {
    if (needs_d) sub->add_option("--d", cfg.d, "discriminant or squarefree label, e.g. -7, -8 or -2")->required();
    sub->add_option("--bits", cfg.bits, "working precision in bits (env EISCOH_BITS)");
    sub->add_option("--tol-exp", cfg.tol_exp, "tolerance exponent, tol = 10^tol_exp");
    sub->add_option("--seed", cfg.seed, "seed for randomized checks");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"human", "json", "csv"}));
  };

  auto* g2 = app.add_subcommand("g2", "G2(L_O) with recognition against Table 1");
  add_common(g2, true);

  std::string gamma;
  auto* cocycle = app.add_subcommand("cocycle", "Sczech cocycle Phi_O(gamma)");
  add_common(cocycle, true);
  cocycle->add_option("--gamma", gamma, "entries a,b,c,d; each x or x:y meaning x + y*omega")->required();

  std::string a_text, c_text;
  auto* ds = app.add_subcommand("dedekind-sum", "elliptic Dedekind sum D(a, c; O)");
  add_common(ds, true);
  ds->add_option("--a", a_text, "x or x:y")->required();
  ds->add_option("--c", c_text, "x or x:y, nonzero")->required();

  std::string roots;
  auto* lv = app.add_subcommand("lvalue", "Hecke L-value L(chi, 0)");
  add_common(lv, true);
  lv->add_option("--roots", roots, "root choices, one per cyclic factor of Cl(K)");

  std::string table_name;
  auto* table = app.add_subcommand("table", "reproduce table1 or table2");
  add_common(table, false);
  table->add_option("name", table_name, "table1 or table2")->required();

  std::vector<std::string> which{"all"};
  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  add_common(verify, false);
  verify->add_option("criteria", which, "all or criterion numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*g2) return cmd_g2(cfg);
    if (*cocycle) return cmd_cocycle(cfg, gamma);
    if (*ds) return cmd_dedekind(cfg, a_text, c_text);
    if (*lv) return cmd_lvalue(cfg, roots);
    if (*table) return cmd_table(cfg, table_name);
    if (*verify) return cmd_verify(cfg, which);
  } catch (const Error& e) {
    std::cerr << "eiscoh: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "eiscoh: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
