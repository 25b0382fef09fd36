#ifndef BJORTHO_CLI_HPP
#define BJORTHO_CLI_HPP

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bjortho/dispatch.hpp"
#include "bjortho/io.hpp"
#include "bjortho/oracle.hpp"
#include "bjortho/selftest.hpp"

namespace bjortho::cli {

enum ExitCode : int { kTrue = 0, kFalse = 1, kMalformed = 2, kOracleConflict = 3 };

namespace detail {

inline ordered_json indices_to_ids(const MeasureSpace& space, const std::vector<std::size_t>& idx) {
  ordered_json arr = ordered_json::array();
  for (auto i : idx) arr.push_back(space.atoms()[i].id);
  return arr;
}

inline ordered_json complex_json(const Scalar& z) { return ordered_json::array({z.real(), z.imag()}); }

inline ordered_json tolerances_json(const Tolerances& tol) {
  return {{"rel_attain", tol.rel_attain}, {"hull_eps", tol.hull_eps}, {"oracle_margin", tol.oracle_margin}};
}

inline ordered_json kind_json(const SpaceKind& kind) {
  ordered_json j;
  j["kind"] = kind.name();
  if (kind.family == NormFamily::Lp) j["p"] = kind.p;
  return j;
}

inline ordered_json evidence_json(const MeasureSpace& space, const Verdict& v) {
  ordered_json j = ordered_json::object();
  if (const auto* s = std::get_if<SupEvidence>(&v.evidence)) {
    j["attain_set"] = indices_to_ids(space, s->attain.indices);
    j["attain_threshold"] = s->attain.threshold;
    j["hull_points"] = ordered_json::array();
    for (const auto& z : s->hull_points) j["hull_points"].push_back(complex_json(z));
  } else if (const auto* l = std::get_if<L1Evidence>(&v.evidence)) {
    j["pairing"] = complex_json(l->pairing);
    j["zero_mass"] = l->zero_mass;
    j["zero_set"] = indices_to_ids(space, l->zero_set);
  } else if (const auto* p = std::get_if<LpEvidence>(&v.evidence)) {
    j["pairing"] = complex_json(p->pairing);
    j["p"] = p->p;
    j["support"] = indices_to_ids(space, p->support_atoms);
  }
  return j;
}

inline ordered_json oracle_json(const OracleResult& r) {
  return {{"min_norm", r.min_norm},
          {"argmin", complex_json(r.argmin)},
          {"base_norm", r.base_norm},
          {"verdict", to_string(r.verdict)},
          {"evaluations", r.evaluations}};
}

inline ordered_json classification_json(const MeasureSpace& space, const SymmetryVerdict& c) {
  ordered_json ev;
  ev["rule"] = c.evidence.rule;
  ev["zero_function"] = c.evidence.zero_function;
  ev["hilbert"] = c.evidence.hilbert;
  ev["attain_set"] = indices_to_ids(space, c.evidence.attain_set);
  ev["zero_set"] = indices_to_ids(space, c.evidence.zero_set);
  ev["support"] = indices_to_ids(space, c.evidence.support);
  ev["support_masses"] = c.evidence.support_masses;
  return {{"is_smooth", c.is_smooth},
          {"is_left_symmetric", c.is_left_symmetric},
          {"is_right_symmetric", c.is_right_symmetric},
          {"evidence", ev}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Common {
  std::string space;
  std::optional<double> p;
  Tolerances tol;

  void add_to(CLI::App& app) {
    app.add_option("--space", space, "norm family")->required()->check(CLI::IsMember({"sup", "l1", "lp"}));
    app.add_option("--p", p, "exponent for --space lp, 1 < p < inf");
    add_tolerances(app, tol);
  }

  static void add_tolerances(CLI::App& app, Tolerances& tol) {
    app.add_option("--tol-rel-attain", tol.rel_attain, "sup-norm attainment slack")->capture_default_str();
    app.add_option("--tol-hull-eps", tol.hull_eps, "origin-in-hull fattening")->capture_default_str();
    app.add_option("--tol-oracle-margin", tol.oracle_margin, "oracle relative margin")->capture_default_str();
  }

  SpaceKind kind() const {
    if (space == "lp") {
      if (!p) throw InputError("--space lp needs --p");
      return SpaceKind::lp(*p);
    }
    if (p) throw InputError("--p only applies to --space lp");
    return space == "sup" ? SpaceKind::sup() : SpaceKind::l1();
  }
};

inline ordered_json command_echo(const std::vector<std::string>& args) {
  ordered_json arr = ordered_json::array();
  for (const auto& a : args) arr.push_back(a);
  return arr;
}

inline void emit(std::ostream& out, const ordered_json& report) { out << report.dump(2) << '\n'; }

struct CheckArgs {
  Common common;
  std::string input, f, g;
  bool oracle = false;
};

inline int run_check(const CheckArgs& a, const std::vector<std::string>& echo, std::ostream& out) {
  const auto kind = a.common.kind();
  a.common.tol.validate();
  const auto doc = parse_input(read_file(a.input));
  const auto& f = doc.function(a.f);
  const auto& g = doc.function(a.g);
  const auto verdict = bj_orthogonal(doc.space, kind, f, g, a.common.tol);

  ordered_json r;
  r["command"] = command_echo(echo);
  r["space"] = kind_json(kind);
  r["tolerances"] = tolerances_json(a.common.tol);
  r["f"] = a.f;
  r["g"] = a.g;
  r["orthogonal"] = verdict.orthogonal;
  r["zero_f"] = verdict.zero_f;
  r["evidence"] = evidence_json(doc.space, verdict);
  int code = verdict.orthogonal ? kTrue : kFalse;
  if (a.oracle) {
    const auto o = oracle_orthogonal(doc.space, kind, f, g, a.common.tol);
    auto oj = oracle_json(o);
    const bool agrees =
        o.verdict != OracleVerdict::MarginBand && (o.verdict == OracleVerdict::Orthogonal) == verdict.orthogonal;
    oj["agrees"] = agrees;
    r["oracle"] = oj;
    if (!agrees) code = kOracleConflict;
  }
  r["exit_code"] = code;
  emit(out, r);
  return code;
}

struct ClassifyArgs {
  Common common;
  std::string input, f;
  bool witness = false;
};

inline int run_classify(const ClassifyArgs& a, const std::vector<std::string>& echo, std::ostream& out) {
  const auto kind = a.common.kind();
  a.common.tol.validate();
  const auto doc = parse_input(read_file(a.input));
  const auto& f = doc.function(a.f);
  const auto cls = classify(doc.space, kind, f, a.common.tol);

  ordered_json r;
  r["command"] = command_echo(echo);
  r["space"] = kind_json(kind);
  r["tolerances"] = tolerances_json(a.common.tol);
  r["f"] = a.f;
  r["classification"] = classification_json(doc.space, cls);
  if (a.witness) {
    auto& ws = r["witnesses"] = ordered_json::array();
    for (const auto side : {Side::Left, Side::Right}) {
      if (side == Side::Left ? cls.is_left_symmetric : cls.is_right_symmetric) continue;
      ordered_json w;
      w["type"] = "asymmetry";
      w["side"] = to_string(side);
      if (const auto found = asymmetry_witness(doc.space, kind, f, a.common.tol, side)) {
        w["construction"] = found->construction;
        w["g"] = function_to_json(found->g, doc.space.field());
        w["f_against_g"] = oracle_json(found->forward);
        w["g_against_f"] = oracle_json(found->reverse);
        w["confirmed"] = found->confirmed();
      } else {
        w["confirmed"] = false;
      }
      ws.push_back(std::move(w));
    }
    if (!cls.is_smooth && !cls.evidence.zero_function && kind.family != NormFamily::Lp) {
      ordered_json w;
      w["type"] = "additivity";
      if (const auto found = additivity_witness(doc.space, kind, f, a.common.tol)) {
        w["g"] = function_to_json(found->g, doc.space.field());
        w["h"] = function_to_json(found->h, doc.space.field());
        w["f_against_g"] = oracle_json(found->to_g);
        w["f_against_h"] = oracle_json(found->to_h);
        w["f_against_sum"] = oracle_json(found->to_sum);
        w["confirmed"] = found->confirmed();
      } else {
        w["confirmed"] = false;
      }
      ws.push_back(std::move(w));
    }
  }
  r["exit_code"] = 0;
  emit(out, r);
  return 0;
}

struct SelftestArgs {
  std::size_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::size_t dim_max = 6;
  std::vector<std::string> spaces{"sup", "l1", "lp"};
  std::vector<double> p_list{1.2, 1.5, 3.0, 4.0, 7.0};
  Tolerances tol;
};

inline std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BJORTHO_SEED")) {
    const std::string s(env);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw InputError("BJORTHO_SEED must be an unsigned integer");
    return v;
  }
  return 7;
}

inline int run_selftest(const SelftestArgs& a, const std::vector<std::string>& echo, std::ostream& out,
                        std::ostream& err) {
  a.tol.validate();
  if (a.trials == 0) throw InputError("--trials must be positive");
  if (a.dim_max == 0) throw InputError("--dim-max must be positive");
  for (double p : a.p_list) (void)SpaceKind::lp(p);

  selftest::SuiteConfig cfg;
  cfg.trials = a.trials;
  cfg.seed = resolve_seed(a.seed);
  cfg.dim_max = a.dim_max;
  cfg.p_list = a.p_list;
  cfg.tol = a.tol;
  // the search-heavy suites run on a fifth of the trial count
  auto heavy = cfg;
  heavy.trials = std::max<std::size_t>(1, a.trials / 5);
  heavy.pairs_per_f = 10;
  heavy.nonsmooth_trials = std::max<std::size_t>(1, a.trials / 5);
  heavy.falsification_samples = 50;

  std::vector<selftest::SuiteResult> results;
  auto timed = [&](auto&& suite) {
    const auto t0 = std::chrono::steady_clock::now();
    results.push_back(suite());
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    err << std::left << std::setw(28) << results.back().name << (results.back().passed() ? " pass " : " FAIL ")
        << std::fixed << std::setprecision(2) << s << " s\n";
  };
  for (const auto& name : a.spaces) {
    const NormFamily fam = name == "sup" ? NormFamily::Sup : name == "l1" ? NormFamily::L1 : NormFamily::Lp;
    timed([&] { return selftest::oracle_agreement(fam, cfg); });
    timed([&] { return selftest::invariance(fam, cfg); });
    timed([&] { return selftest::right_additivity(fam, heavy); });
    timed([&] { return selftest::classification_soundness(fam, heavy); });
  }
  if (std::find(a.spaces.begin(), a.spaces.end(), "lp") != a.spaces.end())
    timed([&] { return selftest::hilbert_degeneration(cfg); });

  ordered_json r;
  r["command"] = command_echo(echo);
  r["seed"] = cfg.seed;
  r["trials"] = cfg.trials;
  r["dim_max"] = cfg.dim_max;
  r["spaces"] = a.spaces;
  r["p_list"] = cfg.p_list;
  r["tolerances"] = tolerances_json(cfg.tol);
  std::size_t total = 0, band = 0;
  bool passed = true;
  r["suites"] = ordered_json::array();
  for (const auto& s : results) {
    total += s.trials;
    band += s.band_hits;
    passed = passed && s.passed();
    r["suites"].push_back(s.to_json());
  }
  r["total_trials"] = total;
  r["band_hits"] = band;
  r["band_rate"] = total ? static_cast<double>(band) / static_cast<double>(total) : 0.0;
  r["passed"] = passed;
  const int code = passed ? kTrue : kFalse;
  r["exit_code"] = code;
  emit(out, r);
  return code;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. Reports go to out,
/// diagnostics to err; the return value is the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Birkhoff-James orthogonality in sup, L1 and Lp spaces over finite atomic measures"};
  app.require_subcommand(1);

  detail::CheckArgs check;
  auto* c = app.add_subcommand("check", "decide whether f is orthogonal to g");
  check.common.add_to(*c);
  c->add_option("--input", check.input, "JSON or CSV document")->required();
  c->add_option("--f", check.f, "name of f in the document")->required();
  c->add_option("--g", check.g, "name of g in the document")->required();
  c->add_flag("--oracle", check.oracle, "cross-check with brute-force norm minimisation");

  detail::ClassifyArgs cls;
  auto* k = app.add_subcommand("classify", "smoothness and left/right symmetry of f");
  cls.common.add_to(*k);
  k->add_option("--input", cls.input, "JSON or CSV document")->required();
  k->add_option("--f", cls.f, "name of f in the document")->required();
  k->add_flag("--witness", cls.witness, "attach oracle-verified witnesses for false flags");

  detail::SelftestArgs st;
  auto* s = app.add_subcommand("selftest", "randomised agreement and property suites");
  s->add_option("--trials", st.trials, "trials per suite")->capture_default_str();
  s->add_option("--seed", st.seed, "base seed (default: $BJORTHO_SEED, else 7)");
  s->add_option("--dim-max", st.dim_max, "largest number of atoms")->capture_default_str();
  s->add_option("--spaces", st.spaces, "comma-separated subset of sup,l1,lp")
      ->delimiter(',')
      ->check(CLI::IsMember({"sup", "l1", "lp"}));
  s->add_option("--p-list", st.p_list, "comma-separated exponents for lp")->delimiter(',');
  detail::Common::add_tolerances(*s, st.tol);

  std::vector<std::string> echo;
  for (int i = 1; i < argc; ++i) echo.emplace_back(argv[i]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }

  try {
    if (*c) return detail::run_check(check, echo, out);
    if (*k) return detail::run_classify(cls, echo, out);
    return detail::run_selftest(st, echo, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {  // AlignmentError, tolerance validation
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kMalformed;
}

}  // namespace bjortho::cli

#endif  // BJORTHO_CLI_HPP
