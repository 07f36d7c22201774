#include "lefschetz/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "lefschetz/acceptance.hpp"
#include "lefschetz/criterion.hpp"
#include "lefschetz/errors.hpp"
#include "lefschetz/families.hpp"
#include "lefschetz/liaison.hpp"
#include "lefschetz/sweep.hpp"
#include "lefschetz/wlp.hpp"

namespace lefschetz::cli {

namespace {

using algebra::HomogeneousIdeal;
using arith::FieldSpec;
using sweep::Json;
namespace fam = families;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family;
  std::optional<int> r, k, d, a, b, c, alpha, beta, gamma, t, N;
  std::string gens, vars = "x,y,z";
  std::vector<std::uint64_t> chars;
  std::string strategy = "paper";
  std::size_t trials = 5;
  std::optional<std::uint64_t> seed;
  bool json = false, csv = false, details = false;
  std::string out_path;
  std::string form;
  std::optional<int> degree;
  std::string variant;
  // sweep
  std::string kind;
  sweep::SweepBounds bounds;
  unsigned jobs = 0;
  // verify-paper
  std::vector<int> only;
};

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing --") + flag);
  return *v;
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("LEFSCHETZ_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used, 0);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw UsageError(std::string("LEFSCHETZ_SEED is not an unsigned integer: ") + env);
    }
  }
  return wlp::kDefaultSeed;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

fam::FamilySpec family_spec(const Options& o, std::uint64_t seed) {
  const std::string& f = o.family;
  if (f == "irkd") return fam::Irkd{need(o.r, "r"), need(o.k, "k"), need(o.d, "d")};
  if (f == "irk") return fam::Irk{need(o.r, "r"), need(o.k, "k")};
  if (f == "irr") return fam::Irr{need(o.r, "r")};
  if (f == "jr") return fam::Jr{need(o.r, "r")};
  if (f == "aci3") {
    return fam::Aci3{need(o.a, "a"), need(o.b, "b"), need(o.c, "c"),
                     need(o.alpha, "alpha"), need(o.beta, "beta"), need(o.gamma, "gamma")};
  }
  if (f == "levelaci") return fam::LevelAci{need(o.alpha, "alpha"), need(o.beta, "beta"), need(o.gamma, "gamma"), need(o.t, "t")};
  if (f == "injn") {
    if (!o.variant.empty() && o.variant != "power" && o.variant != "general") {
      throw UsageError("--variant for injn is power or general");
    }
    return fam::Injn{need(o.N, "N"), o.variant == "general" ? fam::InjnVariant::General : fam::InjnVariant::Power, seed};
  }
  throw UsageError("unknown family '" + f + "'");
}

struct Subject {
  HomogeneousIdeal ideal;
  std::vector<std::string> names;
  std::string label;
};

Subject subject(const Options& o, std::uint64_t seed) {
  if (!o.gens.empty() && !o.family.empty()) throw UsageError("give either --family or --gens, not both");
  if (!o.gens.empty()) {
    const auto names = split_csv(o.vars);
    if (names.empty()) throw UsageError("--vars is empty");
    auto ideal = algebra::parse_ideal(o.gens, names, FieldSpec::rationals());
    auto label = ideal.to_string(names);
    return {std::move(ideal), names, std::move(label)};
  }
  if (o.family.empty()) throw UsageError("an ideal is needed: --family ... or --gens ... --vars ...");
  const auto spec = family_spec(o, seed);
  auto ideal = fam::make_ideal(spec);
  const auto names = algebra::default_variable_names(ideal.num_vars());
  return {std::move(ideal), names, fam::describe(spec)};
}

std::vector<FieldSpec> fields(const Options& o) {
  std::vector<FieldSpec> out;
  for (auto p : o.chars.empty() ? std::vector<std::uint64_t>{0} : o.chars) {
    try {
      out.push_back(FieldSpec::of_characteristic(p));
    } catch (const DomainError& e) {
      throw UsageError(std::string("--char: ") + e.what());
    }
  }
  return out;
}

std::string char_label(const FieldSpec& f) { return "char " + std::to_string(f.characteristic()); }

std::ostream& open_output(const Options& o, std::ostream& out, std::ofstream& file) {
  if (o.out_path.empty()) return out;
  file.open(o.out_path);
  if (!file) throw std::runtime_error("cannot open " + o.out_path + " for writing");
  return file;
}

// ---------------------------------------------------------------------------

int cmd_hilbert(const Options& o, std::ostream& out) {
  const auto s = subject(o, resolve_seed(o));
  const auto fs = fields(o);
  Json results = Json::array();
  std::vector<std::pair<FieldSpec, algebra::HilbertProfile>> profiles;
  for (const auto& f : fs) profiles.emplace_back(f, algebra::hilbert_profile(s.ideal, f));
  if (o.json) {
    for (const auto& [f, h] : profiles) {
      results.push_back({{"char", f.characteristic()}, {"hilbert", h.values}, {"socle_degree", h.socle_degree()}});
    }
    Json j{{"schema_version", sweep::kSchemaVersion}, {"ideal", s.label}, {"results", results}};
    out << j.dump() << '\n';
  } else if (o.csv) {
    out << "char,degree,h\n";
    for (const auto& [f, h] : profiles) {
      for (std::size_t d = 0; d < h.values.size(); ++d) out << f.characteristic() << ',' << d << ',' << h.values[d] << '\n';
    }
  } else {
    for (const auto& [f, h] : profiles) {
      if (profiles.size() > 1) out << char_label(f) << ": ";
      for (std::size_t d = 0; d < h.values.size(); ++d) out << (d ? " " : "") << h.values[d];
      out << '\n';
    }
  }
  return 0;
}

wlp::WlpOptions wlp_options(const Options& o, const Subject& s, std::uint64_t seed) {
  wlp::WlpOptions w;
  w.seed = seed;
  w.trials = o.trials;
  if (!o.form.empty()) {
    w.strategy = wlp::Strategy::Explicit;
    w.form = algebra::parse_polynomial(o.form, s.names, FieldSpec::rationals());
    return w;
  }
  if (o.strategy == "allones") {
    w.strategy = wlp::Strategy::AllOnes;
  } else if (o.strategy == "random") {
    w.strategy = wlp::Strategy::SeededRandom;
  } else if (o.strategy == "paper") {
    w.strategy = wlp::Strategy::FamilyForms;
    w.special_forms = fam::special_forms(s.ideal);
  } else {
    throw UsageError("--strategy is allones, random or paper");
  }
  return w;
}

std::string verdict_line(const wlp::WlpVerdict& v) {
  std::string line = std::string("WLP: ") + (v.has_wlp ? "holds" : "fails") +
                     (v.conclusive ? " (conclusive)" : " (not conclusive)");
  if (!v.has_wlp) {
    line += " at";
    for (int d : v.failure_degrees) line += " " + std::to_string(d) + "->" + std::to_string(d + 1);
  }
  return line;
}

int cmd_wlp(const Options& o, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(o);
  const auto s = subject(o, seed);
  const auto options = wlp_options(o, s, seed);
  const auto fs = fields(o);
  std::vector<wlp::WlpVerdict> vs;
  for (const auto& f : fs) vs.push_back(wlp::wlp_check(s.ideal, f, options));
  if (o.json) {
    Json arr = Json::array();
    for (const auto& v : vs) {
      Json j = sweep::verdict_json(v);
      j["form"] = v.form_used.to_string(s.names);
      Json reports = Json::array();
      for (const auto& r : v.reports) {
        reports.push_back({{"d", r.d}, {"h_d", r.h_d}, {"h_d1", r.h_d1}, {"rank", r.rank},
                           {"injective", r.injective}, {"surjective", r.surjective},
                           {"maximal", r.maximal}, {"inferred", r.inferred}});
      }
      j["reports"] = reports;
      arr.push_back(j);
    }
    Json j{{"schema_version", sweep::kSchemaVersion}, {"ideal", s.label}, {"seed", seed},
           {"strategy", options.strategy == wlp::Strategy::Explicit ? "explicit" : o.strategy},
           {"verdicts", arr}};
    out << j.dump() << '\n';
    return 0;
  }
  if (o.csv) {
    out << "char,d,h_d,h_d1,rank,injective,surjective,maximal\n";
    for (const auto& v : vs) {
      for (const auto& r : v.reports) {
        out << v.field.characteristic() << ',' << r.d << ',' << r.h_d << ',' << r.h_d1 << ',' << r.rank << ','
            << r.injective << ',' << r.surjective << ',' << r.maximal << '\n';
      }
    }
    return 0;
  }
  for (const auto& v : vs) {
    if (vs.size() > 1) out << char_label(v.field) << ": ";
    out << verdict_line(v) << '\n';
    if (o.details) {
      out << "  form " << v.form_used.to_string(s.names) << " (" << v.forms_tried << " tried, seed " << seed << ")\n";
      for (const auto& r : v.reports) {
        out << "  " << r.d << "->" << r.d + 1 << "  " << r.h_d << " -> " << r.h_d1 << "  rank " << r.rank
            << (r.maximal ? "" : "  NOT MAXIMAL") << (r.inferred ? "  (inferred)" : "") << '\n';
      }
    }
  }
  return 0;
}

int cmd_detm(const Options& o, std::ostream& out) {
  const int al = need(o.alpha, "alpha"), be = need(o.beta, "beta"), ga = need(o.gamma, "gamma"), t = need(o.t, "t");
  const auto rep = criterion::criterion_report(al, be, ga, t);
  Json factors = Json::object();
  for (const auto& [p, e] : rep.factors.factors) factors[p.get_str()] = e;
  if (!rep.factors.complete()) factors["cofactor"] = rep.factors.cofactor.get_str();
  const mpz_class magnitude = abs(rep.det);
  if (o.json) {
    Json matrix = Json::array();
    for (std::size_t i = 0; i < rep.M.rows(); ++i) {
      Json row = Json::array();
      for (const auto& v : rep.M.row(i)) row.push_back(v.get_str());
      matrix.push_back(row);
    }
    Json j{{"det", magnitude.get_str()},
           {"factors", factors},
           {"signed_det", rep.det.get_str()},
           {"size", rep.size},
           {"fails_in_every_characteristic", rep.fails_in_every_characteristic},
           {"failing_characteristics", rep.failing_characteristics},
           {"params", {{"alpha", al}, {"beta", be}, {"gamma", ga}, {"t", t}}},
           {"matrix", matrix},
           {"schema_version", sweep::kSchemaVersion}};
    out << j.dump() << '\n';
    return 0;
  }
  out << "M (" << rep.size << "x" << rep.size << "):\n";
  for (std::size_t i = 0; i < rep.M.rows(); ++i) {
    out << " ";
    for (const auto& v : rep.M.row(i)) out << ' ' << v.get_str();
    out << '\n';
  }
  out << "det = " << rep.det.get_str();
  if (rep.det != 0) {
    out << " = " << (rep.det < 0 ? "-" : "");
    bool first = true;
    for (const auto& [p, e] : rep.factors.factors) {
      out << (first ? "" : " * ") << p.get_str();
      if (e > 1) out << '^' << e;
      first = false;
    }
    if (!rep.factors.complete()) out << (first ? "" : " * ") << rep.factors.cofactor.get_str() << " (unfactored)";
    if (first && rep.factors.complete()) out << '1';
  }
  out << '\n';
  if (rep.fails_in_every_characteristic) {
    out << "WLP fails in every characteristic\n";
  } else if (rep.failing_characteristics.empty()) {
    out << "WLP holds in every characteristic\n";
  } else {
    out << "WLP fails exactly in characteristics";
    for (auto p : rep.failing_characteristics) out << ' ' << p;
    out << '\n';
  }
  return 0;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(o);
  const auto s = subject(o, seed);
  const int degree = need(o.degree, "degree");
  std::optional<algebra::HomogeneousPolynomial> form;
  if (!o.form.empty()) form = algebra::parse_polynomial(o.form, s.names, FieldSpec::rationals());
  const auto fs = fields(o);
  Json arr = Json::array();
  for (const auto& f : fs) {
    const auto w = wlp::kernel_witness(s.ideal, f, degree, form);
    if (o.json) {
      arr.push_back({{"char", f.characteristic()}, {"degree", degree},
                     {"witness", w ? Json(w->to_string(s.names)) : Json()}, {"verified", w.has_value()}});
    } else {
      if (fs.size() > 1) out << char_label(f) << ": ";
      out << (w ? w->to_string(s.names) : "none") << '\n';
    }
  }
  if (o.json) {
    out << Json{{"schema_version", sweep::kSchemaVersion}, {"ideal", s.label}, {"results", arr}}.dump() << '\n';
  }
  return 0;
}

int cmd_chain(const Options& o, std::ostream& out) {
  const int r = need(o.r, "r");
  liaison::ChainVariant variant = liaison::ChainVariant::Irr;
  const std::string which = o.variant.empty() ? (o.family.empty() ? "irr" : o.family) : o.variant;
  if (which == "jr") {
    variant = liaison::ChainVariant::Jr;
  } else if (which != "irr") {
    throw UsageError("chain variant is irr or jr");
  }
  const auto chain = liaison::bdl_chain(r, variant);
  const auto names = algebra::default_variable_names(static_cast<std::size_t>(r));
  if (o.json) {
    Json arr = Json::array();
    for (const auto& st : chain) {
      arr.push_back({{"step", st.index},
                     {"ideal", st.ideal.to_string()},
                     {"link_variable", st.link_variable < 0 ? Json() : Json(names[static_cast<std::size_t>(st.link_variable)])},
                     {"link_ci_degrees", st.link_ci_degrees},
                     {"hvector", st.hvector.values}});
    }
    out << Json{{"schema_version", sweep::kSchemaVersion}, {"r", r}, {"variant", which}, {"chain", arr}}.dump() << '\n';
    return 0;
  }
  for (const auto& st : chain) {
    out << "J" << st.index << " = " << st.ideal.to_string() << '\n';
    if (st.link_variable >= 0) {
      out << "   via " << names[static_cast<std::size_t>(st.link_variable)] << " * J" << st.index - 1 << " + CI(";
      for (std::size_t i = 0; i < st.link_ci_degrees.size(); ++i) out << (i ? "," : "") << st.link_ci_degrees[i];
      out << ")\n";
    }
    out << "   h:";
    for (long v : st.hvector.values) out << ' ' << v;
    out << '\n';
  }
  return 0;
}

int cmd_betti(const Options& o, std::ostream& out) {
  const auto spec = family_spec(o, resolve_seed(o));
  const auto table = fam::betti_table(spec);
  if (o.json) {
    Json mods = Json::array();
    for (const auto& mod : table.modules) {
      Json m = Json::array();
      for (const auto& s : mod) m.push_back({{"shift", s.shift}, {"multiplicity", s.multiplicity}});
      mods.push_back(m);
    }
    out << Json{{"schema_version", sweep::kSchemaVersion}, {"family", fam::describe(spec)},
                {"modules", mods}, {"minimal", table.minimal}, {"hilbert", table.hilbert}}
               .dump()
        << '\n';
    return 0;
  }
  out << fam::describe(spec) << '\n';
  for (std::size_t i = 0; i < table.modules.size(); ++i) {
    out << "F" << i << ":";
    for (std::size_t j = 0; j < table.modules[i].size(); ++j) {
      const auto& s = table.modules[i][j];
      out << (j ? " +" : "") << " R";
      if (s.shift) out << "(-" << s.shift << ")";
      if (s.multiplicity != 1) out << "^" << s.multiplicity;
    }
    out << '\n';
  }
  out << "minimal: " << (table.minimal ? "yes" : "no") << '\n' << "hilbert:";
  for (long v : table.hilbert) out << ' ' << v;
  out << '\n';
  return 0;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto kind = sweep::parse_kind(o.kind);
  if (!kind) throw UsageError("--kind is half-conj, conj-wlp-d456, aci3-mod3 or injn");
  sweep::SweepConfig config;
  config.kind = *kind;
  config.bounds = o.bounds;
  config.characteristics = o.chars;
  config.seed = resolve_seed(o);
  config.trials = o.trials;
  config.jobs = o.jobs;
  for (auto p : config.characteristics) {
    if (p != 0 && !arith::is_prime(p)) throw UsageError("--char must be 0 or a prime");
  }
  sweep::SweepResult result;
  if (o.out_path.empty()) {
    result = sweep::run_sweep(config, out);
    return result.not_ok ? 1 : 0;
  }
  std::ofstream jsonl(o.out_path);
  if (!jsonl) throw std::runtime_error("cannot open " + o.out_path + " for writing");
  const std::string csv_path = std::filesystem::path(o.out_path).replace_extension(".csv").string();
  std::ofstream csv(csv_path);
  if (!csv) throw std::runtime_error("cannot open " + csv_path + " for writing");
  result = sweep::run_sweep(config, jsonl, &csv);
  out << "wrote " << result.records << " records to " << o.out_path << " (summary " << csv_path << ", seed "
      << config.seed << ")";
  if (result.not_ok) out << "; " << result.not_ok << " records failed checks";
  out << '\n';
  return result.not_ok ? 1 : 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto outcomes = acceptance::run(o.only);
  std::size_t passed = 0;
  Json arr = Json::array();
  for (const auto& oc : outcomes) {
    passed += oc.pass;
    if (o.json) {
      arr.push_back({{"id", oc.id}, {"title", oc.title}, {"pass", oc.pass}, {"detail", oc.detail}, {"seconds", oc.seconds}});
    } else {
      out << acceptance::format(oc) << '\n';
    }
  }
  if (o.json) {
    out << Json{{"schema_version", sweep::kSchemaVersion}, {"passed", passed}, {"total", outcomes.size()}, {"criteria", arr}}.dump()
        << '\n';
  } else {
    out << passed << "/" << outcomes.size() << " criteria passed\n";
  }
  return passed == outcomes.size() ? 0 : 1;
}

void ideal_flags(CLI::App* sub, Options& o) {
  sub->add_option("--family", o.family, "irkd, irk, irr, jr, aci3, levelaci or injn");
  sub->add_option("--r", o.r);
  sub->add_option("--k", o.k);
  sub->add_option("--d", o.d);
  sub->add_option("--a", o.a);
  sub->add_option("--b", o.b);
  sub->add_option("--c", o.c);
  sub->add_option("--alpha", o.alpha);
  sub->add_option("--beta", o.beta);
  sub->add_option("--gamma", o.gamma);
  sub->add_option("--t", o.t);
  sub->add_option("--N", o.N);
  sub->add_option("--variant", o.variant, "injn: power or general; chain: irr or jr");
  sub->add_option("--gens", o.gens, "generators, e.g. \"x^2, y^2, z^2\"");
  sub->add_option("--vars", o.vars, "comma-separated variable names (default x,y,z)");
}

void common_flags(CLI::App* sub, Options& o) {
  sub->add_option("--char", o.chars, "0 or a prime; repeatable");
  sub->add_option("--seed", o.seed, "seed for random forms (default 0xC0C0A, or LEFSCHETZ_SEED)");
  sub->add_option("--trials", o.trials, "random forms to try")->check(CLI::Range(0, 1000));
  sub->add_flag("--json", o.json);
  sub->add_flag("--csv", o.csv);
  sub->add_option("--out", o.out_path, "write output to a file");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Lefschetz Property checks for Artinian algebras", "lefschetz"};
  app.require_subcommand(1);
  Options o;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of R/I");
  auto* wlp_cmd = app.add_subcommand("wlp", "decide the Weak Lefschetz Property");
  auto* detm = app.add_subcommand("detm", "determinant criterion for (x^(a+t), y^(b+t), z^(c+t), x^a y^b z^c)");
  auto* witness = app.add_subcommand("witness", "kernel element of multiplication by a linear form");
  auto* chain = app.add_subcommand("chain", "Hilbert functions along the basic double link chain");
  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep written as JSON lines");
  auto* betti = app.add_subcommand("betti", "graded Betti numbers");
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance suite");

  for (auto* sub : {hilbert, wlp_cmd, witness, betti}) ideal_flags(sub, o);
  for (auto* sub : {hilbert, wlp_cmd, detm, witness, chain, sweep_cmd, betti, verify}) common_flags(sub, o);
  wlp_cmd->add_option("--strategy", o.strategy, "allones, random or paper (default)");
  wlp_cmd->add_option("--form", o.form, "check this linear form only");
  wlp_cmd->add_flag("--details", o.details, "print the per-degree ranks");
  witness->add_option("--degree", o.degree, "source degree")->required();
  witness->add_option("--form", o.form, "linear form (default: sum of the variables)");
  for (auto* name : {"--alpha", "--beta", "--gamma", "--t"}) {
    std::optional<int>* target = std::string(name) == "--alpha" ? &o.alpha
                                 : std::string(name) == "--beta" ? &o.beta
                                 : std::string(name) == "--gamma" ? &o.gamma
                                                                  : &o.t;
    detm->add_option(name, *target)->required();
  }
  chain->add_option("--r", o.r)->required();
  chain->add_option("--family", o.family, "irr (default) or jr");
  chain->add_option("--variant", o.variant, "irr (default) or jr");
  betti->add_option("--strategy", o.strategy);  // accepted for uniformity, unused

  sweep_cmd->add_option("--kind", o.kind, "half-conj, conj-wlp-d456, aci3-mod3 or injn")->required();
  sweep_cmd->add_option("--max-sum", o.bounds.max_sum, "half-conj: alpha + beta + gamma bound");
  sweep_cmd->add_option("--t-extra", o.bounds.t_extra, "half-conj: t runs over s .. s + t-extra");
  sweep_cmd->add_option("--wlp-max-sum", o.bounds.wlp_max_sum, "half-conj: rank checks up to this sum");
  sweep_cmd->add_option("--r-min", o.bounds.r_min);
  sweep_cmd->add_option("--r-max", o.bounds.r_max);
  sweep_cmd->add_option("--k-min", o.bounds.k_min);
  sweep_cmd->add_option("--k-max", o.bounds.k_max);
  sweep_cmd->add_option("--degrees", o.bounds.degrees, "conj-wlp-d456: values of d");
  sweep_cmd->add_option("--max-param", o.bounds.max_param, "aci3-mod3: bound on a, b, c");
  sweep_cmd->add_option("--n-min,--N-min", o.bounds.n_min);
  sweep_cmd->add_option("--n-max,--N-max", o.bounds.n_max);
  sweep_cmd->add_option("--seeds", o.bounds.seeds, "injn: general forms per N");
  sweep_cmd->add_option("--jobs", o.jobs, "worker threads (default: all cores)");
  verify->add_option("--only", o.only, "criterion numbers to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (o.json && o.csv) {
    err << "error: --json and --csv are exclusive\n";
    return 2;
  }

  try {
    std::ofstream file;
    // sweep handles --out itself (JSON lines plus a CSV next to it)
    std::ostream& target = sweep_cmd->parsed() ? out : open_output(o, out, file);
    if (hilbert->parsed()) return cmd_hilbert(o, target);
    if (wlp_cmd->parsed()) return cmd_wlp(o, target);
    if (detm->parsed()) return cmd_detm(o, target);
    if (witness->parsed()) return cmd_witness(o, target);
    if (chain->parsed()) return cmd_chain(o, target);
    if (sweep_cmd->parsed()) return cmd_sweep(o, target);
    if (betti->parsed()) return cmd_betti(o, target);
    if (verify->parsed()) return cmd_verify(o, target);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {  // DimensionError
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {  // DomainError, NotArtinianError
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {  // UnsupportedError
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace lefschetz::cli
