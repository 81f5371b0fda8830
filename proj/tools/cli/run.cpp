#include "cli/run.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cli/jobspec.hpp"
#include "cli/report.hpp"
#include "tcl/errors.hpp"

namespace tcl::cli {

namespace {

struct Options {
  std::string spec_path;
  std::string command;
  std::string ideal;
  unsigned power = 1;
  unsigned max_n = 6;
  std::optional<std::uint64_t> q_max;
  std::optional<std::uint64_t> degree;
  std::optional<std::string> element;
  std::optional<std::string> test_element;
  bool force = false;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  bool timing = false;
};

const char* const kEvidenceCaveat =
    "EVIDENCE_IN means no refutation up to q_max; it is not a proof of membership";
const char* const kSliceCaveat =
    "degree slices over-approximate the tight closure when q_max is finite";
const char* const kRStarCaveat =
    "r* is taken as the least n0 with J(J^n)* = (J^{n+1})* for all n >= n0, checked up to r_star_cap";

class Job {
 public:
  Job(const Options& opt, const JobSpec& spec, Report& report)
      : opt_(opt), spec_(spec), report_(report), ring_(build_ring(spec.ring)) {}

  const HypersurfaceRing& ring() const { return ring_; }

  void dispatch() {
    const std::string& c = opt_.command;
    if (c.empty()) return;
    if (c == "tight-closure") return tight_closure();
    if (c == "hilbert") return hilbert();
    if (c == "coeffs") return coeffs();
    if (c == "vv-check" || c == "buchsbaum-check" || c == "itoh-check") return identity(c);
    if (c == "certify") return certify();
    if (c == "slice") return slice();
    if (c == "reduction") return reduction();
    if (c == "report") return full_report();
    throw InputError("unknown command '" + c + "'");
  }

 private:
  const IdealBlock& ideal_block() const {
    if (!opt_.ideal.empty()) {
      if (const auto* b = spec_.find_ideal(opt_.ideal)) return *b;
      throw InputError("no ideal named '" + opt_.ideal + "' in the job file");
    }
    if (spec_.ideals.size() == 1) return spec_.ideals.front();
    if (spec_.ideals.empty()) throw InputError("command needs an [ideal.NAME] section");
    throw InputError("several ideals defined; choose one with --ideal");
  }

  const RIdeal& ideal() {
    if (!ideal_) ideal_ = build_ideal(ring_, ideal_block());
    return *ideal_;
  }

  const HsopIdeal& hsop() {
    if (!hsop_) hsop_ = validate_hsop(ideal());
    return *hsop_;
  }

  TightFiltration& filtration() {
    if (!filtration_) {
      filtration_.emplace(hsop(), opt_.force);
      license_caveat();
    }
    return *filtration_;
  }

  void license_caveat() {
    if (!ring_.formula_licensed())
      report_.caveat("closed form used outside its proven range (" + ring_.license_condition() +
                     "); results are conjectural");
  }

  std::uint64_t q_max() const {
    if (opt_.q_max) return *opt_.q_max;
    const std::uint64_t p = ring_.characteristic().value();
    return p * p * p;
  }

  TestElement test_element() const {
    if (opt_.test_element)
      return make_test_element(ring_, ring_.parse(*opt_.test_element),
                               *opt_.test_element + ": supplied by the caller (assumed test element)");
    return default_test_element(ring_);
  }

  void require_power() const {
    if (opt_.power < 1) throw InputError("--power must be at least 1");
  }

  void fail_if(bool failed) {
    if (failed) report_.checks_passed = false;
  }

  void tight_closure() {
    require_power();
    const ClosureResult c = closed_form_tight_closure(hsop(), opt_.power, opt_.force);
    if (c.conjectural) license_caveat();
    report_.results["tight_closure"] = closure_json(c);
  }

  void closures(unsigned n_max) {
    Json list = Json::array();
    for (unsigned n = 1; n <= n_max; ++n) list.push_back(closure_json(closed_form_tight_closure(hsop(), n, opt_.force)));
    report_.results["closures"] = std::move(list);
    license_caveat_if_forced();
  }

  void license_caveat_if_forced() {
    if (opt_.force) license_caveat();
  }

  void hilbert() {
    if (opt_.max_n < 1) throw InputError("--max-n must be at least 1");
    Json j;
    j["n_from"] = 1;
    j["values"] = filtration().tight_hilbert_series(opt_.max_n);
    report_.results["tight_hilbert"] = std::move(j);
  }

  void coeffs() {
    TightFiltration& tf = filtration();
    const FitResult fit = tf.fit_coefficients();
    Json j = fit_json(fit);
    Json hm = Json::array();
    bool agree = true;
    for (unsigned i = 1; i <= tf.dimension(); ++i) {
      const HuckabaMarleyResult h = tf.huckaba_marley_coefficient(i, tf.default_cap() + tf.dimension() + 8);
      agree = agree && h.value == fit.coefficients[i];
      hm.push_back(huckaba_marley_json(h));
    }
    j["huckaba_marley"] = std::move(hm);
    j["agree"] = agree;
    j["e1_vanishes"] = fit.coefficients.size() > 1 && fit.coefficients[1] == 0;
    fail_if(!agree);
    report_.results["coefficients"] = std::move(j);
  }

  void identity(const std::string& which) {
    TightFiltration& tf = filtration();
    IdentityCheckReport rep;
    std::string key;
    if (which == "vv-check") {
      rep = tf.vv_check(opt_.max_n);
      key = "vv_check";
    } else if (which == "buchsbaum-check") {
      rep = tf.buchsbaum_check(opt_.max_n);
      key = "buchsbaum_check";
    } else if (which == "itoh-check") {
      rep = tf.itoh_check(opt_.max_n);
      key = "itoh_check";
    } else {
      rep = tf.tightly_closed_powers_check(opt_.max_n);
      key = "tightly_closed_powers";
    }
    fail_if(rep.applicable && !rep.overall);
    report_.results[key] = identity_json(rep);
  }

  void certify() {
    require_power();
    if (!opt_.element) throw InputError("certify needs --element");
    const Poly z = ring_.parse(*opt_.element);
    const RIdeal K = ideal_power(ideal(), opt_.power);
    const TestElement c = test_element();
    const Certificate cert = certify_non_membership(z, K, c, q_max());
    const Certificate fc = frobenius_closure_member(z, K, q_max());
    Json j;
    j["power"] = opt_.power;
    j["test_element"] = ring_.format(c.c);
    j["tight_closure"] = certificate_json(cert);
    j["frobenius_closure"] = certificate_json(fc);
    report_.results["certificate"] = std::move(j);
    report_.caveat("refutations assume the test element: " + c.origin);
    if (cert.verdict == Verdict::EvidenceIn) report_.caveat(kEvidenceCaveat);
  }

  void slice() {
    require_power();
    if (!opt_.degree) throw InputError("slice needs --degree");
    const RIdeal K = ideal_power(ideal(), opt_.power);
    const TestElement c = test_element();
    const SliceResult s = tight_closure_degree_slice(K, *opt_.degree, c, q_max());
    Json j = slice_json(s, ring_);
    j["power"] = opt_.power;
    j["q_max"] = q_max();
    j["test_element"] = ring_.format(c.c);
    if (ring_.is_fermat() && (ring_.formula_licensed() || opt_.force)) {
      const ClosureResult cf = closed_form_tight_closure(hsop(), opt_.power, opt_.force);
      const std::uint64_t cf_dim = s.basis.size() - hilbert_function(cf.ideal, *opt_.degree);
      j["closed_form_dimension"] = cf_dim;
      j["agrees_with_closed_form"] = cf_dim == s.dimension();
      fail_if(cf_dim != s.dimension());
      if (cf.conjectural) license_caveat();
    }
    report_.results["slice"] = std::move(j);
    report_.caveat("slices assume the test element: " + c.origin);
    report_.caveat(kSliceCaveat);
  }

  void reduction() {
    report_.results["reduction"] = reduction_json(filtration().reduction_data());
    report_.caveat(kRStarCaveat);
  }

  void full_report() {
    filtration();
    closures(std::min(opt_.max_n, 3u));
    hilbert();
    coeffs();
    identity("vv-check");
    if (opt_.max_n >= 3) identity("buchsbaum-check");
    identity("itoh-check");
    identity("tightly-closed-powers");
    reduction();
    if (opt_.element) certify();
    if (opt_.degree) slice();
  }

  const Options& opt_;
  const JobSpec& spec_;
  Report& report_;
  HypersurfaceRing ring_;
  std::optional<RIdeal> ideal_;
  std::optional<HsopIdeal> hsop_;
  std::optional<TightFiltration> filtration_;
};

Json spec_echo(const Options& opt, const JobSpec& spec) {
  Json j;
  j["path"] = opt.spec_path;
  j["command"] = opt.command.empty() ? Json(nullptr) : Json(opt.command);
  Json ring;
  ring["p"] = spec.ring.p;
  if (spec.ring.is_fermat()) {
    ring["r"] = *spec.ring.r;
    ring["d"] = *spec.ring.d;
  } else {
    ring["vars"] = spec.ring.vars;
    if (spec.ring.relation) ring["relation"] = *spec.ring.relation;
  }
  j["ring"] = std::move(ring);
  Json ideals = Json::object();
  for (const auto& i : spec.ideals) ideals[i.name] = i.generators;
  j["ideals"] = std::move(ideals);
  Json params;
  if (!opt.ideal.empty()) params["ideal"] = opt.ideal;
  params["power"] = opt.power;
  params["max_n"] = opt.max_n;
  if (opt.q_max) params["q_max"] = *opt.q_max;
  if (opt.degree) params["degree"] = *opt.degree;
  if (opt.element) params["element"] = *opt.element;
  if (opt.test_element) params["test_element"] = *opt.test_element;
  params["force"] = opt.force;
  if (opt.seed) params["seed"] = *opt.seed;
  j["parameters"] = std::move(params);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open job file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Tight closure and tight filtration analysis on graded hypersurfaces", "tclose"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.add_option("spec", opt.spec_path, "Job file with [ring] and [ideal.NAME] sections")->required();
  app.add_option("--ideal", opt.ideal, "Name of the ideal to analyse");
  app.add_option("--power", opt.power, "Power n of the ideal");
  app.add_option("--max-n", opt.max_n, "Largest n for series and identity checks");
  app.add_option("--q-max", opt.q_max, "Largest Frobenius power scanned (default p^3)");
  app.add_option("--degree", opt.degree, "Degree t of the slice");
  app.add_option("--element", opt.element, "Element to certify");
  app.add_option("--test-element", opt.test_element, "Override the test element");
  app.add_flag("--force", opt.force, "Use the closed form outside its proven range");
  app.add_option("--seed", opt.seed, "Reserved; no computation is randomized");
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", opt.timing, "Record wall-clock time in the report");

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"tight-closure", "Closed-form tight closure of J^n"},
      {"hilbert", "Tight Hilbert function for n = 1..max-n"},
      {"coeffs", "Fitted e*_i with Huckaba-Marley cross-check"},
      {"vv-check", "Valabrega-Valla identity"},
      {"buchsbaum-check", "Buchsbaum identity"},
      {"itoh-check", "Itoh intersection identity"},
      {"certify", "Frobenius certificate for --element against J^n"},
      {"slice", "Degree slice of the tight closure of J^n"},
      {"reduction", "Reduction numbers and Rees algebra verdict"},
      {"report", "Everything above with defaults"},
  };
  for (const auto& [name, help] : commands) {
    std::string command_name = name;
    app.add_subcommand(name, help)->callback([&opt, command_name] { opt.command = command_name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const JobSpec spec = parse_job_spec(read_file(opt.spec_path));
    Report report;
    report.spec = spec_echo(opt, spec);
    Job job(opt, spec, report);
    report.ring = ring_json(job.ring());
    job.dispatch();
    if (opt.timing)
      report.timing_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << emit_report(report, opt.format == "text" ? Format::Text : Format::Json);
    if (!report.checks_passed) {
      err << "error: a mathematical check failed\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  } catch (const InconsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace tcl::cli
