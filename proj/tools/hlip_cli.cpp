// hlip: command-line driver for the transform, modulus calculus and the
// Titchmarsh-type verifiers.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <hlip/hlip.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace hlip;

struct Options {
  double alpha = 0.5;
  double p = 2;
  double nu = 2;
  double delta0 = 0.5;
  std::optional<double> radius_x, radius_lambda;
  std::optional<int> panels;
  int order = 16;
  int h_max_exp = 3, h_min_exp = 10;
  std::string modulus, theorem, function, spectrum, synth, tail_modulus, condition = "all";
  std::string profile = "smooth_tail", format = "csv", output;
};

void add_grid(CLI::App* c, Options& o) {
  c->add_option("--alpha", o.alpha, "Transform parameter alpha (> 1/4)");
  c->add_option("--radius-x", o.radius_x, "Spatial grid radius");
  c->add_option("--radius-lambda", o.radius_lambda, "Frequency grid radius");
  c->add_option("--panels", o.panels, "Panels per half-line");
  c->add_option("--order", o.order, "Gauss nodes per panel");
}

void add_output(CLI::App* c, Options& o) {
  c->add_option("--output,-o", o.output, "Report path");
  c->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
}

ModulusSpec modulus_of(const std::string& s, double delta0) {
  if (s.empty()) throw config_error("--modulus is required\nexpected " + modulus_grammar());
  return parse_modulus(s, delta0);
}

void write_file(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw config_error("cannot open '" + path + "' for writing");
  os << text;
}

std::string spectrum_json(const SpectralData& g) {
  nlohmann::ordered_json j;
  j["alpha"] = g.alpha;
  j["radius"] = g.lambda_grid.radius;
  j["panels"] = g.lambda_grid.panels;
  j["order"] = g.lambda_grid.order;
  j["lambda"] = g.lambda_grid.nodes;
  j["value"] = g.values;
  return j.dump(2) + "\n";
}

std::string spectrum_text(const SpectralData& g, const std::string& format) {
  if (format == "json") return spectrum_json(g);
  std::ostringstream os;
  write_csv(g, os);
  return os.str();
}

int run_transform(const Options& o) {
  const FunctionSpec f = corpus_function(o.function.empty() ? "gauss_skew" : o.function);
  GridConfig gc{o.alpha, o.radius_x.value_or(20), o.radius_lambda.value_or(64), o.panels.value_or(64), o.order};
  const TransformPlan plan = make_plan(gc);
  const SpectralData g = forward(f, plan);
  const double nf = weighted_norm(f, plan.xgrid(), 2), ng = weighted_norm(g.values, plan.lgrid(), 2);
  std::cout << "norm_x=" << fmt_double(nf) << " norm_lambda=" << fmt_double(ng)
            << " plancherel_rel_err=" << fmt_double(std::fabs(ng - nf) / nf) << "\n";
  write_file(o.output, spectrum_text(g, o.format));
  return 0;
}

int run_modulus_check(const Options& o) {
  const ModulusSpec w = modulus_of(o.modulus, o.delta0);
  const std::string& c = o.condition;
  int code = 0;
  if (c == "Z0" || c == "all") {
    const ZygmundTrace z = zygmund_Z0_trace(w);
    std::cout << "Z0=" << (z.divergent ? "divergent" : fmt_double(z.constant));
    if (z.divergent) std::cout << " (" << z.reason << ")";
    std::cout << "\n";
    if (z.divergent && c == "Z0") code = 2;
  }
  if (c == "Z1" || c == "all") {
    const ZygmundTrace z = zygmund_Z1_trace(w);
    std::cout << "Z1=" << (z.divergent ? "divergent" : fmt_double(z.constant));
    if (z.divergent) std::cout << " (" << z.reason << ")";
    std::cout << "\n";
    if (z.divergent && c == "Z1") code = 2;
  }
  if (c == "increasing" || c == "all") {
    const auto m = check_almost_monotone(w, Direction::almost_increasing, 1000);
    std::cout << "almost_increasing=" << (m.passed ? "true" : "false") << " constant=" << fmt_double(m.constant) << "\n";
    if (!m.passed && c == "increasing") code = 2;
  }
  if (c == "decreasing" || c == "all") {
    const auto m = check_almost_monotone(w, Direction::almost_decreasing, 1000);
    std::cout << "quotient_almost_decreasing=" << (m.passed ? "true" : "false")
              << " constant=" << fmt_double(m.constant) << "\n";
    if (!m.passed && c == "decreasing") code = 2;
  }
  if (c == "all") {
    const ModulusChecks k = check_modulus(w);
    std::cout << "modulus_checks=" << (k.all() ? "pass" : "fail") << "\n";
  }
  if (code == 2) std::cerr << "precondition failed: " << c << " for " << w.name << "\n";
  return code;
}

int run_indices(const Options& o) {
  const IndexEstimate e = estimate_indices(modulus_of(o.modulus, o.delta0));
  char buf[96];
  std::snprintf(buf, sizeof buf, "m=%.2f M=%.2f", e.m_lower, e.M_upper);
  std::cout << buf << " converged=" << (e.converged ? "true" : "false") << "\n";
  return 0;
}

Profile profile_of(const std::string& s) {
  if (s == "smooth_tail") return Profile::smooth_tail;
  if (s == "sharp_tail") return Profile::sharp_tail;
  throw config_error("unknown profile '" + s + "'");
}

int run_synth(const Options& o) {
  const ModulusSpec w = modulus_of(o.modulus, o.delta0);
  const double L = o.radius_lambda.value_or(auto_lambda_radius(w.delta0, o.h_min_exp));
  const WeightedGrid lg = build_weighted_grid(o.alpha, L, o.panels.value_or(128), o.order);
  const SpectralData g = synthesize_from_tail({w, o.alpha, L, profile_of(o.profile)}, lg);
  double worst = 0;
  for (double y = 2; y <= L / 2; y *= 2) {
    if (y < 1 / w.delta0) continue;
    const double phi = std::pow(w(1 / y), 2), t = tail_energy(g, 1 / y, 2).value;
    worst = std::max(worst, std::fabs(t - phi) / phi);
  }
  std::cout << "nodes=" << g.values.size() << " tail_max_rel_err=" << fmt_double(worst) << "\n";
  write_file(o.output, spectrum_text(g, o.format));
  return 0;
}

int run_titchmarsh(const Options& o) {
  if (o.theorem.empty()) throw config_error("--theorem is required");
  const TheoremId id = parse_theorem(o.theorem);
  const ModulusSpec w = modulus_of(o.modulus, o.delta0);
  if (!(o.h_max_exp < o.h_min_exp)) throw config_error("need --h-max-exp < --h-min-exp");
  if (!(o.p > 1 && o.p <= 2)) throw config_error("--p must lie in (1, 2]");
  const int sources = !o.function.empty() + !o.spectrum.empty() + !o.tail_modulus.empty() + !o.synth.empty();
  if (sources > 1) throw config_error("choose one of --synth, --tail-modulus, --function, --spectrum");
  if (!o.synth.empty() && o.synth != "matched") throw config_error("--synth accepts only 'matched'");

  std::optional<SpectralData> file_g;
  GridConfig gc{o.alpha, o.radius_x.value_or(30), 0, o.panels.value_or(128), o.order};
  gc.radius_lambda = o.radius_lambda.value_or(auto_lambda_radius(w.delta0, o.h_min_exp));
  if (!o.spectrum.empty()) {
    std::ifstream is(o.spectrum);
    if (!is) throw config_error("cannot read '" + o.spectrum + "'");
    file_g = read_csv(is);
    gc.alpha = file_g->alpha;
    gc.radius_lambda = file_g->lambda_grid.radius;
    gc.panels = file_g->lambda_grid.panels;
    gc.order = file_g->lambda_grid.order;
  }
  const TransformPlan plan = make_plan(gc);
  const std::vector<double> hs = dyadic_h_grid(w.delta0, o.h_max_exp, o.h_min_exp);

  // data source: spectral data g and its physical counterpart f
  SpectralData g;
  FunctionSpec f;
  if (!o.function.empty()) {
    f = corpus_function(o.function);
    g = spectrum_of(f, plan);
  } else {
    if (file_g) {
      g = *file_g;
    } else {
      const ModulusSpec tail = o.tail_modulus.empty() ? w : modulus_of(o.tail_modulus, o.delta0);
      g = synthesize_from_tail({tail, gc.alpha, gc.radius_lambda, profile_of(o.profile)}, plan.lgrid());
    }
    f = inverse(g, plan);
  }

  VerificationReport r;
  switch (id) {
    case TheoremId::main1_part1: r = verify_main1_part1(f, w, o.p, plan, hs); break;
    case TheoremId::main1_part2: r = verify_main1_part2(g, w, plan, hs); break;
    case TheoremId::equivalence: r = verify_equivalence(g, w, plan, hs); break;
    case TheoremId::fourier_Lnu: r = verify_fourier_Lnu(f, w, o.p, o.nu, plan); break;
    case TheoremId::main2_part1: r = verify_main2(f, w, Main2Mode::part1, o.p, plan, hs); break;
    case TheoremId::main2_part2: r = verify_main2(f, w, Main2Mode::part2, 2, plan, hs); break;
    case TheoremId::inclusion_Womega: r = verify_inclusion(f, w, o.p, plan, hs); break;
  }
  std::string source = "synth:matched";
  if (!o.function.empty()) source = "function:" + o.function;
  else if (!o.spectrum.empty()) source = "spectrum:" + o.spectrum;
  else if (!o.tail_modulus.empty()) source = "synth:" + o.tail_modulus;
  r.config.emplace_back("source", source);
  r.config.emplace_back("profile", o.profile);
  r.config.emplace_back("h_exponents", std::to_string(o.h_max_exp) + ".." + std::to_string(o.h_min_exp));
  write_file(o.output, o.format == "json" ? to_json_string(r) : to_csv(r));
  std::cout << "VERDICT=" << to_string(r.verdict) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Deformed Hankel transform and Titchmarsh-type verification"};
  app.require_subcommand(1);

  auto* tr = app.add_subcommand("transform", "Forward transform of a named test function");
  add_grid(tr, o);
  add_output(tr, o);
  tr->add_option("--function", o.function, "Test function name");

  auto* mc = app.add_subcommand("modulus-check", "Zygmund and monotonicity checks of a modulus");
  mc->add_option("--modulus", o.modulus, "Modulus specification")->required();
  mc->add_option("--delta0", o.delta0, "Right end of the modulus domain");
  mc->add_option("--condition", o.condition, "Condition to check")
      ->check(CLI::IsMember({"Z0", "Z1", "increasing", "decreasing", "all"}));

  auto* ix = app.add_subcommand("indices", "Lower and upper indices of a modulus");
  ix->add_option("--modulus", o.modulus, "Modulus specification")->required();
  ix->add_option("--delta0", o.delta0, "Right end of the modulus domain");

  auto* sy = app.add_subcommand("synth", "Spectral data with tail w^2(1/y)");
  sy->add_option("--modulus", o.modulus, "Modulus specification")->required();
  sy->add_option("--delta0", o.delta0, "Right end of the modulus domain");
  sy->add_option("--profile", o.profile, "smooth_tail or sharp_tail");
  sy->add_option("--h-min-exp", o.h_min_exp, "Smallest h exponent (sets the default frequency radius)");
  add_grid(sy, o);
  add_output(sy, o);

  auto* ti = app.add_subcommand("titchmarsh", "Run a theorem verifier");
  ti->add_option("--theorem", o.theorem, "main1_part1|main1_part2|equivalence|fourier_Lnu|main2_part1|main2_part2|"
                                         "inclusion_Womega")
      ->required();
  ti->add_option("--modulus", o.modulus, "Modulus specification")->required();
  ti->add_option("--delta0", o.delta0, "Right end of the modulus domain");
  ti->add_option("--p", o.p, "Exponent p in (1, 2]");
  ti->add_option("--nu", o.nu, "Exponent nu for fourier_Lnu");
  ti->add_option("--synth", o.synth, "Synthesize data from the tested modulus ('matched', the default source)");
  ti->add_option("--tail-modulus", o.tail_modulus, "Synthesize data from this modulus instead");
  ti->add_option("--function", o.function, "Use a named test function");
  ti->add_option("--spectrum", o.spectrum, "Use spectral data from a CSV written by 'synth'");
  ti->add_option("--profile", o.profile, "Synthesis profile: smooth_tail or sharp_tail");
  ti->add_option("--h-max-exp", o.h_max_exp, "h grid starts at 2^-k delta0 with this k");
  ti->add_option("--h-min-exp", o.h_min_exp, "h grid ends at 2^-k delta0 with this k");
  add_grid(ti, o);
  add_output(ti, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*tr) return run_transform(o);
    if (*mc) return run_modulus_check(o);
    if (*ix) return run_indices(o);
    if (*sy) return run_synth(o);
    return run_titchmarsh(o);
  } catch (const precondition_error& e) {
    std::cerr << "precondition failed (" << e.condition << "): " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
