#include <gtest/gtest.h>

#include <hlip/hlip.hpp>

#include <cmath>
#include <json.hpp>

using namespace hlip;

namespace {

constexpr double kDelta0 = 0.5;
constexpr int kMaxExp = 6;

// Shared plan: h in 2^-3..2^-6 delta0, frequency radius 4/h_min.
const TransformPlan& plan() {
  static const TransformPlan p = make_plan(GridConfig{0.5, 30, auto_lambda_radius(kDelta0, kMaxExp), 64, 16});
  return p;
}

std::vector<double> hgrid() { return dyadic_h_grid(kDelta0, 3, kMaxExp); }

SpectralData synth(const std::string& m, Profile prof = Profile::smooth_tail) {
  return synthesize_from_tail({parse_modulus(m, kDelta0), 0.5, plan().lgrid().radius, prof}, plan().lgrid());
}

// Discrete tail at a cell boundary, where the construction telescopes.
double tail_above(const SpectralData& g, double y) {
  double s = 0;
  for (std::size_t j = 0; j < g.values.size(); ++j)
    if (std::fabs(g.lambda_grid.nodes[j]) >= y) s += g.lambda_grid.weights[j] * g.values[j] * g.values[j];
  return s;
}

}  // namespace

TEST(Grid, DyadicHGrid) {
  const std::vector<double> h = dyadic_h_grid(0.5, 3, 10);
  ASSERT_EQ(h.size(), 8u);
  EXPECT_EQ(h.front(), 0.0625);
  EXPECT_EQ(h.back(), 0.5 / 1024);
  EXPECT_EQ(auto_lambda_radius(0.5, 10), 8192);
  EXPECT_THROW(dyadic_h_grid(0.5, 5, 4), config_error);
}

TEST(Verdict, Rules) {
  EXPECT_EQ(classify_ratios({1, 1.2, 0.9, 1.1, 1.0}), Verdict::bounded);
  EXPECT_EQ(classify_ratios({1, 2, 4, 8, 16, 32}), Verdict::unbounded);
  // slow but persistent growth (slope -0.3 per log h)
  std::vector<double> slow;
  for (int k = 0; k < 8; ++k) slow.push_back(std::pow(2.0, 0.3 * k));
  EXPECT_EQ(classify_ratios(slow), Verdict::unbounded);
  EXPECT_EQ(classify_ratios({1, 30, 1, 1, 1}), Verdict::inconclusive);
  EXPECT_EQ(classify_ratios({0, 0, 0}), Verdict::bounded);
  EXPECT_EQ(classify_ratios({1e-30, 1e-26, 1e-22}, 1e-20), Verdict::bounded);
  EXPECT_EQ(classify_ratios({1, INFINITY}), Verdict::unbounded);
  EXPECT_EQ(classify_ratios({}), Verdict::inconclusive);
}

TEST(Verdict, LogLogSlope) {
  std::vector<double> h, r;
  for (int k = 0; k < 6; ++k) {
    h.push_back(std::ldexp(1.0, -k));
    r.push_back(3 * std::pow(h.back(), -1.2));
  }
  EXPECT_NEAR(loglog_slope(h, r), -1.2, 1e-12);
}

TEST(Synthesis, TailMatchesPhiOnDefaultGrid) {
  const WeightedGrid lg = build_weighted_grid(0.5, 64, 64, 16);
  for (double g : {0.5, 0.9}) {
    const ModulusSpec w = make_family(Family::power, {g}, kDelta0);
    const SpectralData s = synthesize_from_tail({w, 0.5, 64, Profile::sharp_tail}, lg);
    for (double v : s.values) EXPECT_GE(v, 0);
    for (std::size_t j = 0; j < s.values.size(); ++j) EXPECT_EQ(s.values[j], s.values[s.values.size() - 1 - j]);
    for (double y = 2; y <= 32; y *= 1.25) {
      const double phi = std::pow(w(1 / y), 2);
      EXPECT_NEAR(tail_energy(s, 1 / y, 2).value, phi, 0.02 * phi) << "gamma=" << g << " y=" << y;
    }
    // total mass telescopes to Phi(1/delta0) = delta0^{2 gamma}
    EXPECT_NEAR(tail_above(s, 0), std::pow(kDelta0, 2 * g), 1e-12);
  }
  const SpectralData s = synthesize_from_tail({parse_modulus("power:gamma=0.5"), 0.5, 64, Profile::sharp_tail}, lg);
  EXPECT_NEAR(tail_energy(s, 0.25, 2).value, 0.25, 0.005);
}

TEST(Synthesis, SmoothProfileMatchesAboveJunction) {
  const SpectralData s = synth("power:gamma=0.5");
  const double L = plan().lgrid().radius;
  for (double y = 8; y <= L / 2; y *= 1.5) EXPECT_NEAR(tail_energy(s, 1 / y, 2).value, 1 / y, 0.02 / y) << y;
}

TEST(Synthesis, Preconditions) {
  const WeightedGrid lg = build_weighted_grid(0.5, 64, 16, 8);
  // w(t)/t increasing: not a valid tail
  const ModulusSpec bad = make_custom([](double t) { return std::pow(t, 1.2); }, 0.5, "t^1.2");
  EXPECT_THROW(synthesize_from_tail({bad, 0.5, 64}, lg), precondition_error);
  EXPECT_THROW(synthesize_from_tail({parse_modulus("power:gamma=0.5"), 0.7, 64}, lg), config_error);
  EXPECT_THROW(synthesize_from_tail({parse_modulus("power:gamma=0.5"), 0.5, 128}, lg), config_error);
}

TEST(Seminorm, ZeroAndScaleEquivariance) {
  const std::vector<double> h = hgrid();
  const ModulusSpec w = parse_modulus("power:gamma=0.5");
  const FunctionSpec zero = make_function([](double) { return 0.0; }, 30);
  EXPECT_EQ(dlip_seminorm(zero, w, 2, h, plan()).value, 0.0);
  const FunctionSpec f = inverse(synth("power:gamma=0.5"), plan());
  const double s1 = dlip_seminorm(f, w, 2, h, plan()).value;
  EXPECT_NEAR(dlip_seminorm(scaled(f, -3), w, 2, h, plan()).value, 3 * s1, 1e-12 * s1);
  EXPECT_NEAR(dlip_seminorm(scaled(f, -3), w, 1.5, h, plan()).value,
              3 * dlip_seminorm(f, w, 1.5, h, plan()).value, 1e-9 * s1);
  EXPECT_THROW(dlip_seminorm(f, w, 1.0, h, plan()), domain_error);
}

TEST(Main1Part1, MatchedPairBounded) {
  const ModulusSpec w = parse_modulus("power:gamma=0.5");
  const VerificationReport r = verify_main1_part1(inverse(synth("power:gamma=0.5"), plan()), w, 2, plan(), hgrid());
  EXPECT_EQ(r.verdict, Verdict::bounded);
  EXPECT_GE(r.estimated_constant, 0.5);
  EXPECT_LE(r.estimated_constant, 2);
  EXPECT_LT(std::stod(r.diagnostic("route_max_rel_diff")), 1e-5);
  EXPECT_EQ(r.diagnostic("dlip_hypothesis"), "bounded");
}

TEST(Main1Part1, SmoothBumpBounded) {
  const VerificationReport r =
      verify_main1_part1(corpus_function("gauss_skew"), parse_modulus("power:gamma=0.3"), 2, plan(), hgrid());
  EXPECT_EQ(r.verdict, Verdict::bounded);
}

TEST(Main1Part1, HolderExponentBelowTwo) {
  const VerificationReport r =
      verify_main1_part1(corpus_function("gauss_skew"), parse_modulus("power:gamma=0.5"), 1.5, plan(), hgrid());
  EXPECT_EQ(r.verdict, Verdict::bounded);
  EXPECT_EQ(r.config[2].second, "1.5");
}

TEST(Main1Part1, MismatchedPairUnboundedWithPredictedSlope) {
  const ModulusSpec w = parse_modulus("power:gamma=0.9");
  const VerificationReport r = verify_main1_part1(inverse(synth("power:gamma=0.3"), plan()), w, 2, plan(), hgrid());
  EXPECT_EQ(r.verdict, Verdict::unbounded);
  EXPECT_NEAR(std::stod(r.diagnostic("loglog_slope")), 0.6 - 1.8, 0.15);
}

TEST(Main1Part1, PreconditionsAndDomain) {
  const FunctionSpec f = corpus_function("gauss");
  try {
    verify_main1_part1(f, parse_modulus("log_inverse:beta=2"), 2, plan(), hgrid());
    ADD_FAILURE() << "no precondition error";
  } catch (const precondition_error& e) {
    EXPECT_EQ(e.condition, "Z0");
  }
  EXPECT_THROW(verify_main1_part1(f, parse_modulus("power:gamma=0.5"), 2.5, plan(), hgrid()), domain_error);
  const std::vector<double> bad_h = {0.1, 0.2};
  EXPECT_THROW(verify_main1_part1(f, parse_modulus("power:gamma=0.5"), 2, plan(), bad_h), config_error);
}

TEST(Main1Part2, MatchedDataBounded) {
  for (const char* m : {"power:gamma=0.5", "power_log:gamma=0.5,theta=-1"}) {
    const VerificationReport r = verify_main1_part2(synth(m), parse_modulus(m, kDelta0), plan(), hgrid());
    EXPECT_EQ(r.verdict, Verdict::bounded) << m;
    EXPECT_LT(std::stod(r.diagnostic("route_max_rel_diff")), 1e-5) << m;
  }
}

// Spectrum supported in |lambda| <= 1: ||T_h f - f|| = O(h).
TEST(Main1Part2, CompactSpectrumBounded) {
  SpectralData g{0.5, plan().lgrid(), std::vector<double>(plan().lgrid().size())};
  for (std::size_t j = 0; j < g.values.size(); ++j) {
    const double l = g.lambda_grid.nodes[j];
    g.values[j] = std::fabs(l) < 1 ? std::exp(-1 / (1 - l * l)) : 0.0;
  }
  const VerificationReport r = verify_main1_part2(g, parse_modulus("power:gamma=0.5"), plan(), hgrid());
  EXPECT_EQ(r.verdict, Verdict::bounded);
  EXPECT_NEAR(loglog_slope(r.h_grid, r.ratios), 0.5, 0.05);
}

TEST(Main1Part2, Preconditions) {
  try {
    verify_main1_part2(synth("power:gamma=0.5"), parse_modulus("power:gamma=1"), plan(), hgrid());
    ADD_FAILURE() << "no precondition error";
  } catch (const precondition_error& e) {
    EXPECT_EQ(e.condition, "Z1");
  }
  try {
    verify_main1_part2(synth("power:gamma=0.3"), parse_modulus("power:gamma=0.9"), plan(), hgrid());
    ADD_FAILURE() << "no precondition error";
  } catch (const precondition_error& e) {
    EXPECT_EQ(e.condition, "tail");
  }
}

TEST(Equivalence, MatchedAndMismatched) {
  for (const char* m : {"power:gamma=0.5", "power_log:gamma=0.5,theta=-1"}) {
    const VerificationReport r = verify_equivalence(synth(m), parse_modulus(m, kDelta0), plan(), hgrid());
    EXPECT_EQ(r.verdict, Verdict::bounded) << m;
    EXPECT_EQ(r.diagnostic("statements_agree"), "true") << m;
  }
  const VerificationReport r =
      verify_equivalence(synth("power:gamma=0.3"), parse_modulus("power:gamma=0.9"), plan(), hgrid());
  EXPECT_EQ(r.verdict, Verdict::unbounded);
  EXPECT_EQ(r.diagnostic("tail_verdict"), "unbounded");
}

// Near nu = 1 the L^nu mass of the synthesized data settles only at large
// radii, so this check runs on the full-size grid.
TEST(FourierLnu, AcceptedRangeAndStabilization) {
  const TransformPlan big = make_plan(GridConfig{0.5, 30, auto_lambda_radius(kDelta0, 10), 128, 16});
  const ModulusSpec w = parse_modulus("power:gamma=0.5");
  const FunctionSpec f =
      inverse(synthesize_from_tail({w, 0.5, big.lgrid().radius}, big.lgrid()), big);
  EXPECT_EQ(verify_fourier_Lnu(f, w, 2, 1.0, big).verdict, Verdict::hypothesis_failed);
  for (double nu : {1.25, 1.5, 1.75, 2.0}) {
    const VerificationReport r = verify_fourier_Lnu(f, w, 2, nu, big);
    EXPECT_EQ(r.verdict, Verdict::bounded) << nu;
    EXPECT_LT(r.ratios.back(), 1.05) << nu;
  }
  EXPECT_THROW(verify_fourier_Lnu(f, w, 2, 2.5, big), domain_error);
  EXPECT_THROW(verify_fourier_Lnu(f, w, 1.5, 3.5, big), domain_error);
}

// (2a) p / (p gamma + (2a)(p - 1)) with a = 1/2, p = 2, gamma = 1/2 equals 1.
TEST(FourierLnu, ThresholdByBisection) {
  const ModulusSpec w = parse_modulus("power:gamma=0.5");
  double lo = 0.5, hi = 2;
  for (int i = 0; i < 30; ++i) {
    const double mid = (lo + hi) / 2;
    (check_two_conditions(w, 0.5, 2, mid).holds() ? hi : lo) = mid;
  }
  EXPECT_NEAR(hi, 1.0, 0.02);
  EXPECT_TRUE(check_two_conditions(w, 0.5, 2, 2).holds());
}

TEST(Main2, PowerModulusRescaling) {
  const ModulusSpec w = parse_modulus("power:gamma=0.5");
  const FunctionSpec f = inverse(synth("power:gamma=0.5"), plan());
  const VerificationReport a = verify_main1_part1(f, w, 2, plan(), hgrid());
  const VerificationReport b = verify_main2(f, w, Main2Mode::part1, 2, plan(), hgrid());
  EXPECT_EQ(b.theorem_id, TheoremId::main2_part1);
  for (std::size_t k = 0; k < a.ratios.size(); ++k) EXPECT_NEAR(b.ratios[k], a.ratios[k] / 4, 1e-5 * a.ratios[k]);
  EXPECT_NE(b.diagnostic("regime").find("outside"), std::string::npos);
}

TEST(Main2, LogModulusUsesWOmega) {
  const ModulusSpec w = parse_modulus("log_inverse:beta=2");
  const FunctionSpec f = inverse(synth("log_inverse:beta=2"), plan());
  EXPECT_THROW(verify_main1_part1(f, w, 2, plan(), hgrid()), precondition_error);
  const VerificationReport r = verify_main2(f, w, Main2Mode::part2, 2, plan(), hgrid());
  EXPECT_EQ(r.verdict, Verdict::bounded);
  EXPECT_EQ(r.config[3].second, "W[log_inverse:beta=2]");
}

TEST(Main2, AlphaAboveHalfRegime) {
  const TransformPlan p = make_plan(GridConfig{0.75, 30, 256, 48, 16});
  const VerificationReport r = verify_main2(corpus_function("gauss_skew"), parse_modulus("power:gamma=0.3"),
                                            Main2Mode::part1, 2, p, dyadic_h_grid(kDelta0, 3, 5));
  EXPECT_EQ(r.verdict, Verdict::bounded);
  EXPECT_EQ(r.diagnostic("regime"), "alpha > 1/2");
}

TEST(Inclusion, WSeminormDominatedOnCorpus) {
  const FunctionSpec f = corpus_function("gauss_skew");
  for (const char* m : {"power:gamma=0.5", "power:gamma=0.25", "power_log:gamma=0.5,theta=-1",
                        "power_logexponent:gamma=0.5,C=1,lambda=2"}) {
    const VerificationReport r = verify_inclusion(f, parse_modulus(m, kDelta0), 2, plan(), hgrid());
    EXPECT_LE(std::stod(r.diagnostic("seminorm_W")), 1.5 * std::stod(r.diagnostic("seminorm_omega"))) << m;
  }
  const VerificationReport l = verify_inclusion(f, parse_modulus("log_inverse:beta=2"), 2, plan(), hgrid());
  EXPECT_EQ(l.verdict, Verdict::bounded);
}

TEST(Report, DeterministicJsonAndCsv) {
  const ModulusSpec w = parse_modulus("power:gamma=0.5");
  auto run = [&] { return verify_equivalence(synth("power:gamma=0.5"), w, plan(), hgrid()); };
  const VerificationReport a = run(), b = run();
  EXPECT_EQ(to_json_string(a), to_json_string(b));
  EXPECT_EQ(to_csv(a), to_csv(b));
  const auto j = nlohmann::json::parse(to_json_string(a));
  EXPECT_EQ(j["theorem_id"], "equivalence");
  EXPECT_EQ(j["h_grid"].size(), a.h_grid.size());
  EXPECT_EQ(j["verdict"], "bounded");
  const std::string csv = to_csv(a);
  EXPECT_EQ(csv.rfind("# alpha=0.5 radius=", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'),
            static_cast<long>(2 + a.config.size() + a.diagnostics.size() + 1 + a.h_grid.size()));
}

TEST(Report, NonFiniteValuesStayValidJson) {
  VerificationReport r;
  r.h_grid = {0.1};
  r.ratios = {INFINITY};
  r.estimated_constant = NAN;
  const auto j = nlohmann::json::parse(to_json_string(r));
  EXPECT_EQ(j["ratios"][0], "inf");
  EXPECT_EQ(j["estimated_constant"], "nan");
}
