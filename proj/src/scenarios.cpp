#include "conekit/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "conekit/models.hpp"
#include "conekit/msec.hpp"
#include "conekit/orbit_graph.hpp"
#include "conekit/sampling.hpp"
#include "conekit/sl2.hpp"

namespace conekit {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

/// Collects checks and files for one run; flushing is atomic per file.
struct ScenarioOut {
  fs::path dir;
  json checks = json::array();
  std::vector<fs::path> files;
  json extra = json::object();

  void check(const std::string& name, bool passed, double value, double tol) {
    checks.push_back(
        {{"name", name}, {"passed", passed}, {"value", value}, {"tol", tol}});
  }

  void write_file(const std::string& name, const std::string& content) {
    fs::create_directories(dir);
    const fs::path tmp = dir / (name + ".tmp");
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
      out << content;
    }
    fs::rename(tmp, dir / name);
    files.push_back(dir / name);
  }

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.at("passed").get<bool>()) return false;
    return true;
  }
};

std::string report_csv(const VerifyReport& report) {
  std::ostringstream out;
  write_report_csv(report, out);
  return out.str();
}

Mat2 matrix_param(const json& params) {
  const auto& m = params.at("matrix");
  if (!m.is_array() || m.size() != 4)
    throw std::invalid_argument("matrix parameter must be [a, b, c, d]");
  return Mat2(m[0].get<double>(), m[1].get<double>(), m[2].get<double>(),
              m[3].get<double>());
}

std::vector<std::pair<GroupWord, GroupWord>> sample_word_pairs(
    Sampler& sampler, int generator_count, int count, int max_length) {
  std::vector<std::pair<GroupWord, GroupWord>> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    out.emplace_back(sampler.word(generator_count, max_length),
                     sampler.word(generator_count, max_length));
  return out;
}

AtomicMeasure p1_random_measure(Sampler& sampler, int atom_count) {
  std::vector<Atom> atoms;
  const auto weights = sampler.probability_weights(atom_count);
  for (int i = 0; i < atom_count; ++i) {
    Vec p(1);
    p[0] = sampler.uniform(0.0, kPi);
    atoms.push_back({std::move(p), weights[static_cast<std::size_t>(i)]});
  }
  return AtomicMeasure(std::move(atoms));
}

GroupModel p1_generator_model() {
  return GroupModel(2, {Mat2::diagonal(2.0).to_mat(),
                        Mat2::rotation(0.7).to_mat(),
                        Mat2::shear(0.8).to_mat()});
}

// ---------------------------------------------------------------- verify-pair

void run_verify_pair(const ScenarioRequest& req, ScenarioOut& out) {
  const std::string fixture = req.params.at("fixture").get<std::string>();
  const int samples = req.params.at("samples").get<int>();
  const int word_length = req.params.at("word_length").get<int>();
  const double tol = req.params.at("tol").get<double>();
  const double s = req.params.at("s").get<double>();
  Sampler sampler(req.seed);

  if (fixture == "sl2") {
    const GroupModel model = p1_generator_model();
    const SemiConicPair pair = p1_pair(s);

    std::vector<std::pair<Mat, Mat>> elements;
    for (int i = 0; i < samples; ++i)
      elements.emplace_back(sampler.word(3, word_length).evaluate(model),
                            sampler.word(3, word_length).evaluate(model));
    std::vector<Vec> points;
    for (int i = 0; i < 16; ++i) {
      Vec p(1);
      p[0] = sampler.uniform(0.0, kPi);
      points.push_back(p);
    }
    const VerifyReport law =
        verify_multiplier_law<Vec>(pair.rho, pair.sigma, elements, points, tol);
    out.check("cocycle-law", law.passed(), law.max_violation, tol);
    out.write_file("verify-pair-cocycle.csv", report_csv(law));

    const LiftedPair lifted = lift(pair);
    std::vector<MeasureSample> mixes;
    for (int i = 0; i < samples / 4 + 1; ++i)
      mixes.push_back({sampler.word(3, word_length).evaluate(model),
                       p1_random_measure(sampler, 4),
                       p1_random_measure(sampler, 3),
                       sampler.uniform(0.05, 0.95)});
    const ConicPairReport convex = verify_lifted_conic_pair(lifted, mixes, tol);
    out.check("lifted-affinity", convex.affinity.passed(),
              convex.affinity.max_violation, tol);
    out.check("lifted-mixing", convex.mixing.passed(),
              convex.mixing.max_violation, tol);
    out.write_file("verify-pair-affinity.csv", report_csv(convex.affinity));
    out.write_file("verify-pair-mixing.csv", report_csv(convex.mixing));
    return;
  }

  const GroupModel model = quadrant_monomial_model();
  const ConicPair base = induced_pair(model, quadrant_section());

  ConicPair pair = base;
  if (fixture == "example31-sigma2") {
    PointMultiplier sq = [sigma = base.sigma](const Mat& g, const Vec& x) {
      const double v = sigma(g, x);
      return v * v;
    };
    pair = ConicPair{base.section, base.rho, std::move(sq)};
  } else if (fixture == "example31-corrupted") {
    PointMultiplier bad = [sigma = base.sigma](const Mat& g, const Vec& x) {
      return sigma(g, x) * (1.0 + x[0]);
    };
    pair = ConicPair{base.section, base.rho, std::move(bad)};
  } else if (fixture != "example31") {
    throw std::invalid_argument("verify-pair: unknown fixture " + fixture);
  }

  const auto words =
      sample_word_pairs(sampler, static_cast<int>(model.generators().size()),
                        samples, word_length);
  std::vector<Vec> points;
  for (int i = 0; i < 12; ++i) points.push_back(sampler.section_point(pair.section));

  const VerifyReport law =
      verify_multiplier(pair.semi(), model, words, points, tol);
  out.check("cocycle-law", law.passed(), law.max_violation, tol);
  out.write_file("verify-pair-cocycle.csv", report_csv(law));

  std::vector<SectionSample> mixes;
  for (int i = 0; i < samples; ++i)
    mixes.push_back({sampler.word(2, word_length).evaluate(model),
                     sampler.section_point(pair.section),
                     sampler.section_point(pair.section),
                     sampler.uniform(0.05, 0.95)});
  const ConicPairReport convex = verify_conic_pair(pair, mixes, tol);
  out.check("multiplier-affinity", convex.affinity.passed(),
            convex.affinity.max_violation, tol);
  out.check("action-mixing", convex.mixing.passed(),
            convex.mixing.max_violation, tol);
  out.write_file("verify-pair-affinity.csv", report_csv(convex.affinity));
  out.write_file("verify-pair-mixing.csv", report_csv(convex.mixing));

  if (convex.passed()) {
    const PointAction act = synthesize_action(pair, mixes, tol);
    const ConicPair rebuilt = induced_pair(act, pair.section);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const Mat g = sampler.word(2, word_length).evaluate(model);
      const Vec x = sampler.section_point(pair.section);
      worst = std::max(worst, rel_gap(pair.sigma(g, x), rebuilt.sigma(g, x)));
      worst = std::max(worst, (pair.rho(g, x) - rebuilt.rho(g, x))
                                  .lpNorm<Eigen::Infinity>());
    }
    out.check("synthesis-round-trip", worst <= tol::identity, worst,
              tol::identity);
  }
}

// ------------------------------------------------------------------ example31

void run_example31(const ScenarioRequest& req, ScenarioOut& out) {
  const int samples = req.params.at("samples").get<int>();
  const int word_length = req.params.at("word_length").get<int>();
  const double tol = req.params.at("tol").get<double>();
  const int coverage_word_length = req.params.at("coverage_word_length").get<int>();
  const double coverage_tol = req.params.at("coverage_tol").get<double>();
  Sampler sampler(req.seed);

  const GroupModel model = quadrant_monomial_model();
  const ConicPair pair = induced_pair(model, quadrant_section());

  const auto words = sample_word_pairs(sampler, 2, samples, word_length);
  std::vector<Vec> points;
  for (int i = 0; i < 12; ++i) points.push_back(sampler.section_point(pair.section));
  const VerifyReport law = verify_multiplier(pair.semi(), model, words, points, tol);
  out.check("cocycle-law", law.passed(), law.max_violation, tol);
  out.write_file("example31-cocycle.csv", report_csv(law));

  std::vector<SectionSample> mixes;
  for (int i = 0; i < samples; ++i)
    mixes.push_back({sampler.word(2, word_length).evaluate(model),
                     sampler.section_point(pair.section),
                     sampler.section_point(pair.section),
                     sampler.uniform(0.05, 0.95)});
  const ConicPairReport convex = verify_conic_pair(pair, mixes, tol);
  out.check("multiplier-affinity", convex.affinity.passed(),
            convex.affinity.max_violation, tol);
  out.check("action-mixing", convex.mixing.passed(),
            convex.mixing.max_violation, tol);

  const GroupModel cover_model = quadrant_stretch_swap_model();
  const ConicPair cover_pair = induced_pair(cover_model, quadrant_section());
  const std::vector<Vec> targets{make_vec({1.0, 0.0}), make_vec({0.0, 1.0})};
  const CoverageReport coverage =
      orbit_coverage(cover_pair, cover_model, make_vec({0.3, 0.7}), targets,
                     coverage_word_length, coverage_tol);
  out.check("corner-coverage", coverage.covered,
            std::max(coverage.targets[0].min_distance,
                     coverage.targets[1].min_distance),
            coverage_tol);
  std::ostringstream cov;
  for (const auto& t : coverage.targets) {
    for (Eigen::Index i = 0; i < t.target.size(); ++i)
      cov << format_double(t.target[i]) << ',';
    cov << format_double(t.min_distance) << ',' << t.word_length << '\n';
  }
  out.write_file("example31-coverage.csv", cov.str());
  out.extra["points_visited"] = coverage.points_visited;

  std::vector<Mat> elements;
  for (int i = 0; i < 16; ++i)
    elements.push_back(sampler.word(2, word_length).evaluate(model));
  const InvarianceReport inv = invariant_section_check(
      model, pair.section, elements, points, tol::compositional);
  out.check("no-invariant-section", !inv.invariant, inv.max_violation,
            tol::compositional);
}

// ------------------------------------------------------------------ example81

void run_example81(const ScenarioRequest& req, ScenarioOut& out) {
  const int N = req.params.at("N").get<int>();
  const double tol = req.params.at("tol").get<double>();
  const double witness_tol = req.params.at("witness_tol").get<double>();
  const double ratio_tol = req.params.at("ratio_tol").get<double>();
  const int scan_length = req.params.at("scan_length").get<int>();

  const RSequence r = geometric_halving_r();
  const FixedEndpointChain chain = build_fixed_endpoint_chain(N, r);

  const TrivialityResult sep = solve_coboundary(chain.separated, tol);
  out.check("separated-trivial", sep.verdict == Verdict::Trivial,
            sep.verdict == Verdict::Trivial ? 0.0 : 1.0, 0.0);
  out.extra["separated_verdict"] = to_string(sep.verdict);

  double witness_gap = 1.0;
  if (sep.verdict == Verdict::Trivial) {
    witness_gap = 0.0;
    const double f0 = sep.witness.at("a_0");
    double partial = 1.0;
    for (int n = 1; n <= N; ++n) {
      partial *= r.value(n);
      const double fn = sep.witness.at("a_" + std::to_string(n)) / f0;
      witness_gap = std::max(witness_gap, rel_gap(fn, partial));
    }
    std::ostringstream w;
    for (const auto& label : chain.separated.nodes())
      w << label << ',' << format_double(sep.witness.at(label)) << '\n';
    out.write_file("example81-witness.csv", w.str());
  }
  out.check("separated-witness-partial-products", witness_gap <= witness_tol,
            witness_gap, witness_tol);

  const TrivialityResult glued = solve_coboundary(chain.identified, tol);
  out.check("identified-nontrivial", glued.verdict == Verdict::NonTrivial,
            glued.verdict == Verdict::NonTrivial ? 0.0 : 1.0, 0.0);
  out.extra["identified_verdict"] = to_string(glued.verdict);
  double ratio_gap = 1.0;
  if (glued.verdict == Verdict::NonTrivial) {
    ratio_gap = std::abs(glued.certificate.ratio - 0.5);
    out.extra["certificate"] = {{"constraint", glued.certificate.constraint},
                                {"ratio", glued.certificate.ratio}};
  }
  out.check("identified-certificate-ratio", ratio_gap <= ratio_tol, ratio_gap,
            ratio_tol);

  const auto [lo, hi] = boundedness_scan(chain.separated, scan_length);
  out.extra["scan"] = {{"min", lo}, {"max", hi}};
  out.check("separated-products-confined",
            lo >= 0.5 - 1e-9 && hi <= 2.0 + 1e-9 && hi >= 1.9,
            hi, 2.0 + 1e-9);
}

// ---------------------------------------------------------------------- coset

void run_coset(const ScenarioRequest& req, ScenarioOut& out) {
  const int fixtures = req.params.at("fixtures").get<int>();
  const int chain_N = req.params.at("chain_N").get<int>();
  const double tol = req.params.at("tol").get<double>();
  Sampler sampler(req.seed);

  int wrong = 0;
  std::ostringstream rows;
  for (int i = 0; i < fixtures; ++i) {
    std::string kind;
    bool expect_trivial = false;
    TrivialityResult got;

    if (i % 2 == 0) {
      // Same coset: random cycle, second weights differ by a coboundary.
      kind = "cycle-coboundary";
      expect_trivial = true;
      const int m = sampler.uniform_int(3, 8);
      OrbitGraph graph;
      std::vector<double> f, h;
      for (int k = 0; k < m; ++k) {
        graph.add_node("c" + std::to_string(k));
        f.push_back(sampler.uniform(0.5, 2.0));
        h.push_back(sampler.uniform(0.5, 2.0));
      }
      std::vector<double> s1, s2;
      for (int k = 0; k < m; ++k) {
        const int to = (k + 1) % m;
        const double base = sampler.uniform(0.5, 2.0);
        graph.add_edge("c" + std::to_string(k), "c" + std::to_string(to), "g",
                       base);
        s1.push_back(base * f[static_cast<std::size_t>(to)] /
                     f[static_cast<std::size_t>(k)]);
        s2.push_back(s1.back() * h[static_cast<std::size_t>(to)] /
                     h[static_cast<std::size_t>(k)]);
      }
      got = coset_equivalent(graph, s1, s2, tol);
    } else if (i % 4 == 1) {
      // Different coset: chain weights against the identity weights on the
      // glued graph; the mismatch survives at the identified endpoints.
      kind = "chain-vs-identity";
      expect_trivial = false;
      const FixedEndpointChain chain = build_fixed_endpoint_chain(chain_N);
      std::vector<double> s1, s2;
      for (const auto& e : chain.identified.edges()) {
        s1.push_back(e.sigma);
        s2.push_back(1.0);
      }
      got = coset_equivalent(chain.identified, s1, s2, tol);
    } else {
      // Different coset: coboundary spoiled on a single cycle edge.
      kind = "cycle-spoiled";
      expect_trivial = false;
      const int m = sampler.uniform_int(3, 8);
      OrbitGraph graph;
      std::vector<double> h;
      for (int k = 0; k < m; ++k) {
        graph.add_node("c" + std::to_string(k));
        h.push_back(sampler.uniform(0.5, 2.0));
      }
      std::vector<double> s1, s2;
      for (int k = 0; k < m; ++k) {
        const int to = (k + 1) % m;
        const double base = sampler.uniform(0.5, 2.0);
        graph.add_edge("c" + std::to_string(k), "c" + std::to_string(to), "g",
                       base);
        s1.push_back(base);
        const double spoil = k == 0 ? sampler.uniform(1.2, 1.6) : 1.0;
        s2.push_back(base * spoil * h[static_cast<std::size_t>(to)] /
                     h[static_cast<std::size_t>(k)]);
      }
      got = coset_equivalent(graph, s1, s2, tol);
    }

    const bool got_trivial = got.verdict == Verdict::Trivial;
    const bool correct =
        got.verdict != Verdict::Inconclusive && got_trivial == expect_trivial;
    if (!correct) ++wrong;
    rows << i << ',' << kind << ','
         << (expect_trivial ? "trivial" : "nontrivial") << ','
         << to_string(got.verdict) << ','
         << format_double(got.verdict == Verdict::NonTrivial
                              ? got.certificate.ratio
                              : 1.0)
         << ',' << (correct ? 1 : 0) << '\n';
  }
  out.write_file("coset-fixtures.csv", rows.str());
  out.check("zero-false-verdicts", wrong == 0, static_cast<double>(wrong), 0.0);
}

// ------------------------------------------------------------------ sl2-fixed

void run_sl2_fixed(const ScenarioRequest& req, ScenarioOut& out) {
  const Mat2 g = matrix_param(req.params);
  const double s = req.params.at("s").get<double>();
  const int N = req.params.at("N").get<int>();
  const int harmonics = req.params.at("test_harmonics").get<int>();
  const double mass_tol = req.params.at("mass_tol").get<double>();
  const double weak_tol = req.params.at("weak_tol").get<double>();

  const FixedMeasureReport report = fixed_measure_check(g, N, s, harmonics);
  out.check("lifted-multiplier-is-one", report.mass_violation <= mass_tol,
            report.mass_violation, mass_tol);
  out.check("weak-fixed-point", report.max_weak_residual <= weak_tol,
            report.max_weak_residual, weak_tol);
  out.extra["sigma_tilde"] = report.sigma_tilde;

  std::ostringstream curve;
  const AtomicMeasure m = p1_quadrature(N);
  for (const auto& a : m.atoms())
    curve << format_double(a.point[0]) << ','
          << format_double(sigma_p1_s(g, P1Point{a.point[0]}, s)) << '\n';
  out.write_file("sl2-fixed-sigma-curve.csv", curve.str());

  std::ostringstream h;
  for (const auto& [name, residual] : report.weak_residuals)
    h << name << ',' << format_double(residual) << '\n';
  out.write_file("sl2-fixed-harmonics.csv", h.str());
}

// -------------------------------------------------------- sl2-concentration

void run_sl2_concentration(const ScenarioRequest& req, ScenarioOut& out) {
  const Mat2 g = matrix_param(req.params);
  const int N = req.params.at("N").get<int>();
  const int iterations = req.params.at("iterations").get<int>();
  const double epsilon = req.params.at("epsilon").get<double>();
  const double excise = req.params.at("excise").get<double>();
  const double target = req.params.at("mass_target").get<double>();

  // Repelling direction, needed to excise atoms that cannot concentrate.
  const ConcentrationReport probe =
      proximality_concentration(g, p1_quadrature(4), 0, epsilon);

  const AtomicMeasure grid = p1_quadrature(N);
  std::vector<Atom> kept;
  for (const auto& a : grid.atoms())
    if (p1_distance(P1Point{a.point[0]}, P1Point{probe.repel_theta}) > excise)
      kept.push_back(a);
  const AtomicMeasure nu = normalize(AtomicMeasure(std::move(kept)));

  const ConcentrationReport report =
      proximality_concentration(g, nu, iterations, epsilon);

  bool nondecreasing = true;
  for (std::size_t n = 1; n < report.mass.size(); ++n)
    if (report.mass[n] < report.mass[n - 1] - 1e-12) nondecreasing = false;
  out.check("mass-curve-nondecreasing", nondecreasing,
            nondecreasing ? 0.0 : 1.0, 0.0);
  out.check("final-mass", report.mass.back() > target, report.mass.back(),
            target);
  out.extra["attract_theta"] = report.attract_theta;
  out.extra["repel_theta"] = report.repel_theta;

  std::ostringstream curve;
  for (std::size_t n = 0; n < report.mass.size(); ++n)
    curve << n << ',' << format_double(report.mass[n]) << '\n';
  out.write_file("sl2-concentration-mass-curve.csv", curve.str());
}

// --------------------------------------------------------------------- vsigma

void run_vsigma(const ScenarioRequest& req, ScenarioOut& out) {
  const double s = req.params.at("s").get<double>();
  const int base_count = req.params.at("base_points").get<int>();
  const int word_count = req.params.at("group_words").get<int>();
  const int word_length = req.params.at("word_length").get<int>();
  const double tol = req.params.at("tol").get<double>();
  Sampler sampler(req.seed);

  const GroupModel model = p1_generator_model();
  std::vector<Mat2> gs;
  for (int i = 0; i < word_count; ++i)
    gs.push_back(Mat2::from_mat(sampler.word(3, word_length).evaluate(model)));
  std::vector<P1Point> ys;
  for (int j = 0; j < base_count; ++j)
    ys.push_back(p1_point((static_cast<double>(j) + 0.5) * kPi /
                          static_cast<double>(base_count)));

  const Mat F = vsigma_sample(gs, ys, s);
  std::ostringstream rows;
  for (Eigen::Index i = 0; i < F.rows(); ++i)
    for (Eigen::Index j = 0; j < F.cols(); ++j)
      rows << i << ',' << j << ',' << format_double(F(i, j)) << '\n';
  out.write_file("vsigma-matrix.csv", rows.str());

  // The evaluation map intertwines: evaluating at g gamma factors through
  // the multiplier at gamma and the moved base point.
  double worst = 0.0;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (const Mat& gen : model.generators()) {
      const Mat2 gamma = Mat2::from_mat(gen);
      for (std::size_t j = 0; j < ys.size(); ++j) {
        const double lhs = sigma_p1_s(gs[i].compose(gamma), ys[j], s);
        const double rhs =
            sigma_p1_s(gamma, ys[j], s) * sigma_p1_s(gs[i], act_p1(gamma, ys[j]), s);
        worst = std::max(worst, rel_gap(lhs, rhs));
      }
    }
  }
  out.check("evaluation-equivariance", worst <= tol, worst, tol);
}

using Runner = void (*)(const ScenarioRequest&, ScenarioOut&);

struct Entry {
  ScenarioInfo info;
  Runner run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> r;
    r.push_back({{"verify-pair",
                  "cocycle law and convexity identities on a selected pair "
                  "fixture (example31, example31-sigma2, example31-corrupted, sl2)",
                  {{"fixture", "example31"},
                   {"s", 1.0},
                   {"samples", 200},
                   {"word_length", 6},
                   {"tol", 1e-10}}},
                 run_verify_pair});
    r.push_back({{"example31",
                  "positive monomial group on the quadrant: induced pair "
                  "checks, corner coverage, no invariant section",
                  {{"samples", 200},
                   {"word_length", 6},
                   {"tol", 1e-10},
                   {"coverage_word_length", 40},
                   {"coverage_tol", 1e-3}}},
                 run_example31});
    r.push_back({{"example81",
                  "fixed-endpoint chain: triviality on the separated graph, "
                  "obstruction on the glued graph, product confinement",
                  {{"N", 64},
                   {"tol", 1e-9},
                   {"witness_tol", 1e-10},
                   {"ratio_tol", 1e-10},
                   {"scan_length", 40}}},
                 run_example81});
    r.push_back({{"coset",
                  "randomized same-coset and different-coset fixtures, "
                  "counting false verdicts",
                  {{"fixtures", 50}, {"chain_N", 48}, {"tol", 1e-9}}},
                 run_coset});
    r.push_back({{"sl2-fixed",
                  "quadrature fixed-measure check for the angular Jacobian "
                  "family on the projective line",
                  {{"matrix", {2.0, 0.0, 0.0, 0.5}},
                   {"s", 1.0},
                   {"N", 2048},
                   {"iterations", 0},
                   {"epsilon", 0.0},
                   {"test_harmonics", 4},
                   {"mass_tol", 1e-6},
                   {"weak_tol", 1e-4}}},
                 run_sl2_fixed});
    r.push_back({{"sl2-concentration",
                  "mass concentration toward the attracting direction under "
                  "a hyperbolic element",
                  {{"matrix", {2.0, 0.0, 0.0, 0.5}},
                   {"s", 1.0},
                   {"N", 1024},
                   {"iterations", 12},
                   {"epsilon", 0.01},
                   {"test_harmonics", 4},
                   {"excise", 1e-3},
                   {"mass_target", 0.99}}},
                 run_sl2_concentration});
    r.push_back({{"vsigma",
                  "evaluation matrix of the multiplier family over sampled "
                  "group elements and base angles",
                  {{"s", 1.0},
                   {"base_points", 16},
                   {"group_words", 12},
                   {"word_length", 4},
                   {"tol", 1e-10}}},
                 run_vsigma});
    return r;
  }();
  return entries;
}

const Entry& find_entry(const std::string& kind) {
  for (const auto& e : registry())
    if (e.info.kind == kind) return e;
  throw std::invalid_argument("unknown scenario kind: " + kind);
}

}  // namespace

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> infos = [] {
    std::vector<ScenarioInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

nlohmann::json merged_params(const std::string& kind,
                             const nlohmann::json& overrides) {
  json params = find_entry(kind).info.defaults;
  if (!overrides.is_null()) {
    if (!overrides.is_object())
      throw std::invalid_argument("scenario parameters must be a JSON object");
    for (const auto& [key, value] : overrides.items()) {
      if (!params.contains(key))
        throw std::invalid_argument("unknown parameter '" + key +
                                    "' for scenario " + kind);
      params[key] = value;
    }
  }
  return params;
}

ScenarioResult run_scenario(const ScenarioRequest& request) {
  const Entry& entry = find_entry(request.kind);

  ScenarioRequest effective = request;
  effective.params = merged_params(request.kind, request.params);

  ScenarioOut out;
  out.dir = request.out_dir;

  const auto start = std::chrono::steady_clock::now();
  entry.run(effective, out);
  const auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();

  ScenarioResult result;
  result.all_passed = out.all_passed();
  result.summary = {{"scenario", request.kind},
                    {"seed", request.seed},
                    {"params", effective.params},
                    {"checks", out.checks},
                    {"passed", result.all_passed},
                    {"runtime_ms", elapsed}};
  if (!out.extra.empty()) result.summary["details"] = out.extra;
  json names = json::array();
  for (const auto& f : out.files) names.push_back(f.filename().string());
  result.summary["outputs"] = names;

  out.write_file(request.kind + "-summary.json", result.summary.dump(2) + "\n");
  result.outputs = out.files;
  return result;
}

}  // namespace conekit
