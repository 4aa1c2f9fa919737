#include "isocoh/verify.hpp"

#include "isocoh/geometry.hpp"
#include "isocoh/reps.hpp"
#include "isocoh/warped.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace isocoh {

// ---------------------------------------------------------------------------
// Configuration

double Tolerances::value(ToleranceClass c) const {
  switch (c) {
    case ToleranceClass::Exact:
      return 0.0;
    case ToleranceClass::Algebraic:
      return algebraic;
    case ToleranceClass::FiniteDifference:
      return finite_difference;
    case ToleranceClass::Curvature:
      return curvature;
    case ToleranceClass::Anticommutation:
      return anticommutation;
    case ToleranceClass::Flatness:
      return flatness;
  }
  return 0.0;
}

const std::vector<std::string>& claim_groups() {
  static const std::vector<std::string> groups{"tables", "jacobi", "heisenberg", "curvature", "splitting", "catalog"};
  return groups;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_value(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  std::istringstream in(s);
  T v{};
  in >> v;
  if (s.empty() || in.fail() || !in.eof()) throw ConfigError("config: invalid value for '" + key + "': '" + raw + "'");
  return v;
}

}  // namespace

VerifyConfig parse_config(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  VerifyConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) throw ConfigError("config: key '" + section + "' outside a section");
    if (section == "run") {
      for (const auto& [key, node] : body) {
        const std::string v = node.data();
        if (key == "groups") {
          std::istringstream gs(v);
          std::string g;
          while (std::getline(gs, g, ',')) {
            g = trim(g);
            if (g.empty()) continue;
            const auto& all = claim_groups();
            if (std::find(all.begin(), all.end(), g) == all.end()) throw ConfigError("config: unknown group '" + g + "'");
            cfg.groups.push_back(g);
          }
        } else if (key == "seed") {
          cfg.seed = parse_value<std::uint64_t>("run.seed", v);
        } else if (key == "samples") {
          cfg.samples = parse_value<int>("run.samples", v);
          if (cfg.samples < 1) throw ConfigError("config: run.samples must be >= 1");
        } else if (key == "threads") {
          cfg.threads = parse_value<int>("run.threads", v);
          if (cfg.threads < 0) throw ConfigError("config: run.threads must be >= 0");
        } else {
          throw ConfigError("config: unknown key 'run." + key + "'");
        }
      }
    } else if (section == "tolerance") {
      for (const auto& [key, node] : body) {
        const double v = parse_value<double>("tolerance." + key, node.data());
        if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("config: tolerance." + key + " must be >= 0");
        if (key == "algebraic") {
          cfg.tolerances.algebraic = v;
        } else if (key == "finite_difference") {
          cfg.tolerances.finite_difference = v;
        } else if (key == "curvature") {
          cfg.tolerances.curvature = v;
        } else if (key == "anticommutation") {
          cfg.tolerances.anticommutation = v;
        } else if (key == "flatness") {
          cfg.tolerances.flatness = v;
        } else {
          throw ConfigError("config: unknown key 'tolerance." + key + "'");
        }
      }
    } else {
      throw ConfigError("config: unknown section '" + section + "'");
    }
  }
  return cfg;
}

VerifyConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

// ---------------------------------------------------------------------------
// Outcomes

ClaimOutcome exact_outcome(const Json& computed, const Json& expected) {
  ClaimOutcome o;
  o.computed = computed;
  o.expected = expected;
  o.pass = computed == expected;
  if (computed.is_number() && expected.is_number()) {
    o.residual = std::abs(computed.get<double>() - expected.get<double>());
  } else {
    o.residual = o.pass ? 0.0 : 1.0;
  }
  if (!o.pass) o.reason = "computed value differs from expected";
  return o;
}

ClaimOutcome residual_outcome(double residual, double tolerance, const Json& expected) {
  ClaimOutcome o;
  o.computed = residual;
  o.expected = expected;
  o.residual = residual;
  if (!(tolerance > 0.0)) {
    o.pass = false;
    o.reason = "tolerance must be positive";
  } else {
    o.pass = residual <= tolerance;
    if (!o.pass) o.reason = "residual exceeds tolerance";
  }
  return o;
}

ClaimOutcome lower_bound_outcome(double value, double bound) {
  ClaimOutcome o;
  o.computed = value;
  o.expected = Json{{"greater_than", bound}};
  o.residual = value > bound ? 0.0 : bound - value;
  o.pass = value > bound;
  if (!o.pass) o.reason = "value is not above the bound";
  return o;
}

// ---------------------------------------------------------------------------
// Claims

namespace {

const std::vector<SphereTransitiveRow>& sphere_rows() {
  static const std::vector<SphereTransitiveRow> rows = sphere_transitive_rows();
  return rows;
}

const std::vector<TwoBlockRep>& reducible_rows() {
  static const std::vector<TwoBlockRep> rows = cohomogeneity_two_rows();
  return rows;
}

Json signature_json(const Signature& s) { return Json::array({s.positive, s.negative, s.zero}); }

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Nilpotent part m = m1 + m2 of a Heisenberg space.
LieAlgebra nilpotent_part(const ReductiveSpace& s) {
  return subalgebra(s.algebra, Subspace::coordinate(s.dim(), s.m_indices()));
}

struct ClaimBuilder {
  const VerifyConfig& cfg;
  std::vector<ClaimSpec> claims;

  bool wants(const std::string& group) const {
    return cfg.groups.empty() || std::find(cfg.groups.begin(), cfg.groups.end(), group) != cfg.groups.end();
  }

  void add(std::string id, std::string group, std::string target, std::string check, ToleranceClass tc,
           std::string source, std::function<ClaimOutcome(const ClaimSpec&)> run) {
    ClaimSpec c;
    c.id = std::move(id);
    c.group = std::move(group);
    c.target = std::move(target);
    c.check = std::move(check);
    c.tolerance_class = tc;
    c.tolerance = cfg.tolerances.value(tc);
    c.seed = cfg.seed;
    c.source = std::move(source);
    c.run = std::move(run);
    claims.push_back(std::move(c));
  }

  void tables() {
    const int samples = cfg.samples;
    for (std::size_t r = 0; r < sphere_rows().size(); ++r) {
      const std::string id = sphere_rows()[r].id;
      add("sphere." + id + ".cohomogeneity", "tables", id, "cohomogeneity", ToleranceClass::Exact, "reference",
          [r, samples](const ClaimSpec& c) {
            return exact_outcome(cohomogeneity(sphere_rows()[r].rep, samples, c.seed), 1);
          });
      add("sphere." + id + ".isotropy_dim", "tables", id, "isotropy_subalgebra", ToleranceClass::Exact, "reference",
          [r](const ClaimSpec& c) {
            const auto& row = sphere_rows()[r];
            std::mt19937_64 rng(c.seed);
            const Vec v = random_unit_vector(row.rep.space_dim(), rng);
            return exact_outcome(isotropy_subalgebra(row.rep, v).dim(), row.expected_isotropy_dim);
          });
    }
    for (std::size_t r = 0; r < reducible_rows().size(); ++r) {
      const std::string id = reducible_rows()[r].id;
      const std::string prefix = "reducible.row" + std::to_string(r + 1) + "." + id;
      add(prefix + ".cohomogeneity", "tables", id, "cohomogeneity", ToleranceClass::Exact, "reference",
          [r, samples](const ClaimSpec& c) {
            return exact_outcome(cohomogeneity(reducible_rows()[r].rep, samples, c.seed), 2);
          });
      add(prefix + ".m2_kernel_dim", "tables", id, "kernel_ideal", ToleranceClass::Exact, "reference",
          [r](const ClaimSpec&) { return exact_outcome(kernel_ideal(reducible_rows()[r].on_m2()).dim(), 0); });
      add(prefix + ".m1_action_nontrivial", "tables", id, "kernel_ideal", ToleranceClass::Exact, "reference",
          [r](const ClaimSpec&) {
            const auto& row = reducible_rows()[r];
            return exact_outcome(kernel_ideal(row.on_m1()).dim() < row.rep.algebra_dim(), true);
          });
    }
  }

  void jacobi() {
    const std::vector<std::pair<std::string, double>> mus{
        {"1/sqrt2", 1.0 / std::numbers::sqrt2}, {"1", 1.0}, {"2", 2.0}};
    for (int n : {2, 3, 6, 7}) {
      for (const auto& [label, mu] : mus) {
        const std::string target = "Clifford(n=" + std::to_string(n) + ",mu=" + label + ")";
        const std::string prefix = "jacobi.n" + std::to_string(n) + ".mu=" + label;
        add(prefix + ".balanced", "jacobi", target, "jacobi_residual", ToleranceClass::Algebraic, "reference",
            [n, mu](const ClaimSpec& c) {
              CliffordSpaceSpec s;
              s.n = n;
              s.mu = mu;
              s.lambda = 2.0 * mu * mu;
              return residual_outcome(jacobi_residual(clifford_algebra_raw(s)), c.tolerance, "lambda = 2 mu^2");
            });
        add(prefix + ".perturbed", "jacobi", target, "jacobi_residual", ToleranceClass::Exact, "reference",
            [n, mu](const ClaimSpec&) {
              CliffordSpaceSpec s;
              s.n = n;
              s.mu = mu;
              s.lambda = 2.0 * mu * mu + 0.01;
              return lower_bound_outcome(jacobi_residual(clifford_algebra_raw(s)), 1e-3);
            });
      }
    }
    const double mu = 1.0 / std::numbers::sqrt2;
    auto n7 = [mu] {
      CliffordSpaceSpec s;
      s.n = 7;
      s.lambda = 1.0;
      s.mu = mu;
      s.mode = M2Mode::Completed;
      return s;
    };
    add("completion.n7.solution_dim", "jacobi", "Clifford(n=7)", "complete_bracket", ToleranceClass::Exact, "derived",
        [n7](const ClaimSpec&) {
          const CompletionSolution sol = complete_bracket(clifford_completion_problem(n7()));
          return exact_outcome(sol.empty() ? -1 : sol.dimension(), 1);
        });
    add("completion.n7.lambda=1.killing_signature", "jacobi", "Spin(9)", "fingerprint", ToleranceClass::Exact,
        "reference", [n7](const ClaimSpec&) {
          const ReductiveSpace s = build_clifford_space(n7());
          return exact_outcome(Json{{"dim", s.dim()}, {"killing", signature_json(signature(killing_form(s.algebra)))}},
                               Json{{"dim", 36}, {"killing", Json::array({0, 36, 0})}});
        });
    add("completion.n7.lambda=-1.killing_signature", "jacobi", "Spin(8,1)", "fingerprint", ToleranceClass::Exact,
        "reference", [n7](const ClaimSpec&) {
          // The opposite ray of the one-dimensional completion space.
          const CompletionSolution sol = complete_bracket(clifford_completion_problem(n7()));
          const Vec y = select_completion(sol, "negative-definite");
          const LieAlgebra g = sol.assemble(-y);
          return exact_outcome(Json{{"dim", g.dim()}, {"killing", signature_json(signature(killing_form(g)))}},
                               Json{{"dim", 36}, {"killing", Json::array({8, 28, 0})}});
        });
    add("completion.n7.lambda=-1.dual_form_match", "jacobi", "Spin(8,1)", "dual_real_form", ToleranceClass::Exact,
        "derived", [n7](const ClaimSpec&) {
          const ReductiveSpace compact = build_clifford_space(n7());
          const CompletionSolution sol = complete_bracket(clifford_completion_problem(n7()));
          const LieAlgebra opposite = sol.assemble(-select_completion(sol, "negative-definite"));
          const LieAlgebra dual = dual_real_form(compact.algebra, compact.blocks[1]);
          return exact_outcome(to_string(fingerprint(opposite)), to_string(fingerprint(dual)));
        });
    add("completion.n6.lambda=1.only_abelian", "jacobi", "Clifford(n=6)", "complete_bracket", ToleranceClass::Exact,
        "reference", [mu](const ClaimSpec&) {
          CliffordSpaceSpec s;
          s.n = 6;
          s.lambda = 1.0;
          s.mu = mu;
          const CompletionSolution sol = complete_bracket(clifford_completion_problem(s));
          const bool only_zero = !sol.empty() && sol.dimension() == 0 &&
                                 (sol.unknowns() == 0 || sol.particular().cwiseAbs().maxCoeff() < kSubspaceTol);
          return exact_outcome(Json{{"consistent", !sol.empty()}, {"dimension", sol.dimension()}, {"only_zero", only_zero}},
                               Json{{"consistent", true}, {"dimension", 0}, {"only_zero", true}});
        });
  }

  void heisenberg() {
    const std::vector<std::tuple<std::string, int, int>> specs{
        {"N(1,2)", 1, 2}, {"N(2,1)", 2, 1}, {"N(3;1,0)", 3, 1}, {"N(6,1)", 6, 1}, {"N(7;1,0)", 7, 1}};
    for (const auto& [id, center_dim, copies] : specs) {
      const HeisenbergSpec spec{center_dim, copies, 1.0};
      add("heisenberg." + id + ".nilpotency_class", "heisenberg", id, "nilpotency_class", ToleranceClass::Exact,
          "reference", [spec](const ClaimSpec&) {
            return exact_outcome(nilpotency_class(nilpotent_part(build_heisenberg(spec))), 2);
          });
      add("heisenberg." + id + ".center_dim", "heisenberg", id, "center", ToleranceClass::Exact, "reference",
          [spec](const ClaimSpec&) {
            return exact_outcome(center(nilpotent_part(build_heisenberg(spec))).dim(), spec.center_dim);
          });
      add("heisenberg." + id + ".j_anticommutation", "heisenberg", id, "j_anticommutation",
          ToleranceClass::Anticommutation, "invariant", [spec](const ClaimSpec& c) {
            const double r = j_anticommutation_residual(heisenberg_j_maps(build_heisenberg(spec)));
            return residual_outcome(r, c.tolerance, "J_Z J_W + J_W J_Z = -2 <Z,W> I");
          });
      add("heisenberg." + id + ".normalized_kappa=-2.5", "heisenberg", id, "normalize_heisenberg",
          ToleranceClass::Anticommutation, "invariant", [spec](const ClaimSpec& c) {
            HeisenbergSpec k = spec;
            k.kappa = -2.5;
            const ReductiveSpace n = normalize_heisenberg(build_heisenberg(k), k.kappa);
            return residual_outcome(j_anticommutation_residual(heisenberg_j_maps(n)), c.tolerance,
                                    "J_Z J_W + J_W J_Z = -2 <Z,W> I");
          });
    }
  }

  void curvature() {
    const std::vector<std::pair<std::string, int>> fields{{"R", 1}, {"C", 2}, {"H", 4}};
    for (const auto& [name, f] : fields) {
      for (double rate : {1.0, 0.5}) {
        const std::string target = "Rx" + name;
        add("curvature.hyperbolic." + target + ".rate=" + num(rate) + ".sectional", "curvature", target,
            "sectional_curvature", ToleranceClass::Curvature, "reference", [f, rate](const ClaimSpec& c) {
              const InvariantMetricSpace ms(build_semidirect_hyperbolic({f, 1, rate, 0.0}));
              double dev = 0.0;
              for (double k : random_sectional_curvatures(ms, 100, c.seed)) dev = std::max(dev, std::abs(k + rate * rate));
              return residual_outcome(dev, c.tolerance, Json{{"sectional", -rate * rate}});
            });
      }
    }
    struct WarpedCase {
      std::string name;
      IntervalKind kind;
      double length;
      std::string profile;
      std::function<Fiber()> fiber;
    };
    const std::vector<WarpedCase> cases{
        {"exp(-1*t)xR^2", IntervalKind::Line, 0.0, "exp(-1*t)", [] { return flat_fiber(2); }},
        {"exp(-0.5*t)xS^3", IntervalKind::Line, 0.0, "exp(-0.5*t)", [] { return round_sphere_fiber(3); }},
        {"sinxS^2", IntervalKind::Segment, std::numbers::pi, "sin", [] { return round_sphere_fiber(2); }},
        {"sinhxS^2", IntervalKind::HalfLine, 0.0, "sinh", [] { return round_sphere_fiber(2); }},
        {"poly(1,0,1)xCP^1", IntervalKind::Line, 0.0, "poly(1,0,1)",
         [] { return fiber_from_space(InvariantMetricSpace(sphere_space(2))); }},
    };
    for (const auto& wc : cases) {
      add("curvature.warped." + wc.name + ".fd_agreement", "curvature", wc.name, "warped_sectional_curvature",
          ToleranceClass::FiniteDifference, "derived", [wc](const ClaimSpec& c) {
            WarpedProduct w{wc.kind, wc.length, parse_profile(wc.profile), wc.fiber()};
            const WarpedAgreement a = compare_warped_curvature(w, 50, c.seed);
            return residual_outcome(a.max_difference, c.tolerance, "closed form = finite differences");
          });
    }
    add("curvature.warped.exp(-1*t)xR^2.mixed_plane", "curvature", "exp(-1*t)xR^2", "warped_sectional_curvature",
        ToleranceClass::Curvature, "reference", [](const ClaimSpec& c) {
          WarpedProduct w{IntervalKind::Line, 0.0, parse_profile("exp(-1*t)"), flat_fiber(2)};
          Vec x = Vec::Zero(3), y = Vec::Zero(3);
          x(0) = 1.0;
          y(1) = 1.0;
          const double k = warped_sectional_curvature(w, 0.3, x, y);
          return residual_outcome(std::abs(k + 1.0), c.tolerance, Json{{"sectional", -1.0}});
        });
    for (int n : {1, 2}) {
      const std::string target = "euclidean_screw(" + std::to_string(n) + ")";
      add("curvature." + target + ".curvature_max", "curvature", target, "curvature_tensor", ToleranceClass::Flatness,
          "reference", [n](const ClaimSpec& c) {
            const auto s = build_trivial_module_space(TrivialBranch::EuclideanScrew, n);
            return residual_outcome(curvature_tensor(InvariantMetricSpace(s)).max_abs(), c.tolerance, 0.0);
          });
      add("curvature." + target + ".flat", "curvature", target, "verify_flatness", ToleranceClass::Exact, "reference",
          [n](const ClaimSpec& c) {
            const auto s = build_trivial_module_space(TrivialBranch::EuclideanScrew, n);
            (void)c;
            return exact_outcome(verify_flatness(s), true);
          });
    }
    for (const auto& id : catalog_ids()) {
      add("curvature.catalog." + id + ".tensor_symmetry", "curvature", id, "curvature_tensor", ToleranceClass::Curvature,
          "invariant", [id](const ClaimSpec& c) {
            const CurvatureTensor r = curvature_tensor(InvariantMetricSpace(build_catalog_space(id)));
            return residual_outcome(r.symmetry_residual(), c.tolerance, "Riemann symmetries and Bianchi");
          });
    }
  }

  void splitting() {
    add("splitting.control.SO(3)xSO(3)", "splitting", "SO(3)xSO(3)", "splitting_criterion", ToleranceClass::Exact,
        "reference", [](const ClaimSpec&) {
          const TwoBlockRep r = product_control_rep();
          return exact_outcome(splitting_criterion(r.rep, r.m1(), r.m2()).splits, true);
        });
    for (const auto& id : catalog_ids()) {
      add("splitting.catalog." + id, "splitting", id, "splitting_criterion", ToleranceClass::Exact, "reference",
          [id](const ClaimSpec&) {
            const TwoBlockRep r = isotropy_representation(build_catalog_space(id));
            return exact_outcome(splitting_criterion(r.rep, r.m1(), r.m2()).splits, false);
          });
    }
  }

  void catalog_claims() {
    const int samples = cfg.samples;
    add("catalog.entry_count", "catalog", "catalog", "catalog", ToleranceClass::Exact, "derived",
        [](const ClaimSpec&) { return lower_bound_outcome(static_cast<double>(catalog_ids().size()), 15.5); });
    for (const auto& id : catalog_ids()) {
      add("catalog." + id + ".cohomogeneity", "catalog", id, "cohomogeneity", ToleranceClass::Exact, "reference",
          [id, samples](const ClaimSpec& c) {
            return exact_outcome(cohomogeneity(isotropy_representation(build_catalog_space(id)).rep, samples, c.seed), 2);
          });
      add("catalog." + id + ".jacobi", "catalog", id, "jacobi_residual", ToleranceClass::Algebraic, "invariant",
          [id](const ClaimSpec& c) {
            return residual_outcome(jacobi_residual(build_catalog_space(id).algebra), c.tolerance, 0.0);
          });
    }
    add("catalog.Spin(9)/Spin(7).blocks", "catalog", "Spin(9)/Spin(7)", "blocks", ToleranceClass::Exact, "reference",
        [](const ClaimSpec&) {
          const ReductiveSpace s = build_catalog_space("Spin(9)/Spin(7)");
          return exact_outcome(Json{{"dim", s.dim()}, {"m1", s.block_dim(0)}, {"m2", s.block_dim(1)}},
                               Json{{"dim", 36}, {"m1", 7}, {"m2", 8}});
        });
    add("catalog.N(6,1).nilpotent_dim", "catalog", "N(6,1)", "blocks", ToleranceClass::Exact, "reference",
        [](const ClaimSpec&) { return exact_outcome(build_catalog_space("N(6,1)").m_dim(), 14); });
  }
};

}  // namespace

std::vector<ClaimSpec> build_claims(const VerifyConfig& config) {
  ClaimBuilder b{config, {}};
  if (b.wants("tables")) b.tables();
  if (b.wants("jacobi")) b.jacobi();
  if (b.wants("heisenberg")) b.heisenberg();
  if (b.wants("curvature")) b.curvature();
  if (b.wants("splitting")) b.splitting();
  if (b.wants("catalog")) b.catalog_claims();
  std::sort(b.claims.begin(), b.claims.end(), [](const ClaimSpec& a, const ClaimSpec& c) { return a.id < c.id; });
  for (std::size_t i = 1; i < b.claims.size(); ++i) {
    if (b.claims[i].id == b.claims[i - 1].id) throw std::logic_error("duplicate claim id " + b.claims[i].id);
  }
  return b.claims;
}

SuiteResult run_suite(const VerifyConfig& config) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const std::vector<ClaimSpec> claims = build_claims(config);
  std::vector<VerificationReport> reports(claims.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < claims.size(); i = next++) {
      const ClaimSpec& c = claims[i];
      VerificationReport& r = reports[i];
      r.claim_id = c.id;
      r.group = c.group;
      r.target = c.target;
      r.check = c.check;
      r.source = c.source;
      r.tolerance = c.tolerance;
      const auto t0 = clock::now();
      try {
        const ClaimOutcome o = c.run(c);
        r.computed = o.computed;
        r.expected = o.expected;
        r.residual = o.residual;
        r.status = o.pass ? "pass" : "fail";
        r.reason = o.reason;
      } catch (const std::exception& e) {
        r.status = "fail";
        r.reason = std::string("exception: ") + e.what();
        r.computed = nullptr;
      }
      r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    }
  };
  int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, static_cast<int>(claims.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SuiteResult out;
  out.reports = std::move(reports);
  for (const auto& r : out.reports) {
    if (r.status == "pass") {
      ++out.passed;
    } else if (r.status == "skipped") {
      ++out.skipped;
    } else {
      ++out.failed;
    }
  }
  out.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - start).count();
  return out;
}

std::string render_json_lines(const SuiteResult& result, bool include_timing) {
  std::ostringstream os;
  for (const auto& r : result.reports) {
    Json j{{"schema_version", 1},
           {"claim_id", r.claim_id},
           {"group", r.group},
           {"target", r.target},
           {"check", r.check},
           {"status", r.status},
           {"computed", r.computed},
           {"expected", r.expected},
           {"source", r.source},
           {"residual", r.residual},
           {"tolerance", r.tolerance}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (include_timing) j["timing"] = Json{{"runtime_ms", r.runtime_ms}};
    os << j.dump() << '\n';
  }
  Json s{{"schema_version", 1},
         {"summary",
          {{"total", result.reports.size()},
           {"passed", result.passed},
           {"failed", result.failed},
           {"skipped", result.skipped},
           {"exit_code", result.exit_code()}}}};
  if (include_timing) s["timing"] = Json{{"runtime_ms", result.runtime_ms}};
  os << s.dump() << '\n';
  return os.str();
}

std::string render_text(const SuiteResult& result) {
  std::ostringstream os;
  for (const auto& r : result.reports) {
    os << (r.status == "pass" ? "PASS " : r.status == "skipped" ? "SKIP " : "FAIL ") << r.claim_id
       << "  computed=" << r.computed.dump() << " expected=" << r.expected.dump();
    if (!r.reason.empty()) os << "  (" << r.reason << ")";
    os << '\n';
  }
  os << result.passed << " passed, " << result.failed << " failed, " << result.skipped << " skipped ("
     << result.runtime_ms << " ms)\n";
  return os.str();
}

}  // namespace isocoh
