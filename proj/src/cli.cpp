// Copyright 2026 The trigwdvv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trigwdvv/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <utility>

#include "trigwdvv/algebra.hpp"
#include "trigwdvv/errors.hpp"
#include "trigwdvv/prepotential.hpp"
#include "trigwdvv/susy.hpp"
#include "trigwdvv/wdvv.hpp"

namespace trigwdvv {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommandNames[] = {
    {Command::kVerifyWdvv, "verify-wdvv"},
    {Command::kVerifyAssociativity, "verify-associativity"},
    {Command::kVerifyMetric, "verify-metric"},
    {Command::kVerifyRestriction, "verify-restriction"},
    {Command::kVerifySusy, "verify-susy"},
    {Command::kTensor, "tensor"},
    {Command::kBuildConfig, "build-config"},
};

const json& field(const json& obj, const char* name, const char* where) {
  if (!obj.is_object()) {
    throw ParseError(std::string(where) + " must be a JSON object");
  }
  const auto it = obj.find(name);
  if (it == obj.end()) {
    throw ParseError(std::string("missing field '") + name + "' in " + where);
  }
  return *it;
}

double number(const json& obj, const char* name, const char* where) {
  const json& v = field(obj, name, where);
  if (!v.is_number()) {
    throw ParseError(std::string("field '") + name + "' in " + where +
                     " must be a number");
  }
  return v.get<double>();
}

std::vector<double> number_array(const json& obj, const char* name,
                                 const char* where) {
  const json& v = field(obj, name, where);
  if (!v.is_array()) {
    throw ParseError(std::string("field '") + name + "' in " + where +
                     " must be an array of numbers");
  }
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) {
      throw ParseError(std::string("field '") + name + "' in " + where +
                       " must contain numbers only");
    }
    out.push_back(e.get<double>());
  }
  return out;
}

ordered_json vector_json(const Vector& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out.push_back(vector_json(m.row(i).transpose()));
  }
  return out;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  // Keep integral-valued doubles recognisable as floats.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void dump_into(std::ostringstream& os, const ordered_json& v, int indent,
               int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (v.type()) {
    case ordered_json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        break;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad << ordered_json(it.key()).dump() << (indent > 0 ? ": " : ":");
        dump_into(os, it.value(), indent, depth + 1);
      }
      os << nl << close_pad << '}';
      break;
    }
    case ordered_json::value_t::array: {
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(v.begin(), v.end(), [](const auto& e) {
        return e.is_structured();
      });
      if (v.empty()) {
        os << "[]";
        break;
      }
      os << '[' << (flat ? "" : nl);
      bool first = true;
      for (const auto& e : v) {
        if (!first) os << (flat ? ", " : ",") << (flat ? "" : nl);
        first = false;
        if (!flat) os << pad;
        dump_into(os, e, indent, depth + 1);
      }
      if (!flat) os << nl << close_pad;
      os << ']';
      break;
    }
    case ordered_json::value_t::number_float:
      os << format_double(v.get<double>());
      break;
    default:
      os << v.dump();
  }
}

// Accumulates residuals of one named check.
class Accumulator {
 public:
  explicit Accumulator(std::string name, double tolerance)
      : name_(std::move(name)), tolerance_(tolerance) {}

  void add(double residual, const Vector& point) {
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    if (count_ == 0 || residual > max_) {
      max_ = residual;
      worst_ = point;
    }
    sum_ += residual;
    ++count_;
  }

  CheckResult result() const {
    CheckResult r;
    r.name = name_;
    r.max_residual = max_;
    r.mean_residual = count_ ? sum_ / static_cast<double>(count_) : 0.0;
    r.worst_point = worst_;
    r.pass = max_ < tolerance_;
    return r;
  }

 private:
  std::string name_;
  double tolerance_;
  double max_ = 0.0;
  double sum_ = 0.0;
  long count_ = 0;
  Vector worst_;
};

// Evaluation callback: returns nullopt to discard the sample point.
using PointCheck = std::function<std::optional<double>(Rng&, const Vector&)>;

class Runner {
 public:
  explicit Runner(const RunSpec& spec) : spec_(spec) { report_.run = spec; }

  void sampled(const std::string& name, double tolerance,
               const Configuration& sample_space, const PointCheck& check) {
    sampled(name, tolerance, sample_space, spec_.threshold, check);
  }

  void sampled(const std::string& name, double tolerance,
               const Configuration& sample_space, double margin,
               const PointCheck& check) {
    Rng rng(spec_.seed, name);
    Accumulator acc(name, tolerance);
    int accepted = 0;
    int rejected_in_row = 0;
    while (accepted < spec_.samples) {
      Vector x;
      try {
        x = sample_admissible(rng, sample_space, spec_.box, margin);
      } catch (const PreconditionError&) {
        // The requested margin may be infeasible inside the box; fall back
        // to the admissibility threshold for the rest of this check.
        if (margin <= spec_.threshold) throw;
        margin = spec_.threshold;
        continue;
      }
      std::optional<double> value;
      try {
        value = check(rng, x);
      } catch (const SingularMatrixError&) {
        value.reset();
      }
      if (!value) {
        ++report_.discarded_points;
        if (++rejected_in_row >= kMaxAttempts) {
          throw PreconditionError("check '" + name +
                                  "': too many ill-conditioned sample points");
        }
        continue;
      }
      rejected_in_row = 0;
      acc.add(*value, x);
      ++accepted;
    }
    report_.checks.push_back(acc.result());
  }

  void single(const std::string& name, double tolerance, double value) {
    Accumulator acc(name, tolerance);
    acc.add(value, Vector());
    report_.checks.push_back(acc.result());
  }

  VerificationReport take() { return std::move(report_); }

 private:
  const RunSpec& spec_;
  VerificationReport report_;
};

const BCnParameters& require_family(const RunSpec& spec) {
  if (!spec.config->family) {
    throw PreconditionError(to_string(spec.command) +
                            " needs a bcn family configuration");
  }
  return *spec.config->family;
}

double relative_difference(const Tensor3& a, const Tensor3& b) {
  double diff = 0.0;
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      for (int k = 0; k < a.n(); ++k) {
        diff = std::max(diff, std::abs(a(i, j, k) - b(i, j, k)));
      }
    }
  }
  return diff / std::max(1.0, std::max(a.max_abs(), b.max_abs()));
}

// Structure constants C_ijk = F_ijk / w_k.
Tensor3 weighted_structure_constants(const Tensor3& F,
                                     const std::vector<double>& w) {
  Tensor3 C(F.n());
  for (int i = 0; i < F.n(); ++i) {
    for (int j = 0; j < F.n(); ++j) {
      for (int k = 0; k < F.n(); ++k) {
        C(i, j, k) = F(i, j, k) / w[static_cast<std::size_t>(k)];
      }
    }
  }
  return C;
}

void run_wdvv(const RunSpec& spec, Runner& runner) {
  const Configuration& config = spec.config->config;
  runner.sampled("wdvv", spec.tolerance, config,
                 [&](Rng&, const Vector& x) -> std::optional<double> {
                   const auto t = tensor_generic(config, x, spec.threshold);
                   if (condition_number(metric_B(t, x)) > kConditionCap) {
                     return std::nullopt;
                   }
                   return max_wdvv_residual(t, x).residual;
                 });
  runner.sampled("generalized_wdvv", 10.0 * spec.tolerance, config,
                 [&](Rng&, const Vector& x) -> std::optional<double> {
                   const auto t = tensor_generic(config, x, spec.threshold);
                   for (int k = 0; k < t.n(); ++k) {
                     if (condition_number(t.slice(k)) > kConditionCap) {
                       return std::nullopt;
                     }
                   }
                   return max_generalized_wdvv_residual(t).residual;
                 });
}

void run_associativity(const RunSpec& spec, Runner& runner) {
  const Configuration& config = spec.config->config;
  std::vector<double> weights(static_cast<std::size_t>(config.dimension()), 1.0);
  if (spec.config->family) weights = spec.config->family->m();
  for (double w : weights) {
    if (w == 0.0) throw PreconditionError("associativity needs nonzero m_i");
  }
  runner.sampled("structure_associativity", spec.tolerance, config,
                 [&](Rng&, const Vector& x) -> std::optional<double> {
                   const auto F = tensor_generic(config, x, spec.threshold);
                   return structure_associativity_residual(
                       weighted_structure_constants(F, weights));
                 });
  const bool unit_weights = std::all_of(weights.begin(), weights.end(),
                                        [](double w) { return w == 1.0; });
  if (unit_weights) {
    runner.sampled("product_associativity", spec.tolerance, config,
                   [&](Rng& rng, const Vector& x) -> std::optional<double> {
                     const ProductContext ctx(config, x, spec.threshold);
                     const int n = config.dimension();
                     const Vector u = rng.normal_vector(n);
                     const Vector v = rng.normal_vector(n);
                     const Vector w = rng.normal_vector(n);
                     return associativity_residual(ctx, u, v, w);
                   });
  }
}

void run_metric(const RunSpec& spec, Runner& runner) {
  const BCnParameters& p = require_family(spec);
  const Configuration& config = spec.config->config;
  const double delta = constraint_residual(p);
  runner.sampled("tensor_two_path", spec.tolerance, config,
                 [&](Rng&, const Vector& x) -> std::optional<double> {
                   return relative_difference(
                       tensor_generic(config, x, spec.threshold),
                       tensor_closed_form(p, x, spec.threshold));
                 });
  if (p.n() >= 2) {
    runner.sampled("hyperbolic_identities", spec.tolerance, config,
                   [&](Rng&, const Vector& x) -> std::optional<double> {
                     double worst = 0.0;
                     for (int k = 0; k < p.n(); ++k) {
                       for (int j = 0; j < p.n(); ++j) {
                         const auto [a, b] =
                             identity_residuals(x, k, j, spec.threshold);
                         worst = std::max({worst, std::abs(a), std::abs(b)});
                       }
                     }
                     return worst;
                   });
  }
  runner.sampled("metric_offdiagonal", spec.tolerance, config,
                 [&](Rng&, const Vector& x) -> std::optional<double> {
                   const auto rep = diagonality_report(
                       tensor_generic(config, x, spec.threshold), p, x);
                   return rep.offdiag_max / std::max(1.0, rep.b_norm);
                 });
  // B_ll = m_l (h + delta cosh 2x_l); reduces to m_l h under the constraint.
  runner.sampled("metric_diagonal", spec.tolerance, config,
                 [&](Rng&, const Vector& x) -> std::optional<double> {
                   const Matrix B =
                       metric_B(tensor_generic(config, x, spec.threshold), x);
                   const double h = h_function(p, x);
                   double worst = 0.0;
                   for (int l = 0; l < p.n(); ++l) {
                     const double expected =
                         p.m(l) * (h + delta * std::cosh(2.0 * x(l)));
                     worst = std::max(worst, std::abs(B(l, l) - expected));
                   }
                   return worst / std::max(1.0, B.cwiseAbs().maxCoeff());
                 });
}

void run_restriction(const RunSpec& spec, Runner& runner) {
  const BCnParameters& p = require_family(spec);
  std::vector<int> blocks;
  for (double mi : p.m()) {
    if (mi < 1.0 || mi != std::floor(mi)) {
      throw PreconditionError(
          "verify-restriction needs positive integer m_i (block sizes)");
    }
    blocks.push_back(static_cast<int>(mi));
  }
  const Partition part(blocks);
  const int N = part.N();
  const Configuration projected = build_bcn(p);

  runner.single("restriction_matches_family", 0.5,
                same_members(restrict_configuration(N, p.r(), p.s(), p.q(), part),
                             projected)
                    ? 0.0
                    : 1.0);

  auto context = [&](const Vector& xt) {
    return RestrictionContext(p.r(), p.s(), p.q(), part, xt, spec.threshold);
  };
  runner.sampled("structure_constants_two_path", spec.tolerance, projected,
                 [&](Rng&, const Vector& xt) -> std::optional<double> {
                   const RestrictionContext rctx = context(xt);
                   const Tensor3 C = structure_constants(rctx);
                   const Tensor3 expected = weighted_structure_constants(
                       projected_tensor(rctx), p.m());
                   return relative_difference(C, expected);
                 });
  runner.sampled("closure", spec.tolerance, projected,
                 [&](Rng& rng, const Vector& xt) -> std::optional<double> {
                   const RestrictionContext rctx = context(xt);
                   const Vector u = embed(rng.normal_vector(part.n()), part);
                   const Vector v = embed(rng.normal_vector(part.n()), part);
                   const Vector w = limit_product(rctx, u, v);
                   double spread = 0.0;
                   for (int k = 0; k < part.n(); ++k) {
                     const auto seg = w.segment(part.offset(k), part.block(k));
                     spread = std::max(spread, seg.maxCoeff() - seg.minCoeff());
                   }
                   return spread / std::max(1.0, w.cwiseAbs().maxCoeff());
                 });
  const Configuration ambient = build_bcN_root_system(N, p.r(), p.s(), p.q());
  std::vector<Vector> subsystem;
  for (const auto& m : ambient.members()) {
    if (orthogonal_to_subspace(m.vector, part)) subsystem.push_back(m.vector);
  }
  if (!subsystem.empty()) {
    runner.sampled("tangency", spec.tolerance, projected,
                   [&](Rng& rng, const Vector& xt) -> std::optional<double> {
                     const RestrictionContext rctx = context(xt);
                     const Vector u = embed(rng.normal_vector(part.n()), part);
                     const Vector v = embed(rng.normal_vector(part.n()), part);
                     double worst = 0.0;
                     for (const Vector& alpha : subsystem) {
                       worst = std::max(worst,
                                        tangency_residual(rctx, u, v, alpha));
                     }
                     return worst;
                   });
  }
  runner.sampled("structure_associativity", spec.tolerance, projected,
                 [&](Rng&, const Vector& xt) -> std::optional<double> {
                   return structure_associativity_residual(
                       structure_constants(context(xt)));
                 });
  runner.sampled("h_b_decomposition", spec.tolerance, projected,
                 [&](Rng&, const Vector& xt) -> std::optional<double> {
                   const RestrictionContext rctx = context(xt);
                   if (std::abs(h_function(p, xt)) < 1e-6) return std::nullopt;
                   return h_b_decomposition_residual(rctx);
                 });
}

void run_susy(const RunSpec& spec, Runner& runner) {
  const BCnParameters& p = require_family(spec);
  const RescaledConfiguration hat = build_hat_configuration(p);
  const Configuration& space = hat.members;

  runner.single("anticommutators", spec.tolerance,
                anticommutator_defect(build_fermionic_space(p.n())));
  runner.sampled("hat_two_path", spec.tolerance, space,
                 [&](Rng&, const Vector& xh) -> std::optional<double> {
                   return relative_difference(
                       hat_tensor(p, xh, spec.threshold),
                       hat_tensor_by_conjugation(p, xh, spec.threshold));
                 });
  runner.sampled("hat_metric_scalar", spec.tolerance, space,
                 [&](Rng&, const Vector& xh) -> std::optional<double> {
                   const auto t = hat_tensor(p, xh, spec.threshold);
                   const Matrix B = hat_metric(p, t, xh);
                   const double h = h_function(p, from_hat_coordinates(p, xh));
                   const Matrix target =
                       h * Matrix::Identity(p.n(), p.n());
                   return (B - target).cwiseAbs().maxCoeff() /
                          std::max(1.0, std::abs(h));
                 });
  runner.sampled("hat_commuting", spec.tolerance, space,
                 [&](Rng&, const Vector& xh) -> std::optional<double> {
                   return max_commuting_residual(
                       hat_tensor(p, xh, spec.threshold));
                 });
  using FieldFactory = std::function<ScalarField(const Vector&)>;
  const std::pair<const char*, FieldFactory> families[] = {
      {"gauge_gaussian",
       [](const Vector& x) { return gaussian_field(x, 0.5); }},
      {"gauge_sinh_product", [](const Vector&) { return sinh_product_field(); }},
      {"gauge_polynomial",
       [n = p.n()](const Vector&) { return polynomial_field(n); }},
  };
  for (const auto& [name, make] : families) {
    runner.sampled(name, kFiniteDifferenceTolerance, space,
                   std::max(spec.threshold, kGaugeSampleMargin),
                   [&](Rng&, const Vector& xh) -> std::optional<double> {
                     return gauge_residual(space, xh, make(xh), spec.step,
                                           spec.threshold);
                   });
  }
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& entry : kCommandNames) {
    if (entry.command == c) return entry.name;
  }
  return "unknown";
}

Command parse_command(const std::string& name) {
  for (const auto& entry : kCommandNames) {
    if (name == entry.name) return entry.command;
  }
  throw ParseError("unknown command '" + name + "'");
}

LoadedConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ParseError("configuration must be a JSON object");
  if (doc.contains("family")) {
    const json& fam = doc["family"];
    if (!fam.is_string() || fam.get<std::string>() != "bcn") {
      throw ParseError("field 'family' must be \"bcn\"");
    }
    const double n = number(doc, "n", "bcn configuration");
    const double r = number(doc, "r", "bcn configuration");
    const double s = number(doc, "s", "bcn configuration");
    const double q = number(doc, "q", "bcn configuration");
    std::vector<double> m = number_array(doc, "m", "bcn configuration");
    if (n < 1 || n != std::floor(n)) {
      throw ParseError("field 'n' must be a positive integer");
    }
    if (m.size() != static_cast<std::size_t>(n)) {
      throw ParseError("field 'm' must have n entries");
    }
    BCnParameters p(r, s, q, std::move(m));
    Configuration c = build_bcn(p);
    return {std::move(p), std::move(c)};
  }
  if (doc.contains("explicit")) {
    const json& ex = doc["explicit"];
    const double dim = number(ex, "dimension", "explicit configuration");
    if (dim < 1 || dim != std::floor(dim)) {
      throw ParseError("field 'dimension' must be a positive integer");
    }
    const json& members = field(ex, "members", "explicit configuration");
    if (!members.is_array()) throw ParseError("field 'members' must be an array");
    Configuration c(static_cast<int>(dim));
    for (const auto& m : members) {
      const std::vector<double> v = number_array(m, "vector", "member");
      const double mult = number(m, "multiplicity", "member");
      if (v.size() != static_cast<std::size_t>(dim)) {
        throw ParseError("member 'vector' length differs from 'dimension'");
      }
      c.add(Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size())),
            mult);
    }
    return {std::nullopt, std::move(c)};
  }
  throw ParseError("configuration needs a 'family' or 'explicit' field");
}

LoadedConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open configuration file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError("configuration file '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

void RunSpec::validate() const {
  if (samples < 1) throw PreconditionError("samples must be >= 1");
  if (!(box.lo < box.hi)) throw PreconditionError("box needs lo < hi");
  if (!(tolerance > 0.0)) throw PreconditionError("tolerance must be > 0");
  if (!(step > 0.0)) throw PreconditionError("step must be > 0");
  if (!(threshold >= 0.0)) throw PreconditionError("theta must be >= 0");
  if (!config) throw PreconditionError("no configuration given");
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

VerificationReport run(const RunSpec& spec) {
  spec.validate();
  Runner runner(spec);
  switch (spec.command) {
    case Command::kVerifyWdvv:
      run_wdvv(spec, runner);
      break;
    case Command::kVerifyAssociativity:
      run_associativity(spec, runner);
      break;
    case Command::kVerifyMetric:
      run_metric(spec, runner);
      break;
    case Command::kVerifyRestriction:
      run_restriction(spec, runner);
      break;
    case Command::kVerifySusy:
      run_susy(spec, runner);
      break;
    default:
      throw PreconditionError(to_string(spec.command) +
                              " is not a verification command");
  }
  return runner.take();
}

ordered_json report_to_json(const VerificationReport& report) {
  const RunSpec& s = report.run;
  ordered_json run;
  run["command"] = to_string(s.command);
  run["config_source"] = s.config_source;
  run["samples"] = s.samples;
  run["seed"] = s.seed;
  run["tolerance"] = s.tolerance;
  run["box"] = {s.box.lo, s.box.hi};
  run["threshold"] = s.threshold;
  run["step"] = s.step;

  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["max_residual"] = c.max_residual;
    entry["mean_residual"] = c.mean_residual;
    entry["worst_point"] = c.worst_point.size() ? vector_json(c.worst_point)
                                                : ordered_json(nullptr);
    entry["pass"] = c.pass;
    checks.push_back(std::move(entry));
  }

  ordered_json out;
  out["run"] = std::move(run);
  out["checks"] = std::move(checks);
  out["discarded_points"] = report.discarded_points;
  out["version"] = report.version;
  return out;
}

ordered_json emit_tensor(const RunSpec& spec) {
  if (!spec.config) throw PreconditionError("no configuration given");
  if (!spec.point) throw PreconditionError("tensor needs --point");
  const Configuration& config = spec.config->config;
  const Vector& x = *spec.point;
  if (x.size() != config.dimension()) {
    throw PreconditionError("point dimension differs from configuration");
  }
  const ThirdDerivativeTensor F = tensor_generic(config, x, spec.threshold);
  ordered_json tensor = ordered_json::array();
  for (int i = 0; i < F.n(); ++i) tensor.push_back(matrix_json(F.slice(i)));

  ordered_json out;
  out["point"] = vector_json(x);
  out["F"] = std::move(tensor);
  out["B"] = matrix_json(metric_B(F, x));
  out["h"] = spec.config->family
                 ? ordered_json(h_function(*spec.config->family, x))
                 : ordered_json(nullptr);
  return out;
}

ordered_json config_to_json(const Configuration& c) {
  ordered_json members = ordered_json::array();
  for (const auto& m : c.members()) {
    ordered_json entry;
    entry["vector"] = vector_json(m.vector);
    entry["multiplicity"] = m.multiplicity;
    members.push_back(std::move(entry));
  }
  ordered_json body;
  body["dimension"] = c.dimension();
  body["members"] = std::move(members);
  ordered_json out;
  out["explicit"] = std::move(body);
  return out;
}

std::string dump_json(const ordered_json& doc, int indent) {
  std::ostringstream os;
  dump_into(os, doc, indent, 0);
  return os.str();
}

std::string format_summary(const VerificationReport& report) {
  std::ostringstream os;
  os << to_string(report.run.command) << " (" << report.run.config_source
     << ", samples=" << report.run.samples << ", seed=" << report.run.seed
     << ")\n";
  for (const auto& c : report.checks) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-4s %-30s max=%.3e mean=%.3e\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.max_residual,
                  c.mean_residual);
    os << line;
  }
  os << "discarded points: " << report.discarded_points << '\n';
  os << (report.all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
  return os.str();
}

}  // namespace trigwdvv
