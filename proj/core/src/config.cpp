// Copyright 2026 The probineq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "probineq/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "probineq/error.hpp"
#include "probineq/rng.hpp"
#include "probineq/transforms.hpp"

namespace probineq {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

const json& require_key(const json& j, const std::string& key,
                        const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(path + "/" + key, "required key missing");
  return j.at(key);
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::uint64_t as_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    if (j.is_number_float() && j.get<double>() >= 0 &&
        std::floor(j.get<double>()) == j.get<double>()) {
      return static_cast<std::uint64_t>(j.get<double>());
    }
    fail(path, "expected a non-negative integer");
  }
  if (!j.is_number_unsigned() && j.get<std::int64_t>() < 0) {
    fail(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::vector<double> as_numbers(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_number(j[i], path + "/" + std::to_string(i)));
  }
  return out;
}

template <class F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    if (what.rfind("/", 0) == 0) throw;
    throw ConfigError((path.empty() ? std::string("/") : path) + ": " + what);
  }
}

ExperimentKind parse_kind(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  const auto s = j.get<std::string>();
  if (s == "thm11_i") return ExperimentKind::kThm11i;
  if (s == "thm11_ii") return ExperimentKind::kThm11ii;
  if (s == "contraction") return ExperimentKind::kContraction;
  if (s == "levy") return ExperimentKind::kLevy;
  if (s == "wlln") return ExperimentKind::kWlln;
  if (s == "construct") return ExperimentKind::kConstruct;
  if (s == "sweep") return ExperimentKind::kSweep;
  fail(path, "unknown experiment '" + s + "'");
}

SpaceSpec parse_space(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::size_t dim =
      j.contains("dim") ? as_count(j["dim"], path + "/dim") : 1;
  double q = 2.0;
  if (j.contains("q")) {
    const json& qj = j["q"];
    if (qj.is_string()) {
      const auto s = qj.get<std::string>();
      if (s != "inf" && s != "infinity") fail(path + "/q", "expected a number or \"inf\"");
      q = SpaceSpec::kMaxNorm;
    } else {
      q = as_number(qj, path + "/q");
    }
  }
  return with_path(path, [&] { return SpaceSpec(dim, q); });
}

Vector parse_vector(const json& j, const std::string& path) {
  return with_path(path, [&] { return Vector(as_numbers(j, path)); });
}

Lifting parse_lifting(const json& j, const std::string& path) {
  if (!j.contains("lifting")) return Lifting::kScalar;
  const json& l = j["lifting"];
  if (!l.is_string()) fail(path + "/lifting", "expected a string");
  const auto s = l.get<std::string>();
  if (s == "scalar") return Lifting::kScalar;
  if (s == "iid_coordinates") return Lifting::kIidCoordinates;
  if (s == "radial") return Lifting::kRadial;
  fail(path + "/lifting", "unknown lifting '" + s + "'");
}

DistributionSpec parse_distribution(const json& j, const SpaceSpec& space,
                                    const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto kind_json = require_key(j, "kind", path);
  if (!kind_json.is_string()) fail(path + "/kind", "expected a string");
  const auto kind = kind_json.get<std::string>();
  if (kind == "shifted") {
    const DistributionSpec base =
        parse_distribution(require_key(j, "base", path), space, path + "/base");
    Vector shift = parse_vector(require_key(j, "shift", path), path + "/shift");
    return with_path(path, [&] {
      return DistributionSpec(base.law(), space, base.lifting(), std::move(shift));
    });
  }
  const auto param = [&](const char* key) {
    return as_number(require_key(j, key, path), path + "/" + key);
  };
  BaseLaw law;
  if (kind == "rademacher") {
    law = dist::Rademacher{};
  } else if (kind == "pareto_symmetric") {
    law = dist::ParetoSymmetric{param("alpha")};
  } else if (kind == "pareto_one_sided") {
    law = dist::ParetoOneSided{param("alpha")};
  } else if (kind == "stable_symmetric") {
    law = dist::StableSymmetric{param("alpha")};
  } else if (kind == "uniform_ball") {
    law = dist::UniformBall{param("radius")};
  } else if (kind == "point_mass") {
    law = dist::PointMass{parse_vector(require_key(j, "value", path), path + "/value")};
  } else {
    fail(path + "/kind", "unknown distribution kind '" + kind + "'");
  }
  const Lifting lifting = parse_lifting(j, path);
  return with_path(path, [&] { return DistributionSpec(std::move(law), space, lifting); });
}

std::vector<double> parse_sequence(const json& j, std::size_t N,
                                   const std::string& path) {
  if (j.is_array()) return as_numbers(j, path);
  if (!j.is_object()) fail(path, "expected an array or a family object");
  const auto family = require_key(j, "family", path);
  if (family != "power") fail(path + "/family", "only the 'power' family is supported");
  const double e = as_number(require_key(j, "exponent", path), path + "/exponent");
  if (!(e > 0.0)) fail(path + "/exponent", "must be > 0");
  if (N == 0) fail(path, "a family needs norming/N");
  std::vector<double> out(N);
  for (std::size_t n = 1; n <= N; ++n) {
    const auto x = static_cast<double>(n);
    out[n - 1] = e == 1.0 ? x : std::pow(x, e);
  }
  return out;
}

NormingPair parse_norming(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::size_t N = j.contains("N") ? as_count(j["N"], path + "/N") : 0;
  auto a = parse_sequence(require_key(j, "a", path), N, path + "/a");
  auto b = parse_sequence(require_key(j, "b", path), N, path + "/b");
  return with_path(path, [&] { return NormingPair(std::move(a), std::move(b)); });
}

// Random direction times a uniform radius on [0, bound].
std::vector<Vector> random_vectors(std::size_t count, const SpaceSpec& space,
                                   double bound, Stream& s) {
  std::vector<Vector> out;
  std::vector<double> v(space.dim());
  for (std::size_t i = 0; i < count; ++i) {
    double r = 0.0;
    do {
      for (double& x : v) x = s.normal();
      r = space.norm(v);
    } while (r == 0.0);
    const double radius = bound * s.uniform();
    for (double& x : v) x *= radius / r;
    // Rounding can push the norm a hair above the bound.
    while (space.norm(v) > bound) {
      for (double& x : v) x *= 1.0 - 1e-15;
    }
    out.emplace_back(v);
  }
  return out;
}

bool is_mc_kind(const ExperimentConfig& c) {
  switch (c.kind) {
    case ExperimentKind::kThm11ii:
    case ExperimentKind::kWlln:
      return true;
    case ExperimentKind::kThm11i:
    case ExperimentKind::kContraction:
    case ExperimentKind::kLevy:
      return !c.exact;
    default:
      return false;
  }
}

ExperimentConfig parse_experiment(const json& j, const std::string& path);

void parse_common(const json& j, const std::string& path, ExperimentConfig& c) {
  c.kind = parse_kind(require_key(j, "experiment", path), path + "/experiment");
  c.seed = as_count(require_key(j, "seed", path), path + "/seed");
  if (j.contains("R")) c.replications = as_count(j["R"], path + "/R");
  if (j.contains("confidence")) {
    c.confidence = as_number(j["confidence"], path + "/confidence");
    if (!(c.confidence > 0.0 && c.confidence < 1.0)) {
      fail(path + "/confidence", "must lie in (0, 1)");
    }
  }
  if (j.contains("threads")) {
    c.threads = static_cast<unsigned>(
        std::max<std::uint64_t>(1, as_count(j["threads"], path + "/threads")));
  }
  if (j.contains("output_dir")) {
    if (!j["output_dir"].is_string()) fail(path + "/output_dir", "expected a string");
    c.output_dir = j["output_dir"].get<std::string>();
  }
  if (j.contains("mode")) {
    const json& m = j["mode"];
    if (m == "exact") {
      c.exact = true;
    } else if (m == "mc") {
      c.exact = false;
    } else {
      fail(path + "/mode", "expected \"exact\" or \"mc\"");
    }
  }
  if (is_mc_kind(c) && !c.replications) fail(path + "/R", "required key missing");
  if (c.replications && *c.replications < 100) fail(path + "/R", "must be >= 100");
}

void parse_inequality(const json& j, const std::string& path, ExperimentConfig& c) {
  c.space = j.contains("space") ? parse_space(j["space"], path + "/space")
                                : SpaceSpec::real_line();
  if (j.contains("t_grid")) {
    c.t_grid = as_numbers(j["t_grid"], path + "/t_grid");
    for (double t : c.t_grid) {
      if (!(t >= 0.0)) fail(path + "/t_grid", "values must be >= 0");
    }
  }
  if (j.contains("norming")) c.norming = parse_norming(j["norming"], path + "/norming");
  if (j.contains("distribution")) {
    c.distribution = parse_distribution(j["distribution"], *c.space,
                                        path + "/distribution");
  }
  if (j.contains("n")) c.n = as_count(j["n"], path + "/n");

  Stream gen(StreamKey{c.seed, 0, substreams::kConfig, 0});
  switch (c.kind) {
    case ExperimentKind::kThm11i: {
      if (!c.norming) fail(path + "/norming", "required key missing");
      const FunctionPair f =
          with_path(path + "/norming", [&] { return FunctionPair::build(*c.norming); });
      if (j.contains("vectors")) {
        for (std::size_t i = 0; i < j["vectors"].size(); ++i) {
          c.vectors.push_back(parse_vector(j["vectors"][i],
                                           path + "/vectors/" + std::to_string(i)));
        }
        c.n = c.vectors.size();
      } else {
        if (c.n == 0) fail(path + "/n", "required when 'vectors' is absent");
        if (c.n > c.norming->size()) fail(path + "/n", "exceeds norming/N");
        c.vectors = random_vectors(c.n, *c.space, c.norming->b(c.n), gen);
      }
      if (c.n == 0 || c.n > c.norming->size()) {
        fail(path + "/vectors", "count must lie in 1..norming/N");
      }
      for (std::size_t i = 0; i < c.vectors.size(); ++i) {
        if (c.vectors[i].dim() != c.space->dim()) {
          fail(path + "/vectors/" + std::to_string(i), "dimension mismatch");
        }
        if (norm(c.vectors[i], *c.space) > f.b(c.n)) {
          fail(path + "/vectors/" + std::to_string(i),
               "hypothesis violated: norm exceeds b_n");
        }
      }
      break;
    }
    case ExperimentKind::kContraction: {
      if (j.contains("vectors")) {
        for (std::size_t i = 0; i < j["vectors"].size(); ++i) {
          c.vectors.push_back(parse_vector(j["vectors"][i],
                                           path + "/vectors/" + std::to_string(i)));
        }
        c.n = c.vectors.size();
      } else {
        if (c.n == 0) fail(path + "/n", "required when 'vectors' is absent");
        c.vectors = random_vectors(c.n, *c.space, 1.0, gen);
      }
      if (c.n == 0) fail(path + "/vectors", "need at least one vector");
      const json& aw = require_key(j, "alpha_weights", path);
      if (aw.is_string() && aw == "random") {
        for (std::size_t i = 0; i < c.n; ++i) c.alpha_weights.push_back(gen.uniform(-1, 1));
      } else {
        c.alpha_weights = as_numbers(aw, path + "/alpha_weights");
      }
      if (c.alpha_weights.size() != c.n) {
        fail(path + "/alpha_weights", "length must equal the number of vectors");
      }
      for (double a : c.alpha_weights) {
        if (!(std::abs(a) <= 1.0)) {
          fail(path + "/alpha_weights", "hypothesis violated: |alpha_i| > 1");
        }
      }
      for (std::size_t i = 0; i < c.vectors.size(); ++i) {
        if (c.vectors[i].dim() != c.space->dim()) {
          fail(path + "/vectors/" + std::to_string(i), "dimension mismatch");
        }
      }
      break;
    }
    case ExperimentKind::kThm11ii: {
      if (!c.norming) fail(path + "/norming", "required key missing");
      if (!c.distribution) fail(path + "/distribution", "required key missing");
      with_path(path + "/norming", [&] { return FunctionPair::build(*c.norming); });
      if (c.n == 0) fail(path + "/n", "required key missing");
      if (c.n > c.norming->size()) fail(path + "/n", "exceeds norming/N");
      if (!c.distribution->is_symmetric()) {
        fail(path + "/distribution", "hypothesis violated: law is not symmetric");
      }
      break;
    }
    case ExperimentKind::kLevy: {
      if (!c.distribution) fail(path + "/distribution", "required key missing");
      if (c.n == 0) fail(path + "/n", "required key missing");
      if (j.contains("b_n")) {
        c.levy_b_n = as_number(j["b_n"], path + "/b_n");
      } else if (c.norming) {
        if (c.n > c.norming->size()) fail(path + "/n", "exceeds norming/N");
        c.levy_b_n = c.norming->b(c.n);
      } else {
        c.levy_b_n = static_cast<double>(c.n);
      }
      if (!(*c.levy_b_n > 0.0)) fail(path + "/b_n", "must be > 0");
      if (c.exact) {
        const bool rademacher_scalar =
            std::holds_alternative<dist::Rademacher>(c.distribution->law()) &&
            c.space->dim() == 1 && !c.distribution->shift();
        if (!rademacher_scalar) {
          fail(path + "/mode", "exact levy requires the scalar rademacher law");
        }
        if (c.n > 10) fail(path + "/n", "exact levy supports n <= 10");
      }
      break;
    }
    default:
      break;
  }
}

void parse_wlln(const json& j, const std::string& path, ExperimentConfig& c) {
  c.space = j.contains("space") ? parse_space(j["space"], path + "/space")
                                : SpaceSpec::real_line();
  c.distribution = parse_distribution(require_key(j, "distribution", path),
                                      *c.space, path + "/distribution");
  c.norming = parse_norming(require_key(j, "norming", path), path + "/norming");
  WllnOptions& w = c.wlln;
  if (j.contains("n_grid")) {
    for (double x : as_numbers(j["n_grid"], path + "/n_grid")) {
      if (!(x >= 1.0) || std::floor(x) != x) fail(path + "/n_grid", "entries must be integers >= 1");
      w.n_grid.push_back(static_cast<std::size_t>(x));
    }
  } else {
    w.n_max = as_count(require_key(j, "n_max", path), path + "/n_max");
    if (w.n_max == 0) fail(path + "/n_max", "must be >= 1");
  }
  if (j.contains("lambda_grid")) w.lambda_grid = as_numbers(j["lambda_grid"], path + "/lambda_grid");
  if (j.contains("stable_type_p")) {
    w.stable_type_p = as_number(j["stable_type_p"], path + "/stable_type_p");
  }
  if (j.contains("thresholds")) {
    const json& t = j["thresholds"];
    if (t.contains("converges")) {
      w.thresholds.converges = as_number(t["converges"], path + "/thresholds/converges");
    }
    if (t.contains("bounded_away")) {
      w.thresholds.bounded_away =
          as_number(t["bounded_away"], path + "/thresholds/bounded_away");
    }
  }
  if (j.contains("centering_draws")) {
    w.centering_draws = as_count(j["centering_draws"], path + "/centering_draws");
  }
  if (j.contains("centering")) {
    const json& m = j["centering"];
    if (m == "analytic") {
      w.centering = AnalyticCentering{};
      if (!has_analytic_centering(*c.distribution)) {
        fail(path + "/centering", "no analytic truncated mean for this law");
      }
    } else if (m == "monte_carlo") {
      w.centering = MonteCarloCentering{w.centering_draws, c.seed};
    } else if (m != "auto") {
      fail(path + "/centering", "expected \"auto\", \"analytic\" or \"monte_carlo\"");
    }
  }
  if (j.contains("symmetrization_check")) {
    if (!j["symmetrization_check"].is_boolean()) {
      fail(path + "/symmetrization_check", "expected a boolean");
    }
    c.symmetrization_check = j["symmetrization_check"].get<bool>();
  }
  w.mc = McOptions{*c.replications, c.seed, c.threads, c.confidence};

  // Run the same validation the runner applies, without sampling.
  const auto grid = w.n_grid.empty() ? powers_of_two_grid(w.n_max) : w.n_grid;
  if (grid.empty()) fail(path + "/n_max", "empty grid");
  if (auto n = c.norming->ratio_violation()) {
    fail(path + "/norming", "b_n / a_n decreases at n = " + std::to_string(*n));
  }
  if (grid.back() > c.norming->size()) {
    fail(path + "/norming/N", "smaller than the largest grid n = " +
                                  std::to_string(grid.back()));
  }
}

ExperimentConfig parse_experiment(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path.empty() ? "/" : path, "expected a JSON object");
  if (j.contains("schema_version") &&
      as_count(j["schema_version"], path + "/schema_version") != kSchemaVersion) {
    fail(path + "/schema_version", "unsupported schema version");
  }
  ExperimentConfig c;
  parse_common(j, path, c);
  switch (c.kind) {
    case ExperimentKind::kConstruct:
      c.norming = parse_norming(require_key(j, "norming", path), path + "/norming");
      if (j.contains("points_per_unit")) {
        c.points_per_unit = as_count(j["points_per_unit"], path + "/points_per_unit");
        if (c.points_per_unit < 1) fail(path + "/points_per_unit", "must be >= 1");
      }
      with_path(path + "/norming", [&] { return FunctionPair::build(*c.norming); });
      break;
    case ExperimentKind::kWlln:
      parse_wlln(j, path, c);
      break;
    case ExperimentKind::kSweep:
      break;
    default:
      parse_inequality(j, path, c);
      break;
  }
  return c;
}

json expand_sweep_members(const json& j) {
  json members = json::array();
  if (j.contains("configs")) {
    if (!j["configs"].is_array()) fail("/configs", "expected an array");
    members = j["configs"];
  }
  if (j.contains("generator")) {
    const json& g = j["generator"];
    const auto kind = require_key(g, "kind", "/generator");
    if (!kind.is_string()) fail("/generator/kind", "expected a string");
    const std::size_t count = as_count(require_key(g, "count", "/generator"), "/generator/count");
    const std::uint64_t R =
        g.contains("R") ? as_count(g["R"], "/generator/R")
                        : (j.contains("R") ? as_count(j["R"], "/R") : 0);
    const json generated = json::parse(random_sweep_json(
        kind.get<std::string>(), count,
        as_count(require_key(j, "seed", ""), "/seed"), R));
    for (const auto& m : generated["configs"]) members.push_back(m);
  }
  if (members.empty()) fail("/configs", "sweep needs 'configs' or 'generator'");
  return members;
}

}  // namespace

std::string_view to_string(ExperimentKind k) noexcept {
  switch (k) {
    case ExperimentKind::kThm11i: return "thm11_i";
    case ExperimentKind::kThm11ii: return "thm11_ii";
    case ExperimentKind::kContraction: return "contraction";
    case ExperimentKind::kLevy: return "levy";
    case ExperimentKind::kWlln: return "wlln";
    case ExperimentKind::kConstruct: return "construct";
    case ExperimentKind::kSweep: return "sweep";
  }
  return "unknown";
}

LoadedConfig load_config_text(const std::string& text, const Overrides& overrides) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("/: invalid JSON: ") + e.what());
  }
  // A manifest carries the resolved config under "config".
  if (doc.is_object() && doc.contains("config") && doc["config"].is_object() &&
      !doc.contains("experiment")) {
    doc = doc["config"];
  }
  if (!doc.is_object()) fail("/", "expected a JSON object");
  if (overrides.seed) doc["seed"] = *overrides.seed;
  if (overrides.threads) doc["threads"] = *overrides.threads;
  if (overrides.confidence) doc["confidence"] = *overrides.confidence;
  if (overrides.output_dir) doc["output_dir"] = *overrides.output_dir;
  if (!doc.contains("schema_version")) doc["schema_version"] = kSchemaVersion;

  LoadedConfig out;
  out.config = parse_experiment(doc, "");
  if (out.config.kind == ExperimentKind::kSweep) {
    const json members = expand_sweep_members(doc);
    json base = doc;
    for (const char* key : {"experiment", "configs", "generator", "output_dir"}) {
      base.erase(key);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      const std::string path = "/configs/" + std::to_string(i);
      if (!members[i].is_object()) fail(path, "expected an object");
      json merged = base;
      merged["seed"] = mix64(out.config.seed + 0x9E3779B97F4A7C15ull * (i + 1));
      merged.merge_patch(members[i]);
      ExperimentConfig m = parse_experiment(merged, path);
      if (m.kind == ExperimentKind::kSweep || m.kind == ExperimentKind::kWlln ||
          m.kind == ExperimentKind::kConstruct) {
        fail(path + "/experiment", "sweep members must be inequality experiments");
      }
      out.config.members.push_back(std::move(m));
    }
  }
  out.resolved_json = doc.dump(2);
  return out;
}

LoadedConfig load_config_file(const std::string& path, const Overrides& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("/: cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_config_text(buf.str(), overrides);
}

std::string random_sweep_json(const std::string& kind, std::size_t count,
                              std::uint64_t seed, std::uint64_t replications) {
  Stream s(StreamKey{seed, 0xFFFFFFFFu, substreams::kConfig, 0});
  const auto pick = [&](std::size_t k) {
    return static_cast<std::size_t>(s.next_u32() % static_cast<std::uint32_t>(k));
  };
  json configs = json::array();
  for (std::size_t i = 0; i < count; ++i) {
    json c;
    c["experiment"] = kind;
    if (kind == "thm11_i" || kind == "contraction") {
      const std::size_t n = 1 + pick(12);
      const std::size_t dim = 1 + pick(4);
      json q;
      switch (pick(3)) {
        case 0: q = 1.0; break;
        case 1: q = 2.0; break;
        default: q = "inf"; break;
      }
      c["space"] = {{"dim", dim}, {"q", q}};
      c["mode"] = "exact";
      c["n"] = n;
      if (kind == "thm11_i") {
        // Random increasing a_n and a nondecreasing ratio r_n; b_n = a_n r_n.
        std::vector<double> a(n), b(n);
        double ak = 0.0;
        double ratio = s.uniform(0.25, 4.0);
        for (std::size_t k = 0; k < n; ++k) {
          ak += s.uniform(0.05, 2.0);
          if (k > 0 && s.uniform() < 0.7) ratio *= 1.0 + s.uniform(0.0, 0.6);
          a[k] = ak;
          b[k] = ak * ratio;
        }
        c["norming"] = {{"a", a}, {"b", b}};
      } else {
        c["alpha_weights"] = "random";
      }
    } else if (kind == "thm11_ii") {
      // The (law, p, n) choice cycles with the member index so that any 15
      // consecutive members cover every listed value; the rest is random.
      static const std::size_t kN[] = {16, 64, 256};
      static const double kP[] = {1.0, 1.5, 2.0};
      const std::size_t n = kN[(i / 5) % 3];
      const double p = kP[i % 3];
      json d;
      switch (i % 5) {
        case 0: d = {{"kind", "pareto_symmetric"}, {"alpha", 0.8}}; break;
        case 1: d = {{"kind", "pareto_symmetric"}, {"alpha", 1.2}}; break;
        case 2: d = {{"kind", "pareto_symmetric"}, {"alpha", 2.0}}; break;
        case 3: d = {{"kind", "stable_symmetric"}, {"alpha", 1.0}}; break;
        default: d = {{"kind", "stable_symmetric"}, {"alpha", 1.5}}; break;
      }
      const std::size_t dim = 1 + pick(3);
      if (dim > 1) d["lifting"] = pick(2) == 0 ? "iid_coordinates" : "radial";
      c["space"] = {{"dim", dim}, {"q", dim == 1 ? json(2.0) : json(pick(2) == 0 ? 2.0 : 1.0)}};
      c["distribution"] = d;
      c["norming"] = {{"a", {{"family", "power"}, {"exponent", 1.0 / p}}},
                      {"b", {{"family", "power"}, {"exponent", 1.0}}},
                      {"N", n}};
      c["n"] = n;
      if (replications > 0) c["R"] = replications;
    } else {
      throw ConfigError("/generator/kind: unknown sweep generator '" + kind + "'");
    }
    configs.push_back(std::move(c));
  }
  json out{{"experiment", "sweep"}, {"seed", seed}, {"configs", std::move(configs)}};
  if (replications > 0) out["R"] = replications;
  return out.dump();
}

}  // namespace probineq
