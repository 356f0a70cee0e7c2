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

#include "probineq/sources.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "probineq/error.hpp"

namespace probineq {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Marsaglia-Tsang, with the U^{1/a} boost for shape < 1.
double gamma_draw(double shape, Stream& s) noexcept {
  if (shape < 1.0) {
    return gamma_draw(shape + 1.0, s) * std::pow(s.uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = s.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = s.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

// Cone-measure direction on the unit l_q sphere: normalize i.i.d. draws with
// density proportional to exp(-|x|^q).
void unit_direction(const SpaceSpec& space, Stream& s, std::span<double> out) {
  for (;;) {
    for (double& x : out) {
      if (space.is_max_norm()) {
        x = s.uniform(-1.0, 1.0);
      } else if (space.q() == 2.0) {
        x = s.normal();
      } else if (space.q() == 1.0) {
        x = s.sign() * s.exponential();
      } else {
        x = s.sign() * std::pow(gamma_draw(1.0 / space.q(), s), 1.0 / space.q());
      }
    }
    const double r = space.norm(out);
    if (r > 0.0) {
      for (double& x : out) x /= r;
      return;
    }
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

}  // namespace

double stable_symmetric_draw(double alpha, Stream& s) noexcept {
  const double v = std::numbers::pi * (s.uniform() - 0.5);
  if (alpha == 1.0) return std::tan(v);
  const double w = s.exponential();
  const double av = alpha * v;
  return std::sin(av) / std::pow(std::cos(v), 1.0 / alpha) *
         std::pow(std::cos(v - av) / w, (1.0 - alpha) / alpha);
}

DistributionSpec::DistributionSpec(BaseLaw law, SpaceSpec space, Lifting lifting,
                                   std::optional<Vector> shift)
    : law_(std::move(law)),
      space_(space),
      lifting_(lifting),
      shift_(std::move(shift)) {
  std::visit(
      overloaded{
          [](const dist::Rademacher&) {},
          [](const dist::ParetoSymmetric& p) {
            require(std::isfinite(p.alpha) && p.alpha > 0.0,
                    "pareto_symmetric: alpha must be > 0");
          },
          [](const dist::ParetoOneSided& p) {
            require(std::isfinite(p.alpha) && p.alpha > 0.0,
                    "pareto_one_sided: alpha must be > 0");
          },
          [](const dist::StableSymmetric& p) {
            require(p.alpha > 0.0 && p.alpha <= 2.0,
                    "stable_symmetric: alpha must lie in (0, 2]");
          },
          [](const dist::UniformBall& p) {
            require(std::isfinite(p.radius) && p.radius > 0.0,
                    "uniform_ball: radius must be > 0");
          },
          [this](const dist::PointMass& p) {
            require(p.value.dim() == space_.dim(),
                    "point_mass: value dimension does not match the space");
          },
      },
      law_);
  if (shift_) {
    require(shift_->dim() == space_.dim(),
            "shifted: shift dimension does not match the space");
  }
  if (lifting_ == Lifting::kScalar && !std::holds_alternative<dist::PointMass>(law_)) {
    require(space_.dim() == 1, "scalar lifting requires dim = 1");
  }
  if (lifting_ == Lifting::kIidCoordinates && !space_.is_max_norm()) {
    coordinate_scale_ =
        std::pow(static_cast<double>(space_.dim()), -1.0 / space_.q());
  }
}

bool DistributionSpec::is_symmetric() const noexcept {
  const bool zero_shift = !shift_ || shift_->is_zero();
  if (const auto* pm = std::get_if<dist::PointMass>(&law_)) {
    if (!shift_) return pm->value.is_zero();
    return add(pm->value, *shift_).is_zero();
  }
  // A radial lifting attaches a symmetric direction to any magnitude.
  if (std::holds_alternative<dist::ParetoOneSided>(law_) &&
      lifting_ != Lifting::kRadial) {
    return false;
  }
  return zero_shift;
}

std::optional<double> DistributionSpec::analytic_tail(double t) const {
  if (const auto* pm = std::get_if<dist::PointMass>(&law_)) {
    const Vector v = shift_ ? add(pm->value, *shift_) : pm->value;
    return space_.norm(v.coords()) > t ? 1.0 : 0.0;
  }
  if (shift_ && !shift_->is_zero()) return std::nullopt;
  // ||X|| equals |scalar draw| only for the scalar and radial liftings.
  if (lifting_ == Lifting::kIidCoordinates && space_.dim() != 1) {
    return std::nullopt;
  }
  if (t < 0.0) return 1.0;
  return std::visit(
      overloaded{
          [&](const dist::Rademacher&) -> std::optional<double> {
            return t < 1.0 ? 1.0 : 0.0;
          },
          [&](const dist::ParetoSymmetric& p) -> std::optional<double> {
            return t < 1.0 ? 1.0 : std::pow(t, -p.alpha);
          },
          [&](const dist::ParetoOneSided& p) -> std::optional<double> {
            return t < 1.0 ? 1.0 : std::pow(t, -p.alpha);
          },
          [&](const dist::StableSymmetric& p) -> std::optional<double> {
            if (p.alpha == 1.0) return 1.0 - 2.0 / std::numbers::pi * std::atan(t);
            if (p.alpha == 2.0) return std::erfc(t / 2.0);
            return std::nullopt;
          },
          [&](const dist::UniformBall& p) -> std::optional<double> {
            return t >= p.radius ? 0.0 : 1.0 - t / p.radius;
          },
          [&](const dist::PointMass&) -> std::optional<double> {
            return std::nullopt;
          },
      },
      law_);
}

double DistributionSpec::scalar_draw(Stream& s) const {
  return std::visit(
      overloaded{
          [&](const dist::Rademacher&) { return s.sign(); },
          [&](const dist::ParetoSymmetric& p) {
            const double sign = s.sign();
            return sign * std::pow(s.uniform(), -1.0 / p.alpha);
          },
          [&](const dist::ParetoOneSided& p) {
            return std::pow(s.uniform(), -1.0 / p.alpha);
          },
          [&](const dist::StableSymmetric& p) {
            return stable_symmetric_draw(p.alpha, s);
          },
          [&](const dist::UniformBall& p) { return s.uniform(-p.radius, p.radius); },
          [&](const dist::PointMass&) { return 0.0; },
      },
      law_);
}

void DistributionSpec::draw(Stream& s, std::span<double> out) const {
  if (const auto* pm = std::get_if<dist::PointMass>(&law_)) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = pm->value[i];
  } else {
    switch (lifting_) {
      case Lifting::kScalar:
        out[0] = scalar_draw(s);
        break;
      case Lifting::kIidCoordinates:
        for (double& x : out) x = coordinate_scale_ * scalar_draw(s);
        break;
      case Lifting::kRadial: {
        const double r = std::abs(scalar_draw(s));
        unit_direction(space_, s, out);
        for (double& x : out) x *= r;
        break;
      }
    }
  }
  if (shift_) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += (*shift_)[i];
  }
}

std::string DistributionSpec::describe() const {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const dist::Rademacher&) { os << "rademacher"; },
                 [&](const dist::ParetoSymmetric& p) {
                   os << "pareto_symmetric(" << p.alpha << ")";
                 },
                 [&](const dist::ParetoOneSided& p) {
                   os << "pareto_one_sided(" << p.alpha << ")";
                 },
                 [&](const dist::StableSymmetric& p) {
                   os << "stable_symmetric(" << p.alpha << ")";
                 },
                 [&](const dist::UniformBall& p) {
                   os << "uniform_ball(" << p.radius << ")";
                 },
                 [&](const dist::PointMass&) { os << "point_mass"; },
             },
             law_);
  if (shift_) os << "+shift";
  switch (lifting_) {
    case Lifting::kScalar: break;
    case Lifting::kIidCoordinates: os << "/iid"; break;
    case Lifting::kRadial: os << "/radial"; break;
  }
  os << " in " << space_.describe();
  return os.str();
}

std::vector<Vector> sample(const DistributionSpec& d, const StreamKey& key,
                           std::size_t count) {
  Stream s(key);
  std::vector<Vector> out;
  out.reserve(count);
  std::vector<double> buf(d.space().dim());
  for (std::size_t i = 0; i < count; ++i) {
    d.draw(s, buf);
    out.emplace_back(buf);
  }
  return out;
}

std::vector<double> sample_stable(double alpha, const StreamKey& key,
                                  std::size_t count) {
  if (!(alpha > 0.0 && alpha <= 2.0)) {
    throw ConfigError("stable index alpha must lie in (0, 2]");
  }
  Stream s(key);
  std::vector<double> out(count);
  for (double& x : out) x = stable_symmetric_draw(alpha, s);
  return out;
}

PairedSampler::PairedSampler(const DistributionSpec& d, const StreamKey& key)
    : spec_(&d),
      primary_(StreamKey{key.master_seed, key.replication_index,
                         substreams::kPath, key.draw_counter}),
      copy_(StreamKey{key.master_seed, key.replication_index, substreams::kCopy,
                      key.draw_counter}) {}

std::pair<Vector, Vector> PairedSampler::next() {
  std::vector<double> x(spec_->space().dim()), y(spec_->space().dim());
  next(x, y);
  return {Vector(std::move(x)), Vector(std::move(y))};
}

void PairedSampler::next(std::span<double> x, std::span<double> x_copy) {
  spec_->draw(primary_, x);
  spec_->draw(copy_, x_copy);
}

PairedSampler independent_copy(const DistributionSpec& d, const StreamKey& key) {
  return PairedSampler(d, key);
}

}  // namespace probineq
