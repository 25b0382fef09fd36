#ifndef BJORTHO_ORACLE_HPP
#define BJORTHO_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "bjortho/space.hpp"
#include "bjortho/verdict.hpp"

namespace bjortho {

namespace detail {

// lambda -> ||f + lambda g||, counting evaluations and remembering the best one.
class LineNorm {
public:
  LineNorm(const MeasureSpace& space, const SpaceKind& kind, const FunctionVec& f, const FunctionVec& g)
      : space_(space), kind_(kind), f_(f), g_(g), scratch_(f.size()) {}

  double operator()(Scalar lambda) {
    for (std::size_t i = 0; i < scratch_.size(); ++i) scratch_[i] = f_[i] + lambda * g_[i];
    const double v = norm_values(space_.weights(), scratch_, kind_, terms_);
    ++evaluations;
    if (v < best_value) {
      best_value = v;
      best_lambda = lambda;
    }
    return v;
  }

  std::size_t evaluations = 0;
  double best_value = std::numeric_limits<double>::infinity();
  Scalar best_lambda;

private:
  const MeasureSpace& space_;
  SpaceKind kind_;
  const FunctionVec& f_;
  const FunctionVec& g_;
  std::vector<Scalar> scratch_;
  std::vector<double> terms_;
};

// Golden-section search for a convex function on [a, b]; returns the best value seen.
template <class Fn>
double golden_section(Fn&& fn, double a, double b, double width_tol, int max_iter, double* argmin = nullptr) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int it = 0; it < max_iter && (b - a) > width_tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = fn(d);
    }
  }
  if (argmin) *argmin = fc <= fd ? c : d;
  return std::min(fc, fd);
}

}  // namespace detail

struct OracleSettings {
  int real_grid = 257;
  int complex_grid = 65;
  int max_iterations = 200;
  double rel_width = 1e-14;
};

inline OracleVerdict classify_minimum(double min_norm, double base_norm, double margin) {
  if (min_norm >= base_norm * (1.0 - margin)) return OracleVerdict::Orthogonal;
  if (min_norm < base_norm * (1.0 - 10.0 * margin)) return OracleVerdict::NotOrthogonal;
  return OracleVerdict::MarginBand;
}

/// Decides f ⊥ g straight from the definition by minimising ||f + λg|| over
/// |λ| <= R = 2||f||/||g||. Beyond R, ||f + λg|| >= |λ| ||g|| - ||f|| > ||f||,
/// so the global minimiser is inside. The map is convex in λ; over C the
/// partial minimum over Im λ is convex in Re λ, so nested golden sections
/// converge to the global minimum.
inline OracleResult oracle_orthogonal(const MeasureSpace& space, const SpaceKind& kind, const FunctionVec& f,
                                      const FunctionVec& g, const Tolerances& tol = {},
                                      const OracleSettings& settings = {}) {
  check_aligned(space, f);
  check_aligned(space, g);
  OracleResult res;
  res.base_norm = detail::norm_values(space.weights(), f.values(), kind);
  res.min_norm = res.base_norm;
  const double gn = detail::norm_values(space.weights(), g.values(), kind);
  if (gn == 0.0 || res.base_norm == 0.0) {
    res.verdict = OracleVerdict::Orthogonal;
    return res;
  }

  const double radius = 2.0 * res.base_norm / gn;
  detail::LineNorm h(space, kind, f, g);
  h(Scalar{0.0, 0.0});
  const double width_tol = settings.rel_width * radius;

  if (!space.is_complex()) {
    const int n = settings.real_grid;
    const double step = 2.0 * radius / (n - 1);
    int best = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const double v = h(Scalar{-radius + i * step, 0.0});
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    // a convex function's minimiser lies within one grid step of the best node
    const double lo = -radius + std::max(best - 1, 0) * step;
    const double hi = -radius + std::min(best + 1, n - 1) * step;
    detail::golden_section([&](double x) { return h(Scalar{x, 0.0}); }, lo, hi, width_tol, settings.max_iterations);
  } else {
    const int n = settings.complex_grid;
    const double step = 2.0 * radius / (n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h(Scalar{-radius + i * step, -radius + j * step});
    auto profile = [&](double x) {
      return detail::golden_section([&](double y) { return h(Scalar{x, y}); }, -radius, radius, width_tol,
                                    settings.max_iterations);
    };
    detail::golden_section(profile, -radius, radius, width_tol, settings.max_iterations);
  }

  res.min_norm = std::min(h.best_value, res.base_norm);
  res.argmin = h.best_value < res.base_norm ? h.best_lambda : Scalar{};
  res.evaluations = h.evaluations;
  res.verdict = classify_minimum(res.min_norm, res.base_norm, tol.oracle_margin);
  return res;
}

/// Scan of λ -> ||f + λg|| on the real grid of the oracle; true when no interior
/// node is a strict local maximum (up to rounding), as convexity demands.
inline bool oracle_grid_is_unimodal(const MeasureSpace& space, const SpaceKind& kind, const FunctionVec& f,
                                    const FunctionVec& g, int nodes = 257) {
  const double fn = norm(space, kind, f), gn = norm(space, kind, g);
  if (fn == 0.0 || gn == 0.0) return true;
  const double radius = 2.0 * fn / gn;
  detail::LineNorm h(space, kind, f, g);
  std::vector<double> v(nodes);
  for (int i = 0; i < nodes; ++i) v[i] = h(Scalar{-radius + 2.0 * radius * i / (nodes - 1), 0.0});
  const double slack = 1e-12 * (fn + radius * gn);
  for (int i = 1; i + 1 < nodes; ++i)
    if (v[i] > v[i - 1] + slack && v[i] > v[i + 1] + slack) return false;
  return true;
}

struct Instance {
  MeasureSpace space;
  FunctionVec f;
  FunctionVec g;
};

struct InstanceOptions {
  std::size_t dim_min = 1;
  std::size_t dim_max = 6;
  Field field = Field::Real;
  double weight_lo = 1.0;
  double weight_hi = 1.0;
};

namespace detail {

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  if (lo == hi) return lo;
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

inline FunctionVec gaussian_vec(std::mt19937_64& rng, std::size_t n, Field field) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::vector<Scalar> v(n);
  for (auto& z : v) {
    const double re = nd(rng);
    z = Scalar{re, field == Field::Complex ? nd(rng) : 0.0};
  }
  return FunctionVec(std::move(v));
}

}  // namespace detail

/// Deterministic random (space, f, g). Weights are log-uniform, values standard
/// normal per component; with probability 0.3 one of the functions gets
/// deliberate zeros.
inline Instance random_instance(std::uint64_t seed, const InstanceOptions& opt) {
  if (opt.dim_min < 1 || opt.dim_max < opt.dim_min) throw std::invalid_argument("random_instance: bad dimension range");
  if (!(opt.weight_lo > 0.0) || opt.weight_hi < opt.weight_lo)
    throw std::invalid_argument("random_instance: bad weight range");
  std::mt19937_64 rng(seed);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(opt.dim_min, opt.dim_max)(rng);
  std::vector<double> w(n);
  for (auto& x : w) x = detail::log_uniform(rng, opt.weight_lo, opt.weight_hi);
  auto f = detail::gaussian_vec(rng, n, opt.field);
  auto g = detail::gaussian_vec(rng, n, opt.field);

  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (u(rng) < 0.3) {
    const bool zero_f = u(rng) < 0.5;
    std::vector<Scalar> v(zero_f ? f.values().begin() : g.values().begin(),
                          zero_f ? f.values().end() : g.values().end());
    const std::size_t forced = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    for (std::size_t i = 0; i < n; ++i)
      if (i == forced || u(rng) < 0.3) v[i] = 0.0;
    (zero_f ? f : g) = FunctionVec(std::move(v));
  }
  return Instance{MeasureSpace::from_weights(w, opt.field), std::move(f), std::move(g)};
}

}  // namespace bjortho

#endif  // BJORTHO_ORACLE_HPP
