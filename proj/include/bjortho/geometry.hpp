#ifndef BJORTHO_GEOMETRY_HPP
#define BJORTHO_GEOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "bjortho/space.hpp"

namespace bjortho {

/// Does 0 lie in conv(points)? eps is an absolute fattening applied after
/// scaling the points by 1/max-modulus, so the answer is scale-free.
struct HullQuery {
  std::vector<Scalar> points;
  double eps = 0.0;
};

namespace detail {

inline void validate(const HullQuery& q) {
  if (q.points.empty()) throw DomainError("HullQuery: point list is empty");
  if (!(q.eps >= 0.0)) throw DomainError("HullQuery: eps must be non-negative");
  for (const auto& z : q.points)
    if (!is_finite(z)) throw DomainError("HullQuery: non-finite point");
}

inline std::vector<Scalar> normalized(const std::vector<Scalar>& pts) {
  double peak = 0.0;
  for (const auto& z : pts) peak = std::max(peak, std::abs(z));
  std::vector<Scalar> out(pts);
  if (peak > 0.0)
    for (auto& z : out) z /= peak;
  return out;
}

// Distance from the origin to the segment [a, b].
inline double segment_distance(Scalar a, Scalar b) {
  const Scalar d = b - a;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(a);
  const double t = std::clamp(-(a.real() * d.real() + a.imag() * d.imag()) / len2, 0.0, 1.0);
  return std::abs(a + t * d);
}

}  // namespace detail

inline bool contains_origin(const HullQuery& q) {
  detail::validate(q);
  const auto pts = detail::normalized(q.points);
  const double eps = q.eps;

  for (const auto& z : pts)
    if (std::abs(z) <= eps) return true;

  const bool real_only = std::all_of(pts.begin(), pts.end(), [](const Scalar& z) { return z.imag() == 0.0; });
  if (real_only) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                        [](const Scalar& a, const Scalar& b) { return a.real() < b.real(); });
    return lo->real() <= eps && hi->real() >= -eps;
  }

  // Angular gap: the origin is outside the closed hull iff every point fits in
  // an open half-plane, i.e. some gap between consecutive arguments exceeds pi.
  std::vector<double> args;
  args.reserve(pts.size());
  for (const auto& z : pts) args.push_back(std::arg(z));
  std::sort(args.begin(), args.end());
  double widest = args.front() + 2.0 * std::numbers::pi - args.back();
  for (std::size_t i = 1; i < args.size(); ++i) widest = std::max(widest, args[i] - args[i - 1]);
  if (widest <= std::numbers::pi) return true;

  // Outside (or numerically on the boundary, e.g. a segment through 0): the
  // nearest hull point lies on a segment between two of the points.
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (detail::segment_distance(pts[i], pts[j]) <= eps) return true;
  return false;
}

/// Exhaustive check over singletons, pairs and triples (Caratheodory in the
/// plane). Independent of contains_origin; intended for cross-validation.
inline bool contains_origin_bruteforce(const HullQuery& q) {
  constexpr std::size_t kMaxPoints = 25;
  detail::validate(q);
  if (q.points.size() > kMaxPoints) throw SizeError("contains_origin_bruteforce: at most 25 points");
  const auto pts = detail::normalized(q.points);
  const double eps = q.eps;
  const std::size_t n = pts.size();

  for (const auto& z : pts)
    if (std::abs(z) <= eps) return true;

  // pairs: minimise |(1-t) a + t b| over t in [0, 1]
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar a = pts[i], b = pts[j];
      const double ax = a.real(), ay = a.imag(), dx = b.real() - ax, dy = b.imag() - ay;
      const double den = dx * dx + dy * dy;
      double t = den > 0.0 ? -(ax * dx + ay * dy) / den : 0.0;
      t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
      const double px = ax + t * dx, py = ay + t * dy;
      if (std::sqrt(px * px + py * py) <= eps) return true;
    }
  }

  // triples: solve s (b - a) + t (c - a) = -a and test s, t >= 0, s + t <= 1
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const double ax = pts[i].real(), ay = pts[i].imag();
        const double ux = pts[j].real() - ax, uy = pts[j].imag() - ay;
        const double vx = pts[k].real() - ax, vy = pts[k].imag() - ay;
        const double det = ux * vy - uy * vx;
        // near-degenerate triangles are within eps of an edge, covered by the pair pass
        if (std::abs(det) <= 1e-12 * std::hypot(ux, uy) * std::hypot(vx, vy)) continue;
        const double s = (-ax * vy + ay * vx) / det;
        const double t = (-ay * ux + ax * uy) / det;
        if (s >= 0.0 && t >= 0.0 && s + t <= 1.0) return true;
      }
    }
  }
  return false;
}

}  // namespace bjortho

#endif  // BJORTHO_GEOMETRY_HPP
