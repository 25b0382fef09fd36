#ifndef BJORTHO_SUP_SPACE_HPP
#define BJORTHO_SUP_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bjortho/geometry.hpp"
#include "bjortho/oracle.hpp"
#include "bjortho/space.hpp"
#include "bjortho/verdict.hpp"

// Sup-norm (C0 / L-infinity) criteria on a finite atomic space. On such a
// space the essential supremum is the maximum over atoms, and the set of
// essential limit values of conj(f) g near the top of |f| is exactly
// {conj(f(a)) g(a) : a attains the norm}, so one hull test serves both.

namespace bjortho {

inline AttainSet attain_set(const MeasureSpace& space, const FunctionVec& f, const Tolerances& tol = {}) {
  check_aligned(space, f);
  AttainSet out;
  const double top = norm(space, SpaceKind::sup(), f);
  if (top == 0.0) {
    out.zero_function = true;
    return out;
  }
  out.threshold = top * (1.0 - tol.rel_attain);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (std::abs(f[i]) >= out.threshold) out.indices.push_back(i);
  return out;
}

/// f ⊥ g iff 0 lies in conv{conj(f(a)) g(a) : a in the attain set of f}.
inline Verdict bj_orthogonal_sup(const MeasureSpace& space, const FunctionVec& f, const FunctionVec& g,
                                 const Tolerances& tol = {}) {
  check_aligned(space, f);
  check_aligned(space, g);
  SupEvidence ev;
  ev.attain = attain_set(space, f, tol);
  Verdict v;
  if (ev.attain.zero_function) {
    v.orthogonal = true;
    v.zero_f = true;
    v.evidence = std::move(ev);
    return v;
  }
  for (auto a : ev.attain.indices) ev.hull_points.push_back(std::conj(f[a]) * g[a]);
  v.orthogonal = contains_origin(HullQuery{ev.hull_points, tol.hull_eps});
  v.evidence = std::move(ev);
  return v;
}

inline SymmetryVerdict classify_sup(const MeasureSpace& space, const FunctionVec& f, const Tolerances& tol = {}) {
  SymmetryVerdict out;
  const auto attain = attain_set(space, f, tol);
  out.evidence.attain_set = attain.indices;
  out.evidence.zero_set = zero_set(f);
  out.evidence.support = support(f);
  if (attain.zero_function) {
    out.evidence.zero_function = true;
    out.is_left_symmetric = out.is_right_symmetric = true;
    out.evidence.rule = "zero function";
    return out;
  }
  const double top = norm(space, SpaceKind::sup(), f);
  out.is_smooth = attain.indices.size() == 1;
  if (out.is_smooth) {
    const auto peak = attain.indices.front();
    bool vanishes_elsewhere = true;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (i != peak && std::abs(f[i]) > tol.rel_attain * top) vanishes_elsewhere = false;
    out.is_left_symmetric = vanishes_elsewhere;
  }
  out.is_right_symmetric = attain.indices.size() == space.size();
  out.evidence.rule = out.is_right_symmetric ? "norm attained on every atom"
                      : out.is_left_symmetric ? "single attaining atom, zero elsewhere"
                      : out.is_smooth         ? "single attaining atom"
                                              : "several attaining atoms";
  return out;
}

namespace detail {

inline std::optional<Witness> confirm_witness(const MeasureSpace& space, const SpaceKind& kind, const FunctionVec& f,
                                              FunctionVec g, Side side, std::string construction,
                                              const Tolerances& tol) {
  Witness w;
  w.side = side;
  w.forward = oracle_orthogonal(space, kind, f, g, tol);
  w.reverse = oracle_orthogonal(space, kind, g, f, tol);
  w.g = std::move(g);
  w.construction = std::move(construction);
  if (!w.confirmed()) return std::nullopt;
  return w;
}

inline std::optional<AdditivityWitness> confirm_additivity(const MeasureSpace& space, const SpaceKind& kind,
                                                           const FunctionVec& f, FunctionVec g, FunctionVec h,
                                                           const Tolerances& tol) {
  AdditivityWitness w;
  w.to_g = oracle_orthogonal(space, kind, f, g, tol);
  w.to_h = oracle_orthogonal(space, kind, f, h, tol);
  w.to_sum = oracle_orthogonal(space, kind, f, g + h, tol);
  w.g = std::move(g);
  w.h = std::move(h);
  if (!w.confirmed()) return std::nullopt;
  return w;
}

}  // namespace detail

/// Builds g certifying that f is not left- (resp. right-) symmetric.
/// Left: g = sgn(f(x2)) at one atom x2 != peak with f(x2) != 0, so g vanishes at the
/// peak (f ⊥ g) while g's only attaining atom pairs positively with f.
/// Right: g agrees with f on the attain set and takes a value at an atom outside
/// it that puts 0 in the hull for g but not for f. Returns nullopt if the
/// oracle does not confirm both directions.
inline std::optional<Witness> sup_asymmetry_witness(const MeasureSpace& space, const FunctionVec& f,
                                                    const Tolerances& tol, Side side) {
  const auto cls = classify_sup(space, f, tol);
  const auto& attain = cls.evidence.attain_set;
  const std::size_t n = space.size();
  const double top = norm(space, SpaceKind::sup(), f);

  if (side == Side::Left) {
    if (cls.is_left_symmetric) throw std::logic_error("sup_asymmetry_witness: f is left-symmetric");
    const std::size_t peak = attain.front();
    std::size_t partner = n;
    for (std::size_t i = 0; i < n; ++i)
      if (i != peak && f[i] != Scalar{} && (partner == n || std::abs(f[i]) > std::abs(f[partner]))) partner = i;
    auto g = FunctionVec::indicator(n, partner, sgn(f[partner]));
    return detail::confirm_witness(space, SpaceKind::sup(), f, std::move(g), side,
                                   "g = sgn(f(x2)) at x2 = " + space.atoms()[partner].id, tol);
  }

  if (cls.is_right_symmetric) throw std::logic_error("sup_asymmetry_witness: f is right-symmetric");
  std::vector<Scalar> g(n);
  for (auto a : attain) g[a] = f[a];
  const auto zeros = zero_set(f);
  if (!zeros.empty()) {
    g[zeros.front()] = top;
    return detail::confirm_witness(space, SpaceKind::sup(), f, FunctionVec(std::move(g)), side,
                                   "f on the attain set, ||f|| at zero atom " + space.atoms()[zeros.front()].id,
                                   tol);
  }
  std::size_t low = n;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(attain.begin(), attain.end(), i) == attain.end() &&
        (low == n || std::abs(f[i]) < std::abs(f[low])))
      low = i;
  g[low] = -top * sgn(f[low]);
  return detail::confirm_witness(space, SpaceKind::sup(), f, FunctionVec(std::move(g)), side,
                                 "f on the attain set, -||f|| sgn(f) at atom " + space.atoms()[low].id, tol);
}

/// For f with two attaining atoms x1, x2: g = f/||f|| off x1, h = f/||f|| off x2.
/// Both vanish at an attaining atom, yet g + h pairs positively with f on every
/// attaining atom. Certifies that f is not smooth.
inline std::optional<AdditivityWitness> sup_additivity_witness(const MeasureSpace& space, const FunctionVec& f,
                                                               const Tolerances& tol = {}) {
  const auto cls = classify_sup(space, f, tol);
  if (cls.evidence.zero_function || cls.is_smooth)
    throw std::logic_error("sup_additivity_witness: needs a nonzero f with two attaining atoms");
  const double top = norm(space, SpaceKind::sup(), f);
  const auto x1 = cls.evidence.attain_set[0], x2 = cls.evidence.attain_set[1];
  std::vector<Scalar> g(f.values().begin(), f.values().end()), h(g);
  for (auto& z : g) z /= top;
  for (auto& z : h) z /= top;
  g[x1] = 0.0;
  h[x2] = 0.0;
  return detail::confirm_additivity(space, SpaceKind::sup(), f, FunctionVec(std::move(g)), FunctionVec(std::move(h)),
                                    tol);
}

}  // namespace bjortho

#endif  // BJORTHO_SUP_SPACE_HPP
