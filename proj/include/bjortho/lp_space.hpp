#ifndef BJORTHO_LP_SPACE_HPP
#define BJORTHO_LP_SPACE_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bjortho/oracle.hpp"
#include "bjortho/space.hpp"
#include "bjortho/split.hpp"
#include "bjortho/sup_space.hpp"
#include "bjortho/verdict.hpp"

namespace bjortho {

namespace detail {

inline void check_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("Lp exponent must lie in (1, inf)");
}

// conj(sgn f) (|f| / scale)^(p-1), atom by atom
inline std::vector<Scalar> dual_direction(const FunctionVec& f, double p, double scale) {
  std::vector<Scalar> d(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) d[i] = std::conj(sgn(f[i])) * abs_pow(std::abs(f[i]) / scale, p - 1.0);
  return d;
}

}  // namespace detail

/// The unique norm-one functional h in Lq with sum w h f = ||f||_p:
/// h = conj(sgn f) |f|^(p-1) / ||f||_p^(p-1).
inline FunctionVec support_functional_lp(const MeasureSpace& space, const FunctionVec& f, double p) {
  detail::check_p(p);
  check_aligned(space, f);
  if (f.is_zero()) throw DomainError("support_functional_lp: f must be nonzero");
  const double fn = norm(space, SpaceKind::lp(p), f);
  return FunctionVec(detail::dual_direction(f, p, fn));
}

inline LpEvidence lp_evidence(const MeasureSpace& space, const FunctionVec& f, const FunctionVec& g, double p) {
  detail::check_p(p);
  check_aligned(space, f);
  check_aligned(space, g);
  LpEvidence ev;
  ev.p = p;
  ev.support_atoms = support(f);
  for (auto i : ev.support_atoms)
    ev.pairing += space.weight(i) * std::conj(sgn(f[i])) * abs_pow(std::abs(f[i]), p - 1.0) * g[i];
  return ev;
}

/// f ⊥ g iff sum w conj(sgn f) |f|^(p-1) g = 0, tested against a Hölder-scaled
/// tolerance hull_eps ||f||_p^(p-1) ||g||_p.
inline Verdict bj_orthogonal_lp(const MeasureSpace& space, const FunctionVec& f, const FunctionVec& g, double p,
                                const Tolerances& tol = {}) {
  auto ev = lp_evidence(space, f, g, p);
  Verdict v;
  if (f.is_zero()) {
    v.orthogonal = v.zero_f = true;
  } else {
    // pairing normalised by ||f||^(p-1) so large p cannot overflow
    const double fn = norm(space, SpaceKind::lp(p), f);
    const auto h = detail::dual_direction(f, p, fn);
    Scalar scaled;
    for (std::size_t i = 0; i < f.size(); ++i) scaled += space.weight(i) * h[i] * g[i];
    v.orthogonal = std::abs(scaled) <= tol.hull_eps * norm(space, SpaceKind::lp(p), g);
  }
  v.evidence = std::move(ev);
  return v;
}

/// d/dt ||f + t g||_p at t = 0 for real t: Re(pairing) / ||f||_p^(p-1).
inline double lp_directional_derivative(const MeasureSpace& space, const FunctionVec& f, const FunctionVec& g,
                                        double p) {
  detail::check_p(p);
  check_aligned(space, f);
  check_aligned(space, g);
  if (f.is_zero()) throw DomainError("lp_directional_derivative: f must be nonzero");
  const auto h = support_functional_lp(space, f, p);
  Scalar s;
  for (std::size_t i = 0; i < f.size(); ++i) s += space.weight(i) * h[i] * g[i];
  return s.real();
}

/// Left and right symmetry coincide: f = 0, or supp f is one atom, or supp f
/// is two atoms carrying equal masses w|f|^p. For p = 2 every point is
/// symmetric (Hilbert case).
inline SymmetryVerdict classify_lp(const MeasureSpace& space, const FunctionVec& f, double p,
                                   const Tolerances& = {}) {
  detail::check_p(p);
  check_aligned(space, f);
  SymmetryVerdict out;
  auto& ev = out.evidence;
  ev.zero_set = zero_set(f);
  ev.support = support(f);
  for (auto a : ev.support) ev.support_masses.push_back(space.weight(a) * abs_pow(std::abs(f[a]), p));
  ev.zero_function = ev.support.empty();
  out.is_smooth = !ev.zero_function;
  bool symmetric = false;
  if (p == 2.0) {
    ev.hilbert = true;
    symmetric = true;
    ev.rule = "p = 2 (inner product space)";
  } else if (ev.zero_function) {
    symmetric = true;
    ev.rule = "zero function";
  } else if (ev.support.size() == 1) {
    symmetric = true;
    ev.rule = "support is a single atom";
  } else if (ev.support.size() == 2) {
    const double a = ev.support_masses[0], b = ev.support_masses[1];
    symmetric = std::abs(a - b) <= 1e-12 * std::max(a, b);
    ev.rule = symmetric ? "support is two atoms with equal masses" : "support is two atoms with unequal masses";
  } else {
    ev.rule = "support has three or more atoms";
  }
  out.is_left_symmetric = out.is_right_symmetric = symmetric;
  return out;
}

/// g = a f on A, b f on the rest of supp f, where m(A) < m(rest) for the masses
/// m = sum w|f|^p. Left: (a, b) = (m(rest), -m(A)) kills the forward pairing.
/// Right: (a, b) = (m(rest)^(1/(p-1)), -m(A)^(1/(p-1))) kills the reverse one.
inline std::optional<Witness> lp_asymmetry_witness(const MeasureSpace& space, const FunctionVec& f, double p,
                                                   const Tolerances& tol, Side side) {
  const auto cls = classify_lp(space, f, p, tol);
  if (side == Side::Left ? cls.is_left_symmetric : cls.is_right_symmetric)
    throw std::logic_error("lp_asymmetry_witness: f is symmetric");
  const auto& ev = cls.evidence;
  const auto split = detail::light_split(ev.support_masses);
  if (!split) return std::nullopt;

  const std::size_t n = space.size();
  std::vector<bool> in_a(n, false);
  double light = 0.0, total = 0.0;
  for (double m : ev.support_masses) total += m;
  for (auto k : *split) {
    in_a[ev.support[k]] = true;
    light += ev.support_masses[k];
  }
  const double heavy = total - light;
  double a = heavy, b = -light;
  if (side == Side::Right) {
    a = abs_pow(heavy, 1.0 / (p - 1.0));
    b = -abs_pow(light, 1.0 / (p - 1.0));
  }
  std::vector<Scalar> g(n);
  for (auto i : ev.support) g[i] = (in_a[i] ? a : b) * f[i];
  return detail::confirm_witness(space, SpaceKind::lp(p), f, FunctionVec(std::move(g)), side,
                                 side == Side::Left ? "g_{a,b} with a = m(rest), b = -m(A)"
                                                    : "g_{a,b} with a = m(rest)^(1/(p-1)), b = -m(A)^(1/(p-1))",
                                 tol);
}

}  // namespace bjortho

#endif  // BJORTHO_LP_SPACE_HPP
