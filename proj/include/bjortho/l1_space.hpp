#ifndef BJORTHO_L1_SPACE_HPP
#define BJORTHO_L1_SPACE_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bjortho/oracle.hpp"
#include "bjortho/space.hpp"
#include "bjortho/split.hpp"
#include "bjortho/sup_space.hpp"
#include "bjortho/verdict.hpp"

namespace bjortho {

/// Is h (an element of the dual, L-infinity) a support functional of f in L1?
/// h must equal conj(sgn f) wherever f != 0 and have modulus <= 1 elsewhere.
inline bool is_support_functional_l1(const MeasureSpace& space, const FunctionVec& f, const FunctionVec& h,
                                     const Tolerances& = {}) {
  check_aligned(space, f);
  check_aligned(space, h);
  if (f.is_zero()) throw DomainError("is_support_functional_l1: the zero function has no support functionals");
  constexpr double kSlack = 1e-12;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != Scalar{}) {
      if (std::abs(h[i] - std::conj(sgn(f[i]))) > kSlack) return false;
    } else if (std::abs(h[i]) > 1.0 + kSlack) {
      return false;
    }
  }
  return true;
}

inline L1Evidence l1_evidence(const MeasureSpace& space, const FunctionVec& f, const FunctionVec& g) {
  check_aligned(space, f);
  check_aligned(space, g);
  L1Evidence ev;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != Scalar{}) {
      ev.pairing += space.weight(i) * std::conj(sgn(f[i])) * g[i];
    } else {
      ev.zero_mass += space.weight(i) * std::abs(g[i]);
      ev.zero_set.push_back(i);
    }
  }
  return ev;
}

/// f ⊥ g iff |sum w conj(sgn f) g| <= sum over {f = 0} of w |g|.
inline Verdict bj_orthogonal_l1(const MeasureSpace& space, const FunctionVec& f, const FunctionVec& g,
                                const Tolerances& tol = {}) {
  auto ev = l1_evidence(space, f, g);
  Verdict v;
  if (f.is_zero()) {
    v.orthogonal = v.zero_f = true;
  } else {
    const double gn = norm(space, SpaceKind::l1(), g);
    v.orthogonal = std::abs(ev.pairing) <= ev.zero_mass + tol.hull_eps * (gn > 0.0 ? gn : 1.0);
  }
  v.evidence = std::move(ev);
  return v;
}

inline SymmetryVerdict classify_l1(const MeasureSpace& space, const FunctionVec& f, const Tolerances& = {}) {
  check_aligned(space, f);
  SymmetryVerdict out;
  auto& ev = out.evidence;
  ev.zero_set = zero_set(f);
  ev.support = support(f);
  for (auto a : ev.support) ev.support_masses.push_back(space.weight(a) * std::abs(f[a]));
  if (ev.support.empty()) {
    ev.zero_function = true;
    out.is_left_symmetric = out.is_right_symmetric = true;
    ev.rule = "zero function";
    return out;
  }
  out.is_smooth = ev.zero_set.empty();
  out.is_right_symmetric = ev.support.size() == 1;
  if (space.size() == 1) {
    out.is_left_symmetric = true;
    ev.rule = "single-atom space";
  } else if (space.size() == 2 && ev.support.size() == 2) {
    const double a = ev.support_masses[0], b = ev.support_masses[1];
    out.is_left_symmetric = std::abs(a - b) <= 1e-12 * std::max(a, b);
    ev.rule = out.is_left_symmetric ? "two atoms with equal masses" : "two atoms with unequal masses";
  } else {
    ev.rule = out.is_right_symmetric ? "support is a single atom" : "support has several atoms";
  }
  return out;
}

/// The two support functionals h_i = conj(sgn f) on the support and i (= 0, 1)
/// on the zero set; they differ exactly when f has a zero atom.
inline std::pair<FunctionVec, FunctionVec> l1_proof_functionals(const MeasureSpace& space, const FunctionVec& f) {
  check_aligned(space, f);
  if (f.is_zero()) throw DomainError("l1_proof_functionals: f must be nonzero");
  std::vector<Scalar> h0(f.size()), h1(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    h0[i] = f[i] != Scalar{} ? std::conj(sgn(f[i])) : Scalar{0.0};
    h1[i] = f[i] != Scalar{} ? std::conj(sgn(f[i])) : Scalar{1.0};
  }
  return {FunctionVec(std::move(h0)), FunctionVec(std::move(h1))};
}

inline std::optional<Witness> l1_asymmetry_witness(const MeasureSpace& space, const FunctionVec& f,
                                                   const Tolerances& tol, Side side) {
  const auto cls = classify_l1(space, f, tol);
  const auto& ev = cls.evidence;
  const std::size_t n = space.size();
  const double total = norm(space, SpaceKind::l1(), f);

  if (side == Side::Left) {
    if (cls.is_left_symmetric) throw std::logic_error("l1_asymmetry_witness: f is left-symmetric");
    if (!ev.zero_set.empty()) {
      // f on its support, ||f||_1 / w(a) at one zero atom a
      const auto a = ev.zero_set.front();
      std::vector<Scalar> g(n);
      for (auto i : ev.support) g[i] = f[i];
      g[a] = total / space.weight(a);
      return detail::confirm_witness(space, SpaceKind::l1(), f, FunctionVec(std::move(g)), side,
                                     "f on supp f, ||f||_1/w at zero atom " + space.atoms()[a].id, tol);
    }
    // beta f on A, -alpha f off A, with alpha = m(A) < beta = m(rest)
    const auto split = detail::light_split(ev.support_masses);
    if (!split) return std::nullopt;
    std::vector<bool> in_a(n, false);
    double alpha = 0.0;
    for (auto k : *split) {
      in_a[ev.support[k]] = true;
      alpha += ev.support_masses[k];
    }
    const double beta = total - alpha;
    std::vector<Scalar> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = (in_a[i] ? beta : -alpha) * f[i];
    return detail::confirm_witness(space, SpaceKind::l1(), f, FunctionVec(std::move(g)), side,
                                   "beta f on A, -alpha f off A", tol);
  }

  if (cls.is_right_symmetric) throw std::logic_error("l1_asymmetry_witness: f is right-symmetric");
  // sgn(f) on the lightest support atom A; the rest of the support is B
  std::size_t light = 0;
  for (std::size_t k = 1; k < ev.support.size(); ++k)
    if (ev.support_masses[k] < ev.support_masses[light]) light = k;
  const auto a = ev.support[light];
  auto g = FunctionVec::indicator(n, a, sgn(f[a]));
  return detail::confirm_witness(space, SpaceKind::l1(), f, std::move(g), side,
                                 "sgn(f) on atom " + space.atoms()[a].id, tol);
}

/// For f with a zero atom z: g = f + c e_z and h = f - c e_z with
/// c = ||f||_1 / w(z). Both meet the orthogonality inequality with equality,
/// while g + h = 2f does not.
inline std::optional<AdditivityWitness> l1_additivity_witness(const MeasureSpace& space, const FunctionVec& f,
                                                              const Tolerances& tol = {}) {
  const auto cls = classify_l1(space, f, tol);
  if (cls.evidence.zero_function || cls.is_smooth)
    throw std::logic_error("l1_additivity_witness: needs a nonzero f with a zero atom");
  const auto z = cls.evidence.zero_set.front();
  const double c = norm(space, SpaceKind::l1(), f) / space.weight(z);
  std::vector<Scalar> g(f.values().begin(), f.values().end()), h(g);
  g[z] = c;
  h[z] = -c;
  return detail::confirm_additivity(space, SpaceKind::l1(), f, FunctionVec(std::move(g)), FunctionVec(std::move(h)),
                                    tol);
}

}  // namespace bjortho

#endif  // BJORTHO_L1_SPACE_HPP
