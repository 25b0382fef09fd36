#ifndef BJORTHO_SAMPLING_HPP
#define BJORTHO_SAMPLING_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "bjortho/dispatch.hpp"
#include "bjortho/oracle.hpp"

namespace bjortho {

struct OrthogonalDirection {
  FunctionVec g;
  bool exists = true;  // false only for a one-atom space, where g is the zero vector
};

namespace detail {

// r minus the multiple of conj(c) that puts r in the kernel of sum c_a r_a
inline std::vector<Scalar> kernel_projection(std::vector<Scalar> r, const std::vector<Scalar>& c) {
  Scalar phi;
  double cc = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    phi += c[i] * r[i];
    cc += std::norm(c[i]);
  }
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= phi * std::conj(c[i]) / cc;
  return r;
}

inline std::vector<Scalar> draw_orthogonal(std::mt19937_64& rng, const MeasureSpace& space, const SpaceKind& kind,
                                           const FunctionVec& f, const Tolerances& tol) {
  const std::size_t n = space.size();
  const auto draw = gaussian_vec(rng, n, space.field());
  std::vector<Scalar> r(draw.values().begin(), draw.values().end());
  std::uniform_real_distribution<double> u(0.0, 1.0);

  switch (kind.family) {
    case NormFamily::Lp: {
      const double fn = norm(space, kind, f);
      auto c = dual_direction(f, kind.p, fn);
      for (std::size_t i = 0; i < n; ++i) c[i] *= space.weight(i);
      return kernel_projection(std::move(r), c);
    }
    case NormFamily::L1: {
      const auto zeros = zero_set(f);
      if (zeros.empty()) {
        std::vector<Scalar> c(n);
        for (std::size_t i = 0; i < n; ++i) c[i] = space.weight(i) * std::conj(sgn(f[i]));
        return kernel_projection(std::move(r), c);
      }
      // solve for |r(z)| at one zero atom so the inequality holds with equality
      Scalar pairing;
      double zero_mass = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (f[i] != Scalar{}) pairing += space.weight(i) * std::conj(sgn(f[i])) * r[i];
        else zero_mass += space.weight(i) * std::abs(r[i]);
      }
      const auto z = zeros[std::uniform_int_distribution<std::size_t>(0, zeros.size() - 1)(rng)];
      const double others = zero_mass - space.weight(z) * std::abs(r[z]);
      const double needed = (std::abs(pairing) - others) / space.weight(z);
      if (needed >= 0.0) r[z] = needed * (r[z] == Scalar{} ? Scalar{1.0} : sgn(r[z]));
      return r;
    }
    case NormFamily::Sup: {
      const auto attain = attain_set(space, f, tol).indices;
      std::uniform_int_distribution<std::size_t> pick(0, attain.size() - 1);
      const auto x1 = attain[pick(rng)];
      if (attain.size() >= 2 && u(rng) < 0.5) {
        auto x2 = attain[pick(rng)];
        while (x2 == x1) x2 = attain[pick(rng)];
        // place conj(f(x1)) r(x1) on the opposite ray to conj(f(x2)) r(x2)
        const double s = 0.5 + 1.5 * u(rng);
        r[x1] = -s * std::conj(f[x2]) * r[x2] / std::conj(f[x1]);
        if (!space.is_complex()) r[x1] = r[x1].real();
      } else {
        r[x1] = 0.0;
      }
      return r;
    }
  }
  throw std::logic_error("orthogonal_direction: unknown space kind");
}

}  // namespace detail

/// A seeded random g with f ⊥ g, built so that a support functional of f
/// annihilates it; checked against the analytic criterion before returning.
inline OrthogonalDirection orthogonal_direction(const MeasureSpace& space, const SpaceKind& kind,
                                                const FunctionVec& f, std::uint64_t seed, const Tolerances& tol = {}) {
  check_aligned(space, f);
  if (f.is_zero()) throw DomainError("orthogonal_direction: f must be nonzero");
  if (space.size() == 1) return {FunctionVec::zeros(1), false};
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    FunctionVec g(detail::draw_orthogonal(rng, space, kind, f, tol));
    if (!g.is_zero() && bj_orthogonal(space, kind, f, g, tol).orthogonal) return {std::move(g), true};
  }
  throw std::logic_error("orthogonal_direction: could not produce a verified direction");
}

}  // namespace bjortho

#endif  // BJORTHO_SAMPLING_HPP
