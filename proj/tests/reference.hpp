#ifndef BJORTHO_TESTS_REFERENCE_HPP
#define BJORTHO_TESTS_REFERENCE_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "bjortho/space.hpp"

// Plain re-derivations used to cross-check the library. Nothing here calls
// into bjortho beyond the data types.

namespace ref {

using bjortho::Field;
using bjortho::FunctionVec;
using bjortho::MeasureSpace;
using bjortho::Scalar;

inline MeasureSpace unit(std::size_t n, Field field = Field::Real) { return MeasureSpace::uniform(n, field); }

inline MeasureSpace weighted(std::vector<double> w, Field field = Field::Real) {
  return MeasureSpace::from_weights(w, field);
}

// p = 0 means sup, p = 1 means L1
inline double norm(const MeasureSpace& s, const FunctionVec& f, double p) {
  if (p == 0.0) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
    return m;
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += s.weight(i) * std::pow(std::abs(f[i]), p);
  return std::pow(acc, 1.0 / p);
}

// min over real lambda in [-radius, radius] of ||f + lambda g|| on a uniform grid
inline double scan_min_real(const MeasureSpace& s, const FunctionVec& f, const FunctionVec& g, double p,
                            double radius = 4.0, int steps = 400001) {
  double best = norm(s, f, p);
  std::vector<Scalar> v(f.size());
  for (int k = 0; k < steps; ++k) {
    const double lambda = -radius + 2.0 * radius * k / (steps - 1);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f[i] + lambda * g[i];
    best = std::min(best, norm(s, FunctionVec(v), p));
  }
  return best;
}

}  // namespace ref

#endif  // BJORTHO_TESTS_REFERENCE_HPP
