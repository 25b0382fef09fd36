#ifndef BJORTHO_SPACE_HPP
#define BJORTHO_SPACE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace bjortho {

using Scalar = std::complex<double>;

enum class Field { Real, Complex };

/// Function and space do not line up (length, field, non-finite values).
class AlignmentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Input too large for an exhaustive routine.
class SizeError : public std::length_error {
public:
  using std::length_error::length_error;
};

inline bool is_finite(const Scalar& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// z/|z| for z != 0, exactly 0 for z == 0.
inline Scalar sgn(const Scalar& z) {
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0};
  return z / r;
}

/// r^e for r >= 0 with 0 mapped to 0; uses exp/log so non-integer exponents never see log(0).
inline double abs_pow(double r, double e) {
  if (r == 0.0) return 0.0;
  return std::exp(e * std::log(r));
}

/// Hölder conjugate q = p/(p-1) for 1 < p < inf.
inline double conjugate_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("conjugate_exponent: p must lie in (1, inf)");
  return p / (p - 1.0);
}

struct Atom {
  std::string id;
  double weight = 1.0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// A finite atomic measure space: atoms with strictly positive weights over R or C.
class MeasureSpace {
public:
  MeasureSpace(std::vector<Atom> atoms, Field field) : atoms_(std::move(atoms)), field_(field) {
    if (atoms_.empty()) throw std::invalid_argument("MeasureSpace: at least one atom required");
    std::unordered_set<std::string> seen;
    weights_.reserve(atoms_.size());
    for (const auto& a : atoms_) {
      if (!(a.weight > 0.0) || !std::isfinite(a.weight))
        throw std::invalid_argument("MeasureSpace: atom '" + a.id + "' must have finite positive weight");
      if (!seen.insert(a.id).second) throw std::invalid_argument("MeasureSpace: duplicate atom id '" + a.id + "'");
      weights_.push_back(a.weight);
    }
  }

  /// Space with ids "a0", "a1", ...
  static MeasureSpace from_weights(std::span<const double> weights, Field field) {
    std::vector<Atom> atoms;
    atoms.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) atoms.push_back({"a" + std::to_string(i), weights[i]});
    return MeasureSpace(std::move(atoms), field);
  }

  static MeasureSpace uniform(std::size_t n, Field field) {
    std::vector<double> w(n, 1.0);
    return from_weights(w, field);
  }

  std::size_t size() const { return atoms_.size(); }
  Field field() const { return field_; }
  bool is_complex() const { return field_ == Field::Complex; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::span<const double> weights() const { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }

  friend bool operator==(const MeasureSpace& a, const MeasureSpace& b) {
    return a.field_ == b.field_ && a.atoms_ == b.atoms_;
  }

private:
  std::vector<Atom> atoms_;
  std::vector<double> weights_;
  Field field_;
};

/// Values of a function on the atoms of some space, index-aligned with MeasureSpace::atoms().
class FunctionVec {
public:
  FunctionVec() = default;
  explicit FunctionVec(std::vector<Scalar> values) : values_(std::move(values)) {
    for (const auto& v : values_)
      if (!is_finite(v)) throw AlignmentError("FunctionVec: non-finite value");
  }
  FunctionVec(std::initializer_list<Scalar> values) : FunctionVec(std::vector<Scalar>(values)) {}

  static FunctionVec zeros(std::size_t n) { return FunctionVec(std::vector<Scalar>(n)); }

  static FunctionVec indicator(std::size_t n, std::size_t at, Scalar value = 1.0) {
    std::vector<Scalar> v(n);
    v.at(at) = value;
    return FunctionVec(std::move(v));
  }

  std::size_t size() const { return values_.size(); }
  const Scalar& operator[](std::size_t i) const { return values_[i]; }
  std::span<const Scalar> values() const { return values_; }

  bool is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Scalar& z) { return z == Scalar{}; });
  }

  FunctionVec scaled(Scalar alpha) const {
    std::vector<Scalar> v(values_);
    for (auto& z : v) z *= alpha;
    return FunctionVec(std::move(v));
  }

  FunctionVec permuted(std::span<const std::size_t> perm) const {
    std::vector<Scalar> v(values_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) v[i] = values_.at(perm[i]);
    return FunctionVec(std::move(v));
  }

  friend FunctionVec operator+(const FunctionVec& a, const FunctionVec& b) {
    if (a.size() != b.size()) throw AlignmentError("FunctionVec: size mismatch in sum");
    std::vector<Scalar> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return FunctionVec(std::move(v));
  }

  friend bool operator==(const FunctionVec&, const FunctionVec&) = default;

private:
  std::vector<Scalar> values_;
};

enum class NormFamily { Sup, L1, Lp };

struct SpaceKind {
  NormFamily family = NormFamily::Sup;
  double p = 0.0;  // meaningful only for Lp

  static SpaceKind sup() { return {NormFamily::Sup, 0.0}; }
  static SpaceKind l1() { return {NormFamily::L1, 1.0}; }
  static SpaceKind lp(double p) {
    if (!(p > 1.0) || !std::isfinite(p)) throw DomainError("SpaceKind: Lp requires 1 < p < inf");
    return {NormFamily::Lp, p};
  }

  std::string name() const {
    switch (family) {
      case NormFamily::Sup: return "sup";
      case NormFamily::L1: return "l1";
      case NormFamily::Lp: return "lp";
    }
    return "?";
  }
};

struct Tolerances {
  double rel_attain = 1e-9;
  double hull_eps = 1e-12;
  double oracle_margin = 1e-7;

  void validate() const {
    if (!(rel_attain > 0.0 && rel_attain < 1.0)) throw std::invalid_argument("Tolerances: rel_attain must lie in (0, 1)");
    if (!(hull_eps > 0.0)) throw std::invalid_argument("Tolerances: hull_eps must be positive");
    if (!(oracle_margin > 0.0)) throw std::invalid_argument("Tolerances: oracle_margin must be positive");
  }
};

/// Throws AlignmentError unless f has one finite value per atom (and zero imaginary parts over R).
inline void check_aligned(const MeasureSpace& space, const FunctionVec& f) {
  if (f.size() != space.size())
    throw AlignmentError("function has " + std::to_string(f.size()) + " values but space has " +
                         std::to_string(space.size()) + " atoms");
  if (!space.is_complex())
    for (std::size_t i = 0; i < f.size(); ++i)
      if (f[i].imag() != 0.0) throw AlignmentError("complex value supplied for a real space at atom " + std::to_string(i));
}

namespace detail {

// Summing sorted terms makes the result independent of atom order.
inline double sorted_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += t;
  return s;
}

inline double norm_values(std::span<const double> weights, std::span<const Scalar> values, const SpaceKind& kind,
                          std::vector<double>& terms) {
  double peak = 0.0;
  for (const auto& z : values) peak = std::max(peak, std::abs(z));
  if (kind.family == NormFamily::Sup || peak == 0.0) return peak;
  terms.resize(values.size());
  if (kind.family == NormFamily::L1) {
    for (std::size_t i = 0; i < values.size(); ++i) terms[i] = weights[i] * std::abs(values[i]);
    return sorted_sum(terms);
  }
  // scale by the peak modulus so large exponents cannot overflow
  for (std::size_t i = 0; i < values.size(); ++i) terms[i] = weights[i] * abs_pow(std::abs(values[i]) / peak, kind.p);
  return peak * abs_pow(sorted_sum(terms), 1.0 / kind.p);
}

inline double norm_values(std::span<const double> weights, std::span<const Scalar> values, const SpaceKind& kind) {
  std::vector<double> terms;
  return norm_values(weights, values, kind, terms);
}

}  // namespace detail

inline double norm(const MeasureSpace& space, const SpaceKind& kind, const FunctionVec& f) {
  check_aligned(space, f);
  return detail::norm_values(space.weights(), f.values(), kind);
}

/// Weighted p-power mass of f on the listed atoms: sum of w_a |f(a)|^p.
inline double mass(const MeasureSpace& space, const FunctionVec& f, std::span<const std::size_t> atoms, double p) {
  std::vector<double> terms;
  terms.reserve(atoms.size());
  for (auto a : atoms) terms.push_back(space.weight(a) * (p == 1.0 ? std::abs(f[a]) : abs_pow(std::abs(f[a]), p)));
  return detail::sorted_sum(terms);
}

/// Atom indices where f is nonzero.
inline std::vector<std::size_t> support(const FunctionVec& f) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != Scalar{}) s.push_back(i);
  return s;
}

inline std::vector<std::size_t> zero_set(const FunctionVec& f) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] == Scalar{}) s.push_back(i);
  return s;
}

/// Same space with atoms reordered: atom i of the result is atom perm[i] of the input.
inline MeasureSpace permuted(const MeasureSpace& space, std::span<const std::size_t> perm) {
  std::vector<Atom> atoms;
  atoms.reserve(perm.size());
  for (auto i : perm) atoms.push_back(space.atoms().at(i));
  return MeasureSpace(std::move(atoms), space.field());
}

inline MeasureSpace rescaled(const MeasureSpace& space, double c) {
  std::vector<Atom> atoms = space.atoms();
  for (auto& a : atoms) a.weight *= c;
  return MeasureSpace(std::move(atoms), space.field());
}

}  // namespace bjortho

#endif  // BJORTHO_SPACE_HPP
