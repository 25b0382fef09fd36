#ifndef BJORTHO_VERDICT_HPP
#define BJORTHO_VERDICT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bjortho/space.hpp"

namespace bjortho {

/// Norm-attaining atoms of f: those with |f(a)| >= threshold.
struct AttainSet {
  std::vector<std::size_t> indices;
  double threshold = 0.0;
  bool zero_function = false;
};

struct SupEvidence {
  AttainSet attain;
  std::vector<Scalar> hull_points;  // conj(f(a)) g(a) over the attain set
};

struct L1Evidence {
  Scalar pairing;           // sum w conj(sgn f) g
  double zero_mass = 0.0;   // sum over {f = 0} of w |g|
  std::vector<std::size_t> zero_set;
};

struct LpEvidence {
  Scalar pairing;           // sum w conj(sgn f) |f|^(p-1) g
  double p = 2.0;
  std::vector<std::size_t> support_atoms;
};

/// Orthogonality decision for f against g plus the quantities that produced it.
struct Verdict {
  bool orthogonal = false;
  bool zero_f = false;  // decided by the zero-vector convention
  std::variant<std::monostate, SupEvidence, L1Evidence, LpEvidence> evidence;
};

struct ClassEvidence {
  bool zero_function = false;
  bool hilbert = false;                      // Lp with p = 2
  std::vector<std::size_t> attain_set;       // sup only
  std::vector<std::size_t> zero_set;
  std::vector<std::size_t> support;
  std::vector<double> support_masses;        // L1/Lp: w|f|^p per support atom
  std::string rule;                          // which clause decided the flags
};

struct SymmetryVerdict {
  bool is_smooth = false;
  bool is_left_symmetric = false;
  bool is_right_symmetric = false;
  ClassEvidence evidence;
};

/// Left: f is orthogonal to g but g is not orthogonal to f.
/// Right: g is orthogonal to f but f is not orthogonal to g.
enum class Side { Left, Right };

inline const char* to_string(Side s) { return s == Side::Left ? "left" : "right"; }

enum class OracleVerdict { Orthogonal, NotOrthogonal, MarginBand };

inline const char* to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Orthogonal: return "orthogonal";
    case OracleVerdict::NotOrthogonal: return "not_orthogonal";
    case OracleVerdict::MarginBand: return "margin_band";
  }
  return "?";
}

struct OracleResult {
  double min_norm = 0.0;
  Scalar argmin;
  double base_norm = 0.0;
  OracleVerdict verdict = OracleVerdict::Orthogonal;
  std::size_t evaluations = 0;
};

/// A vector g certifying that f is not left- (or right-) symmetric, with the
/// oracle runs that confirmed it in both directions.
struct Witness {
  Side side = Side::Left;
  FunctionVec g;
  std::string construction;
  OracleResult forward;  // f against g
  OracleResult reverse;  // g against f

  bool confirmed() const {
    if (side == Side::Left)
      return forward.verdict == OracleVerdict::Orthogonal && reverse.verdict == OracleVerdict::NotOrthogonal;
    return reverse.verdict == OracleVerdict::Orthogonal && forward.verdict == OracleVerdict::NotOrthogonal;
  }
};

/// Two directions g, h with f orthogonal to each but not to g + h; certifies
/// that f is not smooth.
struct AdditivityWitness {
  FunctionVec g;
  FunctionVec h;
  OracleResult to_g;
  OracleResult to_h;
  OracleResult to_sum;

  bool confirmed() const {
    return to_g.verdict == OracleVerdict::Orthogonal && to_h.verdict == OracleVerdict::Orthogonal &&
           to_sum.verdict == OracleVerdict::NotOrthogonal;
  }
};

}  // namespace bjortho

#endif  // BJORTHO_VERDICT_HPP
