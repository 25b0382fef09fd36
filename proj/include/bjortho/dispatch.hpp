#ifndef BJORTHO_DISPATCH_HPP
#define BJORTHO_DISPATCH_HPP

#include <optional>
#include <stdexcept>

#include "bjortho/l1_space.hpp"
#include "bjortho/lp_space.hpp"
#include "bjortho/sup_space.hpp"

namespace bjortho {

inline Verdict bj_orthogonal(const MeasureSpace& space, const SpaceKind& kind, const FunctionVec& f,
                             const FunctionVec& g, const Tolerances& tol = {}) {
  switch (kind.family) {
    case NormFamily::Sup: return bj_orthogonal_sup(space, f, g, tol);
    case NormFamily::L1: return bj_orthogonal_l1(space, f, g, tol);
    case NormFamily::Lp: return bj_orthogonal_lp(space, f, g, kind.p, tol);
  }
  throw std::logic_error("bj_orthogonal: unknown space kind");
}

inline SymmetryVerdict classify(const MeasureSpace& space, const SpaceKind& kind, const FunctionVec& f,
                                const Tolerances& tol = {}) {
  switch (kind.family) {
    case NormFamily::Sup: return classify_sup(space, f, tol);
    case NormFamily::L1: return classify_l1(space, f, tol);
    case NormFamily::Lp: return classify_lp(space, f, kind.p, tol);
  }
  throw std::logic_error("classify: unknown space kind");
}

inline std::optional<Witness> asymmetry_witness(const MeasureSpace& space, const SpaceKind& kind,
                                                const FunctionVec& f, const Tolerances& tol, Side side) {
  switch (kind.family) {
    case NormFamily::Sup: return sup_asymmetry_witness(space, f, tol, side);
    case NormFamily::L1: return l1_asymmetry_witness(space, f, tol, side);
    case NormFamily::Lp: return lp_asymmetry_witness(space, f, kind.p, tol, side);
  }
  throw std::logic_error("asymmetry_witness: unknown space kind");
}

/// Non-smoothness certificate; Lp has no non-smooth nonzero points.
inline std::optional<AdditivityWitness> additivity_witness(const MeasureSpace& space, const SpaceKind& kind,
                                                           const FunctionVec& f, const Tolerances& tol = {}) {
  switch (kind.family) {
    case NormFamily::Sup: return sup_additivity_witness(space, f, tol);
    case NormFamily::L1: return l1_additivity_witness(space, f, tol);
    case NormFamily::Lp: throw std::logic_error("additivity_witness: every nonzero point of Lp is smooth");
  }
  throw std::logic_error("additivity_witness: unknown space kind");
}

}  // namespace bjortho

#endif  // BJORTHO_DISPATCH_HPP
