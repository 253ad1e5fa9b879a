#pragma once

#include "beamtf/beam_model.hpp"
#include "beamtf/numeric_policy.hpp"

namespace beamtf {

struct TransferEvaluation {
  cd h;
  double condition = 0.0;  ///< condition estimate of the solved interface system
  bool perturbed = false;  ///< s was nudged off a repeated root
};

/// H(s) for unit input at ell0, observed at ellk, for either beam model.
TransferEvaluation evaluate_transfer(ModelKind model, const BeamParams& p,
                                     const DerivedParams& dp, cd s,
                                     double ellk, OutputKind kind,
                                     const NumericPolicy& policy = {});

inline cd transfer(ModelKind model, const BeamParams& p,
                   const DerivedParams& dp, cd s, double ellk, OutputKind kind,
                   const NumericPolicy& policy = {}) {
  return evaluate_transfer(model, p, dp, s, ellk, kind, policy).h;
}

}  // namespace beamtf
