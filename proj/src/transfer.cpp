#include "beamtf/transfer.hpp"

#include "beamtf/euler_bernoulli.hpp"
#include "beamtf/timoshenko.hpp"

namespace beamtf {

TransferEvaluation evaluate_transfer(ModelKind model, const BeamParams& p,
                                     const DerivedParams& dp, cd s,
                                     double ellk, OutputKind kind,
                                     const NumericPolicy& policy) {
  if (model == ModelKind::Timoshenko) {
    const TbSolution sol = tb_solve(dp, p, s, policy);
    return {tb_output(sol, ellk, kind), sol.condition, sol.perturbed};
  }
  const EbSolution sol = eb_solve(dp, p, s, policy);
  return {eb_output(sol, ellk, kind), sol.condition, false};
}

}  // namespace beamtf
