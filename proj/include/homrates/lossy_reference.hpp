#pragma once

#include "homrates/loss_model.hpp"

namespace homrates {

// Third, fully independent route to the detected moments at the two alpha
// endpoints: literal index sums over the known endpoint sector structure,
// sharing no code with the expansion or the kernel pipelines.
//
//   alpha = 0:    sector n holds (2(n-k), 2k) spatial photons with weight
//                 A_n^2 C(n,k)^2 (2k)! (2(n-k))!
//   alpha = pi/2: sector n holds (k+l, 2n-k-l) with weight
//                 A_n^2 C(n,k)^2 C(n,l)^2 k! l! (n-k)! (n-l)!
//
// and each side's detected count is binomially thinned with efficiency eta.
LossyMoments lossy_direct_alpha0(double gamma, const DetectionModel& model, int n_max);
LossyMoments lossy_direct_alpha_pi2(double gamma, const DetectionModel& model, int n_max);

}  // namespace homrates
