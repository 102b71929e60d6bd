#ifndef HLGAP_SDP_GAP_HPP
#define HLGAP_SDP_GAP_HPP

#include <utility>
#include <vector>

#include "hlgap/bridge.hpp"

namespace hlgap {

/// Feasible point (mu, eta) of
///
///   max mu + eta  s.t.  mu C^{-1} <= I,  -eta C^{-1} <= I,  mu, eta >= 0
///
/// together with the smallest eigenvalue of every LMI block it was checked
/// against.
struct GapCertificate {
  double mu = 0.0;
  double eta = 0.0;
  double gap = 0.0;
  std::vector<double> margins;
};

/// Closed form: mu = 1 / lambda_max(C^{-1}), eta = -1 / lambda_min(C^{-1}).
/// Margins are lambda_min(I - mu C^{-1}) and lambda_min(I + eta C^{-1}).
GapCertificate gap_analytic(const SymMatrixd& c);

/// Independent route to the same optimum: bisection on the Loewner
/// feasibility of mu C^{-1} <= I and -eta C^{-1} <= I, each to width tol
/// (floored at 1e-12, at most 60 halvings). Returns the feasible endpoints.
GapCertificate gap_bisection(const SymMatrixd& c, double tol);

/// The two block LMIs for a bridged graph,
///   [[I - mu A^{-1},  H B^{-1}], [B^{-1} H^T, I - mu B^{-1} + B^{-1} H^T H B^{-1}]]
///   [[I + eta A^{-1}, H B^{-1}], [B^{-1} H^T, I + eta B^{-1} + B^{-1} H^T H B^{-1}]]
/// i.e. Z^T Z -/+ (mu|eta) diag(A^{-1}, B^{-1}).
std::pair<SymMatrixd, SymMatrixd> bridged_lmi_blocks(const WeightedGraph& ga,
                                                     const WeightedGraph& gb,
                                                     const BridgeMatrix& bm,
                                                     double mu, double eta);

/// Checks both blocks; throws InfeasiblePoint when a margin falls below
/// -1e-8 * max(1, ||block||_max) or mu / eta is negative.
GapCertificate certify_bridged_lmi(const WeightedGraph& ga,
                                   const WeightedGraph& gb,
                                   const BridgeMatrix& bm, double mu,
                                   double eta);

/// Evidence that W >= H^T H plus the diagonal identity
/// W_jj = sum_l DA_ll H_lj DB_jj forces W = H^T H at a binary point.
struct TightnessReport {
  double diagonal_residual = 0.0;  // max_j |(H^T H)_jj - sum_l DA_ll H_lj DB_jj|
  double slack_max_abs = 0.0;      // ||W - H^T H||_max for the relaxed W
  double slack_min_eigenvalue = 0.0;
  bool holds = false;
};

/// Builds the relaxed W (diagonal from the linear identity, off-diagonal
/// from H^T H) and verifies the lemma's conclusion on it: the slack
/// L = W - H^T H is PSD with zero diagonal, hence zero (|L_ij| is bounded by
/// sqrt(L_ii L_jj)). Throws NonBinaryInput.
TightnessReport relaxation_residuals(const Blockd& htilde, const Vectord& da,
                                     const Vectord& db);

bool certify_relaxation_tightness(const Blockd& htilde, const Vectord& da,
                                  const Vectord& db);

}  // namespace hlgap

#endif  // HLGAP_SDP_GAP_HPP
