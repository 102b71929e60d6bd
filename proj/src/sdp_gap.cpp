#include "hlgap/sdp_gap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hlgap {

namespace {

constexpr double kMarginTolerance = 1e-8;
constexpr double kBisectionWidthFloor = 1e-12;
constexpr int kBisectionMaxIterations = 60;

SymMatrixd checked_inverse(const SymMatrixd& c) {
  try {
    return invert(c);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SingularMatrix) throw;
    throw Error(ErrorCode::ZeroEigenvalue,
                std::string("matrix is not invertible: ") + e.what());
  }
}

// I + t * M
SymMatrixd shifted_identity(const SymMatrixd& m, double t) {
  return SymMatrixd::identity(m.size()) + t * m;
}

// Largest t in [0, upper] with I - t * M PSD, assuming feasibility is
// monotone in t and t = 0 is feasible.
double bisect_sup(const SymMatrixd& m, double upper, double width) {
  double lo = 0.0;
  double hi = upper;
  for (int it = 0; it < kBisectionMaxIterations && hi - lo > width; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (loewner_leq(mid * m, SymMatrixd::identity(m.size()), 0.0))
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace

GapCertificate gap_analytic(const SymMatrixd& c) {
  const auto c_inv = checked_inverse(c);
  const Vectord values = eigenvalues(c_inv);
  const double top = values(0);
  const double bottom = values(values.size() - 1);
  if (top <= 0.0 || bottom >= 0.0) {
    throw Error(ErrorCode::DefiniteMatrix,
                "spectrum does not have both signs; the gap is undefined");
  }
  GapCertificate cert;
  cert.mu = 1.0 / top;
  cert.eta = -1.0 / bottom;
  cert.gap = cert.mu + cert.eta;
  cert.margins = {min_eigenvalue(shifted_identity(c_inv, -cert.mu)),
                  min_eigenvalue(shifted_identity(c_inv, cert.eta))};
  return cert;
}

GapCertificate gap_bisection(const SymMatrixd& c, double tol) {
  const auto c_inv = checked_inverse(c);
  const double width = std::max(tol, kBisectionWidthFloor);
  // Both lambda_plus and |lambda_minus| are at most the spectral radius of C,
  // which Gershgorin bounds by n * ||C||_max.
  const double upper =
      2.0 * static_cast<double>(c.size()) * c.max_abs() + 1.0;
  const auto identity = SymMatrixd::identity(c.size());

  if (loewner_leq(upper * c_inv, identity, 0.0) ||
      loewner_leq(-upper * c_inv, identity, 0.0)) {
    throw Error(ErrorCode::DefiniteMatrix,
                "one of the LMIs is feasible for every multiplier");
  }
  GapCertificate cert;
  cert.mu = bisect_sup(c_inv, upper, width);
  cert.eta = bisect_sup(-c_inv, upper, width);
  cert.gap = cert.mu + cert.eta;
  cert.margins = {min_eigenvalue(shifted_identity(c_inv, -cert.mu)),
                  min_eigenvalue(shifted_identity(c_inv, cert.eta))};
  return cert;
}

std::pair<SymMatrixd, SymMatrixd> bridged_lmi_blocks(const WeightedGraph& ga,
                                                     const WeightedGraph& gb,
                                                     const BridgeMatrix& bm,
                                                     double mu, double eta) {
  // validates dimensions, the column constraint and bridgeability
  build_bridged(ga, gb, bm);
  const auto a_inv = checked_inverse(ga.adjacency());
  const auto b_inv = checked_inverse(gb.adjacency());
  const Blockd z = schur_z(bm.h(), b_inv);
  const auto gram = SymMatrixd::symmetrized(z.transpose() * z);
  const auto inverse_blocks = block_diagonal(a_inv, b_inv);
  return {gram - mu * inverse_blocks, gram + eta * inverse_blocks};
}

GapCertificate certify_bridged_lmi(const WeightedGraph& ga,
                                   const WeightedGraph& gb,
                                   const BridgeMatrix& bm, double mu,
                                   double eta) {
  if (mu < 0.0 || eta < 0.0) {
    throw Error(ErrorCode::InfeasiblePoint, "mu and eta must be nonnegative");
  }
  const auto [upper, lower] = bridged_lmi_blocks(ga, gb, bm, mu, eta);
  GapCertificate cert{mu, eta, mu + eta,
                      {min_eigenvalue(upper), min_eigenvalue(lower)}};
  const SymMatrixd* blocks[] = {&upper, &lower};
  for (std::size_t k = 0; k < 2; ++k) {
    if (cert.margins[k] < -kMarginTolerance * blocks[k]->scale()) {
      std::ostringstream os;
      os << (k == 0 ? "mu" : "eta") << " block has margin " << cert.margins[k]
         << " at mu = " << mu << ", eta = " << eta;
      throw Error(ErrorCode::InfeasiblePoint, os.str());
    }
  }
  return cert;
}

TightnessReport relaxation_residuals(const Blockd& htilde, const Vectord& da,
                                     const Vectord& db) {
  const auto bm = BridgeMatrix::from_voltage(
      htilde, da, db, {});  // checks binary entries and dimensions
  const Blockd& h = bm.h();
  const Index m = h.cols();
  const Blockd gram = h.transpose() * h;

  // the linear form of the diagonal: sum_l DA_ll H_lj DB_jj
  Vectord linear_diag(m);
  for (Index j = 0; j < m; ++j)
    linear_diag(j) = (da.array() * h.col(j).array()).sum() * db(j);

  TightnessReport report;
  report.diagonal_residual =
      max_abs((gram.diagonal() - linear_diag).eval());

  Blockd w = gram;
  w.diagonal() = linear_diag;
  const Blockd slack = w - gram;
  report.slack_max_abs = max_abs(slack);
  report.slack_min_eigenvalue =
      m == 0 ? 0.0 : min_eigenvalue(SymMatrixd::symmetrized(slack));

  const double scale = std::max(1.0, max_abs(gram));
  report.holds = report.diagonal_residual <= 1e-12 * scale &&
                 report.slack_max_abs <= 1e-12 * scale &&
                 report.slack_min_eigenvalue >= -1e-12 * scale;
  return report;
}

bool certify_relaxation_tightness(const Blockd& htilde, const Vectord& da,
                                  const Vectord& db) {
  return relaxation_residuals(htilde, da, db).holds;
}

}  // namespace hlgap
