#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/ps_core.hpp"

namespace swipt {

/// Dual iterate of the splitting/allocation problem. lambda multiplies the
/// first-hop rate constraint (the second-hop multiplier is eliminated as
/// 1 - lambda), mu multiplies the harvested-energy budget. The ellipsoid
/// E = { z : (z - center)^T shape^-1 (z - center) <= 1 } localizes the
/// dual optimum.
struct DualState {
    double lambda = 0.0;
    double mu = 0.0;
    std::array<double, 2> ellipsoid_center{0.0, 0.0};
    std::array<double, 4> ellipsoid_shape{0.0, 0.0, 0.0, 0.0};  // row-major 2x2, symmetric
};

enum class DualCut {
    subgradient,   ///< cut along the dual subgradient at a feasible iterate
    lambda_low,    ///< feasibility cut for lambda < 0
    lambda_high,   ///< feasibility cut for lambda > 1
    mu_low,        ///< feasibility cut for mu <= 0
};

const char* dual_cut_name(DualCut cut);

/// One row of the solver trace, recorded per iteration before the ellipsoid
/// update. gap is the normalized convergence measure the stopping rule tests;
/// it is NaN on feasibility-cut iterations, where no subgradient is evaluated.
struct DualTraceRecord {
    int iteration = 0;
    double lambda = 0.0;
    double mu = 0.0;
    double delta_lambda = 0.0;
    double delta_mu = 0.0;
    double gap = 0.0;
    double shape_det = 0.0;  ///< det of the ellipsoid shape at this iterate
    DualCut cut = DualCut::subgradient;
};

/// Thrown when the ellipsoid iteration exhausts its cap without meeting the
/// stopping rule. Carries the last iterate and its convergence gap.
class ConvergenceError : public std::runtime_error {
  public:
    ConvergenceError(std::string message, DualState last, double gap_value)
        : std::runtime_error(std::move(message)), last_state(last), gap(gap_value) {}

    DualState last_state;
    double gap = 0.0;
};

/// The Lagrangian-optimal common splitting ratio at dual point (lambda, mu):
///   clamp( (lambda / (delta*mu*eta) - 1) / sum_j(P h_j), 0, 1 ),  delta = 2 ln 2.
/// mu == 0 returns 1, the limit of the expression as mu -> 0+.
double alpha_from_duals(double lambda, double mu, const ChannelRealization& ch);

/// Dual subgradients at (lambda, mu) given the Lagrangian maximizers:
///   delta_lambda = hop1(alpha*) - hop2(p*)
///   delta_mu     = sum_i eta*P*h_i*(1 - alpha*_i) - sum_i p*_i
std::pair<double, double> subgradients(double lambda, double mu, const ChannelRealization& ch,
                                       std::span<const double> alpha_star,
                                       std::span<const double> p_star);

/// Solves the joint splitting/allocation problem by the dual ellipsoid route:
/// alternate the closed-form inner maximizers with ellipsoid cuts on
/// (lambda, mu) until both subgradients are small, then recover the primal at
/// the final duals. Returns a solution whose rate is within `tolerance`
/// (relative) of the closed-form optimum; this path is the library's
/// independent cross-check on solve_ps_closed_form.
///
/// Degenerate instances (P, sum h, or sum g zero) short-circuit to the
/// trivial zero-rate solution. Throws ConvergenceError if the iteration cap
/// is reached first.
PsSolution solve_ps_dual(const ChannelRealization& ch, double tolerance,
                         std::vector<DualTraceRecord>* trace = nullptr);

}  // namespace swipt
