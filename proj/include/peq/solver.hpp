#ifndef PEQ_SOLVER_HPP
#define PEQ_SOLVER_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "peq/norms.hpp"
#include "peq/semigroup.hpp"

namespace peq {

struct MildSolution {
    enum class Provenance { Picard, Etd };
    std::vector<Real> times;
    std::vector<PhysicalField> snaps;
    Provenance provenance = Provenance::Etd;
    int picard_sweeps = -1;
};

struct IterationTrace {
    struct Row {
        int m;
        Real H, K, M, L;
        Real contraction;  // N(v_{m+1}-v_m)/N(v_m - v_{m-1}); 0 while undefined
    };
    std::vector<Row> rows;
    std::string to_csv() const;
};

enum class SolveStatus { Converged, MaxSweeps, Diverged, BlowUp };

struct PicardResult {
    MildSolution solution;
    IterationTrace trace;
    SolveStatus status = SolveStatus::Converged;
};

struct RecursionResult {
    Real A, eps, C1, C2;
    std::vector<Real> H, K;  // decimated record of the iterates
    Real sup_H = 0, sup_K = 0;
    bool bounded = false;
    std::optional<Real> x0;  // first fixed point of the majorant map, if any
    Real eps0 = 0;           // analytic majorant threshold
    std::string to_json() const;
};

struct LifespanResult {
    Real lambda = 1, triple = 0, t_bound = 0, t_checked = 0;
    bool monitors_bounded = false;
};

/// w(x', z) = int_z^{z1} div_H v dz'; vanishes at z1 by construction and at
/// z0 up to the solenoidal-average defect of v.
PhysicalField reconstruct_w(const PhysicalField& v);

/// Dealiased spectral evaluation of div_H(v (x) v) + d/dz(w v) with w
/// reconstructed from v. The vertical product term is expanded in the sine
/// basis (it vanishes at both endpoints), so its derivative lands exactly in
/// the vertical eigenbasis. If div_residual is given it receives the
/// solenoidal-average defect of v (a warning is recorded past 1e-6, the
/// computation proceeds).
PhysicalField nonlinearity(const PhysicalField& v, Real* div_residual = nullptr);
/// Spectral-output variant used by the steppers.
SpectralField nonlinearity_spec(const PhysicalField& v, Real* div_residual = nullptr);

/// One integral-formula step on [t, t+delta]: S(delta) a_t minus the
/// Gauss-Legendre quadrature of S(delta-s) P div(u (x) v) along the segment,
/// with the segment history interpolated linearly in time (order 2).
PhysicalField duhamel_step(const StokesSemigroup& sg, const MildSolution& segment,
                           const PhysicalField& a_t, Real delta, int n_quad);

struct PicardOptions {
    int time_nodes = 32;
    int max_sweeps = 24;
    Real tol_abs = 1e-8;
    Real tol_rel = 1e-6;
    Real mu = 0.25;          // exponent of the L monitor
    Real divergence_factor = 10.0;
};

/// Fixed-point sweeps of the integral formula on a stored time grid, with
/// per-sweep monitors H, K, M, L and the N-norm contraction ratio.
PicardResult picard_solve(const StokesSemigroup& sg, const PhysicalField& a, Real T,
                          const PicardOptions& opt);

struct EtdOptions {
    Real dt = 1e-3;
    int snapshot_stride = 0;  // 0: choose so ~33 snapshots are kept
};

/// Second-order exponential two-stage stepper on the same right-hand side.
/// Throws no exceptions on blow-up; returns status BlowUp with the last
/// finite snapshot retained.
struct EtdResult {
    MildSolution solution;
    SolveStatus status = SolveStatus::Converged;
    Real last_valid_time = 0;
};
EtdResult etd_solve(const StokesSemigroup& sg, const PhysicalField& a, Real T,
                    const EtdOptions& opt);

/// Direct iteration of the coupled scalar majorant maps
///   H <- A + C1 H K,  K <- eps + C2 K^{3/2} H^{1/2} + K H/(4A),
/// with boundedness decided from the iterates. x0 is the smallest positive
/// root of x = eps + sqrt(2A) C2 x^{3/2} + x/2 when that root exists.
RecursionResult lemma54_recursion(Real A, Real eps, Real C1, Real C2, long m_max);

/// Lower bound T = min(c_star |||a|||, 1)^{-2/(1/2-mu)} (capped at horizon),
/// followed by a Picard run over the capped interval as a consistency check.
LifespanResult lifespan_estimate(const StokesSemigroup& sg, const PhysicalField& a,
                                 Real mu, Real c_star, Real horizon,
                                 const PicardOptions& opt);

/// grad_H pi = (P - I) applied to the advective term; z-independent by
/// construction.
PhysicalField recover_pressure_grad(const PhysicalField& v);

}  // namespace peq

#endif
