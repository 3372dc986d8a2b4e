#ifndef PEQ_VCALC_HPP
#define PEQ_VCALC_HPP

#include <vector>

#include "peq/domain.hpp"

namespace peq {

/// One-dimensional operators on the vertical interval. Profiles are plain
/// value vectors on the domain's z grid; every operation is pure.
namespace vcalc {

using Profile = std::vector<Real>;

/// Lower-triangular product-integration weights for the weakly singular
/// fractional integral from z0; exact on piecewise-linear data. Reusable
/// across applications with the same (grid, alpha).
class RlOperator {
public:
    RlOperator(const Domain& d, Real alpha);
    Real alpha() const { return alpha_; }
    void apply(std::span<const Real> f, std::span<Real> out) const;
    Profile apply(const Profile& f) const;
    /// Reflected variant integrating from z1 (the dual operator).
    void apply_reflected(std::span<const Real> f, std::span<Real> out) const;

private:
    int nz_;
    Real alpha_;
    std::vector<Real> w_;  // dense (nz x nz), row-major
};

/// alpha-times fractional integral from z0; alpha=0 is the identity.
Profile riemann_liouville(const Domain& d, const Profile& f, Real alpha);

/// Reflected fractional integral from z1; <I^a f, psi> = <f, adjoint_rl(psi)>.
Profile adjoint_rl(const Domain& d, const Profile& psi, Real alpha);

/// Caputo derivative of order alpha in (0,1): fractional integral of order
/// 1-alpha of the spectral z-derivative.
Profile caputo(const Domain& d, const Profile& f, Real alpha);

/// Diagonal heat flow in the domain's vertical eigenbasis; t=0 is identity.
Profile heat_vertical(const Domain& d, const Profile& f, Real t);

/// Independent oracle for the Neumann heat flow: evaluate the even periodic
/// extension of f's cosine series and convolve with the image-sum kernel,
/// truncated at |k| <= k_max, on an n_quad-point periodic quadrature grid.
Profile periodized_heat_oracle(const Domain& d, const Profile& f, Real t,
                               int k_max, int n_quad = 2048);

/// Shift f by the constant that zeroes its fractional integral at z1
/// (constants span the obstruction). No-op for alpha=0.
Profile admissibility_shift(const Domain& d, const Profile& f, Real alpha);
Real admissibility_defect(const Domain& d, const Profile& f, Real alpha);

/// The composite heat(t) d/dz I^alpha f, evaluated by expanding I^alpha f in
/// the sine basis (valid: it vanishes at both endpoints for admissible f) and
/// mapping term-by-term to the cosine basis under the flow. Enforces the
/// admissibility shift internally.
Profile smoothing_rl(const Domain& d, const Profile& f, Real alpha, Real t);
/// Same composite reusing a prebuilt RlOperator (hot loops).
Profile smoothing_rl(const Domain& d, const RlOperator& rl, const Profile& f, Real t);

/// Grid values of d/dz of the profile's cosine interpolant.
Profile dz_profile(const Domain& d, const Profile& f);

// Quadrature norms on the refined vertical grid.
Real norm_l1(const Domain& d, const Profile& f);
Real norm_lp(const Domain& d, const Profile& f, Real p);
Real norm_linf(const Profile& f);

}  // namespace vcalc
}  // namespace peq

#endif
