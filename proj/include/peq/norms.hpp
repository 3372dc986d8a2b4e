#ifndef PEQ_NORMS_HPP
#define PEQ_NORMS_HPP

#include <limits>
#include <string>
#include <vector>

#include "peq/field.hpp"

namespace peq {

class StokesSemigroup;

inline constexpr Real kPinf = std::numeric_limits<Real>::infinity();

/// sup over the horizontal grid of the vertical L^p norm of |f| (pointwise
/// Euclidean magnitude across components). The vertical quadrature runs on
/// the refined subgrid since |f| is not spectrally smooth. p in [1, inf].
Real norm_inf_p(const PhysicalField& f, Real p);

/// ||f||_{inf,1} + ||grad||_{inf,1}; `grad` must hold the three directional
/// derivatives of every component of f.
Real norm_sobolev(const PhysicalField& f, const PhysicalField& grad);

/// sup over a log-spaced t-sample set of t^mu ||grad S(t) a||_{inf,1}.
/// A lower bound for the continuum sup over 0<t<1; mu in [0,1/2).
Real seminorm_mu(const StokesSemigroup& sg, const PhysicalField& a, Real mu,
                 const std::vector<Real>& t_grid);

std::vector<Real> default_seminorm_tgrid(int n = 64, Real lo = 1e-6, Real hi = 1.0);

struct NormReport {
    Real inf_1 = 0;
    Real inf_inf = 0;
    Real sobolev = 0;
    Real seminorm_mu = 0;
    Real triple = 0;  // = seminorm_mu + inf_1

    std::string to_json() const;
};

NormReport make_norm_report(const StokesSemigroup& sg, const PhysicalField& f,
                            Real mu, const std::vector<Real>& t_grid);

}  // namespace peq

#endif
