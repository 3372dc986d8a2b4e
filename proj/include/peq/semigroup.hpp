#ifndef PEQ_SEMIGROUP_HPP
#define PEQ_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

#include "peq/field.hpp"

namespace peq {

/// Tensor-product flow e^{t Lap_H} (x) e^{t Lap_vert} together with the
/// composite smoothing operators the estimate harness sweeps and the solver's
/// integral formula reuses. Pure; safe to share across threads.
class StokesSemigroup {
public:
    explicit StokesSemigroup(const Domain& d);

    const Domain& domain() const { return *dom_; }

    PhysicalField apply(const PhysicalField& a, Real t) const;
    void apply_spec(SpectralField& A, Real t) const;

    /// grad S(t) a, three directional derivatives per component of a; t > 0.
    PhysicalField apply_grad(const PhysicalField& a, Real t) const;

    /// S(t) P (-Lap_H)^{alpha/2}, alpha in [0,1); alpha >= 1 is rejected
    /// (first-order Riesz-type operators are unbounded on these spaces).
    PhysicalField apply_projected_fraclap(const PhysicalField& f, Real alpha, Real t) const;

    /// S(t) P div_H of a 2x2 tensor field, components ordered
    /// (T11, T12, T21, T22) with (div T)_i = sum_j d_j T_{ji}.
    PhysicalField apply_div_h(const PhysicalField& tensor4, Real t) const;

    /// S(t) d/dz I^alpha (admissibility-shifted), alpha in [0,1].
    PhysicalField apply_dz_rl(const PhysicalField& f, Real alpha, Real t) const;

    /// ratio ||S(t) a||_{inf,q} / ||a||_{inf,1} for one t.
    Real smoothing_l1_lq(const PhysicalField& a, Real t, Real q) const;

private:
    const Domain* dom_;
};

// --- test-data generators used by the verification harness -----------------

/// i.i.d. +-1 grid samples; rough in every resolved scale.
PhysicalField gen_white_pm1(const Domain& d, int ncomp, std::uint64_t seed);
/// One binomial smoothing pass over the white field.
PhysicalField gen_white_filtered(const Domain& d, int ncomp, std::uint64_t seed);
/// Unit-mass vertical spike (grid hat at relative height frac), constant in x'.
PhysicalField gen_spike_z(const Domain& d, Real frac);
/// Two-spike vertical profile with the mass ratio chosen so I^alpha(.)(z1)=0.
PhysicalField gen_dipole_z(const Domain& d, Real alpha, Real frac);
/// cos(beta_n (z-z0)), constant horizontally.
PhysicalField gen_mode_z(const Domain& d, int n);
/// Divergence-free horizontal wave: component `comp` = cos(k x_other), z-const.
PhysicalField gen_mode_transverse(const Domain& d, int k, int comp);
/// Band-limited random solenoidal 2-component field with unit ||.||_{inf,1}.
PhysicalField gen_smooth_solenoidal(const Domain& d, int band, std::uint64_t seed);
/// Full-spectrum random solenoidal 2-component field scaled to amplitude in ||.||_{inf,1}.
PhysicalField gen_noise_solenoidal(const Domain& d, Real amplitude, std::uint64_t seed);

/// Geometric ladder 1, 2, 3, 4, 6, 8, ... up to nmax.
std::vector<int> mode_ladder(int nmax);

}  // namespace peq

#endif
