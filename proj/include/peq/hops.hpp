#ifndef PEQ_HOPS_HPP
#define PEQ_HOPS_HPP

#include "peq/field.hpp"

namespace peq {
namespace hops {

enum class ZeroMode { Zero, Identity, Error };

// Fourier-multiplier application, mode-parallel. The symbol is a function of
// the signed wavenumbers (kx, ky); `zm` decides the k=0 column.
void apply_multiplier(SpectralField& F, Real (*sym)(Real, Real, Real), Real param,
                      ZeroMode zm);

PhysicalField heat_horizontal(const PhysicalField& f, Real t);
void heat_horizontal_spec(SpectralField& F, Real t);

/// Direct periodized-Gauss-kernel convolution (two separable 1-D passes on a
/// spectrally refined quadrature grid); independent oracle for heat_horizontal.
PhysicalField gauss_oracle(const PhysicalField& f, Real t, int k_images = 8,
                           int n_refine = 512);

/// Multiplier |k|^alpha. Negative powers require a mean-free field unless the
/// zero-mode policy is Zero.
PhysicalField frac_laplacian_h(const PhysicalField& f, Real alpha,
                               ZeroMode zm = ZeroMode::Zero);
void frac_laplacian_h_spec(SpectralField& F, Real alpha, ZeroMode zm = ZeroMode::Zero);

/// Quadrature oracle for positive fractional powers built from heat flows
/// s^{-1-a/2}(e^{s Lap}-1): product integration on log-spaced nodes with
/// analytic head/tail corrections.
PhysicalField bochner_fraclap_oracle(const PhysicalField& f, Real alpha,
                                     Real s_min = 1e-6, Real s_max = 1e3,
                                     int nodes = 400);

/// Riesz transform i k_i/|k| (j < 0), or the composition -k_i k_j/|k|^2.
PhysicalField riesz(const PhysicalField& f, int i, int j = -1);

/// f + grad_H (-Lap_H)^{-1} div_H of the vertical average; the output's
/// vertical average is divergence-free in exact coefficient arithmetic.
PhysicalField helmholtz_project(const PhysicalField& f);
void helmholtz_project_spec(SpectralField& F);

/// Two-thirds-rule spectral truncation in all three directions.
void dealias_23(SpectralField& F);

// Spectral first derivatives (Nyquist-zeroed symbols).
void ddx_spec(SpectralField& F);
void ddy_spec(SpectralField& F);
PhysicalField grad_field(const PhysicalField& f);  // 3 derivatives per comp
/// Horizontal divergence of a 2-component field.
PhysicalField div_h(const PhysicalField& f2);
/// Horizontal mean (k=0 coefficient) of each component, max over z.
Real mean_h_max(const PhysicalField& f);

}  // namespace hops
}  // namespace peq

#endif
