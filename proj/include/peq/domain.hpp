#ifndef PEQ_DOMAIN_HPP
#define PEQ_DOMAIN_HPP

#include <complex>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace peq {

using Real = double;
using Complex = std::complex<double>;

enum class VerticalBc { Neumann, DirichletNeumann };

class PhysicalField;
class SpectralField;
class HorizontalField;
struct TransformPlan;

struct DomainConfig {
    Real Lx = 2.0 * 3.14159265358979323846;
    Real Ly = 2.0 * 3.14159265358979323846;
    Real z0 = 0.0;
    Real z1 = 1.0;
    int Nx = 32;
    int Ny = 32;
    int Nz = 33;
    VerticalBc bc = VerticalBc::Neumann;
    int oversample = 4;  // vertical refinement factor for |.|-type quadrature
};

/// Computational box T^2_{Lx,Ly} x (z0,z1) with its collocation grids and
/// trigonometric transforms.
///
/// Horizontal representation: complex exponentials e^{i k.x'} on a uniform
/// periodic grid (Nx, Ny even). Vertical representation depends on the
/// boundary condition:
///   Neumann           cos(n pi (z-z0)/h), endpoints grid z0 + h j/(Nz-1)
///   DirichletNeumann  cos((n+1/2) pi (z-z0)/h), midpoint grid z0 + h (j+1/2)/Nz
/// Both make the vertical heat semigroup diagonal. Transform plans are built
/// at construction, immutable afterwards, and safe to use concurrently on
/// distinct fields.
class Domain {
public:
    explicit Domain(const DomainConfig& cfg);
    ~Domain();
    Domain(const Domain&) = delete;
    Domain& operator=(const Domain&) = delete;

    const DomainConfig& cfg() const { return cfg_; }
    int nx() const { return cfg_.Nx; }
    int ny() const { return cfg_.Ny; }
    int nz() const { return cfg_.Nz; }
    Real lx() const { return cfg_.Lx; }
    Real ly() const { return cfg_.Ly; }
    Real z0() const { return cfg_.z0; }
    Real h() const { return cfg_.z1 - cfg_.z0; }
    VerticalBc bc() const { return cfg_.bc; }
    std::int64_t ncol() const { return std::int64_t(cfg_.Nx) * cfg_.Ny; }
    std::int64_t ngrid() const { return ncol() * cfg_.Nz; }

    Real x(int i) const { return cfg_.Lx * i / cfg_.Nx; }
    Real y(int j) const { return cfg_.Ly * j / cfg_.Ny; }
    Real z(int k) const { return zgrid_[k]; }
    const std::vector<Real>& zgrid() const { return zgrid_; }

    /// Signed horizontal wavenumbers in FFT index order (Nyquist positive).
    Real kx(int i) const { return kx_[i]; }
    Real ky(int j) const { return ky_[j]; }
    /// Derivative symbols: i*k with the Nyquist plane zeroed, so first-order
    /// operators map real fields to real fields.
    Real kx_deriv(int i) const { return i == cfg_.Nx / 2 ? 0.0 : kx_[i]; }
    Real ky_deriv(int j) const { return j == cfg_.Ny / 2 ? 0.0 : ky_[j]; }

    /// Vertical eigenvalue sqrt: beta_n = n pi/h (Neumann) or (n+1/2) pi/h.
    Real beta(int n) const { return beta_[n]; }

    SpectralField to_spectral(const PhysicalField& f) const;
    PhysicalField from_spectral(const SpectralField& F) const;

    /// Pointwise-in-x' quadrature of f over (z0,z1); exact for every cosine
    /// basis mode the grid resolves.
    HorizontalField vertical_integral(const PhysicalField& f) const;

    /// Quadrature weights on the collocation grid and on the refined grid.
    const std::vector<Real>& zweights() const { return zw_; }
    const std::vector<Real>& zweights_refined() const { return zwref_; }
    int nz_refined() const { return int(zref_.size()); }
    const std::vector<Real>& zgrid_refined() const { return zref_; }

    // Single-column vertical transforms (used by the 1-D operator layer and by
    // norm evaluation). Sizes: values Nz, cosine coeffs Nz, sine coeffs nsin().
    int nsin() const { return nsin_; }
    void cos_coeffs(std::span<const Real> values, std::span<Real> coeffs) const;
    void cos_values(std::span<const Real> coeffs, std::span<Real> values) const;
    void sin_coeffs(std::span<const Real> values, std::span<Real> coeffs) const;
    void sin_values(std::span<const Real> coeffs, std::span<Real> values) const;
    /// Evaluate a cosine (resp. sine) series on the refined vertical grid.
    void cos_values_refined(std::span<const Real> coeffs, std::span<Real> out) const;
    void sin_values_refined(std::span<const Real> coeffs, std::span<Real> out) const;
    /// d/dz of a cosine series, returned as sine coefficients (beta-scaled).
    void dz_cos_to_sin(std::span<const Real> cosc, std::span<Real> sinc) const;
    /// d/dz of a sine series, returned as cosine coefficients.
    void dz_sin_to_cos(std::span<const Real> sinc, std::span<Real> cosc) const;

    // Horizontal FFT over every z-level of one component, in place on a
    // complex buffer laid out (ix*Ny + iy)*Nz + iz. forward=true divides by
    // Nx*Ny so coefficients are the plain e^{ik.x'} expansion.
    void fft_h(Complex* data, bool forward) const;

private:
    DomainConfig cfg_;
    std::vector<Real> zgrid_, zref_, zw_, zwref_, kx_, ky_, beta_;
    int nsin_ = 0;
    std::unique_ptr<TransformPlan> plan_;

    void check_resolution(const PhysicalField& f) const;
    friend struct TransformPlan;
};

}  // namespace peq

#endif
