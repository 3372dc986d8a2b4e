#include "peq/ref.hpp"

#include <cmath>

namespace peq {
namespace ref {

namespace {
constexpr Real kPi = 3.14159265358979323846;
}

SpectralField to_spectral(const PhysicalField& f) {
    const Domain& d = f.domain();
    const int Nx = d.nx(), Ny = d.ny(), Nz = d.nz();
    SpectralField F(d, f.ncomp());
    // direct horizontal DFT, then the vertical cosine analysis by quadrature
    for (int c = 0; c < f.ncomp(); ++c) {
        for (int ki = 0; ki < Nx; ++ki)
            for (int kj = 0; kj < Ny; ++kj) {
                std::vector<Complex> column(Nz, Complex(0));
                for (int i = 0; i < Nx; ++i)
                    for (int j = 0; j < Ny; ++j) {
                        const Real ph = -2 * kPi * (Real(ki) * i / Nx + Real(kj) * j / Ny);
                        const Complex e(std::cos(ph), std::sin(ph));
                        for (int k = 0; k < Nz; ++k) column[k] += e * f.at(c, i, j, k);
                    }
                for (int k = 0; k < Nz; ++k) column[k] /= Real(Nx) * Ny;
                // cosine coefficients by discrete orthogonality
                std::vector<Real> re(Nz), im(Nz), cre(Nz), cim(Nz);
                for (int k = 0; k < Nz; ++k) {
                    re[k] = column[k].real();
                    im[k] = column[k].imag();
                }
                d.cos_coeffs(re, cre);
                d.cos_coeffs(im, cim);
                for (int n = 0; n < Nz; ++n) F.at(c, ki, kj, n) = Complex(cre[n], cim[n]);
            }
    }
    return F;
}

PhysicalField from_spectral(const SpectralField& F) {
    const Domain& d = F.domain();
    const int Nx = d.nx(), Ny = d.ny(), Nz = d.nz();
    PhysicalField f(d, F.ncomp());
    for (int c = 0; c < F.ncomp(); ++c) {
        for (int i = 0; i < Nx; ++i)
            for (int j = 0; j < Ny; ++j) {
                std::vector<Complex> vals(Nz, Complex(0));
                for (int ki = 0; ki < Nx; ++ki)
                    for (int kj = 0; kj < Ny; ++kj) {
                        const Real ph = 2 * kPi * (Real(ki) * i / Nx + Real(kj) * j / Ny);
                        const Complex e(std::cos(ph), std::sin(ph));
                        for (int n = 0; n < Nz; ++n) vals[n] += e * F.at(c, ki, kj, n);
                    }
                for (int k = 0; k < Nz; ++k) {
                    Real acc = 0;
                    for (int n = 0; n < Nz; ++n)
                        acc += vals[n].real() * std::cos(d.beta(n) * (d.z(k) - d.z0()));
                    f.at(c, i, j, k) = acc;
                }
            }
    }
    return f;
}

Real norm_inf_1(const PhysicalField& f) {
    const Domain& d = f.domain();
    const auto& w = d.zweights();
    Real best = 0;
    for (int i = 0; i < d.nx(); ++i)
        for (int j = 0; j < d.ny(); ++j) {
            Real acc = 0;
            for (int k = 0; k < d.nz(); ++k) {
                Real mag2 = 0;
                for (int c = 0; c < f.ncomp(); ++c) mag2 += f.at(c, i, j, k) * f.at(c, i, j, k);
                acc += w[k] * std::sqrt(mag2);
            }
            best = std::max(best, acc);
        }
    return best;
}

void heat_horizontal_spec(SpectralField& F, Real t) {
    const Domain& d = F.domain();
    for (int c = 0; c < F.ncomp(); ++c)
        for (int i = 0; i < d.nx(); ++i)
            for (int j = 0; j < d.ny(); ++j) {
                const Real k2 = d.kx(i) * d.kx(i) + d.ky(j) * d.ky(j);
                const Real s = std::exp(-t * k2);
                for (int n = 0; n < d.nz(); ++n) F.at(c, i, j, n) *= s;
            }
}

std::vector<Real> riemann_liouville(const Domain& d, const std::vector<Real>& f, Real alpha) {
    // direct quadrature of the weakly singular integral, piecewise linear f
    const int Nz = d.nz();
    const auto& z = d.zgrid();
    std::vector<Real> out(Nz, 0.0);
    const Real ginv = 1.0 / std::tgamma(alpha);
    for (int i = 0; i < Nz; ++i) {
        Real acc = 0;
        for (int j = 0; j + 1 <= i; ++j) {
            // refine each source cell to control the kernel curvature
            const int R = 64;
            for (int q = 0; q < R; ++q) {
                const Real s0 = z[j] + (z[j + 1] - z[j]) * q / R;
                const Real s1 = z[j] + (z[j + 1] - z[j]) * (q + 1) / R;
                const Real sm = 0.5 * (s0 + s1);
                const Real th = (sm - z[j]) / (z[j + 1] - z[j]);
                const Real fv = (1 - th) * f[j] + th * f[j + 1];
                acc += std::pow(z[i] - sm, alpha - 1.0) * fv * (s1 - s0);
            }
        }
        out[i] = ginv * acc;
    }
    return out;
}

}  // namespace ref
}  // namespace peq
