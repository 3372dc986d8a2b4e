#include "peq/hops.hpp"

#include <cmath>
#include <stdexcept>

#include "peq/parallel.hpp"

namespace peq {
namespace hops {

namespace {
constexpr Real kPi = 3.14159265358979323846;

template <class Sym>
void for_each_mode(SpectralField& F, Sym&& sym) {
    const Domain& d = F.domain();
    const int Ny = d.ny(), Nz = d.nz();
    for (int c = 0; c < F.ncomp(); ++c) {
        Complex* a = F.comp(c);
        parallel_for(d.ncol(), [&](std::int64_t col) {
            const int i = int(col / Ny), j = int(col % Ny);
            const Complex s = sym(i, j);
            Complex* column = a + col * Nz;
            for (int n = 0; n < Nz; ++n) column[n] *= s;
        });
    }
}
}  // namespace

void apply_multiplier(SpectralField& F, Real (*sym)(Real, Real, Real), Real param,
                      ZeroMode zm) {
    const Domain& d = F.domain();
    if (zm == ZeroMode::Error) {
        Real m = 0;
        for (int c = 0; c < F.ncomp(); ++c)
            for (int n = 0; n < d.nz(); ++n) m = std::max(m, std::abs(F.comp(c)[n]));
        if (m > 1e-12) throw std::domain_error("multiplier undefined at k=0");
    }
    const Complex zval = zm == ZeroMode::Identity ? Complex(1) : Complex(0);
    for_each_mode(F, [&](int i, int j) -> Complex {
        if (i == 0 && j == 0) return zval;
        return Complex(sym(d.kx(i), d.ky(j), param));
    });
}

void heat_horizontal_spec(SpectralField& F, Real t) {
    if (t < 0) throw std::domain_error("heat_horizontal: t >= 0");
    const Domain& d = F.domain();
    for_each_mode(F, [&](int i, int j) {
        const Real k2 = d.kx(i) * d.kx(i) + d.ky(j) * d.ky(j);
        return Complex(std::exp(-t * k2));
    });
}

PhysicalField heat_horizontal(const PhysicalField& f, Real t) {
    SpectralField F = f.domain().to_spectral(f);
    heat_horizontal_spec(F, t);
    return f.domain().from_spectral(F);
}

void frac_laplacian_h_spec(SpectralField& F, Real alpha, ZeroMode zm) {
    const Domain& d = F.domain();
    if (alpha < 0 && zm == ZeroMode::Error) {
        const Complex* a = F.comp(0);
        Real m = 0;
        for (int c = 0; c < F.ncomp(); ++c) {
            a = F.comp(c);
            for (int n = 0; n < d.nz(); ++n) m = std::max(m, std::abs(a[n]));
        }
        if (m > 1e-10) throw std::domain_error("negative power of the Laplacian on a field with nonzero horizontal mean");
    }
    for_each_mode(F, [&](int i, int j) -> Complex {
        const Real k2 = d.kx(i) * d.kx(i) + d.ky(j) * d.ky(j);
        if (k2 == 0.0) return zm == ZeroMode::Identity ? Complex(1) : Complex(0);
        return Complex(std::pow(k2, alpha / 2));
    });
}

PhysicalField frac_laplacian_h(const PhysicalField& f, Real alpha, ZeroMode zm) {
    SpectralField F = f.domain().to_spectral(f);
    frac_laplacian_h_spec(F, alpha, zm);
    return f.domain().from_spectral(F);
}

PhysicalField bochner_fraclap_oracle(const PhysicalField& f, Real alpha, Real s_min,
                                     Real s_max, int nodes) {
    if (!(alpha > 0 && alpha < 2)) throw std::domain_error("bochner oracle: alpha in (0,2)");
    const Domain& d = f.domain();
    const Real b2 = alpha / 2;
    SpectralField F = d.to_spectral(f);
    SpectralField acc(d, f.ncomp());
    // product integration of s^{-1-a/2} (e^{s Lap}-1) f on log-spaced nodes
    std::vector<Real> s(nodes);
    for (int q = 0; q < nodes; ++q)
        s[q] = s_min * std::pow(s_max / s_min, Real(q) / (nodes - 1));
    const int Ny = d.ny(), Nz = d.nz();
    for (int c = 0; c < f.ncomp(); ++c) {
        const Complex* src = F.comp(c);
        Complex* out = acc.comp(c);
        parallel_for(d.ncol(), [&](std::int64_t col) {
            const int i = int(col / Ny), j = int(col % Ny);
            const Real k2 = d.kx(i) * d.kx(i) + d.ky(j) * d.ky(j);
            auto g = [&](Real sv) { return std::expm1(-sv * k2); };
            Real total = 0;
            for (int q = 0; q + 1 < nodes; ++q) {
                const Real a = s[q], b = s[q + 1], dd = b - a;
                const Real P = (std::pow(b, -b2) - std::pow(a, -b2)) / (-b2);
                const Real Q = (std::pow(b, 1 - b2) - std::pow(a, 1 - b2)) / (1 - b2);
                total += g(a) * ((b * P - Q) / dd) + g(b) * ((Q - a * P) / dd);
            }
            total += -k2 * std::pow(s_min, 1 - b2) / (1 - b2);  // head
            total += -std::pow(s_max, -b2) / b2;                // tail of the -1 part
            const Real scale = total / std::tgamma(-b2);
            for (int n = 0; n < Nz; ++n) out[col * Nz + n] = scale * src[col * Nz + n];
        });
    }
    return d.from_spectral(acc);
}

PhysicalField riesz(const PhysicalField& f, int i, int j) {
    const Domain& d = f.domain();
    SpectralField F = d.to_spectral(f);
    for_each_mode(F, [&](int ki, int kj) -> Complex {
        const Real kv[2] = {d.kx_deriv(ki), d.ky_deriv(kj)};
        const Real k2 = d.kx(ki) * d.kx(ki) + d.ky(kj) * d.ky(kj);
        if (k2 == 0.0) return Complex(0);
        if (j < 0) return Complex(0, kv[i] / std::sqrt(k2));
        return Complex(-kv[i] * kv[j] / k2);
    });
    return d.from_spectral(F);
}

void ddx_spec(SpectralField& F) {
    const Domain& d = F.domain();
    for_each_mode(F, [&](int i, int) { return Complex(0, d.kx_deriv(i)); });
}
void ddy_spec(SpectralField& F) {
    const Domain& d = F.domain();
    for_each_mode(F, [&](int, int j) { return Complex(0, d.ky_deriv(j)); });
}

void helmholtz_project_spec(SpectralField& F) {
    if (F.ncomp() != 2) throw std::invalid_argument("projection expects 2 components");
    const Domain& d = F.domain();
    const int Ny = d.ny(), Nz = d.nz();
    const bool neumann = d.bc() == VerticalBc::Neumann;
    // DN basis: discrete mean weights of each mode and the expansion of the
    // constant, rescaled so the corrected mean vanishes exactly at finite Nz.
    std::vector<Real> mw(Nz, 0.0), ce(Nz, 0.0);
    if (!neumann) {
        const Real h = d.h();
        Real s = 0;
        for (int n = 0; n < Nz; ++n) {
            mw[n] = (n % 2 ? -1.0 : 1.0) / (d.beta(n) * h);
            ce[n] = 2.0 * mw[n];
            s += ce[n] * mw[n];
        }
        for (int n = 0; n < Nz; ++n) ce[n] /= s;
    }
    Complex* f1 = F.comp(0);
    Complex* f2 = F.comp(1);
    parallel_for(d.ncol(), [&](std::int64_t col) {
        const int i = int(col / Ny), j = int(col % Ny);
        if (i == 0 && j == 0) return;
        const Real k1 = d.kx_deriv(i), k2v = d.ky_deriv(j);
        const Real kk = d.kx(i) * d.kx(i) + d.ky(j) * d.ky(j);
        Complex m1, m2;
        if (neumann) {
            m1 = f1[col * Nz];
            m2 = f2[col * Nz];
        } else {
            m1 = m2 = Complex(0);
            for (int n = 0; n < Nz; ++n) {
                m1 += mw[n] * f1[col * Nz + n];
                m2 += mw[n] * f2[col * Nz + n];
            }
        }
        const Complex doth = k1 * m1 + k2v * m2;
        const Complex c1 = -k1 * doth / kk;
        const Complex c2 = -k2v * doth / kk;
        if (neumann) {
            f1[col * Nz] += c1;
            f2[col * Nz] += c2;
        } else {
            for (int n = 0; n < Nz; ++n) {
                f1[col * Nz + n] += ce[n] * c1;
                f2[col * Nz + n] += ce[n] * c2;
            }
        }
    });
}

PhysicalField helmholtz_project(const PhysicalField& f) {
    SpectralField F = f.domain().to_spectral(f);
    helmholtz_project_spec(F);
    return f.domain().from_spectral(F);
}

void dealias_23(SpectralField& F) {
    const Domain& d = F.domain();
    const int Nx = d.nx(), Ny = d.ny(), Nz = d.nz();
    const int cx = Nx / 3, cy = Ny / 3, cz = (2 * (d.bc() == VerticalBc::Neumann ? Nz - 1 : Nz)) / 3;
    for (int c = 0; c < F.ncomp(); ++c) {
        Complex* a = F.comp(c);
        parallel_for(d.ncol(), [&](std::int64_t col) {
            const int i = int(col / Ny), j = int(col % Ny);
            const int ikx = i <= Nx / 2 ? i : Nx - i;
            const int iky = j <= Ny / 2 ? j : Ny - j;
            Complex* column = a + col * Nz;
            if (ikx > cx || iky > cy) {
                for (int n = 0; n < Nz; ++n) column[n] = Complex(0);
            } else {
                for (int n = cz + 1; n < Nz; ++n) column[n] = Complex(0);
            }
        });
    }
}

PhysicalField grad_field(const PhysicalField& f) {
    const Domain& d = f.domain();
    SpectralField F = d.to_spectral(f);
    PhysicalField out(d, 3 * f.ncomp());
    const int Ny = d.ny(), Nz = d.nz();
    for (int c = 0; c < f.ncomp(); ++c) {
        for (int dir = 0; dir < 2; ++dir) {
            SpectralField G(d, 1);
            std::copy(F.comp(c), F.comp(c) + d.ngrid(), G.comp(0));
            if (dir == 0) ddx_spec(G);
            else ddy_spec(G);
            PhysicalField g = d.from_spectral(G);
            std::copy(g.comp(0), g.comp(0) + d.ngrid(), out.comp(3 * c + dir));
        }
        // vertical derivative through the sine images of the cosine columns
        SpectralField G(d, 1);
        std::copy(F.comp(c), F.comp(c) + d.ngrid(), G.comp(0));
        Complex* a = G.comp(0);
        parallel_for(d.ncol(), [&](std::int64_t col) {
            thread_local std::vector<Real> cre, cim, sre, sim, vre, vim;
            cre.resize(Nz); cim.resize(Nz);
            sre.resize(d.nsin()); sim.resize(d.nsin());
            vre.resize(Nz); vim.resize(Nz);
            Complex* column = a + col * Nz;
            for (int n = 0; n < Nz; ++n) {
                cre[n] = column[n].real();
                cim[n] = column[n].imag();
            }
            d.dz_cos_to_sin(cre, sre);
            d.dz_cos_to_sin(cim, sim);
            d.sin_values(sre, vre);
            d.sin_values(sim, vim);
            for (int n = 0; n < Nz; ++n) column[n] = Complex(vre[n], vim[n]);
        });
        // columns now hold grid values of d/dz against the horizontal modes
        std::vector<Complex> work(G.raw());
        d.fft_h(work.data(), false);
        Real* dst = out.comp(3 * c + 2);
        parallel_for(d.ngrid(), [&](std::int64_t idx) { dst[idx] = work[idx].real(); });
    }
    (void)Ny;
    return out;
}

PhysicalField div_h(const PhysicalField& f2) {
    if (f2.ncomp() != 2) throw std::invalid_argument("div_h expects 2 components");
    const Domain& d = f2.domain();
    SpectralField F = d.to_spectral(f2);
    SpectralField Dv(d, 1);
    const int Ny = d.ny(), Nz = d.nz();
    Complex* out = Dv.comp(0);
    const Complex* a1 = F.comp(0);
    const Complex* a2 = F.comp(1);
    parallel_for(d.ncol(), [&](std::int64_t col) {
        const int i = int(col / Ny), j = int(col % Ny);
        const Complex s1(0, d.kx_deriv(i)), s2(0, d.ky_deriv(j));
        for (int n = 0; n < Nz; ++n)
            out[col * Nz + n] = s1 * a1[col * Nz + n] + s2 * a2[col * Nz + n];
    });
    return d.from_spectral(Dv);
}

Real mean_h_max(const PhysicalField& f) {
    const Domain& d = f.domain();
    SpectralField F = d.to_spectral(f);
    Real m = 0;
    for (int c = 0; c < f.ncomp(); ++c) {
        const Complex* a = F.comp(c);
        for (int n = 0; n < d.nz(); ++n) m = std::max(m, std::abs(a[n]));
    }
    return m;
}

PhysicalField gauss_oracle(const PhysicalField& f, Real t, int k_images, int n_refine) {
    if (t <= 0) throw std::domain_error("gauss_oracle: t > 0");
    const Domain& d = f.domain();
    const int Nx = d.nx(), Ny = d.ny(), Nz = d.nz();

    // one-dimensional periodized pass along a line of samples: refine the
    // trigonometric interpolant (pad in Fourier), convolve with the image sum
    auto pass = [&](std::vector<Real>& line, int N, Real L) {
        const int R = n_refine;
        // refined samples via direct evaluation of the DFT interpolant
        static thread_local std::vector<Complex> hat;
        hat.assign(N, Complex(0));
        for (int i = 0; i < N; ++i) hat[i] = Complex(line[i], 0);
        // naive DFT of a short line (N <= a few hundred)
        static thread_local std::vector<Complex> coeff;
        coeff.assign(N, Complex(0));
        for (int k = 0; k < N; ++k) {
            Complex acc(0);
            for (int i = 0; i < N; ++i) {
                const Real ph = -2 * kPi * k * i / N;
                acc += hat[i] * Complex(std::cos(ph), std::sin(ph));
            }
            coeff[k] = acc / Real(N);
        }
        static thread_local std::vector<Real> fine;
        fine.assign(R, 0.0);
        for (int q = 0; q < R; ++q) {
            const Real x = L * q / R;
            Complex acc(0);
            for (int k = 0; k < N; ++k) {
                const int kk = k <= N / 2 ? k : k - N;
                if (kk == N / 2) {  // split the Nyquist bin symmetrically
                    acc += coeff[k] * std::cos(2 * kPi * kk * x / L);
                    continue;
                }
                const Real ph = 2 * kPi * kk * x / L;
                acc += coeff[k] * Complex(std::cos(ph), std::sin(ph));
            }
            fine[q] = acc.real();
        }
        const Real wq = L / R;
        const Real pre = 1.0 / std::sqrt(4 * kPi * t);
        for (int i = 0; i < N; ++i) {
            const Real xi = L * i / N;
            Real acc = 0;
            for (int q = 0; q < R; ++q) {
                const Real base = xi - L * q / R;
                Real e = 0;
                for (int k = -k_images; k <= k_images; ++k) {
                    const Real u = base - k * L;
                    e += std::exp(-u * u / (4 * t));
                }
                acc += e * fine[q];
            }
            line[i] = pre * wq * acc;
        }
    };

    PhysicalField out = f;
    for (int c = 0; c < f.ncomp(); ++c) {
        Real* a = out.comp(c);
        // x-direction
        parallel_for(std::int64_t(Ny) * Nz, [&](std::int64_t yz) {
            const int j = int(yz / Nz), k = int(yz % Nz);
            std::vector<Real> line(Nx);
            for (int i = 0; i < Nx; ++i) line[i] = a[(std::int64_t(i) * Ny + j) * Nz + k];
            pass(line, Nx, d.lx());
            for (int i = 0; i < Nx; ++i) a[(std::int64_t(i) * Ny + j) * Nz + k] = line[i];
        });
        // y-direction
        parallel_for(std::int64_t(Nx) * Nz, [&](std::int64_t xz) {
            const int i = int(xz / Nz), k = int(xz % Nz);
            std::vector<Real> line(Ny);
            for (int j = 0; j < Ny; ++j) line[j] = a[(std::int64_t(i) * Ny + j) * Nz + k];
            pass(line, Ny, d.ly());
            for (int j = 0; j < Ny; ++j) a[(std::int64_t(i) * Ny + j) * Nz + k] = line[j];
        });
    }
    return out;
}

}  // namespace hops
}  // namespace peq
