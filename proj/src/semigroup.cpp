#include "peq/semigroup.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "peq/hops.hpp"
#include "peq/norms.hpp"
#include "peq/parallel.hpp"
#include "peq/vcalc.hpp"

namespace peq {

namespace {
constexpr Real kPi = 3.14159265358979323846;
}

StokesSemigroup::StokesSemigroup(const Domain& d) : dom_(&d) {}

void StokesSemigroup::apply_spec(SpectralField& A, Real t) const {
    if (t < 0) throw std::domain_error("semigroup: t >= 0");
    const Domain& d = *dom_;
    const int Ny = d.ny(), Nz = d.nz();
    for (int c = 0; c < A.ncomp(); ++c) {
        Complex* a = A.comp(c);
        parallel_for(d.ncol(), [&](std::int64_t col) {
            const int i = int(col / Ny), j = int(col % Ny);
            const Real kh = d.kx(i) * d.kx(i) + d.ky(j) * d.ky(j);
            Complex* column = a + col * Nz;
            for (int n = 0; n < Nz; ++n)
                column[n] *= std::exp(-t * (kh + d.beta(n) * d.beta(n)));
        });
    }
}

PhysicalField StokesSemigroup::apply(const PhysicalField& a, Real t) const {
    SpectralField A = dom_->to_spectral(a);
    apply_spec(A, t);
    return dom_->from_spectral(A);
}

PhysicalField StokesSemigroup::apply_grad(const PhysicalField& a, Real t) const {
    if (t <= 0) throw std::domain_error("apply_grad: t > 0");
    return hops::grad_field(apply(a, t));
}

PhysicalField StokesSemigroup::apply_projected_fraclap(const PhysicalField& f, Real alpha,
                                                       Real t) const {
    if (t <= 0) throw std::domain_error("apply_projected_fraclap: t > 0");
    if (!(alpha >= 0 && alpha < 1))
        throw std::domain_error("apply_projected_fraclap: alpha in [0,1) (first-order Riesz operators are unbounded here)");
    if (f.ncomp() != 2) throw std::invalid_argument("expects a 2-component field");
    SpectralField F = dom_->to_spectral(f);
    if (alpha != 0.0) hops::frac_laplacian_h_spec(F, alpha, hops::ZeroMode::Zero);
    hops::helmholtz_project_spec(F);
    apply_spec(F, t);
    return dom_->from_spectral(F);
}

PhysicalField StokesSemigroup::apply_div_h(const PhysicalField& tensor4, Real t) const {
    if (t <= 0) throw std::domain_error("apply_div_h: t > 0");
    if (tensor4.ncomp() != 4) throw std::invalid_argument("expects (T11,T12,T21,T22)");
    const Domain& d = *dom_;
    SpectralField T = d.to_spectral(tensor4);
    SpectralField Dv(d, 2);
    const int Ny = d.ny(), Nz = d.nz();
    parallel_for(d.ncol(), [&](std::int64_t col) {
        const int i = int(col / Ny), j = int(col % Ny);
        const Complex sx(0, d.kx_deriv(i)), sy(0, d.ky_deriv(j));
        for (int n = 0; n < Nz; ++n) {
            const std::int64_t idx = col * Nz + n;
            Dv.comp(0)[idx] = sx * T.comp(0)[idx] + sy * T.comp(2)[idx];
            Dv.comp(1)[idx] = sx * T.comp(1)[idx] + sy * T.comp(3)[idx];
        }
    });
    hops::helmholtz_project_spec(Dv);
    apply_spec(Dv, t);
    return d.from_spectral(Dv);
}

PhysicalField StokesSemigroup::apply_dz_rl(const PhysicalField& f, Real alpha, Real t) const {
    if (t <= 0) throw std::domain_error("apply_dz_rl: t > 0");
    if (alpha < 0 || alpha > 1) throw std::domain_error("apply_dz_rl: alpha in [0,1]");
    const Domain& d = *dom_;
    const int Nz = d.nz();
    PhysicalField mid(d, f.ncomp());
    std::unique_ptr<vcalc::RlOperator> rl;
    if (alpha > 0) rl = std::make_unique<vcalc::RlOperator>(d, alpha);
    for (int c = 0; c < f.ncomp(); ++c) {
        const Real* src = f.comp(c);
        Real* dst = mid.comp(c);
        parallel_for(d.ncol(), [&](std::int64_t col) {
            vcalc::Profile column(src + col * Nz, src + (col + 1) * Nz);
            vcalc::Profile out = alpha > 0 ? vcalc::smoothing_rl(d, *rl, column, t)
                                           : vcalc::smoothing_rl(d, column, 0.0, t);
            std::copy(out.begin(), out.end(), dst + col * Nz);
        });
    }
    return hops::heat_horizontal(mid, t);
}

Real StokesSemigroup::smoothing_l1_lq(const PhysicalField& a, Real t, Real q) const {
    if (t <= 0) throw std::domain_error("smoothing_l1_lq: t > 0");
    const Real denom = norm_inf_p(a, 1.0);
    if (denom == 0) return 0;
    PhysicalField Sa = apply(a, t);
    return norm_inf_p(Sa, q) / denom;
}

// ---------------------- data generators ------------------------------------

PhysicalField gen_white_pm1(const Domain& d, int ncomp, std::uint64_t seed) {
    PhysicalField f(d, ncomp);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(0.5);
    for (auto& v : f.raw()) v = coin(rng) ? 1.0 : -1.0;
    return f;
}

PhysicalField gen_white_filtered(const Domain& d, int ncomp, std::uint64_t seed) {
    PhysicalField w = gen_white_pm1(d, ncomp, seed);
    PhysicalField out(d, ncomp);
    const int Nx = d.nx(), Ny = d.ny(), Nz = d.nz();
    for (int c = 0; c < ncomp; ++c) {
        for (int i = 0; i < Nx; ++i)
            for (int j = 0; j < Ny; ++j)
                for (int k = 0; k < Nz; ++k) {
                    Real acc = 0, wt = 0;
                    for (int dz = -1; dz <= 1; ++dz) {
                        const int kk = k + dz;
                        if (kk < 0 || kk >= Nz) continue;
                        const Real g = dz == 0 ? 2.0 : 1.0;
                        acc += g * w.at(c, i, j, kk);
                        wt += g;
                    }
                    out.at(c, i, j, k) = acc / wt;
                }
    }
    return out;
}

PhysicalField gen_spike_z(const Domain& d, Real frac) {
    PhysicalField f(d, 1);
    const int k = std::min(d.nz() - 1, std::max(0, int(std::lround(frac * (d.nz() - 1)))));
    const Real mass = d.zweights()[k];
    const int Nx = d.nx(), Ny = d.ny();
    for (int i = 0; i < Nx; ++i)
        for (int j = 0; j < Ny; ++j) f.at(0, i, j, k) = 1.0 / mass;
    return f;
}

PhysicalField gen_dipole_z(const Domain& d, Real alpha, Real frac) {
    PhysicalField f = gen_spike_z(d, frac);
    if (alpha <= 0) return f;
    const int Nz = d.nz();
    const int kedge = Nz - 2;
    vcalc::Profile e1(Nz, 0.0), e2(Nz, 0.0);
    const int k = std::min(Nz - 1, std::max(0, int(std::lround(frac * (Nz - 1)))));
    e1[k] = 1.0 / d.zweights()[k];
    e2[kedge] = 1.0 / d.zweights()[kedge];
    const Real g1 = vcalc::admissibility_defect(d, e1, alpha);
    const Real g2 = vcalc::admissibility_defect(d, e2, alpha);
    const Real b = g2 != 0 ? g1 / g2 : 0.0;
    const int Nx = d.nx(), Ny = d.ny();
    for (int i = 0; i < Nx; ++i)
        for (int j = 0; j < Ny; ++j) f.at(0, i, j, kedge) -= b / d.zweights()[kedge];
    return f;
}

PhysicalField gen_mode_z(const Domain& d, int n) {
    PhysicalField f(d, 1);
    const int Nx = d.nx(), Ny = d.ny(), Nz = d.nz();
    for (int k = 0; k < Nz; ++k) {
        const Real v = std::cos(d.beta(n) * (d.z(k) - d.z0()));
        for (int i = 0; i < Nx; ++i)
            for (int j = 0; j < Ny; ++j) f.at(0, i, j, k) = v;
    }
    return f;
}

PhysicalField gen_mode_transverse(const Domain& d, int k, int comp) {
    PhysicalField f(d, 2);
    const int Nx = d.nx(), Ny = d.ny(), Nz = d.nz();
    for (int i = 0; i < Nx; ++i)
        for (int j = 0; j < Ny; ++j) {
            const Real phase = comp == 0 ? k * d.y(j) : k * d.x(i);
            const Real v = std::cos(phase);
            for (int n = 0; n < Nz; ++n) f.at(comp, i, j, n) = v;
        }
    return f;
}

namespace {
PhysicalField random_solenoidal(const Domain& d, int band, std::uint64_t seed) {
    // random spectrum up to `band` (0: full), projected and mean-removed
    SpectralField F(d, 2);
    std::mt19937_64 rng(seed);
    std::normal_distribution<Real> gauss(0.0, 1.0);
    const int Nx = d.nx(), Ny = d.ny(), Nz = d.nz();
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < Nx; ++i)
            for (int j = 0; j < Ny; ++j) {
                const int ki = i <= Nx / 2 ? i : i - Nx;
                const int kj = j <= Ny / 2 ? j : j - Ny;
                if (band > 0 && (std::abs(ki) > band || std::abs(kj) > band)) continue;
                if (i == 0 && j == 0) continue;
                if (i == Nx / 2 || j == Ny / 2) continue;  // keep symmetry simple
                for (int n = 0; n < Nz; ++n) {
                    if (band > 0 && n > band) continue;
                    F.at(c, i, j, n) = Complex(gauss(rng), gauss(rng));
                }
            }
    // enforce Hermitian symmetry so the field is real
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < Nx; ++i)
            for (int j = 0; j < Ny; ++j) {
                const int im = (Nx - i) % Nx, jm = (Ny - j) % Ny;
                if (std::int64_t(i) * Ny + j > std::int64_t(im) * Ny + jm) continue;
                for (int n = 0; n < Nz; ++n)
                    F.at(c, im, jm, n) = std::conj(F.at(c, i, j, n));
            }
    hops::helmholtz_project_spec(F);
    return d.from_spectral(F);
}
}  // namespace

PhysicalField gen_smooth_solenoidal(const Domain& d, int band, std::uint64_t seed) {
    PhysicalField f = random_solenoidal(d, band, seed);
    const Real n = norm_inf_p(f, 1.0);
    if (n > 0) f *= 1.0 / n;
    return f;
}

PhysicalField gen_noise_solenoidal(const Domain& d, Real amplitude, std::uint64_t seed) {
    PhysicalField f = random_solenoidal(d, 0, seed);
    const Real n = norm_inf_p(f, 1.0);
    if (n > 0) f *= amplitude / n;
    return f;
}

std::vector<int> mode_ladder(int nmax) {
    std::vector<int> out;
    Real v = 1.0;
    while (v <= nmax + 0.5) {
        const int n = int(std::lround(v));
        if (out.empty() || out.back() != n) out.push_back(n);
        v *= std::sqrt(2.0);
    }
    return out;
}

}  // namespace peq
