#include "peq/domain.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

#include "peq/field.hpp"
#include "peq/parallel.hpp"

namespace peq {

namespace {
constexpr Real kPi = 3.14159265358979323846;
std::mutex g_fftw_mutex;  // FFTW planning is not thread-safe
}  // namespace

/// Dense vertical basis matrices plus the horizontal FFTW plans. The dense
/// route keeps both boundary conditions and the refined-grid evaluation on
/// one code path; at collocation sizes the matvec cost is negligible next to
/// the horizontal FFTs.
struct TransformPlan {
    // cosine basis: values = Bcos * coeffs, coeffs = Tcos * values
    std::vector<Real> Bcos, Tcos, Bsin, Tsin, BcosRef, BsinRef;
    int nz = 0, nsin = 0, nref = 0;
    fftw_plan fwd = nullptr, bwd = nullptr;
    std::vector<Complex> probe;  // planning buffer

    ~TransformPlan() {
        std::lock_guard<std::mutex> lk(g_fftw_mutex);
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
    }
};

Domain::Domain(const DomainConfig& cfg) : cfg_(cfg) {
    if (cfg_.Lx <= 0 || cfg_.Ly <= 0 || cfg_.z1 <= cfg_.z0)
        throw std::invalid_argument("domain: box extents must be positive");
    if (cfg_.Nx < 4 || cfg_.Ny < 4 || cfg_.Nz < 4)
        throw std::invalid_argument("domain: resolutions must be >= 4");
    if (cfg_.Nx % 2 || cfg_.Ny % 2)
        throw std::invalid_argument("domain: Nx, Ny must be even");
    if (cfg_.oversample < 1) throw std::invalid_argument("domain: oversample >= 1");

    const int Nx = cfg_.Nx, Ny = cfg_.Ny, Nz = cfg_.Nz;
    const Real hh = h();

    kx_.resize(Nx);
    for (int i = 0; i < Nx; ++i)
        kx_[i] = 2 * kPi / cfg_.Lx * (i <= Nx / 2 ? i : i - Nx);
    ky_.resize(Ny);
    for (int j = 0; j < Ny; ++j)
        ky_[j] = 2 * kPi / cfg_.Ly * (j <= Ny / 2 ? j : j - Ny);

    const bool neumann = cfg_.bc == VerticalBc::Neumann;
    zgrid_.resize(Nz);
    zw_.assign(Nz, 0.0);
    beta_.resize(Nz);
    if (neumann) {
        const int M = Nz - 1;
        for (int k = 0; k < Nz; ++k) zgrid_[k] = cfg_.z0 + hh * k / M;
        for (int k = 0; k < Nz; ++k) zw_[k] = hh / M;
        zw_[0] *= 0.5;
        zw_[Nz - 1] *= 0.5;
        for (int n = 0; n < Nz; ++n) beta_[n] = n * kPi / hh;
        nsin_ = M - 1;  // interior sine modes
    } else {
        for (int k = 0; k < Nz; ++k) zgrid_[k] = cfg_.z0 + hh * (k + 0.5) / Nz;
        for (int k = 0; k < Nz; ++k) zw_[k] = hh / Nz;
        for (int n = 0; n < Nz; ++n) beta_[n] = (n + 0.5) * kPi / hh;
        nsin_ = Nz;
    }

    const int nref = neumann ? cfg_.oversample * (Nz - 1) + 1 : cfg_.oversample * Nz;
    zref_.resize(nref);
    zwref_.assign(nref, 0.0);
    if (neumann) {
        const int Mr = nref - 1;
        for (int k = 0; k < nref; ++k) zref_[k] = cfg_.z0 + hh * k / Mr;
        for (int k = 0; k < nref; ++k) zwref_[k] = hh / Mr;
        zwref_[0] *= 0.5;
        zwref_[nref - 1] *= 0.5;
    } else {
        for (int k = 0; k < nref; ++k) zref_[k] = cfg_.z0 + hh * (k + 0.5) / nref;
        for (int k = 0; k < nref; ++k) zwref_[k] = hh / nref;
    }

    plan_ = std::make_unique<TransformPlan>();
    auto& P = *plan_;
    P.nz = Nz;
    P.nsin = nsin_;
    P.nref = nref;

    auto cosb = [&](Real z, int n) { return std::cos(beta_[n] * (z - cfg_.z0)); };
    auto sinb = [&](Real z, int n) {
        const Real b = neumann ? (n + 1) * kPi / hh : (n + 0.5) * kPi / hh;
        return std::sin(b * (z - cfg_.z0));
    };

    P.Bcos.resize(std::size_t(Nz) * Nz);
    for (int j = 0; j < Nz; ++j)
        for (int n = 0; n < Nz; ++n) P.Bcos[std::size_t(j) * Nz + n] = cosb(zgrid_[j], n);

    P.Tcos.resize(std::size_t(Nz) * Nz);
    if (neumann) {
        // c_n = s_n (2/M) sum_j w_j f_j cos(pi n j/M); end rows/cols halved
        const int M = Nz - 1;
        for (int n = 0; n < Nz; ++n) {
            const Real sn = (n == 0 || n == M) ? 0.5 : 1.0;
            for (int j = 0; j < Nz; ++j) {
                const Real wj = (j == 0 || j == M) ? 0.5 : 1.0;
                P.Tcos[std::size_t(n) * Nz + j] =
                    sn * wj * (2.0 / M) * std::cos(kPi * Real(n) * j / M);
            }
        }
    } else {
        // DCT-IV-type orthogonality: c = (2/Nz) B^T f
        for (int n = 0; n < Nz; ++n)
            for (int j = 0; j < Nz; ++j)
                P.Tcos[std::size_t(n) * Nz + j] = 2.0 / Nz * cosb(zgrid_[j], n);
    }

    P.Bsin.resize(std::size_t(Nz) * nsin_);
    for (int j = 0; j < Nz; ++j)
        for (int n = 0; n < nsin_; ++n) P.Bsin[std::size_t(j) * nsin_ + n] = sinb(zgrid_[j], n);
    P.Tsin.resize(std::size_t(nsin_) * Nz);
    if (neumann) {
        const int M = Nz - 1;
        for (int n = 0; n < nsin_; ++n)
            for (int j = 0; j < Nz; ++j)
                P.Tsin[std::size_t(n) * Nz + j] =
                    (j == 0 || j == M) ? 0.0 : (2.0 / M) * std::sin(kPi * Real(n + 1) * j / M);
    } else {
        for (int n = 0; n < nsin_; ++n)
            for (int j = 0; j < Nz; ++j)
                P.Tsin[std::size_t(n) * Nz + j] = (2.0 / Nz) * sinb(zgrid_[j], n);
    }

    P.BcosRef.resize(std::size_t(nref) * Nz);
    for (int j = 0; j < nref; ++j)
        for (int n = 0; n < Nz; ++n) P.BcosRef[std::size_t(j) * Nz + n] = cosb(zref_[j], n);
    P.BsinRef.resize(std::size_t(nref) * nsin_);
    for (int j = 0; j < nref; ++j)
        for (int n = 0; n < nsin_; ++n) P.BsinRef[std::size_t(j) * nsin_ + n] = sinb(zref_[j], n);

    {
        std::lock_guard<std::mutex> lk(g_fftw_mutex);
        P.probe.assign(std::size_t(Nx) * Ny * Nz, Complex(0));
        int dims[2] = {Nx, Ny};
        auto* buf = reinterpret_cast<fftw_complex*>(P.probe.data());
        P.fwd = fftw_plan_many_dft(2, dims, Nz, buf, nullptr, Nz, 1, buf, nullptr, Nz, 1,
                                   FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        P.bwd = fftw_plan_many_dft(2, dims, Nz, buf, nullptr, Nz, 1, buf, nullptr, Nz, 1,
                                   FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!P.fwd || !P.bwd) throw std::runtime_error("domain: fftw plan failed");
    }
}

Domain::~Domain() = default;

void Domain::fft_h(Complex* data, bool forward) const {
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(forward ? plan_->fwd : plan_->bwd, buf, buf);
    if (forward) {
        const Real s = 1.0 / (Real(cfg_.Nx) * cfg_.Ny);
        const std::int64_t n = ngrid();
        for (std::int64_t i = 0; i < n; ++i) data[i] *= s;
    }
}

namespace {
// out[m] = Mat(m, :) . v,   Mat row-major (rows x cols)
inline void matvec(const Real* mat, int rows, int cols, const Real* v, Real* out) {
    for (int r = 0; r < rows; ++r) {
        Real acc = 0;
        const Real* row = mat + std::size_t(r) * cols;
        for (int c = 0; c < cols; ++c) acc += row[c] * v[c];
        out[r] = acc;
    }
}
}  // namespace

void Domain::cos_coeffs(std::span<const Real> values, std::span<Real> coeffs) const {
    matvec(plan_->Tcos.data(), cfg_.Nz, cfg_.Nz, values.data(), coeffs.data());
}
void Domain::cos_values(std::span<const Real> coeffs, std::span<Real> values) const {
    matvec(plan_->Bcos.data(), cfg_.Nz, cfg_.Nz, coeffs.data(), values.data());
}
void Domain::sin_coeffs(std::span<const Real> values, std::span<Real> coeffs) const {
    matvec(plan_->Tsin.data(), nsin_, cfg_.Nz, values.data(), coeffs.data());
}
void Domain::sin_values(std::span<const Real> coeffs, std::span<Real> values) const {
    matvec(plan_->Bsin.data(), cfg_.Nz, nsin_, coeffs.data(), values.data());
}
void Domain::cos_values_refined(std::span<const Real> coeffs, std::span<Real> out) const {
    matvec(plan_->BcosRef.data(), plan_->nref, cfg_.Nz, coeffs.data(), out.data());
}
void Domain::sin_values_refined(std::span<const Real> coeffs, std::span<Real> out) const {
    matvec(plan_->BsinRef.data(), plan_->nref, nsin_, coeffs.data(), out.data());
}

void Domain::dz_cos_to_sin(std::span<const Real> cosc, std::span<Real> sinc) const {
    // d/dz cos(b_n (z-z0)) = -b_n sin(b_n (z-z0)); the sine table starts at the
    // first nonconstant mode for Neumann (n=1 -> index 0) and at n=0 for DN.
    // Neumann drops the top cosine mode's image: its sine vanishes at every
    // collocation node.
    if (cfg_.bc == VerticalBc::Neumann) {
        for (int n = 0; n < nsin_; ++n) sinc[n] = -beta_[n + 1] * cosc[n + 1];
    } else {
        for (int n = 0; n < nsin_; ++n) sinc[n] = -beta_[n] * cosc[n];
    }
}

void Domain::dz_sin_to_cos(std::span<const Real> sinc, std::span<Real> cosc) const {
    std::fill(cosc.begin(), cosc.end(), 0.0);
    if (cfg_.bc == VerticalBc::Neumann) {
        for (int n = 0; n < nsin_; ++n) cosc[n + 1] = beta_[n + 1] * sinc[n];
    } else {
        for (int n = 0; n < nsin_; ++n) cosc[n] = beta_[n] * sinc[n];
    }
}

void Domain::check_resolution(const PhysicalField& f) const {
    if (&f.domain() != this) throw std::invalid_argument("field/domain mismatch");
}

SpectralField Domain::to_spectral(const PhysicalField& f) const {
    check_resolution(f);
    SpectralField F(*this, f.ncomp());
    const int Nz = cfg_.Nz;
    for (int c = 0; c < f.ncomp(); ++c) {
        const Real* src = f.comp(c);
        Complex* dst = F.comp(c);
        const std::int64_t n = ngrid();
        parallel_for(n, [&](std::int64_t i) { dst[i] = Complex(src[i], 0.0); });
        fft_h(dst, true);
        parallel_for(ncol(), [&](std::int64_t col) {
            Complex* column = dst + col * Nz;
            thread_local std::vector<Real> re, im, cre, cim;
            re.resize(Nz); im.resize(Nz); cre.resize(Nz); cim.resize(Nz);
            for (int k = 0; k < Nz; ++k) {
                re[k] = column[k].real();
                im[k] = column[k].imag();
            }
            cos_coeffs(re, cre);
            cos_coeffs(im, cim);
            for (int k = 0; k < Nz; ++k) column[k] = Complex(cre[k], cim[k]);
        });
    }
    return F;
}

PhysicalField Domain::from_spectral(const SpectralField& F) const {
    if (&F.domain() != this) throw std::invalid_argument("field/domain mismatch");
    PhysicalField f(*this, F.ncomp());
    const int Nz = cfg_.Nz;
    std::vector<Complex> work(ngrid());
    for (int c = 0; c < F.ncomp(); ++c) {
        const Complex* src = F.comp(c);
        std::copy(src, src + ngrid(), work.begin());
        parallel_for(ncol(), [&](std::int64_t col) {
            Complex* column = work.data() + col * Nz;
            thread_local std::vector<Real> re, im, vre, vim;
            re.resize(Nz); im.resize(Nz); vre.resize(Nz); vim.resize(Nz);
            for (int k = 0; k < Nz; ++k) {
                re[k] = column[k].real();
                im[k] = column[k].imag();
            }
            cos_values(re, vre);
            cos_values(im, vim);
            for (int k = 0; k < Nz; ++k) column[k] = Complex(vre[k], vim[k]);
        });
        fft_h(work.data(), false);
        Real* dst = f.comp(c);
        parallel_for(ngrid(), [&](std::int64_t i) { dst[i] = work[i].real(); });
    }
    return f;
}

HorizontalField Domain::vertical_integral(const PhysicalField& f) const {
    check_resolution(f);
    if (f.ncomp() != 1) throw std::invalid_argument("vertical_integral: scalar field expected");
    HorizontalField out(*this);
    const int Nz = cfg_.Nz;
    const Real* src = f.comp(0);
    Real* dst = out.raw().data();
    parallel_for(ncol(), [&](std::int64_t col) {
        Real acc = 0;
        const Real* column = src + col * Nz;
        for (int k = 0; k < Nz; ++k) acc += zw_[k] * column[k];
        dst[col] = acc;
    });
    return out;
}

}  // namespace peq
