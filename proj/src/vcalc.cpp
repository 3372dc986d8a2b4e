#include "peq/vcalc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace peq {
namespace vcalc {

namespace {
constexpr Real kPi = 3.14159265358979323846;

void require_profile(const Domain& d, const Profile& f) {
    if (int(f.size()) != d.nz()) throw std::invalid_argument("profile size mismatch");
}
}  // namespace

RlOperator::RlOperator(const Domain& d, Real alpha) : nz_(d.nz()), alpha_(alpha) {
    if (alpha <= 0) throw std::invalid_argument("fractional order must be positive");
    // Endpoint grids are uniform in both bc variants, but the DN midpoint grid
    // starts half a cell above z0; integrate from z0 regardless.
    const Real z0 = d.z0();
    const auto& z = d.zgrid();
    w_.assign(std::size_t(nz_) * nz_, 0.0);
    const Real ginv = 1.0 / std::tgamma(alpha);
    // nodes of the piecewise-linear interpolant: prepend z0 for midpoint grids
    const bool midpoint = z[0] > z0 + 1e-14 * d.h();
    for (int i = 0; i < nz_; ++i) {
        const Real zi = z[i];
        Real* row = w_.data() + std::size_t(i) * nz_;
        auto add_segment = [&](Real za, Real zb, int ja, int jb) {
            // contribution of the linear piece on [za, zb] (values f_ja, f_jb)
            if (zb <= za) return;
            const Real a = zi - zb, b = zi - za;  // 0 <= a < b
            const Real P = (std::pow(b, alpha) - std::pow(a, alpha)) / alpha;
            const Real Q =
                (std::pow(b, alpha + 1) - std::pow(a, alpha + 1)) / (alpha + 1);
            const Real dseg = zb - za;
            // f(z) = f_ja (zb - z)/d + f_jb (z - za)/d,  z = zi - u
            const Real cb = (b * P - Q) / dseg;  // multiplies f at za
            const Real ca = (Q - a * P) / dseg;  // multiplies f at zb
            row[ja] += ginv * cb;
            row[jb] += ginv * ca;
        };
        if (midpoint) {
            // constant extension of f on the half-cell below the first node
            const Real zb = std::min(z[0], zi);
            const Real a = zi - zb, b = zi - z0;
            if (b > a)
                row[0] += ginv * (std::pow(b, alpha) - std::pow(a, alpha)) / alpha;
        }
        for (int j = 0; j + 1 <= i; ++j) add_segment(z[j], z[j + 1], j, j + 1);
    }
}

void RlOperator::apply(std::span<const Real> f, std::span<Real> out) const {
    for (int i = 0; i < nz_; ++i) {
        Real acc = 0;
        const Real* row = w_.data() + std::size_t(i) * nz_;
        for (int j = 0; j <= std::min(i, nz_ - 1); ++j) acc += row[j] * f[j];
        out[i] = acc;
    }
}

Profile RlOperator::apply(const Profile& f) const {
    Profile out(nz_);
    apply(f, out);
    return out;
}

void RlOperator::apply_reflected(std::span<const Real> f, std::span<Real> out) const {
    // mirror image: reverse input, apply, reverse output
    thread_local std::vector<Real> rf, ro;
    rf.assign(f.rbegin(), f.rend());
    ro.resize(nz_);
    apply(rf, ro);
    for (int i = 0; i < nz_; ++i) out[i] = ro[nz_ - 1 - i];
}

Profile riemann_liouville(const Domain& d, const Profile& f, Real alpha) {
    require_profile(d, f);
    if (alpha == 0.0) return f;
    if (alpha < 0) throw std::invalid_argument("riemann_liouville: alpha >= 0");
    return RlOperator(d, alpha).apply(f);
}

Profile adjoint_rl(const Domain& d, const Profile& psi, Real alpha) {
    require_profile(d, psi);
    if (alpha <= 0) throw std::invalid_argument("adjoint_rl: alpha > 0");
    RlOperator rl(d, alpha);
    Profile out(d.nz());
    rl.apply_reflected(psi, out);
    return out;
}

Profile dz_profile(const Domain& d, const Profile& f) {
    require_profile(d, f);
    const int nz = d.nz();
    Profile cosc(nz), sinc(d.nsin()), out(nz);
    d.cos_coeffs(f, cosc);
    d.dz_cos_to_sin(cosc, sinc);
    d.sin_values(sinc, out);
    return out;
}

Profile caputo(const Domain& d, const Profile& f, Real alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("caputo: alpha in (0,1)");
    return riemann_liouville(d, dz_profile(d, f), 1.0 - alpha);
}

Profile heat_vertical(const Domain& d, const Profile& f, Real t) {
    require_profile(d, f);
    if (t < 0) throw std::invalid_argument("heat_vertical: t >= 0");
    const int nz = d.nz();
    Profile c(nz), out(nz);
    d.cos_coeffs(f, c);
    for (int n = 0; n < nz; ++n) c[n] *= std::exp(-t * d.beta(n) * d.beta(n));
    d.cos_values(c, out);
    return out;
}

Profile periodized_heat_oracle(const Domain& d, const Profile& f, Real t, int k_max,
                               int n_quad) {
    require_profile(d, f);
    if (t <= 0) throw std::invalid_argument("periodized_heat_oracle: t > 0");
    if (k_max < 1) throw std::invalid_argument("periodized_heat_oracle: k_max >= 1");
    if (d.bc() != VerticalBc::Neumann)
        throw std::invalid_argument("periodized_heat_oracle: Neumann basis only");
    const int nz = d.nz();
    const Real h = d.h(), z0 = d.z0();
    Profile c(nz);
    d.cos_coeffs(f, c);
    // even periodic extension of the cosine series has period 2h and is smooth,
    // so the periodic trapezoid rule below is spectrally accurate
    const Real period = 2 * h;
    std::vector<Real> Fq(n_quad), yq(n_quad);
    for (int q = 0; q < n_quad; ++q) {
        yq[q] = z0 + period * q / n_quad;
        Real acc = 0;
        for (int n = 0; n < nz; ++n) acc += c[n] * std::cos(d.beta(n) * (yq[q] - z0));
        Fq[q] = acc;
    }
    Profile out(nz, 0.0);
    const Real wq = period / n_quad;
    const Real gpre = 1.0 / std::sqrt(4 * kPi * t);
    for (int i = 0; i < nz; ++i) {
        const Real zi = d.z(i);
        Real acc = 0;
        for (int q = 0; q < n_quad; ++q) {
            Real e = 0;
            const Real base = zi - yq[q];
            for (int k = -k_max; k <= k_max; ++k) {
                const Real u = base - k * period;
                e += std::exp(-u * u / (4 * t));
            }
            acc += e * Fq[q];
        }
        out[i] = gpre * wq * acc;
    }
    return out;
}

Real admissibility_defect(const Domain& d, const Profile& f, Real alpha) {
    if (alpha == 0.0) return 0.0;
    RlOperator rl(d, alpha);
    Profile g = rl.apply(f);
    return g.back();
}

Profile admissibility_shift(const Domain& d, const Profile& f, Real alpha) {
    require_profile(d, f);
    if (alpha == 0.0) return f;
    // I^a of the constant 1 at z1 is h^a/Gamma(a+1); constants span the obstruction
    const Real defect = admissibility_defect(d, f, alpha);
    const Real unit = std::pow(d.h(), alpha) / std::tgamma(alpha + 1.0);
    Profile out = f;
    const Real c = defect / unit;
    for (auto& v : out) v -= c;
    return out;
}

namespace {
Profile dz_sine_route_heat(const Domain& d, const Profile& g, Real t) {
    // g must vanish at both endpoints; expand in the sine basis, then
    // d/dz + heat flow land diagonally in the cosine basis.
    const int nz = d.nz();
    Profile sinc(d.nsin()), cosc(nz), out(nz);
    d.sin_coeffs(g, sinc);
    d.dz_sin_to_cos(sinc, cosc);
    for (int n = 0; n < nz; ++n) cosc[n] *= std::exp(-t * d.beta(n) * d.beta(n));
    d.cos_values(cosc, out);
    return out;
}
}  // namespace

Profile smoothing_rl(const Domain& d, const RlOperator& rl, const Profile& f, Real t) {
    require_profile(d, f);
    if (t <= 0) throw std::invalid_argument("smoothing_rl: t > 0");
    Profile fa = admissibility_shift(d, f, rl.alpha());
    Profile g = rl.apply(fa);
    return dz_sine_route_heat(d, g, t);
}

Profile smoothing_rl(const Domain& d, const Profile& f, Real alpha, Real t) {
    require_profile(d, f);
    if (t <= 0) throw std::invalid_argument("smoothing_rl: t > 0");
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("smoothing_rl: alpha in [0,1]");
    if (alpha == 0.0) {
        // distributional d/dz through the interior sine interpolant
        return dz_sine_route_heat(d, f, t);
    }
    RlOperator rl(d, alpha);
    return smoothing_rl(d, rl, f, t);
}

Real norm_l1(const Domain& d, const Profile& f) { return norm_lp(d, f, 1.0); }

Real norm_lp(const Domain& d, const Profile& f, Real p) {
    require_profile(d, f);
    const int nz = d.nz();
    const int nref = d.nz_refined();
    thread_local std::vector<Real> c, vals;
    c.resize(nz);
    vals.resize(nref);
    d.cos_coeffs(f, c);
    d.cos_values_refined(c, vals);
    const auto& w = d.zweights_refined();
    if (std::isinf(p)) {
        Real m = 0;
        for (int k = 0; k < nref; ++k) m = std::max(m, std::abs(vals[k]));
        return m;
    }
    Real acc = 0;
    for (int k = 0; k < nref; ++k) acc += w[k] * std::pow(std::abs(vals[k]), p);
    return p == 1.0 ? acc : std::pow(acc, 1.0 / p);
}

Real norm_linf(const Profile& f) {
    Real m = 0;
    for (Real v : f) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace vcalc
}  // namespace peq
