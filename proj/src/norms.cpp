#include "peq/norms.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "peq/hops.hpp"
#include "peq/parallel.hpp"
#include "peq/semigroup.hpp"

namespace peq {

namespace {

/// Pointwise magnitude of one column across components, sampled on the
/// refined vertical grid through the cosine interpolant of each component.
void column_magnitude_refined(const PhysicalField& f, std::int64_t col,
                              std::vector<Real>& mag) {
    const Domain& d = f.domain();
    const int nz = d.nz();
    const int nref = d.nz_refined();
    thread_local std::vector<Real> coeffs, vals;
    coeffs.resize(nz);
    vals.resize(nref);
    mag.assign(nref, 0.0);
    for (int c = 0; c < f.ncomp(); ++c) {
        const Real* column = f.comp(c) + col * nz;
        d.cos_coeffs(std::span<const Real>(column, nz), coeffs);
        d.cos_values_refined(coeffs, vals);
        for (int k = 0; k < nref; ++k) mag[k] += vals[k] * vals[k];
    }
    for (int k = 0; k < nref; ++k) mag[k] = std::sqrt(mag[k]);
}

}  // namespace

Real norm_inf_p(const PhysicalField& f, Real p) {
    if (!(p >= 1.0)) throw std::invalid_argument("norm_inf_p: p must be >= 1");
    const Domain& d = f.domain();
    const auto& w = d.zweights_refined();
    const int nref = d.nz_refined();
    const bool inf_p = std::isinf(p);
    const Real hinv = 1.0;
    (void)hinv;
    return parallel_max(d.ncol(), [&](std::int64_t col) {
        thread_local std::vector<Real> mag;
        column_magnitude_refined(f, col, mag);
        if (inf_p) {
            Real m = 0;
            for (int k = 0; k < nref; ++k) m = std::max(m, mag[k]);
            return m;
        }
        if (p == 1.0) {
            Real acc = 0;
            for (int k = 0; k < nref; ++k) acc += w[k] * mag[k];
            return acc;
        }
        Real acc = 0;
        for (int k = 0; k < nref; ++k) acc += w[k] * std::pow(mag[k], p);
        return std::pow(acc, 1.0 / p);
    });
}

Real norm_sobolev(const PhysicalField& f, const PhysicalField& grad) {
    if (grad.ncomp() != 3 * f.ncomp())
        throw std::invalid_argument("norm_sobolev: grad must hold 3 derivatives per component");
    return norm_inf_p(f, 1.0) + norm_inf_p(grad, 1.0);
}

std::vector<Real> default_seminorm_tgrid(int n, Real lo, Real hi) {
    std::vector<Real> t(n);
    for (int i = 0; i < n; ++i)
        t[i] = lo * std::pow(hi / lo, n == 1 ? 0.0 : Real(i) / (n - 1));
    return t;
}

Real seminorm_mu(const StokesSemigroup& sg, const PhysicalField& a, Real mu,
                 const std::vector<Real>& t_grid) {
    if (!(mu >= 0.0 && mu < 0.5)) throw std::invalid_argument("seminorm_mu: mu in [0,1/2)");
    if (t_grid.empty()) throw std::invalid_argument("seminorm_mu: empty t grid");
    Real best = 0;
    for (Real t : t_grid) {
        PhysicalField g = sg.apply_grad(a, t);
        best = std::max(best, std::pow(t, mu) * norm_inf_p(g, 1.0));
    }
    return best;
}

std::string NormReport::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"inf_1\":" << inf_1 << ",\"inf_inf\":" << inf_inf << ",\"sobolev\":" << sobolev
       << ",\"seminorm_mu\":" << seminorm_mu << ",\"triple\":" << triple << "}";
    return os.str();
}

NormReport make_norm_report(const StokesSemigroup& sg, const PhysicalField& f, Real mu,
                            const std::vector<Real>& t_grid) {
    NormReport r;
    r.inf_1 = norm_inf_p(f, 1.0);
    r.inf_inf = norm_inf_p(f, kPinf);
    r.sobolev = norm_sobolev(f, hops::grad_field(f));
    r.seminorm_mu = seminorm_mu(sg, f, mu, t_grid);
    r.triple = r.seminorm_mu + r.inf_1;
    return r;
}

}  // namespace peq
