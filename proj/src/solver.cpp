#include "peq/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "peq/hops.hpp"
#include "peq/parallel.hpp"
#include "peq/vcalc.hpp"

namespace peq {

namespace {

constexpr Real kPi = 3.14159265358979323846;

void require_neumann(const Domain& d, const char* who) {
    if (d.bc() != VerticalBc::Neumann)
        throw std::invalid_argument(std::string(who) + ": Neumann vertical bc required");
}

// phi1(x) = (1-e^-x)/x, phi2(x) = (x-1+e^-x)/x^2, psi(x) = (1-(1+x)e^-x)/x^2,
// all evaluated stably near 0.
Real phi1(Real x) {
    if (x < 1e-5) return 1.0 - x / 2 + x * x / 6;
    return -std::expm1(-x) / x;
}
Real phi2m(Real x) {
    if (x < 1e-4) return 0.5 - x / 6 + x * x / 24;
    return (x - 1.0 + std::exp(-x)) / (x * x);
}
Real psi_lin(Real x) {
    if (x < 1e-4) return 0.5 - x / 3 + x * x / 8;
    return (1.0 - (1.0 + x) * std::exp(-x)) / (x * x);
}

std::vector<Real> eigenvalues(const Domain& d) {
    const int Ny = d.ny(), Nz = d.nz();
    std::vector<Real> lam(d.ngrid());
    for (std::int64_t col = 0; col < d.ncol(); ++col) {
        const int i = int(col / Ny), j = int(col % Ny);
        const Real kh = d.kx(i) * d.kx(i) + d.ky(j) * d.ky(j);
        for (int n = 0; n < Nz; ++n) lam[col * Nz + n] = kh + d.beta(n) * d.beta(n);
    }
    return lam;
}

// Gauss-Legendre nodes/weights on (0,1), Newton iteration on P_n.
void gauss_legendre01(int n, std::vector<Real>& x, std::vector<Real>& w) {
    x.resize(n);
    w.resize(n);
    for (int i = 0; i < n; ++i) {
        Real t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            Real p0 = 1, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const Real p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const Real dp = n * (t * p1 - p0) / (t * t - 1);
            const Real dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        Real p0 = 1, p1 = t;
        for (int k = 2; k <= n; ++k) {
            const Real p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const Real dp = n * (t * p1 - p0) / (t * t - 1);
        x[i] = 0.5 * (1 - t);  // reversed order is irrelevant
        w[i] = 1.0 / ((1 - t * t) * dp * dp);
    }
}

}  // namespace

PhysicalField reconstruct_w(const PhysicalField& v) {
    const Domain& d = v.domain();
    require_neumann(d, "reconstruct_w");
    if (v.ncomp() != 2) throw std::invalid_argument("reconstruct_w: 2 components expected");
    SpectralField V = d.to_spectral(v);
    const int Ny = d.ny(), Nz = d.nz();
    // spectral horizontal divergence, then the vertical antiderivative
    //   int_z^{z1} cos(b_n s) ds = -sin(b_n (z-z0))/b_n  (n>=1),  (z1-z) for n=0
    std::vector<Complex> work(d.ngrid());
    const Complex* a1 = V.comp(0);
    const Complex* a2 = V.comp(1);
    parallel_for(d.ncol(), [&](std::int64_t col) {
        const int i = int(col / Ny), j = int(col % Ny);
        const Complex sx(0, d.kx_deriv(i)), sy(0, d.ky_deriv(j));
        thread_local std::vector<Complex> div;
        div.resize(Nz);
        for (int n = 0; n < Nz; ++n)
            div[n] = sx * a1[col * Nz + n] + sy * a2[col * Nz + n];
        for (int k = 0; k < Nz; ++k) {
            Complex acc = div[0] * (d.z0() + d.h() - d.z(k));
            for (int n = 1; n < Nz; ++n)
                acc -= div[n] / d.beta(n) * std::sin(d.beta(n) * (d.z(k) - d.z0()));
            work[col * Nz + k] = acc;
        }
    });
    d.fft_h(work.data(), false);
    PhysicalField w(d, 1);
    Real* out = w.comp(0);
    parallel_for(d.ngrid(), [&](std::int64_t idx) { out[idx] = work[idx].real(); });
    return w;
}

namespace {

/// d/dz of a field given by grid values vanishing at both vertical endpoints,
/// through the interior sine interpolant; returns grid values.
void dz_sine_route(const Domain& d, PhysicalField& f) {
    const int Nz = d.nz();
    for (int c = 0; c < f.ncomp(); ++c) {
        Real* a = f.comp(c);
        parallel_for(d.ncol(), [&](std::int64_t col) {
            thread_local std::vector<Real> sc, cc, vals;
            sc.resize(d.nsin());
            cc.resize(Nz);
            vals.resize(Nz);
            std::span<const Real> column(a + col * Nz, Nz);
            d.sin_coeffs(column, sc);
            d.dz_sin_to_cos(sc, cc);
            d.cos_values(cc, vals);
            std::copy(vals.begin(), vals.end(), a + col * Nz);
        });
    }
}

}  // namespace

PhysicalField nonlinearity(const PhysicalField& v, Real* div_residual) {
    const Domain& d = v.domain();
    require_neumann(d, "nonlinearity");
    if (v.ncomp() != 2) throw std::invalid_argument("nonlinearity: 2 components expected");
    SpectralField V = d.to_spectral(v);
    hops::dealias_23(V);
    if (div_residual) {
        Real m = 0;
        const int Ny = d.ny(), Nz = d.nz();
        for (std::int64_t col = 0; col < d.ncol(); ++col) {
            const int i = int(col / Ny), j = int(col % Ny);
            const Complex r = Complex(0, d.kx_deriv(i)) * V.comp(0)[col * Nz] +
                              Complex(0, d.ky_deriv(j)) * V.comp(1)[col * Nz];
            m = std::max(m, std::abs(r));
        }
        *div_residual = m;
    }
    PhysicalField vd = d.from_spectral(V);
    PhysicalField w = reconstruct_w(vd);

    // horizontal part: div_H (v (x) v) with T_{ji} = v_j v_i
    PhysicalField T(d, 4);
    const std::int64_t n = d.ngrid();
    const Real* v1 = vd.comp(0);
    const Real* v2 = vd.comp(1);
    parallel_for(n, [&](std::int64_t idx) {
        T.comp(0)[idx] = v1[idx] * v1[idx];
        T.comp(1)[idx] = v1[idx] * v2[idx];
        T.comp(2)[idx] = v2[idx] * v1[idx];
        T.comp(3)[idx] = v2[idx] * v2[idx];
    });
    SpectralField Ts = d.to_spectral(T);
    hops::dealias_23(Ts);
    SpectralField Dv(d, 2);
    const int Ny = d.ny(), Nz = d.nz();
    parallel_for(d.ncol(), [&](std::int64_t col) {
        const int i = int(col / Ny), j = int(col % Ny);
        const Complex sx(0, d.kx_deriv(i)), sy(0, d.ky_deriv(j));
        for (int k = 0; k < Nz; ++k) {
            const std::int64_t idx = col * Nz + k;
            Dv.comp(0)[idx] = sx * Ts.comp(0)[idx] + sy * Ts.comp(2)[idx];
            Dv.comp(1)[idx] = sx * Ts.comp(1)[idx] + sy * Ts.comp(3)[idx];
        }
    });
    PhysicalField out = d.from_spectral(Dv);

    // vertical part: d/dz (w v); the product vanishes at both endpoints
    PhysicalField wv(d, 2);
    const Real* wp = w.comp(0);
    parallel_for(n, [&](std::int64_t idx) {
        wv.comp(0)[idx] = wp[idx] * v1[idx];
        wv.comp(1)[idx] = wp[idx] * v2[idx];
    });
    dz_sine_route(d, wv);
    out += wv;
    return out;
}

SpectralField nonlinearity_spec(const PhysicalField& v, Real* div_residual) {
    PhysicalField f = nonlinearity(v, div_residual);
    SpectralField F = v.domain().to_spectral(f);
    hops::dealias_23(F);
    return F;
}

PhysicalField duhamel_step(const StokesSemigroup& sg, const MildSolution& segment,
                           const PhysicalField& a_t, Real delta, int n_quad) {
    if (delta <= 0) throw std::domain_error("duhamel_step: delta > 0");
    if (segment.times.size() < 2) throw std::invalid_argument("duhamel_step: need a history segment");
    const Domain& d = a_t.domain();
    SpectralField acc = d.to_spectral(a_t);
    sg.apply_spec(acc, delta);
    std::vector<Real> xs, ws;
    gauss_legendre01(n_quad, xs, ws);
    const Real tlo = segment.times.front();
    for (int q = 0; q < n_quad; ++q) {
        const Real sigma = xs[q] * delta;
        const Real tq = tlo + sigma;
        // linear interpolation of the stored history at tq
        std::size_t k = 1;
        while (k + 1 < segment.times.size() && segment.times[k] < tq) ++k;
        const Real t0 = segment.times[k - 1], t1 = segment.times[k];
        const Real th = t1 > t0 ? (tq - t0) / (t1 - t0) : 0.0;
        PhysicalField vq = segment.snaps[k - 1];
        vq *= (1 - th);
        vq.axpy(th, segment.snaps[k]);
        SpectralField F = nonlinearity_spec(vq);
        hops::helmholtz_project_spec(F);
        sg.apply_spec(F, delta - sigma);
        F *= ws[q] * delta;
        acc -= F;
    }
    return d.from_spectral(acc);
}

namespace {

struct SweepNorms {
    Real H = 0, K = 0, M = 0, L = 0;
};

SweepNorms monitor_norms(const std::vector<Real>& times,
                         const std::vector<PhysicalField>& snaps, Real mu) {
    SweepNorms s;
    for (std::size_t j = 0; j < snaps.size(); ++j) {
        const Real t = times[j];
        const Real n1 = norm_inf_p(snaps[j], 1.0);
        s.H = std::max(s.H, n1);
        if (t > 0) {
            const Real sob = n1 + norm_inf_p(hops::grad_field(snaps[j]), 1.0);
            s.K = std::max(s.K, std::sqrt(t) * sob);
            s.M = std::max(s.M, std::sqrt(t) * n1);
            s.L = std::max(s.L, std::pow(t, mu) * sob);
        }
    }
    return s;
}

Real n_norm_diff(const std::vector<Real>& times, const std::vector<PhysicalField>& a,
                 const std::vector<PhysicalField>& b) {
    Real H = 0, K = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        PhysicalField diff = a[j];
        diff -= b[j];
        const Real n1 = norm_inf_p(diff, 1.0);
        H = std::max(H, n1);
        if (times[j] > 0) {
            const Real sob = n1 + norm_inf_p(hops::grad_field(diff), 1.0);
            K = std::max(K, std::sqrt(times[j]) * sob);
        }
    }
    return std::max(H, K);
}

}  // namespace

PicardResult picard_solve(const StokesSemigroup& sg, const PhysicalField& a, Real T,
                          const PicardOptions& opt) {
    const Domain& d = a.domain();
    require_neumann(d, "picard_solve");
    if (T <= 0) throw std::domain_error("picard_solve: T > 0");
    if (hops::mean_h_max(hops::div_h(a)) > 1e-8)
        throw std::invalid_argument("picard_solve: initial datum must have solenoidal vertical average (1e-8)");

    const int Mt = opt.time_nodes;
    const Real dt = T / Mt;
    std::vector<Real> times(Mt + 1);
    for (int j = 0; j <= Mt; ++j) times[j] = dt * j;

    const std::vector<Real> lam = eigenvalues(d);
    SpectralField ahat = d.to_spectral(a);

    // sweep 0: the linear flow
    auto linear_flow = [&](Real t) {
        SpectralField s = ahat;
        sg.apply_spec(s, t);
        return s;
    };
    std::vector<PhysicalField> cur;
    cur.reserve(Mt + 1);
    for (int j = 0; j <= Mt; ++j) cur.push_back(d.from_spectral(linear_flow(times[j])));

    PicardResult res;
    res.trace.rows.clear();
    std::vector<PhysicalField> prev;
    Real prev_diff = -1;

    const std::int64_t nmode = d.ngrid();
    std::vector<Complex> integral(2 * nmode);
    std::vector<std::vector<Complex>> Fhat(Mt + 1);

    int m = 0;
    for (; m < opt.max_sweeps; ++m) {
        SweepNorms mon = monitor_norms(times, cur, opt.mu);
        IterationTrace::Row row{m, mon.H, mon.K, mon.M, mon.L, 0.0};

        bool bad = !std::isfinite(mon.H) || !std::isfinite(mon.K);
        if (bad) {
            res.trace.rows.push_back(row);
            res.status = SolveStatus::Diverged;
            break;
        }
        // divergence heuristic on the K monitor
        const auto& rows = res.trace.rows;
        if (rows.size() >= 3 && mon.K > opt.divergence_factor * rows[rows.size() - 3].K &&
            mon.K > 1e3) {
            res.trace.rows.push_back(row);
            res.status = SolveStatus::Diverged;
            break;
        }

        // next sweep: spectral projected nonlinearity along the current trajectory
        for (int j = 0; j <= Mt; ++j) {
            SpectralField Fj = nonlinearity_spec(cur[j]);
            hops::helmholtz_project_spec(Fj);
            Fhat[j] = std::move(Fj.raw());
        }

        std::vector<PhysicalField> next;
        next.reserve(Mt + 1);
        std::fill(integral.begin(), integral.end(), Complex(0));
        next.push_back(cur[0]);  // t=0: the datum itself
        for (int j = 1; j <= Mt; ++j) {
            // I_j = e^{-lam dt} I_{j-1} + dt (psi F_{j-1} + (phi1-psi) F_j), per mode
            parallel_for(2 * nmode, [&](std::int64_t idx) {
                const Real th = lam[idx % nmode] * dt;
                const Real decay = std::exp(-th);
                const Real cps = psi_lin(th), cph = phi1(th) - cps;
                integral[idx] =
                    decay * integral[idx] + dt * (cps * Fhat[j - 1][idx] + cph * Fhat[j][idx]);
            });
            // v_{m+1}(t_j) = S(t_j) a - I_j
            SpectralField snap = linear_flow(times[j]);
            Complex* s1 = snap.comp(0);
            parallel_for(2 * nmode, [&](std::int64_t idx) { s1[idx] -= integral[idx]; });
            next.push_back(d.from_spectral(snap));
        }

        const Real diff = n_norm_diff(times, next, cur);
        if (prev_diff > 0) row.contraction = diff / prev_diff;
        res.trace.rows.push_back(row);

        prev = std::move(cur);
        cur = std::move(next);
        prev_diff = diff;

        const Real scale = std::max(monitor_norms(times, cur, opt.mu).H, Real(1e-30));
        if (diff < opt.tol_abs || diff < opt.tol_rel * scale) {
            res.status = SolveStatus::Converged;
            ++m;
            break;
        }
        if (m == opt.max_sweeps - 1) res.status = SolveStatus::MaxSweeps;
    }

    res.solution.times = times;
    res.solution.snaps = std::move(cur);
    res.solution.provenance = MildSolution::Provenance::Picard;
    res.solution.picard_sweeps = m;
    return res;
}

EtdResult etd_solve(const StokesSemigroup& sg, const PhysicalField& a, Real T,
                    const EtdOptions& opt) {
    const Domain& d = a.domain();
    require_neumann(d, "etd_solve");
    if (opt.dt <= 0 || T <= 0) throw std::domain_error("etd_solve: T, dt > 0");
    const int nsteps = std::max(1, int(std::lround(T / opt.dt)));
    const Real dt = T / nsteps;
    int stride = opt.snapshot_stride;
    if (stride <= 0) stride = std::max(1, nsteps / 32);

    const std::vector<Real> lam = eigenvalues(d);
    const std::int64_t nmode = d.ngrid();

    EtdResult res;
    SpectralField v = d.to_spectral(a);
    res.solution.provenance = MildSolution::Provenance::Etd;
    res.solution.times.push_back(0.0);
    res.solution.snaps.push_back(a);

    PhysicalField vphys = a;
    for (int step = 0; step < nsteps; ++step) {
        // F = -P div(u (x) v), spectral
        SpectralField F0 = nonlinearity_spec(vphys);
        hops::helmholtz_project_spec(F0);
        F0 *= -1.0;
        SpectralField stage(d, 2);
        parallel_for(2 * nmode, [&](std::int64_t idx) {
            const Real th = lam[idx % nmode] * dt;
            stage.raw()[idx] =
                std::exp(-th) * v.raw()[idx] + dt * phi1(th) * F0.raw()[idx];
        });
        PhysicalField stage_phys = d.from_spectral(stage);
        if (!stage_phys.finite() || stage_phys.max_abs() > 1e8) {
            res.status = SolveStatus::BlowUp;
            res.last_valid_time = step * dt;
            return res;
        }
        SpectralField F1 = nonlinearity_spec(stage_phys);
        hops::helmholtz_project_spec(F1);
        F1 *= -1.0;
        parallel_for(2 * nmode, [&](std::int64_t idx) {
            const Real th = lam[idx % nmode] * dt;
            v.raw()[idx] = stage.raw()[idx] +
                           dt * phi2m(th) * (F1.raw()[idx] - F0.raw()[idx]);
        });
        vphys = d.from_spectral(v);
        if (!vphys.finite() || vphys.max_abs() > 1e8) {
            res.status = SolveStatus::BlowUp;
            res.last_valid_time = step * dt;
            return res;
        }
        if ((step + 1) % stride == 0 || step + 1 == nsteps) {
            res.solution.times.push_back((step + 1) * dt);
            res.solution.snaps.push_back(vphys);
        }
    }
    res.last_valid_time = T;
    return res;
}

RecursionResult lemma54_recursion(Real A, Real eps, Real C1, Real C2, long m_max) {
    if (!(A > 0 && C1 > 0 && C2 > 0 && eps >= 0))
        throw std::domain_error("lemma54_recursion: A, C1, C2 > 0 and eps >= 0");
    RecursionResult r;
    r.A = A;
    r.eps = eps;
    r.C1 = C1;
    r.C2 = C2;

    // majorant fixed-point equation x = eps + sqrt(2A) C2 x^{3/2} + x/2
    const Real s2a = std::sqrt(2 * A) * C2;
    auto g = [&](Real x) { return 0.5 * x - s2a * std::pow(x, 1.5); };
    const Real xstar = 1.0 / (18.0 * A * C2 * C2);
    const Real xcap = std::min(xstar, 1.0 / (2 * C1));
    r.eps0 = g(xcap);
    if (eps == 0.0) {
        r.x0 = 0.0;
    } else if (eps <= g(xstar)) {
        Real lo = 0, hi = xstar;
        for (int it = 0; it < 200; ++it) {
            const Real mid = 0.5 * (lo + hi);
            (g(mid) < eps ? lo : hi) = mid;
        }
        r.x0 = 0.5 * (lo + hi);
    }

    const long keep = std::min<long>(m_max + 1, 20001);
    const long stride = std::max<long>(1, (m_max + 1) / keep);
    Real H = A, K = eps;
    r.bounded = true;
    for (long m = 0; m <= m_max; ++m) {
        if (m % stride == 0 || m == m_max) {
            r.H.push_back(H);
            r.K.push_back(K);
        }
        r.sup_H = std::max(r.sup_H, H);
        r.sup_K = std::max(r.sup_K, K);
        if (!std::isfinite(H) || !std::isfinite(K) || H > 1e12 || K > 1e12) {
            r.bounded = false;
            break;
        }
        const Real Hn = A + C1 * H * K;
        const Real Kn = eps + C2 * std::pow(K, 1.5) * std::sqrt(H) + K * H / (4 * A);
        H = Hn;
        K = Kn;
    }
    return r;
}

LifespanResult lifespan_estimate(const StokesSemigroup& sg, const PhysicalField& a, Real mu,
                                 Real c_star, Real horizon, const PicardOptions& opt) {
    if (!(mu >= 0 && mu < 0.5)) throw std::domain_error("lifespan_estimate: mu in [0,1/2)");
    LifespanResult out;
    const Real n1 = norm_inf_p(a, 1.0);
    const Real sm = seminorm_mu(sg, a, mu, default_seminorm_tgrid());
    out.triple = n1 + sm;
    const Real base = std::min(c_star * out.triple, 1.0);
    out.t_bound = base <= 0 ? horizon : std::min(std::pow(base, -2.0 / (0.5 - mu)), horizon);
    out.t_checked = std::min(out.t_bound, horizon);
    PicardResult pr = picard_solve(sg, a, out.t_checked, opt);
    out.monitors_bounded = pr.status != SolveStatus::Diverged;
    return out;
}

PhysicalField recover_pressure_grad(const PhysicalField& v) {
    const Domain& d = v.domain();
    PhysicalField F = nonlinearity(v);
    SpectralField Fs = d.to_spectral(F);
    SpectralField Ps = Fs;
    hops::helmholtz_project_spec(Ps);
    Ps -= Fs;
    return d.from_spectral(Ps);
}

std::string IterationTrace::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "m,H_m,K_m,M_m,L_m,contraction\n";
    for (const auto& r : rows)
        os << r.m << ',' << r.H << ',' << r.K << ',' << r.M << ',' << r.L << ','
           << r.contraction << '\n';
    return os.str();
}

std::string RecursionResult::to_json() const {
    std::ostringstream os;
    os.precision(17);
    os << "{\"A\":" << A << ",\"eps\":" << eps << ",\"C1\":" << C1 << ",\"C2\":" << C2
       << ",\"bounded\":" << (bounded ? "true" : "false");
    os << ",\"x0\":";
    if (x0) os << *x0;
    else os << "null";
    os << ",\"eps0\":" << eps0 << ",\"sup_H\":" << sup_H << ",\"sup_K\":" << sup_K;
    os << ",\"H\":[";
    for (std::size_t i = 0; i < H.size(); ++i) os << (i ? "," : "") << H[i];
    os << "],\"K\":[";
    for (std::size_t i = 0; i < K.size(); ++i) os << (i ? "," : "") << K[i];
    os << "]}";
    return os.str();
}

}  // namespace peq
