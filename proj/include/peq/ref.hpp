#ifndef PEQ_REF_HPP
#define PEQ_REF_HPP

#include "peq/field.hpp"

namespace peq {

/// Serial reference implementations: direct O(N^2) transform sums and plain
/// loops, no FFT and no OpenMP. Kept as independent oracles for the fast
/// kernels and as the baseline for the benchmark target.
namespace ref {

SpectralField to_spectral(const PhysicalField& f);
PhysicalField from_spectral(const SpectralField& F);
Real norm_inf_1(const PhysicalField& f);
void heat_horizontal_spec(SpectralField& F, Real t);
/// Direct product-integration fractional integral of one column.
std::vector<Real> riemann_liouville(const Domain& d, const std::vector<Real>& f, Real alpha);

}  // namespace ref
}  // namespace peq

#endif
