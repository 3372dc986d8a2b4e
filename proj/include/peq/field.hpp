#ifndef PEQ_FIELD_HPP
#define PEQ_FIELD_HPP

#include <cstdint>
#include <vector>

#include "peq/domain.hpp"

namespace peq {

/// Real-valued grid data, one or more components, laid out per component as
/// ((ix*Ny)+iy)*Nz + iz. The field keeps a non-owning handle to its Domain;
/// the domain must outlive the field.
class PhysicalField {
public:
    PhysicalField(const Domain& d, int ncomp)
        : dom_(&d), ncomp_(ncomp), a_(std::size_t(ncomp) * d.ngrid(), 0.0) {}

    const Domain& domain() const { return *dom_; }
    int ncomp() const { return ncomp_; }
    std::int64_t size_per_comp() const { return dom_->ngrid(); }

    Real* comp(int c) { return a_.data() + std::size_t(c) * dom_->ngrid(); }
    const Real* comp(int c) const { return a_.data() + std::size_t(c) * dom_->ngrid(); }

    Real& at(int c, int ix, int iy, int iz) {
        return comp(c)[(std::int64_t(ix) * dom_->ny() + iy) * dom_->nz() + iz];
    }
    Real at(int c, int ix, int iy, int iz) const {
        return comp(c)[(std::int64_t(ix) * dom_->ny() + iy) * dom_->nz() + iz];
    }

    std::vector<Real>& raw() { return a_; }
    const std::vector<Real>& raw() const { return a_; }

    PhysicalField& operator+=(const PhysicalField& o);
    PhysicalField& operator-=(const PhysicalField& o);
    PhysicalField& operator*=(Real s);
    /// this += s*o
    void axpy(Real s, const PhysicalField& o);

    bool finite() const;
    Real max_abs() const;

private:
    const Domain* dom_;
    int ncomp_;
    std::vector<Real> a_;
};

/// Fourier x cosine coefficients, same layout with (kx_index*Ny + ky_index)*Nz + n.
class SpectralField {
public:
    SpectralField(const Domain& d, int ncomp)
        : dom_(&d), ncomp_(ncomp), a_(std::size_t(ncomp) * d.ngrid(), Complex(0)) {}

    const Domain& domain() const { return *dom_; }
    int ncomp() const { return ncomp_; }

    Complex* comp(int c) { return a_.data() + std::size_t(c) * dom_->ngrid(); }
    const Complex* comp(int c) const { return a_.data() + std::size_t(c) * dom_->ngrid(); }

    Complex& at(int c, int ikx, int iky, int n) {
        return comp(c)[(std::int64_t(ikx) * dom_->ny() + iky) * dom_->nz() + n];
    }
    Complex at(int c, int ikx, int iky, int n) const {
        return comp(c)[(std::int64_t(ikx) * dom_->ny() + iky) * dom_->nz() + n];
    }

    std::vector<Complex>& raw() { return a_; }
    const std::vector<Complex>& raw() const { return a_; }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(Real s);
    Real max_abs() const;

private:
    const Domain* dom_;
    int ncomp_;
    std::vector<Complex> a_;
};

/// Scalar data over the horizontal grid only.
class HorizontalField {
public:
    HorizontalField(const Domain& d) : dom_(&d), a_(d.ncol(), 0.0) {}
    const Domain& domain() const { return *dom_; }
    Real& at(int ix, int iy) { return a_[std::int64_t(ix) * dom_->ny() + iy]; }
    Real at(int ix, int iy) const { return a_[std::int64_t(ix) * dom_->ny() + iy]; }
    std::vector<Real>& raw() { return a_; }
    const std::vector<Real>& raw() const { return a_; }
    Real max_abs() const;

private:
    const Domain* dom_;
    std::vector<Real> a_;
};

}  // namespace peq

#endif
