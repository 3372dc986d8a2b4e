#include "peq/field.hpp"

#include <cmath>
#include <stdexcept>

#include "peq/parallel.hpp"

namespace peq {

namespace {
void require_same(const Domain* a, const Domain* b, int ca, int cb) {
    if (a != b || ca != cb) throw std::invalid_argument("field shape mismatch");
}
}  // namespace

PhysicalField& PhysicalField::operator+=(const PhysicalField& o) {
    require_same(dom_, o.dom_, ncomp_, o.ncomp_);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}
PhysicalField& PhysicalField::operator-=(const PhysicalField& o) {
    require_same(dom_, o.dom_, ncomp_, o.ncomp_);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}
PhysicalField& PhysicalField::operator*=(Real s) {
    for (auto& v : a_) v *= s;
    return *this;
}
void PhysicalField::axpy(Real s, const PhysicalField& o) {
    require_same(dom_, o.dom_, ncomp_, o.ncomp_);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += s * o.a_[i];
}

bool PhysicalField::finite() const {
    for (Real v : a_)
        if (!std::isfinite(v)) return false;
    return true;
}

Real PhysicalField::max_abs() const {
    Real m = 0;
    for (Real v : a_) m = std::max(m, std::abs(v));
    return m;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same(dom_, o.dom_, ncomp_, o.ncomp_);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}
SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same(dom_, o.dom_, ncomp_, o.ncomp_);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}
SpectralField& SpectralField::operator*=(Real s) {
    for (auto& v : a_) v *= s;
    return *this;
}
Real SpectralField::max_abs() const {
    Real m = 0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

Real HorizontalField::max_abs() const {
    Real m = 0;
    for (Real v : a_) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace peq
