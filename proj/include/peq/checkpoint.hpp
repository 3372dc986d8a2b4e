#ifndef PEQ_CHECKPOINT_HPP
#define PEQ_CHECKPOINT_HPP

#include <string>

#include "peq/field.hpp"

namespace peq {

// Binary snapshot format, little-endian:
//   "PEQF" | u32 version | u32 Nx,Ny,Nz | f64 Lx,Ly,z0,z1 | u32 ncomp |
//   f64 time | ncomp * Nx*Ny*Nz f64 grid values, row-major (x, y, z).
inline constexpr std::uint32_t kCheckpointVersion = 1;

void write_checkpoint(const std::string& path, const PhysicalField& f, Real time);

struct CheckpointData {
    DomainConfig geometry;  // resolutions and box read from the header
    int ncomp = 0;
    Real time = 0;
    std::vector<Real> values;  // ncomp * Nx*Ny*Nz
};
CheckpointData read_checkpoint(const std::string& path);

/// Read into a field on an existing domain; header must match its geometry.
PhysicalField read_checkpoint_on(const Domain& d, const std::string& path, Real* time);

}  // namespace peq

#endif
