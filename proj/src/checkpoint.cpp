#include "peq/checkpoint.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

namespace peq {

namespace {
template <class T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}
template <class T>
T get(std::ifstream& is) {
    T v;
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw std::runtime_error("checkpoint: truncated file");
    return v;
}
}  // namespace

void write_checkpoint(const std::string& path, const PhysicalField& f, Real time) {
    const Domain& d = f.domain();
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("checkpoint: cannot open " + path);
    os.write("PEQF", 4);
    put<std::uint32_t>(os, kCheckpointVersion);
    put<std::uint32_t>(os, std::uint32_t(d.nx()));
    put<std::uint32_t>(os, std::uint32_t(d.ny()));
    put<std::uint32_t>(os, std::uint32_t(d.nz()));
    put<double>(os, d.lx());
    put<double>(os, d.ly());
    put<double>(os, d.z0());
    put<double>(os, d.z0() + d.h());
    put<std::uint32_t>(os, std::uint32_t(f.ncomp()));
    put<double>(os, time);
    for (int c = 0; c < f.ncomp(); ++c)
        os.write(reinterpret_cast<const char*>(f.comp(c)),
                 std::streamsize(sizeof(Real)) * d.ngrid());
    if (!os) throw std::runtime_error("checkpoint: write failed for " + path);
}

CheckpointData read_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("checkpoint: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "PEQF", 4) != 0)
        throw std::runtime_error("checkpoint: bad magic in " + path);
    const auto version = get<std::uint32_t>(is);
    if (version != kCheckpointVersion)
        throw std::runtime_error("checkpoint: unsupported version");
    CheckpointData out;
    out.geometry.Nx = int(get<std::uint32_t>(is));
    out.geometry.Ny = int(get<std::uint32_t>(is));
    out.geometry.Nz = int(get<std::uint32_t>(is));
    out.geometry.Lx = get<double>(is);
    out.geometry.Ly = get<double>(is);
    out.geometry.z0 = get<double>(is);
    out.geometry.z1 = get<double>(is);
    out.ncomp = int(get<std::uint32_t>(is));
    out.time = get<double>(is);
    const std::size_t n =
        std::size_t(out.ncomp) * out.geometry.Nx * out.geometry.Ny * out.geometry.Nz;
    out.values.resize(n);
    is.read(reinterpret_cast<char*>(out.values.data()), std::streamsize(sizeof(Real)) * n);
    if (!is) throw std::runtime_error("checkpoint: truncated payload in " + path);
    return out;
}

PhysicalField read_checkpoint_on(const Domain& d, const std::string& path, Real* time) {
    CheckpointData data = read_checkpoint(path);
    if (data.geometry.Nx != d.nx() || data.geometry.Ny != d.ny() ||
        data.geometry.Nz != d.nz())
        throw std::runtime_error("checkpoint: grid mismatch");
    PhysicalField f(d, data.ncomp);
    std::copy(data.values.begin(), data.values.end(), f.raw().begin());
    if (time) *time = data.time;
    return f;
}

}  // namespace peq
