#ifndef PEQ_CONFIG_HPP
#define PEQ_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "peq/domain.hpp"

namespace peq {

struct SolverBlock {
    Real T = 0.5;
    Real dt = 1e-3;
    int n_quad = 4;
    int M_sweeps = 24;
    int time_nodes = 32;
    std::string mode = "picard";  // picard | etd
};

struct DataBlock {
    std::string generator = "taylor_green";  // taylor_green | z_profile | rough_split | checkpoint
    int a1_bandlimit = 4;
    Real a2_amplitude = 0.0;
    Real amplitude = 1.0;
    std::uint64_t seed = 1;
    std::string checkpoint;
};

struct VerifyBlock {
    std::vector<std::string> suite;  // empty -> default
    Real t_lo = 1e-4, t_hi = 1e-2;
    int n_t = 13;
    Real tol_exponent = 0.05;
    Real r2_min = 0.98;
    Real tol_violation = 1e-6;
    int trials = 200;
    bool inject_failure = false;
};

struct LifespanBlock {
    Real mu = 0.25;
    Real c_star = 0.0;  // 0: calibrate at the first scale
    std::vector<Real> scales = {1, 2, 4, 8};
    Real horizon = 4.0;
};

struct OutputBlock {
    std::string dir = "out";
    std::vector<std::string> formats = {"csv", "jsonl"};
    bool checkpoints = true;
};

struct RunConfig {
    DomainConfig domain;
    SolverBlock solver;
    DataBlock data;
    VerifyBlock verify;
    LifespanBlock lifespan;
    OutputBlock output;
    std::uint64_t seed = 20240817;

    /// Strict parse: unknown keys anywhere are errors.
    static RunConfig from_json_text(const std::string& text);
    static RunConfig from_file(const std::string& path);
    std::string to_json_text(bool with_docs = false) const;
    void validate() const;
};

}  // namespace peq

#endif
