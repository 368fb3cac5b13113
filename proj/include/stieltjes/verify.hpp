#pragma once

#include <string>
#include <vector>

#include "stieltjes/quad.hpp"

namespace stieltjes::verify {

struct Case {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<Case> cases;
    int skipped = 0;

    int passed() const;
    int failed() const;
};

const std::vector<std::string>& suite_names();  // special kernels fractional operators spectra

// name may also be "all". tol_scale multiplies every tolerance.
Report run_suite(const std::string& name, double tol_scale = 1.0,
                 const quad::Config& cfg = {});

}  // namespace stieltjes::verify
