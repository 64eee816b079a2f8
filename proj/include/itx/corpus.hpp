#pragma once

// Named test functions with exact decay metadata, addressed by registry
// name with numeric parameters mu, nu and z.

#include "itx/quadrature.hpp"

#include <string>
#include <vector>

namespace itx::corpus {

struct Params {
    double mu = 0.5;
    double nu = 0.0;
    double z = 1.0;
};

struct Entry {
    std::string name;
    std::string formula;
    std::string params;  // which of mu / nu / z are used
};

/// All registered functions, in a fixed order.
const std::vector<Entry>& entries();

/// Builds the named function. Throws std::invalid_argument for an unknown
/// name or parameters outside the function's domain.
quad::Function1D make(const std::string& name, const Params& p = {});

bool exists(const std::string& name);

}  // namespace itx::corpus
