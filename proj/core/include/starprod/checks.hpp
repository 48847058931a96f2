#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starprod/matrix.hpp"
#include "starprod/rational.hpp"

namespace starprod {

enum class Backend { Rational, Float };

inline const char* backend_name(Backend b) {
    return b == Backend::Rational ? "rational" : "float";
}

struct CheckOptions {
    std::uint64_t trials = 200;
    std::uint64_t seed = 0;
    Backend backend = Backend::Rational;
    bool exhaustive = false;  // only meaningful for assoc2
};

/// Result of running one named property. Reproducible from
/// (property, seed, trials, backend); only elapsed_ms varies between runs.
struct CheckReport {
    std::string property;
    std::string backend;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> failures;  // serialized counterexample inputs
    double elapsed_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

/// The closed set of property names run_check accepts.
const std::vector<std::string>& property_names();

/// Runs `trials` seeded trials of the named property (or the exhaustive
/// variant for assoc2). Throws InvalidArgument for an unknown name.
CheckReport run_check(const std::string& property, const CheckOptions& opts);

/// First pair (A, B), in lexicographic order over entries drawn from the
/// ordered sampling set {-2, -1, 0, 1/2, 1, 2}, for which the literal
/// raw-entry reading of the 3x3 representation formula is not
/// multiplicative. The parameter reading (rho) always is.
std::pair<Matrix<Rational>, Matrix<Rational>> find_rho_raw_counterexample();

}  // namespace starprod
