#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ergolab {

using cx = std::complex<double>;

// e(t) = exp(2*pi*i*t), reduced mod 1 before evaluation so that integer t
// gives exactly (1,0).
cx unit_phase(double t);

// Argument reduced to [0,1).
double frac_part(double t);

constexpr double kDefaultPruneEps = 1e-14;
constexpr int kDefaultQuadRes = 4096;

// Thrown when two observables do not live on the same space.
struct SpaceMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Frequency-coordinate or phase-exponent overflow (checked 64-bit arithmetic).
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Estimated work above the configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user input (bad schedule, malformed spec string, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Worker cap used by the OpenMP kernels.  0 means "library default".
// Results are bit-identical for every cap; this only limits parallelism.
void set_max_threads(int n);
int max_threads();

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

// Version string embedded in run reports.
const char* version();

}  // namespace ergolab
