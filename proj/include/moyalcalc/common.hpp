#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace moyal {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

inline constexpr const char* kVersion = "0.1.0";

/// Bad input: wrong shapes, violated preconditions, malformed files.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Request outside the supported capability matrix (e.g. general-p norms
/// for a theta with no computational route).
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Backend failures: SVD non-convergence and friends.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using MultiIndex = std::vector<int>;

inline int multi_order(const MultiIndex& a) {
    int s = 0;
    for (int v : a) s += v;
    return s;
}

/// All multi-indices alpha with |alpha| == m in d variables, lexicographic.
std::vector<MultiIndex> multi_indices_of_order(int d, int m);

}  // namespace moyal
