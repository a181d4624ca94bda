#pragma once

#include <optional>

#include "moyalcalc/common.hpp"

namespace moyal {

/// Canonical decomposition of an antisymmetric matrix: O^T theta O is a
/// d1 x d1 zero block followed by 2x2 blocks hbar_i [[0,-1],[1,0]].
struct ThetaCanonicalForm {
    std::vector<double> O;      // d x d, row-major, orthogonal
    int d1 = 0;                 // kernel dimension
    std::vector<double> hbars;  // positive, nonincreasing
};

/// The deformation matrix of R^d_theta.
class ThetaMatrix {
  public:
    ThetaMatrix(int d, std::vector<double> entries);

    static ThetaMatrix zero(int d);
    /// d=2, theta = hbar [[0,-1],[1,0]].
    static ThetaMatrix standard2(double hbar = 1.0);

    int dim() const { return d_; }
    double operator()(int j, int k) const { return entries_[j * d_ + k]; }
    const std::vector<double>& entries() const { return entries_; }

    bool is_zero() const;
    /// For d=2: theta(1,0), the single free entry.
    double pivot2() const;

    const ThetaCanonicalForm& canonical() const;

  private:
    int d_;
    std::vector<double> entries_;
    mutable std::optional<ThetaCanonicalForm> canonical_;
};

ThetaCanonicalForm theta_canonical_form(const ThetaMatrix& theta);

}  // namespace moyal
