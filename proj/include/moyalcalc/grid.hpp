#pragma once

#include "moyalcalc/common.hpp"

namespace moyal {

/// Origin-centered uniform lattice for symbols: n odd, nodes k*h for
/// k = -(n-1)/2 .. (n-1)/2 per axis, h = 2R/n. 0 is a node and t -> -t
/// is an exact lattice reflection.
struct SymbolGrid {
    int d;
    int n;
    double R;

    SymbolGrid(int d_, int n_, double R_);

    double h() const { return 2.0 * R / n; }
    double coord(int k) const { return (k - (n - 1) / 2) * h(); }
    std::size_t total() const;
    std::vector<double> axis_coords() const;
    /// Reflection k -> -coord index.
    int neg_index(int k) const { return n - 1 - k; }
    std::size_t origin_index() const;

    bool operator==(const SymbolGrid& o) const {
        return d == o.d && n == o.n && R == o.R;
    }
};

/// Half-offset lattice for operator truncations: m even, nodes
/// -R + (k+1/2)h, h = 2R/m. No node has |r| = 0, so sgn multipliers are
/// singularity-free.
struct OperatorGrid {
    int d;
    int m;
    double R;

    OperatorGrid(int d_, int m_, double R_);

    double h() const { return 2.0 * R / m; }
    double coord(int k) const { return -R + (k + 0.5) * h(); }
    std::size_t total() const;
    std::vector<double> axis_coords() const;

    bool operator==(const OperatorGrid& o) const {
        return d == o.d && m == o.m && R == o.R;
    }
};

/// Symbol grid whose spacing equals the operator grid's, covering the full
/// difference lattice {r - r'} (n = 2m - 1, odd by construction).
SymbolGrid commensurate_symbol_grid(const OperatorGrid& g);

}  // namespace moyal
