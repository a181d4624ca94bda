#pragma once

#include "moyalcalc/symbol.hpp"
#include "moyalcalc/theta.hpp"

namespace moyal {

/// x = U(f) in L_inf(R^d_theta), held as (theta, symbol).
struct QElement {
    ThetaMatrix theta;
    Symbol symbol;

    QElement(ThetaMatrix th, Symbol sym);
    int dim() const { return theta.dim(); }
};

QElement make_element(const ThetaMatrix& theta, const FamilySpec& fam,
                      const SymbolGrid& grid);

/// (f *_theta g)(s) = h^d sum_t e^{(i/2)(s,theta t)} f(s-t) g(t), f extended
/// by zero outside the grid. Realizes U(f)U(g) = U(f *_theta g) at the
/// lattice level.
Symbol twisted_convolve(const Symbol& f, const Symbol& g,
                        const ThetaMatrix& theta);

/// f^theta(s) = conj(f(-s)); exact lattice reindexing.
Symbol theta_involution(const Symbol& f);

/// tau_theta(x) = (2pi)^d f(0).
cplx trace(const QElement& x);

/// partial^alpha x = U(t^alpha f).
QElement derivative(const QElement& x, const MultiIndex& alpha);
QElement derivative(const QElement& x, int axis);  // alpha = e_axis

/// ||U(f)||_2 = (2pi)^{d/2} ||f||_2 (Plancherel).
double l2_norm(const QElement& x);

struct LpOptions {
    int rep_cutoff = 64;   // oscillator basis size for the d=2 route
    int rep_quad = 0;      // 0 = automatic
    int dual_n = 0;        // 0 = same n, theta = 0 route
};

/// Noncommutative L_p norm. p=2 dispatches to the Plancherel formula for
/// every theta; otherwise theta = 0 uses the pointwise profile of iota(x)
/// on the DFT-dual grid, and d=2 nondegenerate theta goes through the
/// oscillator matrix picture. Anything else is a capability error.
double lp_norm(const QElement& x, double p, const LpOptions& opts = {});

/// sum_{|alpha|=m} ||partial^alpha x||_p.
double sobolev_seminorm(const QElement& x, int m, double p,
                        const LpOptions& opts = {});

/// T_t x: symbol multiplied by e^{i(t,s)}. Isometry in every L_p.
QElement translate(const QElement& x, const std::vector<double>& t);

/// Psi_lambda: element over lambda^2 theta, symbol lambda^d f(lambda s) on
/// the grid with halfwidth R/lambda. Exact lattice map.
QElement dilate(const QElement& x, double lambda);

/// psi_eps sampled on `grid`; validation error unless the quadrature mass
/// h^d sum psi_eps is 1 within 1e-8 (checks unit integral and resolution
/// at once).
Symbol mollifier(const FamilySpec& psi, double eps, const SymbolGrid& grid);

/// psi * x = U(m f) with m(s) = int psi(t) e^{-i(t,s)} dt evaluated by
/// direct quadrature on psi's own grid. m(0) = int psi, so unit-integral
/// mollifiers leave the symbol asymptotically fixed.
QElement convolve_function(const Symbol& psi, const QElement& x);

/// U(psi_eps) x at the lattice level: twisted_convolve(psi_eps, f).
QElement left_mollify(const Symbol& psi_eps, const QElement& x);

struct MollifyQuadrature {
    double extent = 10.0;  // |u_j| <= extent
    double step = 0.25;
};

/// U(psi_eps) x through the substitution t = eps u: fine quadrature in u
/// with closed-form symbol evaluation. Requires a family-tagged x; this is
/// the route that stays resolved for eps far below the lattice spacing.
QElement left_mollify(const FamilySpec& psi, double eps, const QElement& x,
                      const MollifyQuadrature& quad = {});

/// Pointwise difference of same-grid elements (test/report helper).
QElement subtract(const QElement& a, const QElement& b);

}  // namespace moyal
