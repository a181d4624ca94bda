#pragma once

#include <iosfwd>
#include <optional>

#include "moyalcalc/grid.hpp"

namespace moyal {

enum class FamilyKind { gaussian, hermite_gaussian, bump };

/// Closed-form symbol families. All are Schwartz-class (bump is C^inf with
/// compact support). Evaluation is exact at any point, which is what makes
/// dilation, mollifier rescaling and off-lattice quantization lookups exact.
struct FamilySpec {
    FamilyKind kind = FamilyKind::gaussian;
    double amplitude = 1.0;
    double sigma = 1.0;            // gaussian / hermite-gaussian width
    double radius = 3.0;           // bump support radius
    std::vector<double> center;    // defaults to 0
    std::vector<int> powers;       // hermite-gaussian monomial powers

    static FamilySpec gaussian(double sigma = 1.0, double amplitude = 1.0);
    static FamilySpec shifted_gaussian(std::vector<double> center,
                                       double sigma = 1.0,
                                       double amplitude = 1.0);
    static FamilySpec hermite_gaussian(std::vector<int> powers,
                                       double sigma = 1.0,
                                       double amplitude = 1.0);
    static FamilySpec bump(double radius = 3.0, double amplitude = 1.0);

    double eval(const std::vector<double>& t) const;
    /// psi_eps(t) = eps^-d psi(t/eps), expressed inside the family set.
    FamilySpec rescaled(double eps, int d) const;
    /// g(s) = lambda^d f(lambda s), the dilation image.
    FamilySpec dilated(double lambda, int d) const;

    std::string name() const;
};

/// A complex-valued function sampled on a SymbolGrid, row-major node order.
/// When family is set, samples equal the closed-form evaluation at nodes.
struct Symbol {
    SymbolGrid grid;
    std::vector<cplx> samples;
    std::optional<FamilySpec> family;

    Symbol(SymbolGrid g, std::vector<cplx> s,
           std::optional<FamilySpec> fam = std::nullopt);
    static Symbol from_family(const FamilySpec& fam, const SymbolGrid& g);
    static Symbol zero(const SymbolGrid& g);

    cplx at(const MultiIndex& idx) const;
    std::size_t flat_index(const MultiIndex& idx) const;

    /// h^d sum of samples (trapezoid quadrature of the integral).
    cplx quadrature_integral() const;
    /// (h^d sum |f|^2)^{1/2}.
    double quadrature_l2() const;
    double max_abs() const;

    void save(std::ostream& os) const;
    void save_file(const std::string& path) const;
    static Symbol load(std::istream& is);
    static Symbol load_file(const std::string& path);
};

}  // namespace moyal
