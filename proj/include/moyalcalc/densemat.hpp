#pragma once

#include "moyalcalc/common.hpp"

namespace moyal {

/// Dense complex matrix, column-major (LAPACK-native, so the big SVD and
/// GEMM calls run copy-free).
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    cplx& operator()(std::size_t i, std::size_t j) { return a_[j * rows_ + i]; }
    const cplx& operator()(std::size_t i, std::size_t j) const {
        return a_[j * rows_ + i];
    }
    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    ComplexMatrix adjoint() const;
    double frobenius() const;
    double max_abs() const;

    ComplexMatrix& operator+=(const ComplexMatrix& b);
    ComplexMatrix& operator-=(const ComplexMatrix& b);
    ComplexMatrix& operator*=(cplx s);

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix gemm(const ComplexMatrix& A, const ComplexMatrix& B);

/// Singular values, nonincreasing. Destructive overload avoids the copy of
/// a multi-hundred-MB operator; zgesdd failure surfaces as numerical_error
/// tagged with `what`.
std::vector<double> singular_values_inplace(ComplexMatrix& A,
                                            const std::string& what = "");
std::vector<double> singular_values_copy(const ComplexMatrix& A,
                                         const std::string& what = "");

/// Eigenvalues (ascending) of a hermitian matrix; test oracle path.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& A);

/// Largest singular value by power iteration on A*A, deterministic start.
double operator_norm_estimate(const ComplexMatrix& A, int iters = 120,
                              double rtol = 1e-11);

/// Gauss-Hermite nodes/weights for weight e^{-x^2} (Golub-Welsch via dstev).
void gauss_hermite(int q, std::vector<double>& nodes,
                   std::vector<double>& log_weights);

}  // namespace moyal
