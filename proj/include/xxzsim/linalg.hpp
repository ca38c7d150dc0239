#pragma once

#include <complex>
#include <vector>

#include "xxzsim/errors.hpp"

namespace xxzsim {

using cplx = std::complex<double>;

/// Dense complex matrix of dimension 2 or 4, row-major. Everything in this
/// project is two qubits at most, so plain loops beat any BLAS call.
class CMat {
public:
    explicit CMat(int dim);

    static CMat identity(int dim);
    static CMat zero(int dim) { return CMat(dim); }

    int dim() const { return dim_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

    CMat adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    /// max_ij |a_ij - conj(a_ji)|, i.e. distance from being Hermitian.
    double hermiticity_defect() const;

    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat operator*(const CMat& o) const;
    CMat& operator+=(const CMat& o);
    CMat operator*(cplx s) const;

private:
    int dim_;
    std::vector<cplx> a_;
};

inline CMat operator*(cplx s, const CMat& m) { return m * s; }

/// Tensor product of two single-qubit operators; index convention
/// (2i+k, 2j+l) = a(i,j) * b(k,l), so `a` acts on the first qubit.
CMat kron(const CMat& a, const CMat& b);

struct Eigensystem {
    std::vector<double> values;  // ascending
    CMat vectors;                // orthonormal columns, values[k] <-> column k
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix (dim 2 or 4).
/// Column phases are fixed so the first non-negligible component of each
/// eigenvector is real and positive. Throws std::invalid_argument if the
/// input deviates from Hermiticity by more than 1e-10, numeric_error if
/// 100 sweeps do not converge.
Eigensystem hermitian_eigensystem(const CMat& m);

/// Transpose over the first qubit: out(2a+b, 2c+d) = m(2c+b, 2a+d).
CMat partial_transpose_first(const CMat& m);

enum class Subsystem { First, Second };

/// Trace out the qubit that is not kept; preserves the total trace.
CMat partial_trace(const CMat& m, Subsystem keep);

/// Validating wrapper: Hermitian to 1e-12, unit trace to 1e-12, eigenvalues
/// above -1e-10. The spectrum is computed once on construction and cached.
class DensityMatrix {
public:
    explicit DensityMatrix(CMat m);

    const CMat& mat() const { return mat_; }
    int dim() const { return mat_.dim(); }
    const std::vector<double>& eigenvalues() const { return eig_; }

private:
    CMat mat_;
    std::vector<double> eig_;
};

/// -sum_k lambda_k log2 lambda_k. Eigenvalues below 1e-14 count as zero;
/// anything below -1e-10 was already rejected by DensityMatrix.
double von_neumann_entropy(const DensityMatrix& rho);

}  // namespace xxzsim
