#include "xxzsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace xxzsim {

namespace {

void require_dim(int dim) {
    if (dim != 2 && dim != 4) throw std::invalid_argument("matrix dimension must be 2 or 4");
}

void require_same_dim(const CMat& a, const CMat& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

}  // namespace

CMat::CMat(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, cplx(0.0, 0.0)) {
    require_dim(dim);
}

CMat CMat::identity(int dim) {
    CMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::adjoint() const {
    CMat out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx CMat::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double CMat::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double CMat::hermiticity_defect() const {
    double d = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

CMat CMat::operator+(const CMat& o) const {
    require_same_dim(*this, o);
    CMat out(dim_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
    return out;
}

CMat CMat::operator-(const CMat& o) const {
    require_same_dim(*this, o);
    CMat out(dim_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
    return out;
}

CMat& CMat::operator+=(const CMat& o) {
    require_same_dim(*this, o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

CMat CMat::operator*(const CMat& o) const {
    require_same_dim(*this, o);
    CMat out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const cplx aik = (*this)(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < dim_; ++j) out(i, j) += aik * o(k, j);
        }
    return out;
}

CMat CMat::operator*(cplx s) const {
    CMat out(dim_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * s;
    return out;
}

CMat kron(const CMat& a, const CMat& b) {
    if (a.dim() != 2 || b.dim() != 2)
        throw std::invalid_argument("kron: both factors must be 2x2");
    CMat out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

Eigensystem hermitian_eigensystem(const CMat& m) {
    const int n = m.dim();
    if (m.hermiticity_defect() > 1e-10)
        throw std::invalid_argument("hermitian_eigensystem: input is not Hermitian");

    // Work on the exactly symmetrized copy so round-off asymmetry cannot bias
    // the rotations.
    CMat a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    CMat v = CMat::identity(n);

    const double tol = 1e-13 * std::max(1.0, a.frobenius_norm());
    bool converged = false;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += 2.0 * std::norm(a(i, j));
        if (std::sqrt(off) <= tol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                const cplx ph = a(p, q) / r;  // e^{i phi} of the pivot
                const double theta =
                    0.5 * std::atan2(2.0 * r, a(p, p).real() - a(q, q).real());
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // A <- R^dag A R with R = [[c, -s e^{i phi}], [s e^{-i phi}, c]]
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + s * std::conj(ph) * akq;
                    a(k, q) = -s * ph * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + s * ph * aqk;
                    a(q, k) = -s * std::conj(ph) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + s * std::conj(ph) * vkq;
                    v(k, q) = -s * ph * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged) throw numeric_error("hermitian_eigensystem: no convergence in 100 sweeps");

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    Eigensystem es{std::vector<double>(static_cast<size_t>(n)), CMat(n)};
    for (int col = 0; col < n; ++col) {
        const int src = order[static_cast<size_t>(col)];
        es.values[static_cast<size_t>(col)] = a(src, src).real();
        // phase convention: first non-negligible component real positive
        cplx phase(1.0, 0.0);
        for (int k = 0; k < n; ++k) {
            const double mag = std::abs(v(k, src));
            if (mag > 1e-12) {
                phase = std::conj(v(k, src)) / mag;
                break;
            }
        }
        for (int k = 0; k < n; ++k) es.vectors(k, col) = v(k, src) * phase;
    }
    return es;
}

CMat partial_transpose_first(const CMat& m) {
    if (m.dim() != 4) throw std::invalid_argument("partial_transpose_first: need a 4x4 matrix");
    CMat out(4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    out(2 * a + b, 2 * c + d) = m(2 * c + b, 2 * a + d);
    return out;
}

CMat partial_trace(const CMat& m, Subsystem keep) {
    if (m.dim() != 4) throw std::invalid_argument("partial_trace: need a 4x4 matrix");
    CMat out(2);
    if (keep == Subsystem::First) {
        for (int a = 0; a < 2; ++a)
            for (int c = 0; c < 2; ++c)
                for (int b = 0; b < 2; ++b) out(a, c) += m(2 * a + b, 2 * c + b);
    } else {
        for (int b = 0; b < 2; ++b)
            for (int d = 0; d < 2; ++d)
                for (int a = 0; a < 2; ++a) out(b, d) += m(2 * a + b, 2 * a + d);
    }
    return out;
}

DensityMatrix::DensityMatrix(CMat m) : mat_(std::move(m)) {
    if (mat_.hermiticity_defect() > 1e-12)
        throw std::invalid_argument("density matrix: not Hermitian");
    if (std::abs(mat_.trace() - cplx(1.0, 0.0)) > 1e-12)
        throw std::invalid_argument("density matrix: trace differs from one");
    eig_ = hermitian_eigensystem(mat_).values;
    if (eig_.front() < -1e-10)
        throw std::invalid_argument("density matrix: negative eigenvalue beyond tolerance");
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lam : rho.eigenvalues()) {
        if (lam > 1e-14) s -= lam * std::log2(lam);
    }
    return s;
}

}  // namespace xxzsim
