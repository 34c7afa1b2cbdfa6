#pragma once

#include <utility>
#include <vector>

#include "upbtiles/types.hpp"

namespace upb::linalg {

enum class Side { A, B };

// --- elementwise / structural helpers -------------------------------------

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix outer(const Ket& u, const Ket& v);  // |u><v|
Ket apply(const ComplexMatrix& m, const Ket& v);

cplx inner(const Ket& u, const Ket& v);  // <u|v>
double norm(const Ket& v);
Ket normalized(const Ket& v);
Ket& scale(Ket& v, cplx s);

cplx trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double max_abs(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-10);

/// First nonzero amplitude made real positive.
Ket fix_phase(const Ket& v);

// --- core operations -------------------------------------------------------

Ket tensor(const Ket& a, const Ket& b);

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dA, std::size_t dB,
                                Side side);

struct EigResult {
    std::vector<double> eigenvalues;  // ascending
    std::vector<Ket> eigenvectors;    // orthonormal, matching order, phase-fixed
};

/// Cyclic complex Jacobi; input must be Hermitian.
EigResult hermitian_eig(const ComplexMatrix& m);

std::size_t numeric_rank(const ComplexMatrix& m, double tol = 1e-9);

Subspace orthonormal_complement(const std::vector<Ket>& vectors, std::size_t ambient_dim);

/// Modified Gram-Schmidt; numerically dependent vectors are dropped.
std::vector<Ket> gram_schmidt(const std::vector<Ket>& vectors, double drop_tol = 1e-10);

}  // namespace upb::linalg
