#pragma once

#include <array>

#include "vgph/tensor3.hpp"

namespace vgph {

/// Eigendecomposition of a symmetric Tensor3. Eigenvalues sorted descending
/// (alpha >= beta >= gamma); eigenvectors[k] is the unit eigenvector paired
/// with eigenvalues[k], sign-fixed so the largest-magnitude component is
/// positive. The three vectors are mutually orthonormal.
struct SymmetricEigenSystem {
    std::array<double, 3> eigenvalues;
    std::array<std::array<double, 3>, 3> eigenvectors;

    Tensor3 reconstruct() const;
};

/// Solves the symmetric 3x3 eigenproblem. Closed-form characteristic cubic
/// with a Newton polish per root; falls back to cyclic Jacobi rotations when
/// the eigenvalue spacing drops below 1e-8 * ||m||_F. Rejects non-symmetric
/// (relative 1e-12) or non-finite input.
SymmetricEigenSystem eig_symmetric(const Tensor3& m);

}  // namespace vgph
