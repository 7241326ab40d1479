#pragma once

#include <vector>

#include "braingraph/matrix.hpp"

namespace braingraph {

struct SymEig {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column i pairs with values[i]
};

// Cyclic Jacobi for symmetric matrices. Sweeps until the off-diagonal
// Frobenius norm drops below `tol`. Input must be symmetric within 1e-10.
SymEig sym_eigen(const Matrix& m, double tol = 1e-12);

std::vector<double> sym_eigenvalues(const Matrix& m);

}  // namespace braingraph
