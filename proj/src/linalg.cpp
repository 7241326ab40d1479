#include "braingraph/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "braingraph/common.hpp"

namespace braingraph {

namespace {

double offdiag_frobenius(const Matrix& a) {
    double acc = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (i != j) acc += a(i, j) * a(i, j);
    return std::sqrt(acc);
}

}  // namespace

SymEig sym_eigen(const Matrix& m, double tol) {
    if (!m.is_square())
        throw ContractError("sym_eigen: matrix is " + m.shape_str() + ", expected square");
    if (!is_symmetric(m, 1e-10))
        throw ContractError("sym_eigen: matrix not symmetric within 1e-10");

    const int n = m.rows;
    Matrix a = m;
    Matrix v = Matrix::identity(n);

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps && offdiag_frobenius(a) > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (apq == 0.0) continue;
                double app = a(p, p), aqq = a(q, q);
                double theta = (aqq - app) / (2.0 * apq);
                // Smaller-magnitude tangent root keeps the rotation stable.
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (int k = 0; k < n; ++k) {
                    double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

    SymEig out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (int col = 0; col < n; ++col) {
        out.values[col] = a(order[col], order[col]);
        for (int row = 0; row < n; ++row) out.vectors(row, col) = v(row, order[col]);
    }
    return out;
}

std::vector<double> sym_eigenvalues(const Matrix& m) { return sym_eigen(m).values; }

}  // namespace braingraph
