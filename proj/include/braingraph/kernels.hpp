#pragma once

#include <cstddef>

namespace braingraph::kernels {

// The _omp variants parallelize over independent output rows only; every
// output element is produced by the same sequential inner loop as the serial
// reference, so serial and parallel results are bit-identical at any thread
// count. The undecorated names dispatch on problem size.

bool parallel_enabled();
void set_parallel(bool on);
int max_threads();

// c[m x n] = a[m x k] * b[k x n]
void matmul_nn_serial(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_nn_omp(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_nn(const double* a, const double* b, double* c, int m, int k, int n);

// c[m x n] = a[k x m]^T * b[k x n]
void matmul_tn_serial(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_tn_omp(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_tn(const double* a, const double* b, double* c, int m, int k, int n);

// c[m x n] = a[m x k] * b[n x k]^T
void matmul_nt_serial(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_nt_omp(const double* a, const double* b, double* c, int m, int k, int n);
void matmul_nt(const double* a, const double* b, double* c, int m, int k, int n);

// out[b x b], out_ij = ||z_i - z_j||^2 over rows of z[b x d]
void pairwise_sqdist_serial(const double* z, double* out, int b, int d);
void pairwise_sqdist_omp(const double* z, double* out, int b, int d);
void pairwise_sqdist(const double* z, double* out, int b, int d);

}  // namespace braingraph::kernels
