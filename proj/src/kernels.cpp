#include "braingraph/kernels.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace braingraph::kernels {

namespace {
std::atomic<bool> g_parallel{true};

// Below this many multiply-adds the fork/join overhead dominates.
constexpr long kParallelCutoff = 1 << 15;
}  // namespace

bool parallel_enabled() {
#ifdef _OPENMP
    return g_parallel.load();
#else
    return false;
#endif
}

void set_parallel(bool on) { g_parallel.store(on); }

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void matmul_nn_serial(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) acc += a[(size_t)i * k + p] * b[(size_t)p * n + j];
            c[(size_t)i * n + j] = acc;
        }
    }
}

void matmul_nn_omp(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) acc += a[(size_t)i * k + p] * b[(size_t)p * n + j];
            c[(size_t)i * n + j] = acc;
        }
    }
}

void matmul_nn(const double* a, const double* b, double* c, int m, int k, int n) {
    if (parallel_enabled() && (long)m * k * n >= kParallelCutoff)
        matmul_nn_omp(a, b, c, m, k, n);
    else
        matmul_nn_serial(a, b, c, m, k, n);
}

void matmul_tn_serial(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) acc += a[(size_t)p * m + i] * b[(size_t)p * n + j];
            c[(size_t)i * n + j] = acc;
        }
    }
}

void matmul_tn_omp(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) acc += a[(size_t)p * m + i] * b[(size_t)p * n + j];
            c[(size_t)i * n + j] = acc;
        }
    }
}

void matmul_tn(const double* a, const double* b, double* c, int m, int k, int n) {
    if (parallel_enabled() && (long)m * k * n >= kParallelCutoff)
        matmul_tn_omp(a, b, c, m, k, n);
    else
        matmul_tn_serial(a, b, c, m, k, n);
}

void matmul_nt_serial(const double* a, const double* b, double* c, int m, int k, int n) {
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) acc += a[(size_t)i * k + p] * b[(size_t)j * k + p];
            c[(size_t)i * n + j] = acc;
        }
    }
}

void matmul_nt_omp(const double* a, const double* b, double* c, int m, int k, int n) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double acc = 0.0;
            for (int p = 0; p < k; ++p) acc += a[(size_t)i * k + p] * b[(size_t)j * k + p];
            c[(size_t)i * n + j] = acc;
        }
    }
}

void matmul_nt(const double* a, const double* b, double* c, int m, int k, int n) {
    if (parallel_enabled() && (long)m * k * n >= kParallelCutoff)
        matmul_nt_omp(a, b, c, m, k, n);
    else
        matmul_nt_serial(a, b, c, m, k, n);
}

void pairwise_sqdist_serial(const double* z, double* out, int b, int d) {
    for (int i = 0; i < b; ++i) {
        out[(size_t)i * b + i] = 0.0;
        for (int j = 0; j < b; ++j) {
            if (j == i) continue;
            double acc = 0.0;
            for (int p = 0; p < d; ++p) {
                double diff = z[(size_t)i * d + p] - z[(size_t)j * d + p];
                acc += diff * diff;
            }
            out[(size_t)i * b + j] = acc;
        }
    }
}

void pairwise_sqdist_omp(const double* z, double* out, int b, int d) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < b; ++i) {
        out[(size_t)i * b + i] = 0.0;
        for (int j = 0; j < b; ++j) {
            if (j == i) continue;
            double acc = 0.0;
            for (int p = 0; p < d; ++p) {
                double diff = z[(size_t)i * d + p] - z[(size_t)j * d + p];
                acc += diff * diff;
            }
            out[(size_t)i * b + j] = acc;
        }
    }
}

void pairwise_sqdist(const double* z, double* out, int b, int d) {
    if (parallel_enabled() && (long)b * b * d >= kParallelCutoff)
        pairwise_sqdist_omp(z, out, b, d);
    else
        pairwise_sqdist_serial(z, out, b, d);
}

}  // namespace braingraph::kernels
