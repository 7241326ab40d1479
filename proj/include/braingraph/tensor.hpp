#pragma once

#include <deque>
#include <functional>
#include <vector>

#include "braingraph/matrix.hpp"
#include "braingraph/rng.hpp"

namespace braingraph {

class Tape;

struct TensorNode {
    Tape* tape = nullptr;
    Matrix value;
    Matrix grad;  // stays empty until backward touches this node
    bool requires_grad = false;
};

// Cheap handle into a Tape-owned node. Valid only while its tape lives.
class Tensor {
public:
    Tensor() = default;

    int rows() const { return node_->value.rows; }
    int cols() const { return node_->value.cols; }
    bool is_scalar() const { return node_->value.is_scalar(); }
    bool requires_grad() const { return node_->requires_grad; }
    const Matrix& value() const { return node_->value; }
    double scalar() const;

    // Gradient after backward(); zeros if this node never received one.
    Matrix grad() const;

    bool valid() const { return node_ != nullptr; }
    TensorNode* node() const { return node_; }

private:
    friend class Tape;
    explicit Tensor(TensorNode* n) : node_(n) {}
    TensorNode* node_ = nullptr;
};

// Define-by-run tape: rebuilt every forward pass, replayed once in reverse by
// backward(). Nodes live in a deque so handles stay stable.
class Tape {
public:
    Tape() = default;
    Tape(const Tape&) = delete;
    Tape& operator=(const Tape&) = delete;

    Tensor leaf(Matrix m);      // trainable input, requires_grad = true
    Tensor constant(Matrix m);  // data, requires_grad = false

    // Record one operation. The rule runs during backward once the output
    // gradient is final and must accumulate into the input nodes' grads.
    // When no input requires a gradient the rule is dropped and the result is
    // a plain constant.
    Tensor record(Matrix value, const std::vector<Tensor>& inputs,
                  std::function<void(TensorNode&)> rule);

    void backward(const Tensor& loss);

    size_t num_nodes() const { return nodes_.size(); }
    size_t num_ops() const { return ops_.size(); }

private:
    struct Op {
        TensorNode* out;
        std::function<void(TensorNode&)> rule;
    };
    std::deque<TensorNode> nodes_;
    std::vector<Op> ops_;
};

// Allocates and returns the grad buffer of a node, zero-filled on first use.
Matrix& ensure_grad(TensorNode& n);

// ---- forward ops (all record backward rules when an input requires grad) ----

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& t);
Tensor add(const Tensor& a, const Tensor& b);
Tensor subtract(const Tensor& a, const Tensor& b);
Tensor add_rowvec(const Tensor& m, const Tensor& v);  // v is 1 x cols
Tensor hadamard(const Tensor& a, const Tensor& b);
Tensor scalar_mul(const Tensor& t, double c);
Tensor scalar_mul(const Tensor& t, const Tensor& s);  // s is 1x1
Tensor row_softmax(const Tensor& t);
Tensor sigmoid(const Tensor& t);
Tensor relu(const Tensor& t);  // gradient at exactly 0 is 0
Tensor log_elem(const Tensor& t);
Tensor exp_elem(const Tensor& t);
Tensor sum(const Tensor& t);
Tensor mean(const Tensor& t);
Tensor trace(const Tensor& t);
Tensor frobenius_sq(const Tensor& t);
Tensor column_mean(const Tensor& t);
Tensor column_std(const Tensor& t);  // population std; zero gradient where std is 0
Tensor concat_rows(const std::vector<Tensor>& parts);
Tensor slice_rows(const Tensor& t, int row_begin, int row_end);
Tensor upper_tri_vec(const Tensor& t, bool include_diag);  // row-major upper triangle

// i.i.d. Gumbel(0,1) draws as a tape constant.
Tensor gumbel_sample(Tape& tape, RngStream& rng, int rows, int cols);

// ---- gradient checking ----

using TensorFn = std::function<Tensor(Tape&, const Tensor&)>;

struct GradCheckReport {
    double max_rel_error = 0.0;
    int checked = 0;
    int skipped = 0;  // components sitting on a kink (one-sided slopes disagree)
};

// Central differences against the tape gradient. Components where the
// one-sided slopes disagree (relu at 0 and friends) are skipped, not failed.
GradCheckReport grad_check(const TensorFn& f, const Matrix& x, double eps = 1e-6);

}  // namespace braingraph
