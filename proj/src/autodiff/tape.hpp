#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "common/types.hpp"

namespace beat::ad {

/// Trainable array with its accumulated gradient. `name` is unique within a
/// model; branch-owned parameters are prefixed "branch<v>/".
struct Parameter {
  std::string name;
  Matrix value;
  Matrix grad;

  Parameter() = default;
  Parameter(std::string n, Matrix v) : name(std::move(n)), value(std::move(v)), grad(Matrix::Zero(value.rows(), value.cols())) {}

  void zero_grad() { grad.setZero(value.rows(), value.cols()); }
};

enum class Activation { GELU, ReLU, Tanh };

/// Handle to a value recorded on a Tape.
struct Var {
  std::size_t id = static_cast<std::size_t>(-1);
};

/// Define-by-run reverse-mode recorder. Every operation appends a node holding
/// its value and a closure that pushes the node's gradient to its inputs;
/// backward() walks the nodes in reverse creation order.
class Tape {
 public:
  using BackwardFn = std::function<void(const Matrix& out_grad, std::vector<Matrix*>& in_grads)>;

  Tape() = default;
  // Recorded closures refer back to the tape's own nodes.
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var constant(Matrix value);
  Var parameter(Parameter& p);

  /// input [rows, in] * weight [in, out] + bias [1, out]
  Var dense(Var input, Parameter& weight, Parameter& bias);
  Var activation(Var input, Activation kind);
  Var add(Var a, Var b);
  Var sum(Var input);

  /// Treats `input` as `groups` stacked [a, b] blocks and transposes each one:
  /// [groups * a, b] -> [groups * b, a].
  Var swap_inner(Var input, std::size_t groups);
  /// Row-major reinterpretation; rows * cols must equal the input size.
  Var reshape(Var input, std::size_t rows, std::size_t cols);
  /// Splits each row into `count` windows of `length` samples taken every
  /// `stride` samples, repeating the last sample past the end:
  /// [series, L] -> [series * count, length].
  Var patchify(Var input, std::size_t length, std::size_t stride, std::size_t count);
  /// Columns [start, start + count) of every row.
  Var slice_cols(Var input, std::size_t start, std::size_t count);
  /// out[r, :] = input[r, :] * scale[r] + shift[r] with constant scale/shift.
  Var scale_rows(Var input, const Vector& scale, const Vector& shift);
  /// Per-variate affine with learnable gamma/beta [1, variates]; row r uses
  /// variate r % variates. With `inverse`, computes (x - beta) / gamma.
  Var variate_affine(Var input, Parameter& gamma, Parameter& beta, bool inverse);

  /// Mean over elements of 0.5 d^2 (|d| < 1) or |d| - 0.5, d = prediction - target.
  Var smooth_l1(Var prediction, const Matrix& target);
  /// Mean squared error against a constant target.
  Var mse(Var prediction, const Matrix& target);

  /// Generic node for operations implemented outside the engine. The backward
  /// closure receives nullptr for inputs that do not lead to a Parameter.
  Var custom(const std::vector<Var>& inputs, Matrix value, BackwardFn backward);

  const Matrix& value(Var v) const;
  /// Gradient accumulated on a node by the last backward(); zero-sized if the
  /// node received none.
  const Matrix& grad(Var v) const;

  /// Seeds d(root)/d(root) = seed (root must be 1x1) and accumulates into the
  /// gradients of every reachable Parameter. Throws EmptyTape if nothing was
  /// recorded.
  void backward(Var root, double seed = 1.0);

  std::size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }

 private:
  struct Node {
    Matrix value;
    Matrix grad;
    std::vector<std::size_t> inputs;
    BackwardFn backward;
    Parameter* parameter = nullptr;
    bool needs_grad = false;  // a Parameter is reachable through the inputs
  };

  Var push(Node node);
  const Node& node(Var v) const;

  std::vector<Node> nodes_;
};

/// Standalone activation kernels (used by the tape and by tests).
double activate(double x, Activation kind);
double activate_derivative(double x, Activation kind);

}  // namespace beat::ad
