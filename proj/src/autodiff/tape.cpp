#include "autodiff/tape.hpp"

#include <cmath>
#include <numbers>

#include "common/error.hpp"

namespace beat::ad {
namespace {

using Index = Eigen::Index;

constexpr double kGeluC = 0.044715;
const double kSqrt2OverPi = std::sqrt(2.0 / std::numbers::pi);

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::ShapeMismatch, what);
}

std::string dims(const Matrix& m) {
  return "[" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "]";
}

}  // namespace

double activate(double x, Activation kind) {
  switch (kind) {
    case Activation::ReLU: return x > 0.0 ? x : 0.0;
    case Activation::Tanh: return std::tanh(x);
    case Activation::GELU: {
      const double t = std::tanh(kSqrt2OverPi * (x + kGeluC * x * x * x));
      return 0.5 * x * (1.0 + t);
    }
  }
  return x;
}

double activate_derivative(double x, Activation kind) {
  switch (kind) {
    case Activation::ReLU: return x > 0.0 ? 1.0 : 0.0;
    case Activation::Tanh: {
      const double t = std::tanh(x);
      return 1.0 - t * t;
    }
    case Activation::GELU: {
      const double u = kSqrt2OverPi * (x + kGeluC * x * x * x);
      const double t = std::tanh(u);
      const double du = kSqrt2OverPi * (1.0 + 3.0 * kGeluC * x * x);
      return 0.5 * (1.0 + t) + 0.5 * x * (1.0 - t * t) * du;
    }
  }
  return 1.0;
}

Var Tape::push(Node node) {
  nodes_.push_back(std::move(node));
  return Var{nodes_.size() - 1};
}

const Tape::Node& Tape::node(Var v) const {
  if (v.id >= nodes_.size()) throw Error(Errc::ShapeMismatch, "variable does not belong to this tape");
  return nodes_[v.id];
}

const Matrix& Tape::value(Var v) const { return node(v).value; }
const Matrix& Tape::grad(Var v) const { return node(v).grad; }

Var Tape::constant(Matrix value) {
  Node n;
  n.value = std::move(value);
  return push(std::move(n));
}

Var Tape::parameter(Parameter& p) {
  Node n;
  n.value = p.value;
  n.parameter = &p;
  n.needs_grad = true;
  return push(std::move(n));
}

Var Tape::custom(const std::vector<Var>& inputs, Matrix value, BackwardFn backward) {
  Node n;
  n.value = std::move(value);
  for (Var v : inputs) {
    n.needs_grad = n.needs_grad || node(v).needs_grad;
    n.inputs.push_back(v.id);
  }
  n.backward = std::move(backward);
  return push(std::move(n));
}

Var Tape::dense(Var input, Parameter& weight, Parameter& bias) {
  const Matrix& x = value(input);
  require(x.cols() == weight.value.rows(),
          "dense: input " + dims(x) + " does not match weight " + dims(weight.value));
  require(bias.value.rows() == 1 && bias.value.cols() == weight.value.cols(),
          "dense: bias " + dims(bias.value) + " does not match weight " + dims(weight.value));
  // Compute before recording the parameter leaves: pushing nodes may move `x`.
  Matrix out = x * weight.value;
  out.rowwise() += bias.value.row(0);
  Var w = parameter(weight);
  Var b = parameter(bias);
  const Matrix* wv = &weight.value;
  return custom({input, w, b}, std::move(out),
                [this, input, wv](const Matrix& g, std::vector<Matrix*>& in) {
                  const Matrix& xv = nodes_[input.id].value;
                  if (in[0]) in[0]->noalias() += g * wv->transpose();
                  in[1]->noalias() += xv.transpose() * g;
                  *in[2] += g.colwise().sum();
                });
}

Var Tape::activation(Var input, Activation kind) {
  const Matrix& x = value(input);
  Matrix out = x.unaryExpr([kind](double v) { return activate(v, kind); });
  return custom({input}, std::move(out), [this, input, kind](const Matrix& g, std::vector<Matrix*>& in) {
    if (!in[0]) return;
    const Matrix& xv = nodes_[input.id].value;
    *in[0] += g.cwiseProduct(xv.unaryExpr([kind](double v) { return activate_derivative(v, kind); }));
  });
}

Var Tape::add(Var a, Var b) {
  const Matrix& x = value(a);
  const Matrix& y = value(b);
  require(x.rows() == y.rows() && x.cols() == y.cols(), "add: " + dims(x) + " vs " + dims(y));
  return custom({a, b}, x + y, [](const Matrix& g, std::vector<Matrix*>& in) {
    if (in[0]) *in[0] += g;
    if (in[1]) *in[1] += g;
  });
}

Var Tape::sum(Var input) {
  Matrix out(1, 1);
  out(0, 0) = value(input).sum();
  return custom({input}, std::move(out), [](const Matrix& g, std::vector<Matrix*>& in) {
    if (in[0]) in[0]->array() += g(0, 0);
  });
}

Var Tape::swap_inner(Var input, std::size_t groups) {
  const Matrix& x = value(input);
  require(groups > 0 && x.rows() % static_cast<Index>(groups) == 0, "swap_inner: rows not divisible by groups");
  const Index a = x.rows() / static_cast<Index>(groups);
  const Index b = x.cols();
  const auto gcount = static_cast<Index>(groups);
  Matrix out(gcount * b, a);
  for (Index s = 0; s < gcount; ++s) out.middleRows(s * b, b) = x.middleRows(s * a, a).transpose();
  return custom({input}, std::move(out), [gcount, a, b](const Matrix& g, std::vector<Matrix*>& in) {
    if (!in[0]) return;
    for (Index s = 0; s < gcount; ++s) in[0]->middleRows(s * a, a) += g.middleRows(s * b, b).transpose();
  });
}

Var Tape::reshape(Var input, std::size_t rows, std::size_t cols) {
  const Matrix& x = value(input);
  require(static_cast<std::size_t>(x.size()) == rows * cols, "reshape: size mismatch");
  const Index r0 = x.rows(), c0 = x.cols();
  Matrix out = Eigen::Map<const Matrix>(x.data(), static_cast<Index>(rows), static_cast<Index>(cols));
  return custom({input}, std::move(out), [r0, c0](const Matrix& g, std::vector<Matrix*>& in) {
    if (in[0]) *in[0] += Eigen::Map<const Matrix>(g.data(), r0, c0);
  });
}

Var Tape::patchify(Var input, std::size_t length, std::size_t stride, std::size_t count) {
  const Matrix& x = value(input);
  require(length > 0 && stride > 0 && count > 0 && x.cols() > 0, "patchify: empty configuration");
  const Index series = x.rows();
  const Index last = x.cols() - 1;
  const auto cnt = static_cast<Index>(count);
  const auto len = static_cast<Index>(length);
  const auto st = static_cast<Index>(stride);
  Matrix out(series * cnt, len);
  for (Index s = 0; s < series; ++s) {
    for (Index p = 0; p < cnt; ++p) {
      for (Index j = 0; j < len; ++j) out(s * cnt + p, j) = x(s, std::min(p * st + j, last));
    }
  }
  return custom({input}, std::move(out), [series, cnt, len, st, last](const Matrix& g, std::vector<Matrix*>& in) {
    if (!in[0]) return;
    Matrix& gx = *in[0];
    for (Index s = 0; s < series; ++s) {
      for (Index p = 0; p < cnt; ++p) {
        for (Index j = 0; j < len; ++j) gx(s, std::min(p * st + j, last)) += g(s * cnt + p, j);
      }
    }
  });
}

Var Tape::slice_cols(Var input, std::size_t start, std::size_t count) {
  const Matrix& x = value(input);
  require(start + count <= static_cast<std::size_t>(x.cols()), "slice_cols: range exceeds columns");
  const auto s = static_cast<Index>(start), c = static_cast<Index>(count);
  return custom({input}, Matrix(x.middleCols(s, c)), [s, c](const Matrix& g, std::vector<Matrix*>& in) {
    if (in[0]) in[0]->middleCols(s, c) += g;
  });
}

Var Tape::scale_rows(Var input, const Vector& scale, const Vector& shift) {
  const Matrix& x = value(input);
  require(scale.size() == x.rows() && shift.size() == x.rows(), "scale_rows: per-row statistics mismatch");
  Matrix out = (x.array().colwise() * scale.array()).colwise() + shift.array();
  return custom({input}, std::move(out), [scale](const Matrix& g, std::vector<Matrix*>& in) {
    if (in[0]) in[0]->array() += g.array().colwise() * scale.array();
  });
}

Var Tape::variate_affine(Var input, Parameter& gamma, Parameter& beta, bool inverse) {
  const Matrix& x = value(input);
  const Index n = gamma.value.cols();
  require(gamma.value.rows() == 1 && beta.value.rows() == 1 && beta.value.cols() == n && n > 0 &&
              x.rows() % n == 0,
          "variate_affine: parameter shape does not match variates");
  Matrix out(x.rows(), x.cols());
  for (Index r = 0; r < x.rows(); ++r) {
    const double ga = gamma.value(0, r % n), be = beta.value(0, r % n);
    out.row(r) = inverse ? Matrix((x.row(r).array() - be) / ga) : Matrix(x.row(r).array() * ga + be);
  }
  Var gv = parameter(gamma);
  Var bv = parameter(beta);
  const Matrix* gval = &gamma.value;
  const Matrix* bval = &beta.value;
  return custom({input, gv, bv}, std::move(out),
                [this, input, gval, bval, n, inverse](const Matrix& g, std::vector<Matrix*>& in) {
                  const Matrix& xv = nodes_[input.id].value;
                  for (Index r = 0; r < xv.rows(); ++r) {
                    const Index v = r % n;
                    const double ga = (*gval)(0, v), be = (*bval)(0, v);
                    if (inverse) {
                      if (in[0]) in[0]->row(r) += g.row(r) / ga;
                      (*in[1])(0, v) += -(g.row(r).array() * (xv.row(r).array() - be)).sum() / (ga * ga);
                      (*in[2])(0, v) += -g.row(r).sum() / ga;
                    } else {
                      if (in[0]) in[0]->row(r) += g.row(r) * ga;
                      (*in[1])(0, v) += (g.row(r).array() * xv.row(r).array()).sum();
                      (*in[2])(0, v) += g.row(r).sum();
                    }
                  }
                });
}

Var Tape::smooth_l1(Var prediction, const Matrix& target) {
  const Matrix& p = value(prediction);
  require(p.rows() == target.rows() && p.cols() == target.cols(),
          "smooth_l1: prediction " + dims(p) + " vs target " + dims(target));
  const double n = static_cast<double>(p.size());
  Matrix d = p - target;
  double total = 0.0;
  for (Index i = 0; i < d.size(); ++i) {
    const double a = std::abs(d.data()[i]);
    total += a < 1.0 ? 0.5 * a * a : a - 0.5;
  }
  Matrix out(1, 1);
  out(0, 0) = total / n;
  return custom({prediction}, std::move(out), [d = std::move(d), n](const Matrix& g, std::vector<Matrix*>& in) {
    if (!in[0]) return;
    const double s = g(0, 0) / n;
    in[0]->array() += d.array().unaryExpr([s](double v) {
      if (std::abs(v) < 1.0) return s * v;
      return v > 0.0 ? s : -s;
    });
  });
}

Var Tape::mse(Var prediction, const Matrix& target) {
  const Matrix& p = value(prediction);
  require(p.rows() == target.rows() && p.cols() == target.cols(),
          "mse: prediction " + dims(p) + " vs target " + dims(target));
  const double n = static_cast<double>(p.size());
  Matrix d = p - target;
  Matrix out(1, 1);
  out(0, 0) = d.squaredNorm() / n;
  return custom({prediction}, std::move(out), [d = std::move(d), n](const Matrix& g, std::vector<Matrix*>& in) {
    if (in[0]) *in[0] += (2.0 * g(0, 0) / n) * d;
  });
}

void Tape::backward(Var root, double seed) {
  if (nodes_.empty()) throw Error(Errc::EmptyTape, "backward called with no recorded forward pass");
  Node& r = nodes_.at(root.id);
  require(r.value.rows() == 1 && r.value.cols() == 1, "backward: root must be a scalar");
  for (auto& n : nodes_) n.grad.resize(0, 0);
  r.grad = Matrix::Constant(1, 1, seed);
  std::vector<Matrix*> in_grads;
  for (std::size_t id = root.id + 1; id-- > 0;) {
    Node& n = nodes_[id];
    if (n.grad.size() == 0 || !n.needs_grad) continue;
    if (n.parameter != nullptr) {
      n.parameter->grad += n.grad;
      continue;
    }
    if (!n.backward) continue;
    in_grads.clear();
    for (std::size_t in : n.inputs) {
      Node& src = nodes_[in];
      if (!src.needs_grad) {
        in_grads.push_back(nullptr);
        continue;
      }
      if (src.grad.size() == 0) src.grad = Matrix::Zero(src.value.rows(), src.value.cols());
      in_grads.push_back(&src.grad);
    }
    n.backward(n.grad, in_grads);
  }
}

}  // namespace beat::ad
