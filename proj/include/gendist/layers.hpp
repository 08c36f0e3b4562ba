#pragma once

#include <cstdint>
#include <vector>

#include "gendist/rng.hpp"
#include "gendist/tensor.hpp"

namespace gendist {

// Forward/backward passes for the classifier stacks. Backward passes
// accumulate (+=) into the gradient tensors they are given; callers zero
// gradients once per optimization step. All passes are exact analytic
// gradients of the forward computation.

// y[B,O] = x[B,I] @ W[I,O] + b[O]
void affine_fwd(const Tensor& x, const Tensor& W, const Tensor& b, Tensor& y);
void affine_bwd(const Tensor& x, const Tensor& W, const Tensor& dy, Tensor& dx, Tensor& dW,
                Tensor& db);

// Convolution over the token axis. x[B,T,E], W[F,width,E], b[F] -> y[B,T-width+1,F].
void conv1d_fwd(const Tensor& x, const Tensor& W, const Tensor& b, Tensor& y);
void conv1d_bwd(const Tensor& x, const Tensor& W, const Tensor& dy, Tensor& dx, Tensor& dW,
                Tensor& db);

// Max over the time axis, restricted per row to positions [0, valid[b]).
// argmax[B,F] records winning positions for the backward pass.
void maxpool_time_fwd(const Tensor& x, const std::vector<std::size_t>& valid, Tensor& y,
                      std::vector<std::size_t>& argmax);
void maxpool_time_bwd(const Tensor& dy, const std::vector<std::size_t>& argmax, Tensor& dx);

// Mean over the first valid[b] time positions of x[B,T,E].
void mean_time_fwd(const Tensor& x, const std::vector<std::size_t>& valid, Tensor& y);
void mean_time_bwd(const Tensor& dy, const std::vector<std::size_t>& valid, Tensor& dx);

// ReLU; the subgradient at 0 is 0.
void relu_fwd(const Tensor& x, Tensor& y);
void relu_bwd(const Tensor& x, const Tensor& dy, Tensor& dx);

// ids[B*T] flattened row-major; table[V,E] -> y[B,T,E]
void embedding_fwd(const std::vector<std::uint32_t>& ids, std::size_t batch, std::size_t time,
                   const Tensor& table, Tensor& y);
void embedding_bwd(const std::vector<std::uint32_t>& ids, std::size_t batch, std::size_t time,
                   const Tensor& dy, Tensor& dtable);

// Inverted dropout: at train time y = x * mask / keep_prob with Bernoulli
// masks; mask entries hold 0 or 1/keep_prob so backward is a multiply.
void dropout_fwd(const Tensor& x, double keep_prob, Rng& rng, Tensor& mask, Tensor& y);
void dropout_bwd(const Tensor& mask, const Tensor& dy, Tensor& dx);

}  // namespace gendist
