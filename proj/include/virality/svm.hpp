#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "virality/text.hpp"

namespace virality {

enum class CMode { auto_recip_mean_sq_norm, fixed };

enum class Solver {
  stochastic,  // seeded primal SGD, 1/(lambda t) steps
  full_batch,  // subgradient descent with backtracking; monotone objective
};

struct HyperParams {
  CMode c_mode = CMode::auto_recip_mean_sq_norm;
  double c_value = 1.0;  // used when c_mode == fixed
  int epochs = 100;
  double tolerance = 1e-3;  // relative objective change between epochs
  std::uint64_t seed = 1;
  Solver solver = Solver::stochastic;

  void validate() const;
};

struct LabeledVector {
  FeatureVector x;
  int y = 1;  // +1 or -1
};

struct SvmModel {
  std::vector<double> weights;
  double bias = 0.0;

  HyperParams hyperparams;
  double c = 0.0;          // resolved regularization constant
  double objective = 0.0;  // objective of (weights, bias) on the training set
  int epochs = 0;          // epochs actually run
  // Objective before training, then after each epoch.
  std::vector<double> objective_history;

  std::size_t dimension() const noexcept { return weights.size(); }
};

struct Prediction {
  int label = 1;  // sign of margin; a zero margin maps to +1
  double margin = 0.0;
};

// C for the given data: fixed value, or 1 / mean(|x|^2) in auto mode
// (1 when every example is the zero vector).
double resolve_c(std::span<const LabeledVector> data, const HyperParams& hp);

// 1/2 |w|^2 + C * sum_i max(0, 1 - y_i (w.x_i + b)).
double primal_objective(std::span<const double> weights, double bias,
                        std::span<const LabeledVector> data, double c);

struct Subgradient {
  std::vector<double> weights;
  double bias = 0.0;
};

// Subgradient of primal_objective; an example with margin exactly 1
// contributes nothing.
Subgradient objective_subgradient(std::span<const double> weights, double bias,
                                  std::span<const LabeledVector> data,
                                  double c);

// Throws ParameterError on empty data, TrainingError when only one label is
// present, DimensionError for an index >= dimension. The result depends only
// on the multiset of examples, not on their order.
SvmModel train(std::span<const LabeledVector> data, std::size_t dimension,
               const HyperParams& hp);

// Throws DimensionError when x has an index outside the model.
Prediction predict(const SvmModel& model, const FeatureVector& x);

// Training objective of the model on `data`, with C resolved from `hp`.
double objective(const SvmModel& model, std::span<const LabeledVector> data,
                 const HyperParams& hp);

// Text format:
//   virality-svm 1
//   dim <n>
//   bias <b>
//   c <C>
//   <index>:<weight>     (0-based, nonzero weights only)
// Doubles use shortest round-trip form, so save/load is exact.
void save_model(const SvmModel& model, std::ostream& out);
SvmModel load_model(std::istream& in);

}  // namespace virality
