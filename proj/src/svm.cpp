#include "virality/svm.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "virality/error.hpp"
#include "virality/random.hpp"

namespace virality {

void HyperParams::validate() const {
  if (c_mode == CMode::fixed && !(c_value > 0.0 && std::isfinite(c_value)))
    throw ParameterError("c", "must be a positive finite number");
  if (epochs <= 0) throw ParameterError("epochs", "must be positive");
  if (!(tolerance > 0.0)) throw ParameterError("tolerance", "must be positive");
}

namespace {

double dot(std::span<const double> w, const FeatureVector& x) {
  double sum = 0.0;
  for (const auto& f : x.entries) sum += w[f.index] * f.value;
  return sum;
}

void check_dimension(const FeatureVector& x, std::size_t dimension) {
  if (!x.entries.empty() && x.entries.back().index >= dimension)
    throw DimensionError("feature index " +
                         std::to_string(x.entries.back().index) +
                         " outside model dimension " +
                         std::to_string(dimension));
}

double relative_change(double previous, double current) {
  return std::abs(previous - current) /
         std::max(std::abs(previous), std::numeric_limits<double>::min());
}

bool canonical_less(const LabeledVector& a, const LabeledVector& b) {
  const auto& ea = a.x.entries;
  const auto& eb = b.x.entries;
  const bool ordered = std::lexicographical_compare(
      ea.begin(), ea.end(), eb.begin(), eb.end(),
      [](const Feature& l, const Feature& r) {
        return l.index != r.index ? l.index < r.index : l.value < r.value;
      });
  if (ordered) return true;
  if (ea != eb) return false;
  return a.y < b.y;
}

// Weights stored as scale * v so the shrink step of every update is O(1).
class ScaledWeights {
 public:
  explicit ScaledWeights(std::size_t dimension) : v_(dimension, 0.0) {}

  double dot(const FeatureVector& x) const { return scale_ * virality::dot(v_, x); }

  void shrink(double factor) {
    scale_ *= factor;
    if (scale_ < 1e-9) renormalize();
  }

  void add(const FeatureVector& x, double step) {
    for (const auto& f : x.entries) v_[f.index] += step * f.value / scale_;
  }

  std::vector<double> materialize() const {
    std::vector<double> w(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) w[i] = scale_ * v_[i];
    return w;
  }

 private:
  void renormalize() {
    for (double& value : v_) value *= scale_;
    scale_ = 1.0;
  }

  std::vector<double> v_;
  double scale_ = 1.0;
};

void train_stochastic(std::span<const LabeledVector> data, double c,
                      const HyperParams& hp, SvmModel& model) {
  const std::size_t n = data.size();
  const double lambda = 1.0 / (c * static_cast<double>(n));
  double mean_sq = 0.0;
  for (const auto& ex : data) mean_sq += ex.x.squared_norm();
  mean_sq = std::max(mean_sq / static_cast<double>(n), 1e-12);
  // First step moves a typical example's margin by about one unit.
  const double eta0 = 1.0 / mean_sq;
  double t = std::max(1.0 / (lambda * eta0), 1.0);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  Rng rng(hp.seed);
  ScaledWeights w(model.weights.size());
  double bias = 0.0;
  double best = model.objective;
  double previous = model.objective;
  for (int epoch = 1; epoch <= hp.epochs; ++epoch) {
    rng.shuffle(order);
    for (const std::size_t i : order) {
      const auto& ex = data[i];
      const double eta = 1.0 / (lambda * t);
      const double margin = ex.y * (w.dot(ex.x) + bias);
      w.shrink(1.0 - eta * lambda);
      if (margin < 1.0) {
        w.add(ex.x, eta * ex.y);
        bias += eta * ex.y;
      }
      t += 1.0;
    }
    const std::vector<double> current = w.materialize();
    const double value = primal_objective(current, bias, data, c);
    model.objective_history.push_back(value);
    model.epochs = epoch;
    if (value < best) {
      best = value;
      model.weights = current;
      model.bias = bias;
      model.objective = value;
    }
    if (relative_change(previous, value) < hp.tolerance) break;
    previous = value;
  }
}

void train_full_batch(std::span<const LabeledVector> data, double c,
                      const HyperParams& hp, SvmModel& model) {
  double max_sq = 0.0;
  for (const auto& ex : data) max_sq = std::max(max_sq, ex.x.squared_norm());
  double step = 1.0 / (1.0 + c * static_cast<double>(data.size()) * max_sq);

  std::vector<double> w = model.weights;
  double bias = model.bias;
  double current = model.objective;
  std::vector<double> trial(w.size());
  for (int epoch = 1; epoch <= hp.epochs; ++epoch) {
    const Subgradient g = objective_subgradient(w, bias, data, c);
    const double g_sq = std::inner_product(g.weights.begin(), g.weights.end(),
                                           g.weights.begin(), g.bias * g.bias);
    model.epochs = epoch;
    if (g_sq == 0.0) {
      model.objective_history.push_back(current);
      break;
    }
    step *= 2.0;
    bool accepted = false;
    double value = current;
    double trial_bias = bias;
    for (int halving = 0; halving < 60; ++halving, step *= 0.5) {
      for (std::size_t j = 0; j < w.size(); ++j)
        trial[j] = w[j] - step * g.weights[j];
      trial_bias = bias - step * g.bias;
      value = primal_objective(trial, trial_bias, data, c);
      if (value <= current - 1e-4 * step * g_sq) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      model.objective_history.push_back(current);
      break;
    }
    const double previous = current;
    w.swap(trial);
    bias = trial_bias;
    current = value;
    model.objective_history.push_back(current);
    if (relative_change(previous, current) < hp.tolerance) break;
  }
  model.weights = std::move(w);
  model.bias = bias;
  model.objective = current;
}

}  // namespace

double resolve_c(std::span<const LabeledVector> data, const HyperParams& hp) {
  if (hp.c_mode == CMode::fixed) return hp.c_value;
  if (data.empty()) return 1.0;
  double sum = 0.0;
  for (const auto& ex : data) sum += ex.x.squared_norm();
  const double mean = sum / static_cast<double>(data.size());
  return mean > 0.0 ? 1.0 / mean : 1.0;
}

double primal_objective(std::span<const double> weights, double bias,
                        std::span<const LabeledVector> data, double c) {
  double reg = 0.0;
  for (const double w : weights) reg += w * w;
  double loss = 0.0;
  for (const auto& ex : data)
    loss += std::max(0.0, 1.0 - ex.y * (dot(weights, ex.x) + bias));
  return 0.5 * reg + c * loss;
}

Subgradient objective_subgradient(std::span<const double> weights, double bias,
                                  std::span<const LabeledVector> data,
                                  double c) {
  Subgradient g;
  g.weights.assign(weights.begin(), weights.end());
  for (const auto& ex : data) {
    if (ex.y * (dot(weights, ex.x) + bias) < 1.0) {
      for (const auto& f : ex.x.entries) g.weights[f.index] -= c * ex.y * f.value;
      g.bias -= c * ex.y;
    }
  }
  return g;
}

SvmModel train(std::span<const LabeledVector> data, std::size_t dimension,
               const HyperParams& hp) {
  hp.validate();
  if (data.empty()) throw ParameterError("data", "training set is empty");
  bool has_pos = false;
  bool has_neg = false;
  for (const auto& ex : data) {
    if (ex.y != 1 && ex.y != -1)
      throw ParameterError("label", "labels must be +1 or -1");
    (ex.y > 0 ? has_pos : has_neg) = true;
    check_dimension(ex.x, dimension);
  }
  if (!has_pos || !has_neg)
    throw TrainingError("training data contains a single class");

  // Every floating-point sum runs in this order, so the model depends only on
  // the multiset of examples.
  std::vector<LabeledVector> canonical(data.begin(), data.end());
  std::sort(canonical.begin(), canonical.end(), canonical_less);

  SvmModel model;
  model.hyperparams = hp;
  model.c = resolve_c(canonical, hp);
  model.weights.assign(dimension, 0.0);
  model.objective = primal_objective(model.weights, 0.0, canonical, model.c);
  model.objective_history.push_back(model.objective);
  if (hp.solver == Solver::stochastic)
    train_stochastic(canonical, model.c, hp, model);
  else
    train_full_batch(canonical, model.c, hp, model);
  return model;
}

Prediction predict(const SvmModel& model, const FeatureVector& x) {
  check_dimension(x, model.dimension());
  Prediction p;
  p.margin = dot(model.weights, x) + model.bias;
  p.label = p.margin >= 0.0 ? 1 : -1;
  return p;
}

double objective(const SvmModel& model, std::span<const LabeledVector> data,
                 const HyperParams& hp) {
  for (const auto& ex : data) check_dimension(ex.x, model.dimension());
  return primal_objective(model.weights, model.bias, data, resolve_c(data, hp));
}

namespace {

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

double parse_double(std::string_view text, const char* field) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("model", 0, field, "cannot parse '" + std::string(text) + "'");
  return value;
}

}  // namespace

void save_model(const SvmModel& model, std::ostream& out) {
  out << "virality-svm 1\n";
  out << "dim " << model.dimension() << '\n';
  out << "bias " << format_double(model.bias) << '\n';
  out << "c " << format_double(model.c) << '\n';
  for (std::size_t i = 0; i < model.weights.size(); ++i) {
    if (model.weights[i] != 0.0)
      out << i << ':' << format_double(model.weights[i]) << '\n';
  }
}

SvmModel load_model(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next = [&](const char* what) {
    ++line_no;
    if (!std::getline(in, line))
      throw ParseError("model", line_no, what, "unexpected end of file");
  };
  auto value_of = [&](std::string_view key) {
    std::string_view view(line);
    if (view.substr(0, key.size() + 1) != std::string(key) + " ")
      throw ParseError("model", line_no, std::string(key), "expected '" +
                                                               std::string(key) + "'");
    return view.substr(key.size() + 1);
  };

  next("header");
  if (line != "virality-svm 1")
    throw ParseError("model", line_no, "header", "unsupported model format");
  SvmModel model;
  next("dim");
  const std::string_view dim_text = value_of("dim");
  std::size_t dim = 0;
  const auto [ptr, ec] =
      std::from_chars(dim_text.data(), dim_text.data() + dim_text.size(), dim);
  if (ec != std::errc() || ptr != dim_text.data() + dim_text.size())
    throw ParseError("model", line_no, "dim", "cannot parse dimension");
  model.weights.assign(dim, 0.0);
  next("bias");
  model.bias = parse_double(value_of("bias"), "bias");
  next("c");
  model.c = parse_double(value_of("c"), "c");

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("model", line_no, "weight", "expected index:weight");
    std::size_t index = 0;
    const auto [iptr, iec] = std::from_chars(line.data(), line.data() + colon, index);
    if (iec != std::errc() || iptr != line.data() + colon || index >= dim)
      throw ParseError("model", line_no, "weight", "bad feature index");
    model.weights[index] =
        parse_double(std::string_view(line).substr(colon + 1), "weight");
  }
  return model;
}

}  // namespace virality
