#include "augtk/learner.hpp"

#include <iostream>
#include <limits>

#include "augtk/method.hpp"

namespace augtk {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::src_only: return "SrcOnly";
    case Method::tgt_only: return "TgtOnly";
    case Method::all: return "All";
    case Method::weighted: return "Weighted";
    case Method::pred: return "Pred";
    case Method::lin_int: return "LinInt";
    case Method::prior: return "Prior";
    case Method::augment: return "Augment";
  }
  throw Error("unreachable method value");
}

Method method_from_name(std::string_view name) {
  for (Method m : all_methods()) {
    if (method_name(m) == name) return m;
  }
  throw Error("unknown method: " + std::string(name) +
              " (expected one of SrcOnly, TgtOnly, All, Weighted, Pred, "
              "LinInt, Prior, Augment)");
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods = {
      Method::src_only, Method::tgt_only, Method::all,   Method::weighted,
      Method::pred,     Method::lin_int,  Method::prior, Method::augment,
  };
  return methods;
}

std::size_t argmax_score(const std::vector<double>& scores) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) best = i;
  }
  return best;
}

std::vector<double> Model::scores(const SparseVector& x) const {
  std::vector<double> s(weights.size(), 0.0);
  for (std::size_t c = 0; c < weights.size(); ++c) {
    s[c] = dot(weights[c], x);
  }
  return s;
}

LabelId Model::predict(const SparseVector& x) const {
  return LabelId{static_cast<std::uint32_t>(argmax_score(scores(x)))};
}

std::vector<double> predict_scores(const Model& model, const SparseVector& x) {
  return model.scores(x);
}

AveragedPerceptron::AveragedPerceptron(std::size_t n_classes, std::size_t dim)
    : w_(n_classes, std::vector<double>(dim, 0.0)),
      u_(n_classes, std::vector<double>(dim, 0.0)) {
  if (n_classes < 2) throw Error("perceptron needs at least 2 classes");
}

std::vector<double> AveragedPerceptron::raw_scores(
    const SparseVector& x) const {
  std::vector<double> s(w_.size(), 0.0);
  for (std::size_t c = 0; c < w_.size(); ++c) {
    s[c] = dot(w_[c], x);
    if (offset_) s[c] += dot((*offset_)[c], x);
  }
  return s;
}

bool AveragedPerceptron::present(const SparseVector& x, LabelId gold) {
  ++t_;
  std::size_t pred = argmax_score(raw_scores(x));
  if (pred == gold.value) return false;
  const double step = static_cast<double>(t_);
  for (const auto& e : x.entries()) {
    w_[gold.value][e.id.value] += e.value;
    u_[gold.value][e.id.value] += step * e.value;
    w_[pred][e.id.value] -= e.value;
    u_[pred][e.id.value] -= step * e.value;
  }
  ++mistakes_;
  return true;
}

DenseWeights AveragedPerceptron::averaged() const {
  DenseWeights a = w_;
  if (t_ == 0) return a;
  // Sum of post-presentation snapshots w(1..T) telescopes to (T+1)*w - u,
  // where u stamps each update with its presentation index.
  const double T = static_cast<double>(t_);
  for (std::size_t c = 0; c < w_.size(); ++c) {
    for (std::size_t i = 0; i < w_[c].size(); ++i) {
      a[c][i] = ((T + 1.0) * w_[c][i] - u_[c][i]) / T;
    }
  }
  return a;
}

EpochRunResult run_epochs(
    AveragedPerceptron& p,
    const std::function<std::vector<const Instance*>(unsigned)>&
        epoch_instances,
    unsigned iterations, Rng& shuffle_rng,
    const std::function<double(const DenseWeights&)>& dev_error) {
  if (iterations < 1) throw Error("iterations must be >= 1");
  EpochRunResult result;
  double best_err = std::numeric_limits<double>::infinity();
  for (unsigned it = 1; it <= iterations; ++it) {
    std::vector<const Instance*> order = epoch_instances(it);
    shuffle_rng.shuffle(order);
    for (const Instance* inst : order) p.present(inst->x, inst->y);
    if (dev_error) {
      DenseWeights avg = p.averaged();
      double err = dev_error(avg);
      result.dev_errors.push_back(err);
      if (err < best_err) {
        best_err = err;
        result.averaged = std::move(avg);
        result.chosen_iteration = it;
      }
    }
  }
  if (!dev_error) {
    result.averaged = p.averaged();
    result.chosen_iteration = iterations;
  }
  return result;
}

namespace {

double classification_error(const std::vector<Instance>& data,
                            const DenseWeights& weights,
                            const DenseWeights* offset) {
  if (data.empty()) return 0.0;
  std::size_t wrong = 0;
  std::vector<double> s(weights.size());
  for (const Instance& inst : data) {
    for (std::size_t c = 0; c < weights.size(); ++c) {
      s[c] = dot(weights[c], inst.x);
      if (offset) s[c] += dot((*offset)[c], inst.x);
    }
    if (argmax_score(s) != inst.y.value) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(data.size());
}

Model train_classifier(const std::vector<Instance>& train,
                       const std::vector<Instance>& dev,
                       const TrainConfig& cfg, const Dictionary& features,
                       const LabelDictionary& labels,
                       const DenseWeights* offset) {
  if (train.empty()) throw Error("training set is empty");
  if (labels.size() < 2) {
    throw Error("training needs at least 2 registered labels");
  }
  AveragedPerceptron p(labels.size(), features.size());
  if (offset) p.set_score_offset(offset);

  bool select = cfg.dev_selection;
  if (select && dev.empty()) {
    std::cerr << "warning: dev selection requested but the dev set is empty; "
                 "keeping the last iteration\n";
    select = false;
  }
  std::function<double(const DenseWeights&)> dev_eval;
  if (select) {
    dev_eval = [&](const DenseWeights& avg) {
      return classification_error(dev, avg, offset);
    };
  }

  std::vector<const Instance*> base;
  base.reserve(train.size());
  for (const Instance& inst : train) base.push_back(&inst);

  Rng shuffle_rng(cfg.shuffle_seed);
  EpochRunResult run =
      run_epochs(p, [&](unsigned) { return base; }, cfg.max_iterations,
                 shuffle_rng, dev_eval);

  Model model;
  model.weights = std::move(run.averaged);
  model.features = features;
  model.labels = labels;
  model.chosen_iteration = run.chosen_iteration;
  model.dev_errors = std::move(run.dev_errors);
  return model;
}

}  // namespace

Model train_avg_perceptron(const std::vector<Instance>& train,
                           const std::vector<Instance>& dev,
                           const TrainConfig& cfg, const Dictionary& features,
                           const LabelDictionary& labels) {
  return train_classifier(train, dev, cfg, features, labels, nullptr);
}

Model train_prior_perceptron(const std::vector<Instance>& target_train,
                             const std::vector<Instance>& target_dev,
                             const Model& source_model, const TrainConfig& cfg,
                             const Dictionary& features,
                             const LabelDictionary& labels) {
  if (source_model.schema) {
    throw Error("the prior-weighted variant runs in the un-augmented space");
  }
  if (!(source_model.features == features)) {
    throw Error("source model and target data use different feature "
                "dictionaries");
  }
  if (!(source_model.labels == labels)) {
    throw Error("source model and target data use different label "
                "dictionaries");
  }
  Model model = train_classifier(target_train, target_dev, cfg, features,
                                 labels, &source_model.weights);
  // Materialize (correction + source) so the result scores like any model.
  for (std::size_t c = 0; c < model.weights.size(); ++c) {
    for (std::size_t i = 0; i < model.weights[c].size(); ++i) {
      model.weights[c][i] += source_model.weights[c][i];
    }
  }
  return model;
}

}  // namespace augtk
