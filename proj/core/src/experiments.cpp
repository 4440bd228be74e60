#include "augtk/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "augtk/rng.hpp"

namespace augtk {

namespace {

DomainId source_domain_id(const ExperimentSpec& spec, std::size_t i) {
  return DomainId{static_cast<std::uint32_t>(i), spec.sources[i].domain};
}

DomainId target_domain_id(const ExperimentSpec& spec) {
  return DomainId{static_cast<std::uint32_t>(spec.sources.size()),
                  spec.target.domain};
}

std::size_t total_source_sentences(const ExperimentSpec& spec) {
  std::size_t n = 0;
  for (const DomainCorpus& s : spec.sources) n += s.sentences.size();
  return n;
}

SequenceTrainOptions base_options(const ExperimentSpec& spec) {
  SequenceTrainOptions opt;
  opt.iterations = spec.iterations;
  opt.shuffle_seed = mix_seed(spec.seed, 1);
  opt.sampling_seed = mix_seed(spec.seed, 2);
  opt.scheme = spec.scheme;
  opt.profile = spec.profile;
  return opt;
}

std::vector<SequenceCorpus> source_corpora(const ExperimentSpec& spec,
                                           bool subsample) {
  std::vector<SequenceCorpus> cs;
  cs.reserve(spec.sources.size());
  for (std::size_t i = 0; i < spec.sources.size(); ++i) {
    cs.push_back({&spec.sources[i].sentences, source_domain_id(spec, i),
                  subsample, nullptr});
  }
  return cs;
}

void require(bool cond, const char* message) {
  if (!cond) throw Error(message);
}

struct TestEval {
  double error = 0.0;
  std::vector<std::vector<LabelId>> predictions;
};

TestEval evaluate_test(const ExperimentSpec& spec, const Model& model,
                       const std::vector<std::vector<std::string>>* extra) {
  TestEval ev;
  std::optional<DomainId> dom;
  if (model.schema) dom = model.schema->domain(spec.target.domain);
  std::vector<std::vector<LabelId>> gold;
  gold.reserve(spec.test.size());
  ev.predictions.reserve(spec.test.size());
  for (std::size_t i = 0; i < spec.test.size(); ++i) {
    const TaggedSentence& s = spec.test[i];
    ev.predictions.push_back(decode_greedy(
        model, s.tokens, spec.scheme, dom, extra ? &(*extra)[i] : nullptr));
    gold.push_back(s.labels);
  }
  ev.error = corpus_error_rate(gold, ev.predictions);
  return ev;
}

MethodResult finish(const ExperimentSpec& spec, Method method, Model model,
                    std::optional<double> tuned,
                    const std::vector<std::vector<std::string>>* extra =
                        nullptr) {
  MethodResult r;
  r.method = method;
  TestEval ev = evaluate_test(spec, model, extra);
  r.test_error = ev.error;
  r.predictions = std::move(ev.predictions);
  r.tuned = tuned;
  r.dev_errors = model.dev_errors;
  r.model = std::move(model);
  return r;
}

Model train_src_union(
    const ExperimentSpec& spec,
    std::vector<const std::vector<TaggedSentence>*> extra_vocab = {}) {
  require(total_source_sentences(spec) > 0,
          "this method needs at least one source training sentence");
  SequenceTrainOptions opt = base_options(spec);
  opt.extra_vocab = std::move(extra_vocab);
  return train_sequence(source_corpora(spec, false), spec.dev,
                        target_domain_id(spec), spec.labels, opt);
}

Model train_tgt_only(const ExperimentSpec& spec) {
  require(!spec.target.sentences.empty(),
          "this method needs target training data");
  SequenceTrainOptions opt = base_options(spec);
  std::vector<SequenceCorpus> cs{
      {&spec.target.sentences, target_domain_id(spec), false, nullptr}};
  return train_sequence(cs, spec.dev, target_domain_id(spec), spec.labels,
                        opt);
}

struct WeightedScan {
  std::vector<double> grid;
  std::vector<double> dev_errors;
  std::vector<Model> models;
  std::size_t best = 0;
};

WeightedScan weighted_scan(const ExperimentSpec& spec,
                           std::vector<double> grid) {
  if (grid.empty()) grid = default_weight_grid(spec);
  require(!grid.empty(), "the source-weight grid is empty");
  require(total_source_sentences(spec) > 0,
          "weighting needs source training data");
  require(!spec.dev.empty(),
          "tuning the source weight needs development data");
  WeightedScan scan;
  scan.grid = std::move(grid);
  for (double w : scan.grid) {
    SequenceTrainOptions opt = base_options(spec);
    opt.subsample_weight = w;
    std::vector<SequenceCorpus> cs = source_corpora(spec, true);
    cs.push_back({&spec.target.sentences, target_domain_id(spec), false,
                  nullptr});
    Model m = train_sequence(cs, spec.dev, target_domain_id(spec),
                             spec.labels, opt);
    scan.dev_errors.push_back(m.dev_errors[m.chosen_iteration - 1]);
    scan.models.push_back(std::move(m));
  }
  for (std::size_t i = 1; i < scan.dev_errors.size(); ++i) {
    if (scan.dev_errors[i] < scan.dev_errors[scan.best]) scan.best = i;
  }
  return scan;
}

std::vector<double> softmax(std::vector<double> s) {
  double mx = *std::max_element(s.begin(), s.end());
  double sum = 0.0;
  for (double& v : s) {
    v = std::exp(v - mx);
    sum += v;
  }
  for (double& v : s) v /= sum;
  return s;
}

struct LinIntRun {
  LinIntTune tune;
  std::vector<std::vector<LabelId>> test_predictions;
  double test_error = 0.0;
};

LinIntRun linint_run(const ExperimentSpec& spec) {
  require(!spec.dev.empty(),
          "tuning the interpolation weight needs development data");
  Model src = train_src_union(spec);
  Model tgt = train_tgt_only(spec);

  LinIntRun run;
  std::vector<std::vector<LabelId>> dev_gold;
  for (const TaggedSentence& s : spec.dev) dev_gold.push_back(s.labels);

  std::size_t best = 0;
  for (int i = 0; i <= 20; ++i) {
    double lambda = static_cast<double>(i) / 20.0;
    std::vector<std::vector<LabelId>> preds;
    preds.reserve(spec.dev.size());
    for (const TaggedSentence& s : spec.dev) {
      preds.push_back(
          decode_interpolated(src, tgt, lambda, s.tokens, spec.scheme));
    }
    run.tune.grid.push_back(lambda);
    run.tune.dev_errors.push_back(corpus_error_rate(dev_gold, preds));
    if (run.tune.dev_errors.back() < run.tune.dev_errors[best]) {
      best = run.tune.dev_errors.size() - 1;
    }
  }
  run.tune.lambda = run.tune.grid[best];

  std::vector<std::vector<LabelId>> test_gold;
  for (const TaggedSentence& s : spec.test) {
    run.test_predictions.push_back(decode_interpolated(
        src, tgt, run.tune.lambda, s.tokens, spec.scheme));
    test_gold.push_back(s.labels);
  }
  run.test_error = corpus_error_rate(test_gold, run.test_predictions);
  return run;
}

}  // namespace

std::vector<double> default_weight_grid(const ExperimentSpec& spec) {
  std::vector<double> grid = {1.0, 0.5, 0.2, 0.1, 0.05, 0.02};
  const std::size_t m = spec.target.sentences.size();
  const std::size_t n = total_source_sentences(spec);
  if (m > 0 && n > 0) {
    double ratio = static_cast<double>(m) / static_cast<double>(n);
    if (std::find(grid.begin(), grid.end(), ratio) == grid.end()) {
      grid.push_back(ratio);
    }
  }
  return grid;
}

std::vector<LabelId> decode_interpolated(const Model& a, const Model& b,
                                         double lambda,
                                         const std::vector<std::string>& tokens,
                                         const LabelScheme& scheme) {
  if (a.schema || b.schema) {
    throw Error("score interpolation runs over un-augmented models");
  }
  if (!(a.labels == b.labels)) {
    throw Error("interpolated models must share one label set");
  }
  std::vector<LabelId> out;
  if (tokens.empty()) return out;
  out.reserve(tokens.size());
  const std::size_t n = a.labels.size();
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    std::string_view prev =
        t > 0 ? std::string_view(a.labels.name_of(out[t - 1]))
              : std::string_view(kBosMarker);
    std::string_view prevprev =
        t > 1 ? std::string_view(a.labels.name_of(out[t - 2]))
              : std::string_view(kBosMarker);
    auto names = step_feature_names(tokens, t, prev, prevprev, a.profile);
    std::vector<double> sa = softmax(a.scores(lookup_features(names, a.features)));
    std::vector<double> sb = softmax(b.scores(lookup_features(names, b.features)));
    int best = -1;
    double best_score = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!scheme.valid(prev, a.labels.name_of(LabelId{(std::uint32_t)c}))) {
        continue;
      }
      double score = lambda * sa[c] + (1.0 - lambda) * sb[c];
      if (best < 0 || score > best_score) {
        best = static_cast<int>(c);
        best_score = score;
      }
    }
    if (best < 0) {
      throw Error("no valid label at position " + std::to_string(t) +
                  " under the active label scheme");
    }
    out.push_back(LabelId{static_cast<std::uint32_t>(best)});
  }
  return out;
}

MethodResult run_method(const ExperimentSpec& spec, Method method) {
  require(!spec.test.empty(), "the experiment needs a non-empty test corpus");
  switch (method) {
    case Method::src_only:
      return finish(spec, method, train_src_union(spec), std::nullopt);
    case Method::tgt_only:
      return finish(spec, method, train_tgt_only(spec), std::nullopt);
    case Method::all: {
      require(total_source_sentences(spec) +
                      spec.target.sentences.size() >
                  0,
              "pooled training needs data");
      SequenceTrainOptions opt = base_options(spec);
      std::vector<SequenceCorpus> cs = source_corpora(spec, false);
      cs.push_back({&spec.target.sentences, target_domain_id(spec), false,
                    nullptr});
      Model m = train_sequence(cs, spec.dev, target_domain_id(spec),
                               spec.labels, opt);
      return finish(spec, method, std::move(m), std::nullopt);
    }
    case Method::weighted: {
      WeightedScan scan = weighted_scan(spec, spec.weight_grid);
      return finish(spec, method, std::move(scan.models[scan.best]),
                    scan.grid[scan.best]);
    }
    case Method::pred: {
      require(!spec.target.sentences.empty(),
              "this method needs target training data");
      Model src = train_src_union(spec);
      auto srcpred = [&](const std::vector<TaggedSentence>& corpus) {
        std::vector<std::vector<std::string>> extra;
        extra.reserve(corpus.size());
        for (const TaggedSentence& s : corpus) {
          auto pred = decode_greedy(src, s.tokens, spec.scheme);
          std::vector<std::string> names;
          names.reserve(pred.size());
          for (LabelId y : pred) {
            names.push_back("srcpred=" + spec.labels.name_of(y));
          }
          extra.push_back(std::move(names));
        }
        return extra;
      };
      auto train_extra = srcpred(spec.target.sentences);
      auto dev_extra = srcpred(spec.dev);
      auto test_extra = srcpred(spec.test);
      SequenceTrainOptions opt = base_options(spec);
      std::vector<SequenceCorpus> cs{{&spec.target.sentences,
                                      target_domain_id(spec), false,
                                      &train_extra}};
      Model m = train_sequence(cs, spec.dev, target_domain_id(spec),
                               spec.labels, opt, &dev_extra);
      return finish(spec, method, std::move(m), std::nullopt, &test_extra);
    }
    case Method::lin_int: {
      LinIntRun run = linint_run(spec);
      MethodResult r;
      r.method = method;
      r.test_error = run.test_error;
      r.predictions = std::move(run.test_predictions);
      r.tuned = run.tune.lambda;
      return r;
    }
    case Method::prior: {
      require(!spec.target.sentences.empty(),
              "this method needs target training data");
      Model src = train_src_union(spec, {&spec.target.sentences});
      SequenceTrainOptions opt = base_options(spec);
      opt.fixed_dictionary = &src.features;
      opt.prior_weights = &src.weights;
      std::vector<SequenceCorpus> cs{
          {&spec.target.sentences, target_domain_id(spec), false, nullptr}};
      Model m = train_sequence(cs, spec.dev, target_domain_id(spec),
                               spec.labels, opt);
      return finish(spec, method, std::move(m), std::nullopt);
    }
    case Method::augment: {
      SequenceTrainOptions opt = base_options(spec);
      opt.augment = true;
      std::vector<SequenceCorpus> cs = source_corpora(spec, false);
      cs.push_back({&spec.target.sentences, target_domain_id(spec), false,
                    nullptr});
      Model m = train_sequence(cs, spec.dev, target_domain_id(spec),
                               spec.labels, opt);
      return finish(spec, method, std::move(m), std::nullopt);
    }
  }
  throw Error("unreachable method value");
}

WeightTune tune_source_weight(const ExperimentSpec& spec,
                              std::vector<double> grid) {
  WeightedScan scan = weighted_scan(spec, std::move(grid));
  WeightTune tune;
  tune.grid = std::move(scan.grid);
  tune.dev_errors = std::move(scan.dev_errors);
  tune.weight = tune.grid[scan.best];
  return tune;
}

LinIntTune tune_linint(const ExperimentSpec& spec) {
  return linint_run(spec).tune;
}

ComparisonRun run_comparison(const ExperimentSpec& spec,
                             const std::vector<Method>& methods) {
  ComparisonRun run;
  std::vector<MethodOutcome> outcomes;
  for (Method m : methods) {
    MethodResult r = run_method(spec, m);
    outcomes.push_back({m, r.test_error, r.predictions, r.tuned});
    run.results.push_back(std::move(r));
  }
  std::vector<std::vector<LabelId>> gold;
  gold.reserve(spec.test.size());
  for (const TaggedSentence& s : spec.test) gold.push_back(s.labels);
  run.report = build_report(spec.task, spec.target.domain, outcomes, gold);
  return run;
}

ExperimentSpec spec_from_synthetic(SynthCorpus corpus, LabelDictionary labels,
                                   std::uint64_t seed, unsigned iterations) {
  if (corpus.train.size() < 2) {
    throw Error("a synthetic experiment needs at least 2 domains");
  }
  ExperimentSpec spec;
  spec.task = "synth";
  for (std::size_t k = 0; k + 1 < corpus.train.size(); ++k) {
    spec.sources.push_back(
        {corpus.domain_names[k], std::move(corpus.train[k])});
  }
  spec.target = {corpus.domain_names.back(), std::move(corpus.train.back())};
  spec.dev = std::move(corpus.dev);
  spec.test = std::move(corpus.test);
  spec.labels = std::move(labels);
  spec.scheme = LabelScheme::flat_scheme();
  spec.seed = seed;
  spec.iterations = iterations;
  return spec;
}

}  // namespace augtk
