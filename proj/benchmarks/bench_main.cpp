// Microbenchmarks for the hot paths: vector augmentation, the text-stream
// transform, one training pass, and greedy decoding.

#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "augtk/augment.hpp"
#include "augtk/experiments.hpp"
#include "augtk/seqlabel.hpp"
#include "augtk/synth.hpp"

using namespace augtk;

namespace {

SparseVector make_vector(std::size_t nnz, std::size_t dim) {
  Rng rng(42);
  std::vector<SparseVector::Entry> e;
  for (std::size_t i = 0; i < nnz; ++i) {
    e.push_back({FeatureId{static_cast<std::uint32_t>(rng.below(dim))},
                 1.0 + static_cast<double>(rng.below(3))});
  }
  return SparseVector::accumulate(std::move(e));
}

void BM_AugmentVector(benchmark::State& state) {
  const std::size_t nnz = static_cast<std::size_t>(state.range(0));
  const std::size_t K = static_cast<std::size_t>(state.range(1));
  const std::size_t dim = 10000;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < K; ++k) names.push_back("d" + std::to_string(k));
  const DomainSchema schema(names, dim);
  const SparseVector x = make_vector(nnz, dim);
  const DomainId d = schema.domain_at(K - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(augment_vector(x, d, schema));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()));
}
BENCHMARK(BM_AugmentVector)->Args({10, 2})->Args({50, 2})->Args({50, 6});

void BM_AugmentStreamLine(benchmark::State& state) {
  std::string line = "NN";
  for (int i = 0; i < 12; ++i) {
    line += " w=tok" + std::to_string(i) + (i % 3 ? "" : " count:2.5");
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(augment_stream_line(line, "news"));
  }
}
BENCHMARK(BM_AugmentStreamLine);

ExperimentSpec bench_spec(unsigned iterations) {
  SynthConfig cfg;
  cfg.seed = 5;
  cfg.domains = 2;
  cfg.train_sentences = {200, 60};
  cfg.dev_sentences = 20;
  cfg.test_sentences = 20;
  LabelDictionary labels;
  SynthCorpus corpus = generate_synthetic(cfg, labels);
  return spec_from_synthetic(std::move(corpus), std::move(labels), 5,
                             iterations);
}

void BM_TrainingPass(benchmark::State& state) {
  const ExperimentSpec spec = bench_spec(1);
  for (auto _ : state) {
    ExperimentSpec run = spec;
    benchmark::DoNotOptimize(run_method(run, Method::augment));
  }
}
BENCHMARK(BM_TrainingPass)->Unit(benchmark::kMillisecond);

void BM_DecodeGreedy(benchmark::State& state) {
  ExperimentSpec spec = bench_spec(2);
  const MethodResult trained = run_method(spec, Method::augment);
  const Model& m = *trained.model;
  const DomainId target{static_cast<std::uint32_t>(spec.sources.size()),
                        spec.target.domain};
  for (auto _ : state) {
    for (const TaggedSentence& sent : spec.test) {
      benchmark::DoNotOptimize(
          decode_greedy(m, sent.tokens, spec.scheme, target));
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(spec.test.size()));
}
BENCHMARK(BM_DecodeGreedy)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
