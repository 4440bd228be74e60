#include <doctest.h>

#include <cmath>

#include "augtk/learner.hpp"
#include "augtk/method.hpp"

using namespace augtk;

namespace {

SparseVector unit_x(std::uint32_t id) {
  return SparseVector::accumulate({{{id}, 1.0}});
}

Dictionary two_features() {
  Dictionary d;
  d.intern("f0");
  d.intern("f1");
  d.freeze();
  return d;
}

LabelDictionary ab_labels() {
  LabelDictionary l;
  l.intern("A");
  l.intern("B");
  l.freeze();
  return l;
}

}  // namespace

TEST_CASE("method names round-trip and keep display order") {
  CHECK(method_name(Method::augment) == "Augment");
  CHECK(method_from_name("SrcOnly") == Method::src_only);
  CHECK_THROWS_AS(method_from_name("srconly"), Error);
  const auto& all = all_methods();
  REQUIRE(all.size() == 8);
  CHECK(all.front() == Method::src_only);
  CHECK(all.back() == Method::augment);
}

TEST_CASE("argmax breaks ties toward the lowest class") {
  CHECK(argmax_score({1.0, 3.0, 3.0}) == 1);
  CHECK(argmax_score({2.0, 2.0}) == 0);
}

TEST_CASE("perceptrons need at least two classes") {
  CHECK_THROWS_AS(AveragedPerceptron(1, 4), Error);
}

TEST_CASE("presentations advance the clock even without updates") {
  AveragedPerceptron p(2, 2);
  // zero weights predict class 0; gold 0 means no mistake
  CHECK_FALSE(p.present(unit_x(0), LabelId{0}));
  CHECK(p.present(unit_x(0), LabelId{1}));
  CHECK(p.presentations() == 2);
  CHECK(p.mistakes() == 1);
}

TEST_CASE("lazy averaging equals the brute-force snapshot mean") {
  // Randomized histories with integer updates stay exactly representable,
  // so the comparison is ==, not approximate.
  Rng rng(314);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n_classes = 2 + rng.below(3);
    const std::size_t dim = 1 + rng.below(8);
    AveragedPerceptron p(n_classes, dim);
    DenseWeights sums(n_classes, std::vector<double>(dim, 0.0));
    const std::size_t steps = 1 + rng.below(50);
    for (std::size_t t = 0; t < steps; ++t) {
      std::vector<SparseVector::Entry> entries;
      for (std::size_t i = 0; i < dim; ++i) {
        if (rng.below(2)) {
          entries.push_back({{static_cast<std::uint32_t>(i)},
                             static_cast<double>(rng.below(5)) - 2.0});
        }
      }
      p.present(SparseVector::accumulate(std::move(entries)),
                LabelId{static_cast<std::uint32_t>(rng.below(n_classes))});
      const DenseWeights& snap = p.raw();
      for (std::size_t c = 0; c < n_classes; ++c) {
        for (std::size_t i = 0; i < dim; ++i) sums[c][i] += snap[c][i];
      }
    }
    DenseWeights avg = p.averaged();
    for (std::size_t c = 0; c < n_classes; ++c) {
      for (std::size_t i = 0; i < dim; ++i) {
        CHECK(avg[c][i] == sums[c][i] / static_cast<double>(steps));
      }
    }
  }
}

TEST_CASE("averaging before any presentation returns the zero weights") {
  AveragedPerceptron p(2, 2);
  DenseWeights avg = p.averaged();
  CHECK(avg[0][0] == 0.0);
  CHECK(avg[1][1] == 0.0);
}

TEST_CASE("score offsets shift predictions but never learn") {
  AveragedPerceptron p(2, 2);
  DenseWeights offset = {{5.0, 0.0}, {0.0, 0.0}};
  p.set_score_offset(&offset);
  auto s = p.raw_scores(unit_x(0));
  CHECK(s[0] == 5.0);
  CHECK(s[1] == 0.0);
  p.present(unit_x(0), LabelId{1});  // offset makes class 0 win -> mistake
  CHECK(p.raw()[1][0] == 1.0);
  CHECK(offset[0][0] == 5.0);
}

TEST_CASE("epoch runs keep the earliest dev minimum") {
  AveragedPerceptron p(2, 2);
  std::vector<Instance> data = {{unit_x(0), LabelId{1}, {}}};
  std::vector<const Instance*> base = {&data[0]};
  Rng shuffle(1);
  const double scripted[] = {0.5, 0.3, 0.3, 0.4};
  std::vector<DenseWeights> seen;
  unsigned call = 0;
  EpochRunResult run = run_epochs(
      p, [&](unsigned) { return base; }, 4, shuffle,
      [&](const DenseWeights& avg) {
        seen.push_back(avg);
        return scripted[call++];
      });
  CHECK(run.chosen_iteration == 2);
  CHECK(run.dev_errors == std::vector<double>{0.5, 0.3, 0.3, 0.4});
  CHECK(run.averaged == seen[1]);
}

TEST_CASE("without a dev evaluator the last iteration wins") {
  AveragedPerceptron p(2, 2);
  std::vector<Instance> data = {{unit_x(0), LabelId{1}, {}}};
  std::vector<const Instance*> base = {&data[0]};
  Rng shuffle(1);
  EpochRunResult run = run_epochs(p, [&](unsigned) { return base; }, 3,
                                  shuffle, nullptr);
  CHECK(run.chosen_iteration == 3);
  CHECK(run.dev_errors.empty());
  CHECK_THROWS_AS(
      run_epochs(p, [&](unsigned) { return base; }, 0, shuffle, nullptr),
      Error);
}

TEST_CASE("training validates its inputs") {
  Dictionary d = two_features();
  LabelDictionary l = ab_labels();
  TrainConfig cfg;
  CHECK_THROWS_AS(train_avg_perceptron({}, {}, cfg, d, l), Error);
  LabelDictionary one;
  one.intern("only");
  std::vector<Instance> data = {{unit_x(0), LabelId{0}, {}}};
  CHECK_THROWS_AS(train_avg_perceptron(data, {}, cfg, d, one), Error);
}

TEST_CASE("separable data trains to a perfect classifier") {
  Dictionary d = two_features();
  LabelDictionary l = ab_labels();
  std::vector<Instance> train = {{unit_x(0), LabelId{0}, {}},
                                 {unit_x(1), LabelId{1}, {}}};
  TrainConfig cfg;
  cfg.max_iterations = 5;
  Model m = train_avg_perceptron(train, train, cfg, d, l);
  CHECK(m.predict(unit_x(0)) == LabelId{0});
  CHECK(m.predict(unit_x(1)) == LabelId{1});
  CHECK(m.dev_errors.size() == 5);
  CHECK(m.dev_errors[m.chosen_iteration - 1] == 0.0);
  CHECK(m.dim() == 2);
  CHECK(m.n_classes() == 2);

  Model again = train_avg_perceptron(train, train, cfg, d, l);
  CHECK(again.weights == m.weights);  // same seed, same bytes
}

TEST_CASE("prior training scores through the source but learns a correction") {
  // Source strongly prefers A on f0; a single target example labeled B must
  // override it.  Every number below follows from the update rule by hand.
  Dictionary d = two_features();
  LabelDictionary l = ab_labels();
  Model source;
  source.weights = {{2.0, 0.0}, {0.0, 0.0}};
  source.features = d;
  source.labels = l;

  std::vector<Instance> target = {{unit_x(0), LabelId{1}, {}}};
  TrainConfig cfg;
  cfg.max_iterations = 20;
  cfg.dev_selection = false;
  Model m = train_prior_perceptron(target, {}, source, cfg, d, l);
  // Mistakes at steps 1 and 2 (step 2 ties at 1-1; ties pick class A), then
  // 18 clean steps: averaged correction -39/20 for A, +39/20 for B.
  CHECK(m.weights[0][0] == doctest::Approx(0.05).epsilon(1e-12));
  CHECK(m.weights[1][0] == doctest::Approx(1.95).epsilon(1e-12));
  CHECK(m.weights[0][1] == 0.0);
  CHECK(m.predict(unit_x(0)) == LabelId{1});
}

TEST_CASE("prior training rejects mismatched spaces") {
  Dictionary d = two_features();
  LabelDictionary l = ab_labels();
  std::vector<Instance> target = {{unit_x(0), LabelId{1}, {}}};
  TrainConfig cfg;

  Model augmented;
  augmented.weights = {{0.0, 0.0}, {0.0, 0.0}};
  augmented.features = d;
  augmented.labels = l;
  augmented.schema = DomainSchema({"s"}, 1);
  CHECK_THROWS_AS(train_prior_perceptron(target, {}, augmented, cfg, d, l),
                  Error);

  Model other;
  Dictionary d2;
  d2.intern("different");
  other.weights = {{0.0}, {0.0}};
  other.features = d2;
  other.labels = l;
  CHECK_THROWS_AS(train_prior_perceptron(target, {}, other, cfg, d, l),
                  Error);
}
