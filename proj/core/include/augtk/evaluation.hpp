#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augtk/learner.hpp"
#include "augtk/method.hpp"
#include "augtk/types.hpp"

namespace augtk {

/// Fraction of positions where pred differs from gold.  Lengths must match.
double token_error_rate(const std::vector<LabelId>& gold,
                        const std::vector<LabelId>& pred);

/// Error over a whole corpus of per-sentence label sequences.
double corpus_error_rate(const std::vector<std::vector<LabelId>>& gold,
                         const std::vector<std::vector<LabelId>>& pred);

struct McNemarResult {
  double statistic = 0.0;
  bool significant_95 = false;
  std::size_t b = 0;  // tokens A got right and B got wrong
  std::size_t c = 0;  // tokens B got right and A got wrong
};

/// Continuity-corrected McNemar test over paired per-token outcomes:
/// statistic (|b-c|-1)^2/(b+c), significant at 95% iff statistic > 3.841.
/// No discordant pairs -> statistic 0, not significant.
McNemarResult mcnemar(const std::vector<LabelId>& pred_a,
                      const std::vector<LabelId>& pred_b,
                      const std::vector<LabelId>& gold);

McNemarResult mcnemar(const std::vector<std::vector<LabelId>>& pred_a,
                      const std::vector<std::vector<LabelId>>& pred_b,
                      const std::vector<std::vector<LabelId>>& gold);

/// One evaluated method, as the report builder consumes it.
struct MethodOutcome {
  Method method;
  double error = 0.0;
  std::vector<std::vector<LabelId>> predictions;  // per test sentence
  std::optional<double> tuned;                    // weight or lambda
};

struct ComparisonRow {
  Method method;
  bool present = false;
  double error = 0.0;
  std::optional<double> tuned;
  bool bold = false;
};

/// One comparison-table row set for a (task, target) pair: per-method error
/// rates, the set of methods statistically tied with the best, whether the
/// target-only baseline beat the source-only one, and whether the
/// augmentation method is among the winners.
struct ComparisonReport {
  std::string task;
  std::string target;
  std::vector<ComparisonRow> rows;  // all methods, display order
  std::vector<Method> bold_set;
  bool t_lt_s = false;
  bool winner_is_augment = false;
};

/// Builds the report: best = lowest error (ties by method display order);
/// bold = best plus every method whose McNemar test against best is not
/// significant at 95%.  Methods without an outcome are listed as absent.
ComparisonReport build_report(std::string task, std::string target,
                              const std::vector<MethodOutcome>& outcomes,
                              const std::vector<std::vector<LabelId>>& gold);

/// Aligned plain-text table; bolded entries render in brackets.
std::string render_text(const ComparisonReport& report);

/// Tab-separated rows: task, target, method, error%, tuned, bold, t_lt_s,
/// winner_is_augment.  Absent methods show "-" in the value columns.
std::string render_tsv(const ComparisonReport& report);

/// Error rate as a percentage with two decimals, e.g. 0.0198 -> "1.98".
std::string format_percent(double error);

/// The effective-regularizer view of one class of an augmented 2-of-K-domain
/// model: with w_s = general + source block and w_t = general + target
/// block, the minimizer of J(w_g) = |w_g|^2 + |w_s-w_g|^2 + |w_t-w_g|^2 is
/// w_g* = (w_s+w_t)/3; prior_like is |w_s-w_t|^2.
struct RegularizerDecomposition {
  std::vector<double> w_g_star;
  double j_min = 0.0;
  double prior_like = 0.0;
};

RegularizerDecomposition regularizer_decomposition(
    const Model& model, LabelId cls, const DomainId& source_domain,
    const DomainId& target_domain);

/// Same decomposition from explicit per-domain weight vectors (the pure
/// arithmetic the model-level call reduces to).
RegularizerDecomposition regularizer_decomposition(
    const std::vector<double>& w_s, const std::vector<double>& w_t);

}  // namespace augtk
