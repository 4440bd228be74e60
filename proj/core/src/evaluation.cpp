#include "augtk/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "augtk/corpus.hpp"

namespace augtk {

double token_error_rate(const std::vector<LabelId>& gold,
                        const std::vector<LabelId>& pred) {
  if (gold.size() != pred.size()) {
    throw Error("gold and predicted sequences differ in length (" +
                std::to_string(gold.size()) + " vs " +
                std::to_string(pred.size()) + ")");
  }
  if (gold.empty()) throw Error("cannot score empty sequences");
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] != pred[i]) ++wrong;
  }
  return static_cast<double>(wrong) / static_cast<double>(gold.size());
}

namespace {

std::vector<LabelId> flatten(const std::vector<std::vector<LabelId>>& seqs) {
  std::vector<LabelId> out;
  for (const auto& s : seqs) out.insert(out.end(), s.begin(), s.end());
  return out;
}

}  // namespace

double corpus_error_rate(const std::vector<std::vector<LabelId>>& gold,
                         const std::vector<std::vector<LabelId>>& pred) {
  if (gold.size() != pred.size()) {
    throw Error("gold and predicted corpora differ in sentence count");
  }
  return token_error_rate(flatten(gold), flatten(pred));
}

McNemarResult mcnemar(const std::vector<LabelId>& pred_a,
                      const std::vector<LabelId>& pred_b,
                      const std::vector<LabelId>& gold) {
  if (pred_a.size() != gold.size() || pred_b.size() != gold.size()) {
    throw Error("paired predictions must match the gold sequence length");
  }
  McNemarResult r;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    bool a_ok = pred_a[i] == gold[i];
    bool b_ok = pred_b[i] == gold[i];
    if (a_ok && !b_ok) ++r.b;
    if (!a_ok && b_ok) ++r.c;
  }
  if (r.b + r.c == 0) {
    r.statistic = 0.0;
    r.significant_95 = false;
    return r;
  }
  double diff = std::abs(static_cast<double>(r.b) - static_cast<double>(r.c));
  r.statistic = (diff - 1.0) * (diff - 1.0) /
                static_cast<double>(r.b + r.c);
  r.significant_95 = r.statistic > 3.841;
  return r;
}

McNemarResult mcnemar(const std::vector<std::vector<LabelId>>& pred_a,
                      const std::vector<std::vector<LabelId>>& pred_b,
                      const std::vector<std::vector<LabelId>>& gold) {
  return mcnemar(flatten(pred_a), flatten(pred_b), flatten(gold));
}

ComparisonReport build_report(std::string task, std::string target,
                              const std::vector<MethodOutcome>& outcomes,
                              const std::vector<std::vector<LabelId>>& gold) {
  ComparisonReport report;
  report.task = std::move(task);
  report.target = std::move(target);

  auto find_outcome = [&](Method m) -> const MethodOutcome* {
    for (const MethodOutcome& o : outcomes) {
      if (o.method == m) return &o;
    }
    return nullptr;
  };

  // Best present method: lowest error, ties broken by display order.
  const MethodOutcome* best = nullptr;
  for (Method m : all_methods()) {
    const MethodOutcome* o = find_outcome(m);
    if (o && (!best || o->error < best->error)) best = o;
  }

  for (Method m : all_methods()) {
    ComparisonRow row;
    row.method = m;
    if (const MethodOutcome* o = find_outcome(m)) {
      row.present = true;
      row.error = o->error;
      row.tuned = o->tuned;
      if (best) {
        row.bold = o == best ||
                   !mcnemar(o->predictions, best->predictions, gold)
                        .significant_95;
      }
      if (row.bold) report.bold_set.push_back(m);
    }
    report.rows.push_back(std::move(row));
  }

  const MethodOutcome* src = find_outcome(Method::src_only);
  const MethodOutcome* tgt = find_outcome(Method::tgt_only);
  report.t_lt_s = src && tgt && tgt->error < src->error;
  report.winner_is_augment =
      std::find(report.bold_set.begin(), report.bold_set.end(),
                Method::augment) != report.bold_set.end();
  return report;
}

std::string format_percent(double error) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", error * 100.0);
  return buf;
}

namespace {

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string render_text(const ComparisonReport& report) {
  // One cell per method: "12.34", "[12.34]" when bold, "-" when absent.
  std::vector<std::string> cells;
  std::vector<std::string> heads;
  for (const ComparisonRow& row : report.rows) {
    heads.emplace_back(method_name(row.method));
    if (!row.present) {
      cells.emplace_back("-");
    } else if (row.bold) {
      cells.push_back("[" + format_percent(row.error) + "]");
    } else {
      cells.push_back(format_percent(row.error));
    }
  }
  std::size_t task_w = std::max(report.task.size(), std::size_t{4});
  std::size_t tgt_w = std::max(report.target.size(), std::size_t{6});

  std::string out;
  out += pad("task", task_w) + "  " + pad("target", tgt_w);
  for (std::size_t i = 0; i < heads.size(); ++i) {
    std::size_t w = std::max(heads[i].size(), cells[i].size());
    out += "  " + pad(heads[i], w);
  }
  out += "  T<S  Win\n";
  out += pad(report.task, task_w) + "  " + pad(report.target, tgt_w);
  for (std::size_t i = 0; i < heads.size(); ++i) {
    std::size_t w = std::max(heads[i].size(), cells[i].size());
    out += "  " + pad(cells[i], w);
  }
  out += "  ";
  out += report.t_lt_s ? "+  " : "-  ";
  out += "  ";
  // The winner cell names the lowest-error method.
  const ComparisonRow* best = nullptr;
  for (const ComparisonRow& row : report.rows) {
    if (row.present && (!best || row.error < best->error)) best = &row;
  }
  out += best ? std::string(method_name(best->method)) : std::string("-");
  out += "\n";
  return out;
}

std::string render_tsv(const ComparisonReport& report) {
  std::string out =
      "task\ttarget\tmethod\terror\ttuned\tbold\tt_lt_s\twinner_is_augment\n";
  for (const ComparisonRow& row : report.rows) {
    out += report.task + "\t" + report.target + "\t";
    out += std::string(method_name(row.method)) + "\t";
    if (row.present) {
      out += format_percent(row.error);
      out += "\t";
      out += row.tuned ? format_value(*row.tuned) : std::string("-");
      out += "\t";
      out += row.bold ? "1" : "0";
    } else {
      out += "-\t-\t-";
    }
    out += "\t";
    out += report.t_lt_s ? "1" : "0";
    out += "\t";
    out += report.winner_is_augment ? "1" : "0";
    out += "\n";
  }
  return out;
}

RegularizerDecomposition regularizer_decomposition(
    const std::vector<double>& w_s, const std::vector<double>& w_t) {
  if (w_s.size() != w_t.size()) {
    throw Error("per-domain weight vectors differ in length");
  }
  RegularizerDecomposition d;
  d.w_g_star.resize(w_s.size());
  for (std::size_t i = 0; i < w_s.size(); ++i) {
    d.w_g_star[i] = (w_s[i] + w_t[i]) / 3.0;
  }
  double j = 0.0, prior = 0.0;
  for (std::size_t i = 0; i < w_s.size(); ++i) {
    double g = d.w_g_star[i];
    j += g * g;
    j += (w_s[i] - g) * (w_s[i] - g);
    j += (w_t[i] - g) * (w_t[i] - g);
    double sd = w_s[i] - w_t[i];
    prior += sd * sd;
  }
  d.j_min = j;
  d.prior_like = prior;
  return d;
}

RegularizerDecomposition regularizer_decomposition(
    const Model& model, LabelId cls, const DomainId& source_domain,
    const DomainId& target_domain) {
  if (!model.schema) {
    throw Error("the regularizer view needs an augmented model");
  }
  const DomainSchema& schema = *model.schema;
  if (cls.value >= model.n_classes()) {
    throw Error("class id " + std::to_string(cls.value) + " out of range");
  }
  if (source_domain.index >= schema.domain_count() ||
      target_domain.index >= schema.domain_count()) {
    throw Error("domain not registered in the model's schema");
  }
  const std::size_t F = schema.base_dim();
  const std::vector<double>& row = model.weights[cls.value];
  std::vector<double> w_s(F), w_t(F);
  const std::size_t so = (source_domain.index + 1) * F;
  const std::size_t to = (target_domain.index + 1) * F;
  for (std::size_t i = 0; i < F; ++i) {
    w_s[i] = row[i] + row[so + i];
    w_t[i] = row[i] + row[to + i];
  }
  return regularizer_decomposition(w_s, w_t);
}

}  // namespace augtk
