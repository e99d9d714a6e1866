#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <limits>
#include <mutex>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "capt/config.hpp"
#include "capt/corpus.hpp"
#include "capt/errors.hpp"
#include "capt/featurizer.hpp"
#include "capt/pipeline.hpp"

namespace capt {

// Evaluation protocol: sample groups of problem labels, take every
// surviving solution of those problems, score all unordered solution
// pairs (self-pairs included), and summarize each group with average
// precision. Two snippets count as similar iff they solve the same
// problem.

struct ProblemGroup {
  std::uint32_t group_index = 0;            // 1-based
  std::vector<std::string> problem_labels;  // distinct, sorted
};

struct PairRow {
  std::uint32_t a = 0, b = 0;  // indices into PairScores::snippets
  std::uint64_t score = 0;
  bool positive = false;
};

struct PairScores {
  std::vector<std::string> snippets;  // member ids, sorted
  std::vector<PairRow> rows;          // all unordered pairs incl. self
};

struct EvalRecord {
  std::uint32_t group_index = 0;
  CaptConfig config;
  double ap = 0.0;
};

namespace detail {

// mt19937_64 plus rejection sampling: uniform bounded draws with no
// implementation-defined distribution in the loop, so sequences match
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    std::uint64_t r;
    do {
      r = eng_();
    } while (r < threshold);
    return r % n;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace detail

inline std::uint64_t pair_count(std::uint64_t n) {
  return n % 2 == 0 ? (n / 2) * (n + 1) : n * ((n + 1) / 2);
}

inline std::vector<ProblemGroup> sample_groups(
    const std::vector<std::string>& labels, std::size_t group_size = 5,
    std::size_t count = 1000, std::uint64_t seed = 0) {
  if (group_size == 0) throw UsageError("group size must be positive");
  if (labels.size() < group_size)
    throw DataError("cannot sample groups of " + std::to_string(group_size) +
                    " from " + std::to_string(labels.size()) + " labels");
  detail::Rng rng(seed);
  std::vector<ProblemGroup> groups;
  groups.reserve(count);
  std::vector<std::size_t> idx(labels.size());
  for (std::size_t g = 0; g < count; ++g) {
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    ProblemGroup group;
    group.group_index = static_cast<std::uint32_t>(g + 1);
    for (std::size_t i = 0; i < group_size; ++i) {
      std::size_t j = i + rng.below(idx.size() - i);
      std::swap(idx[i], idx[j]);
      group.problem_labels.push_back(labels[idx[i]]);
    }
    std::sort(group.problem_labels.begin(), group.problem_labels.end());
    groups.push_back(std::move(group));
  }
  return groups;
}

// All snippets of the group's problems, in id order.
inline std::vector<std::string> group_members(const Corpus& corpus,
                                              const ProblemGroup& group) {
  std::vector<std::string> members;
  for (const Snippet& s : corpus.snippets) {
    if (std::binary_search(group.problem_labels.begin(),
                           group.problem_labels.end(), s.label))
      members.push_back(s.id);
  }
  return members;
}

// One config's vectors, keyed by snippet id.
using VectorStore = std::map<std::string, FeatureVector>;

inline PairScores score_group(const Corpus& corpus, const ProblemGroup& group,
                              const VectorStore& vectors) {
  PairScores scores;
  std::vector<const FeatureVector*> vecs;
  std::vector<const std::string*> labels;
  for (const Snippet& s : corpus.snippets) {
    if (!std::binary_search(group.problem_labels.begin(),
                            group.problem_labels.end(), s.label))
      continue;
    auto it = vectors.find(s.id);
    if (it == vectors.end())
      throw DataError("no feature vector for snippet " + s.id);
    scores.snippets.push_back(s.id);
    vecs.push_back(&it->second);
    labels.push_back(&s.label);
  }
  const std::size_t n = vecs.size();
  scores.rows.reserve(static_cast<std::size_t>(pair_count(n)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      PairRow row;
      row.a = static_cast<std::uint32_t>(i);
      row.b = static_cast<std::uint32_t>(j);
      row.score = dot(*vecs[i], *vecs[j]);
      row.positive = *labels[i] == *labels[j];
      scores.rows.push_back(row);
    }
  }
  return scores;
}

// AP over descending unique score thresholds: predict "similar" for
// score >= threshold, take precision p_i and recall r_i there, and sum
// (r_i - r_{i-1}) * p_i with r_0 = 0. Tied scores fall into a single
// threshold. The recall deltas stay integer counts until one final
// division, so an all-positive input scores exactly 1.
inline double average_precision(std::vector<std::pair<double, bool>> scored) {
  std::uint64_t total_pos = 0;
  for (const auto& [score, positive] : scored) total_pos += positive;
  if (total_pos == 0)
    throw DataError("average precision is undefined without positive pairs");
  std::sort(scored.begin(), scored.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  double ap = 0.0;
  std::uint64_t tp = 0, prev_tp = 0;
  std::size_t i = 0;
  while (i < scored.size()) {
    std::size_t j = i;
    while (j < scored.size() && scored[j].first == scored[i].first) {
      tp += scored[j].second;
      ++j;
    }
    const double precision = static_cast<double>(tp) / static_cast<double>(j);
    ap += static_cast<double>(tp - prev_tp) * precision;
    prev_tp = tp;
    i = j;
  }
  return ap / static_cast<double>(total_pos);
}

inline double average_precision(const PairScores& pairs) {
  std::vector<std::pair<double, bool>> scored;
  scored.reserve(pairs.rows.size());
  for (const PairRow& row : pairs.rows)
    scored.emplace_back(static_cast<double>(row.score), row.positive);
  return average_precision(std::move(scored));
}

struct ConfigAggregate {
  CaptConfig config;
  double mean_ap = 0.0;
  std::uint64_t wins = 0, losses = 0, ties = 0;
  double net_win_rate = 0.0;  // (wins - losses) / groups
};

struct OptionMarginal {
  char category = 'A';
  int option = 0;
  // distribution of per-config mean AP over configs fixing the option
  double min = 0, q1 = 0, median = 0, q3 = 0, max = 0, mean = 0;
};

struct SweepReport {
  std::vector<ProblemGroup> groups;
  std::vector<EvalRecord> records;  // sorted by (group_index, config_id)
  std::vector<ConfigAggregate> per_config;     // sorted by config id
  std::vector<OptionMarginal> marginals;       // all 108 configs only
};

namespace detail {

inline void sort_records(std::vector<EvalRecord>& records) {
  std::sort(records.begin(), records.end(),
            [](const EvalRecord& a, const EvalRecord& b) {
              if (a.group_index != b.group_index)
                return a.group_index < b.group_index;
              return config_id(a.config) < config_id(b.config);
            });
}

// linear-interpolation quantile on a sorted sample
inline double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const double h = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

inline void run_parallel(const std::function<void()>& work, unsigned jobs) {
  if (jobs <= 1) {
    work();
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work);
  for (std::thread& th : threads) th.join();
}

}  // namespace detail

// Fills mean AP per config; wins/losses/ties need the baseline config
// in the report.
inline void compare_to_baseline(SweepReport& report) {
  std::map<std::string, std::vector<double>> by_config;  // config -> ap by group order
  std::map<std::uint32_t, std::map<std::string, double>> by_group;
  for (const EvalRecord& r : report.records) {
    by_config[config_id(r.config)].push_back(r.ap);
    by_group[r.group_index][config_id(r.config)] = r.ap;
  }
  const std::string baseline = config_id(CaptConfig{});
  if (!by_config.count(baseline))
    throw DataError("baseline configuration " + baseline +
                    " is missing from the sweep");
  report.per_config.clear();
  for (const auto& [id, aps] : by_config) {
    ConfigAggregate agg;
    agg.config = parse_config_id(id);
    double sum = 0.0;
    for (double ap : aps) sum += ap;
    agg.mean_ap = aps.empty() ? 0.0 : sum / static_cast<double>(aps.size());
    for (const auto& [group_index, group_records] : by_group) {
      auto self = group_records.find(id);
      auto base = group_records.find(baseline);
      if (self == group_records.end() || base == group_records.end()) continue;
      if (self->second > base->second)
        ++agg.wins;
      else if (self->second < base->second)
        ++agg.losses;
      else
        ++agg.ties;
    }
    const std::uint64_t total = agg.wins + agg.losses + agg.ties;
    if (total > 0)
      agg.net_win_rate =
          (static_cast<double>(agg.wins) - static_cast<double>(agg.losses)) /
          static_cast<double>(total);
    report.per_config.push_back(agg);
  }
}

inline int option_of(const CaptConfig& c, char category) {
  switch (category) {
    case 'A': return c.annotation;
    case 'B': return c.compound;
    case 'C': return c.global_var;
    case 'D': return c.global_func;
    default: throw UsageError("unknown option category; expected A, B, C or D");
  }
}

inline std::vector<OptionMarginal> marginal_by_option(const SweepReport& report,
                                                      char category) {
  const int option_count = category == 'C' ? kGlobalVarOptions
                                           : category == 'A' ? kAnnotationOptions
                                           : category == 'B' ? kCompoundOptions
                                                             : kGlobalFuncOptions;
  option_of(CaptConfig{}, category);  // validates the category
  std::vector<OptionMarginal> out;
  for (int option = 0; option < option_count; ++option) {
    std::vector<double> means;
    for (const ConfigAggregate& agg : report.per_config)
      if (option_of(agg.config, category) == option)
        means.push_back(agg.mean_ap);
    std::sort(means.begin(), means.end());
    OptionMarginal m;
    m.category = category;
    m.option = option;
    if (!means.empty()) {
      m.min = means.front();
      m.max = means.back();
      m.q1 = detail::quantile(means, 0.25);
      m.median = detail::quantile(means, 0.5);
      m.q3 = detail::quantile(means, 0.75);
      double sum = 0.0;
      for (double v : means) sum += v;
      m.mean = sum / static_cast<double>(means.size());
    }
    out.push_back(m);
  }
  return out;
}

struct SweepOptions {
  std::vector<CaptConfig> configs;  // empty = all 108
  std::size_t group_count = 1000;
  std::size_t group_size = 5;
  std::uint64_t seed = 0;
  FeaturizerParams params;
  unsigned jobs = 1;
  // per-config AP cache; a config found here is not recomputed
  std::function<bool(const CaptConfig&, std::vector<double>&)> load_checkpoint;
  std::function<void(const CaptConfig&, const std::vector<double>&)> save_checkpoint;
  std::function<void(const std::string&)> progress;
};

inline SweepReport sweep(const Corpus& corpus, const SweepOptions& opt) {
  SweepReport report;
  std::vector<CaptConfig> configs =
      opt.configs.empty() ? enumerate_configs() : opt.configs;

  report.groups = sample_groups(corpus.labels(), opt.group_size,
                                opt.group_count, opt.seed);

  // parse, classify and build trees once; every config reuses them
  std::vector<PreparedSnippet> prepared(corpus.snippets.size());
  {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next.fetch_add(1); i < corpus.snippets.size();
           i = next.fetch_add(1)) {
        const Snippet& s = corpus.snippets[i];
        prepared[i] = prepare_snippet(s.id, s.text, corpus.lang);
      }
    };
    detail::run_parallel(work, opt.jobs);
  }

  std::vector<std::vector<double>> aps(configs.size());  // [config][group]
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<std::size_t> next_config{0};
  auto work = [&] {
    for (std::size_t ci = next_config.fetch_add(1); ci < configs.size();
         ci = next_config.fetch_add(1)) {
      if (failure) return;
      try {
        const CaptConfig& config = configs[ci];
        if (opt.load_checkpoint && opt.load_checkpoint(config, aps[ci])) {
          if (aps[ci].size() != report.groups.size())
            throw DataError("checkpoint for " + config_id(config) +
                            " has the wrong group count");
          if (opt.progress)
            opt.progress(config_id(config) + " (checkpoint)");
          continue;
        }
        VectorStore vectors;
        for (std::size_t i = 0; i < prepared.size(); ++i)
          vectors.emplace(corpus.snippets[i].id,
                          snippet_vector(prepared[i], config, opt.params));
        aps[ci].reserve(report.groups.size());
        for (const ProblemGroup& group : report.groups)
          aps[ci].push_back(
              average_precision(score_group(corpus, group, vectors)));
        if (opt.save_checkpoint) opt.save_checkpoint(config, aps[ci]);
        if (opt.progress) opt.progress(config_id(config));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  detail::run_parallel(work, opt.jobs);
  if (failure) std::rethrow_exception(failure);

  for (std::size_t ci = 0; ci < configs.size(); ++ci)
    for (std::size_t gi = 0; gi < report.groups.size(); ++gi)
      report.records.push_back(
          {report.groups[gi].group_index, configs[ci], aps[ci][gi]});
  detail::sort_records(report.records);

  bool has_baseline = false;
  for (const CaptConfig& c : configs) has_baseline |= c.is_baseline();
  if (has_baseline) {
    compare_to_baseline(report);
  } else {
    for (std::size_t ci = 0; ci < configs.size(); ++ci) {
      ConfigAggregate agg;
      agg.config = configs[ci];
      double sum = 0.0;
      for (double ap : aps[ci]) sum += ap;
      if (!aps[ci].empty()) agg.mean_ap = sum / static_cast<double>(aps[ci].size());
      report.per_config.push_back(agg);
    }
    std::sort(report.per_config.begin(), report.per_config.end(),
              [](const ConfigAggregate& a, const ConfigAggregate& b) {
                return config_id(a.config) < config_id(b.config);
              });
  }
  if (configs.size() == static_cast<std::size_t>(kConfigCount)) {
    for (char category : {'A', 'B', 'C', 'D'}) {
      auto ms = marginal_by_option(report, category);
      report.marginals.insert(report.marginals.end(), ms.begin(), ms.end());
    }
  }
  return report;
}

}  // namespace capt
