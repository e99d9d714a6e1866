#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "capt/corpus.hpp"
#include "capt/errors.hpp"
#include "capt/eval.hpp"
#include "capt/version.hpp"

namespace capt {

// On-disk shape of a sweep: records.csv + groups.csv + aggregates.json
// + manifest.json, with per-config checkpoints underneath. Everything
// here must serialize deterministically; records.csv in particular is
// byte-compared across runs.

inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw DataError("malformed number: \"" + s + "\"");
  return v;
}

namespace detail {

// write-to-temp-then-rename, so partial files never shadow results
class AtomicFile {
 public:
  explicit AtomicFile(const std::filesystem::path& path)
      : path_(path), tmp_(path.string() + ".tmp"), out_(tmp_, std::ios::binary) {
    if (!out_) throw DataError("cannot write " + path.string());
  }

  std::ostream& stream() { return out_; }

  void commit() {
    out_.flush();
    if (!out_) throw DataError("failed writing " + path_.string());
    out_.close();
    std::filesystem::rename(tmp_, path_);
  }

 private:
  std::filesystem::path path_, tmp_;
  std::ofstream out_;
};

inline std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

}  // namespace detail

inline void write_records_csv(const std::vector<EvalRecord>& records,
                              const std::filesystem::path& path) {
  detail::AtomicFile f(path);
  f.stream() << "group_index,config_id,ap\n";
  for (const EvalRecord& r : records)
    f.stream() << r.group_index << ',' << config_id(r.config) << ','
               << format_double(r.ap) << '\n';
  f.commit();
}

inline std::vector<EvalRecord> read_records_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read records: " + path.string());
  std::vector<EvalRecord> records;
  std::string line;
  if (!std::getline(in, line) || line != "group_index,config_id,ap")
    throw DataError("unexpected records header in " + path.string());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = detail::split_csv_line(line);
    if (fields.size() != 3)
      throw DataError("malformed records row in " + path.string());
    EvalRecord r;
    r.group_index = static_cast<std::uint32_t>(std::stoul(fields[0]));
    r.config = parse_config_id(fields[1]);
    r.ap = parse_double(fields[2]);
    records.push_back(r);
  }
  return records;
}

inline void write_groups_csv(const std::vector<ProblemGroup>& groups,
                             const std::filesystem::path& path) {
  detail::AtomicFile f(path);
  f.stream() << "group_index,labels\n";
  for (const ProblemGroup& g : groups) {
    std::string joined;
    for (const std::string& label : g.problem_labels) {
      if (!joined.empty()) joined += ';';
      joined += label;
    }
    f.stream() << g.group_index << ',' << detail::csv_field(joined) << '\n';
  }
  f.commit();
}

struct RunManifest {
  std::string command;
  std::string tool_version = kToolVersion;
  std::string grammar_version = kGrammarVersion;
  std::string scope_heuristic = kScopeHeuristicVersion;
  std::string corpus_digest;
  std::uint64_t seed = 0;
  std::uint64_t group_count = 0;
  std::uint64_t group_size = 0;
  std::vector<std::string> configs;
  FeaturizerParams params;
  std::string started_at, finished_at;

  // everything but timestamps and the command name must match for a
  // checkpoint directory to be reused
  bool compatible_with(const RunManifest& o) const {
    return corpus_digest == o.corpus_digest && seed == o.seed &&
           group_count == o.group_count && group_size == o.group_size &&
           configs == o.configs && tool_version == o.tool_version &&
           grammar_version == o.grammar_version &&
           scope_heuristic == o.scope_heuristic &&
           params.ancestor_depth == o.params.ancestor_depth &&
           params.sibling_window == o.params.sibling_window &&
           params.binary_counts == o.params.binary_counts &&
           params.varuse_merge_names == o.params.varuse_merge_names;
  }
};

inline void save_manifest(const RunManifest& m, const std::filesystem::path& path) {
  nlohmann::json j;
  j["format"] = "capt-manifest-1";
  j["command"] = m.command;
  j["tool_version"] = m.tool_version;
  j["grammar_version"] = m.grammar_version;
  j["scope_heuristic"] = m.scope_heuristic;
  j["corpus_digest"] = m.corpus_digest;
  j["seed"] = m.seed;
  j["group_count"] = m.group_count;
  j["group_size"] = m.group_size;
  j["configs"] = m.configs;
  j["featurizer"] = {{"ancestor_depth", m.params.ancestor_depth},
                     {"sibling_window", m.params.sibling_window},
                     {"binary_counts", m.params.binary_counts},
                     {"varuse_merge_names", m.params.varuse_merge_names}};
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  detail::AtomicFile f(path);
  f.stream() << j.dump(1, '\t') << '\n';
  f.commit();
}

inline RunManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read manifest: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("format").get<std::string>() != "capt-manifest-1")
      throw DataError("unrecognized manifest format in " + path.string());
    RunManifest m;
    m.command = j.at("command").get<std::string>();
    m.tool_version = j.at("tool_version").get<std::string>();
    m.grammar_version = j.at("grammar_version").get<std::string>();
    m.scope_heuristic = j.at("scope_heuristic").get<std::string>();
    m.corpus_digest = j.at("corpus_digest").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.group_count = j.at("group_count").get<std::uint64_t>();
    m.group_size = j.at("group_size").get<std::uint64_t>();
    m.configs = j.at("configs").get<std::vector<std::string>>();
    const auto& f = j.at("featurizer");
    m.params.ancestor_depth = f.at("ancestor_depth").get<int>();
    m.params.sibling_window = f.at("sibling_window").get<int>();
    m.params.binary_counts = f.at("binary_counts").get<bool>();
    m.params.varuse_merge_names = f.at("varuse_merge_names").get<bool>();
    m.started_at = j.at("started_at").get<std::string>();
    m.finished_at = j.at("finished_at").get<std::string>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("malformed manifest " + path.string() + " (" + e.what() + ")");
  }
}

inline void write_aggregates_json(const SweepReport& report, bool baseline_present,
                                  const std::filesystem::path& path) {
  nlohmann::json j;
  j["baseline"] = config_id(CaptConfig{});
  j["baseline_present"] = baseline_present;
  j["group_count"] = report.groups.size();
  auto& per_config = j["per_config"] = nlohmann::json::array();
  for (const ConfigAggregate& agg : report.per_config) {
    nlohmann::json row = {{"config", config_id(agg.config)},
                          {"mean_ap", agg.mean_ap}};
    if (baseline_present) {
      row["wins"] = agg.wins;
      row["losses"] = agg.losses;
      row["ties"] = agg.ties;
      row["net_win_rate"] = agg.net_win_rate;
    }
    per_config.push_back(std::move(row));
  }
  if (!report.marginals.empty()) {
    auto& marginals = j["marginals"] = nlohmann::json::object();
    for (const OptionMarginal& m : report.marginals) {
      marginals[std::string(1, m.category)].push_back({{"option", m.option},
                                                       {"min", m.min},
                                                       {"q1", m.q1},
                                                       {"median", m.median},
                                                       {"q3", m.q3},
                                                       {"max", m.max},
                                                       {"mean", m.mean}});
    }
  }
  detail::AtomicFile f(path);
  f.stream() << j.dump(1, '\t') << '\n';
  f.commit();
}

// Checkpoints: one CSV per config with the APs of every group, written
// only when complete. A sweep restarted over the same directory reuses
// them instead of rescoring.
inline std::filesystem::path checkpoint_path(const std::filesystem::path& dir,
                                             const CaptConfig& config) {
  return dir / (config_id(config) + ".csv");
}

inline void write_checkpoint(const std::filesystem::path& dir,
                             const CaptConfig& config,
                             const std::vector<double>& aps) {
  std::filesystem::create_directories(dir);
  detail::AtomicFile f(checkpoint_path(dir, config));
  f.stream() << "group_index,ap\n";
  for (std::size_t i = 0; i < aps.size(); ++i)
    f.stream() << (i + 1) << ',' << format_double(aps[i]) << '\n';
  f.commit();
}

inline bool load_checkpoint(const std::filesystem::path& dir,
                            const CaptConfig& config, std::vector<double>& aps) {
  std::ifstream in(checkpoint_path(dir, config));
  if (!in) return false;
  std::string line;
  if (!std::getline(in, line) || line != "group_index,ap") return false;
  aps.clear();
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = detail::split_csv_line(line);
    if (fields.size() != 2) return false;
    try {
      aps.push_back(parse_double(fields[1]));
    } catch (const DataError&) {
      return false;  // half-written checkpoints mean "recompute"
    }
  }
  return true;
}

namespace detail {

inline std::string svg_header(int width, int height) {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
    << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
    << height << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return s.str();
}

}  // namespace detail

// Bar chart of per-config net win rate against the baseline, one bar
// per configuration in id order.
inline void write_win_rate_svg(const SweepReport& report,
                               const std::filesystem::path& path) {
  const int bar = 9, gap = 2, h = 360, top = 20, bottom = 60, left = 50;
  const int n = static_cast<int>(report.per_config.size());
  const int width = left + n * (bar + gap) + 20;
  const int height = top + h + bottom;
  const double mid = top + h / 2.0;
  std::ostringstream s;
  s << detail::svg_header(width, height);
  s << "<line x1=\"" << left << "\" y1=\"" << mid << "\" x2=\""
    << (width - 10) << "\" y2=\"" << mid << "\" stroke=\"black\"/>\n";
  for (int i = 0; i < n; ++i) {
    const ConfigAggregate& agg = report.per_config[i];
    const double frac = agg.net_win_rate;  // -1..1
    const double magnitude = std::abs(frac) * (h / 2.0);
    const double x = left + i * (bar + gap);
    const double y = frac >= 0 ? mid - magnitude : mid;
    s << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << bar
      << "\" height=\"" << magnitude << "\" fill=\""
      << (frac >= 0 ? "#2b6cb0" : "#c05621") << "\">"
      << "<title>" << config_id(agg.config) << " net "
      << format_double(agg.net_win_rate) << "</title></rect>\n";
  }
  s << "<text x=\"" << left << "\" y=\"14\" font-size=\"12\">net win rate vs "
    << config_id(CaptConfig{}) << " (hover bars for config ids)</text>\n";
  s << "</svg>\n";
  detail::AtomicFile f(path);
  f.stream() << s.str();
  f.commit();
}

// Box-and-whisker summary of per-config mean AP for each option value
// of each category.
inline void write_marginals_svg(const SweepReport& report,
                                const std::filesystem::path& path) {
  if (report.marginals.empty())
    throw DataError("no marginal summaries in this sweep (needs all configs)");
  double lo = 1.0, hi = 0.0;
  for (const OptionMarginal& m : report.marginals) {
    lo = std::min(lo, m.min);
    hi = std::max(hi, m.max);
  }
  if (hi <= lo) hi = lo + 1e-9;
  const int slot = 60, boxw = 28, h = 300, top = 30, bottom = 40, left = 50;
  const int n = static_cast<int>(report.marginals.size());
  const int width = left + n * slot + 30;
  const int height = top + h + bottom;
  auto ycoord = [&](double v) {
    return top + (hi - v) / (hi - lo) * h;
  };
  std::ostringstream s;
  s << detail::svg_header(width, height);
  s << "<text x=\"" << left << "\" y=\"16\" font-size=\"12\">mean AP by fixed option"
    << " (min, quartiles, max over configs)</text>\n";
  for (int i = 0; i < n; ++i) {
    const OptionMarginal& m = report.marginals[i];
    const double cx = left + i * slot + slot / 2.0;
    const double x0 = cx - boxw / 2.0, x1 = cx + boxw / 2.0;
    s << "<line x1=\"" << cx << "\" y1=\"" << ycoord(m.min) << "\" x2=\"" << cx
      << "\" y2=\"" << ycoord(m.max) << "\" stroke=\"black\"/>\n";
    s << "<rect x=\"" << x0 << "\" y=\"" << ycoord(m.q3) << "\" width=\"" << boxw
      << "\" height=\"" << (ycoord(m.q1) - ycoord(m.q3))
      << "\" fill=\"#bee3f8\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << x0 << "\" y1=\"" << ycoord(m.median) << "\" x2=\"" << x1
      << "\" y2=\"" << ycoord(m.median) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    s << "<text x=\"" << cx << "\" y=\"" << (top + h + 18)
      << "\" font-size=\"11\" text-anchor=\"middle\">" << m.category << '='
      << m.option << "</text>\n";
  }
  s << "</svg>\n";
  detail::AtomicFile f(path);
  f.stream() << s.str();
  f.commit();
}

}  // namespace capt
