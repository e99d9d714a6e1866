#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "capt/corpus.hpp"
#include "capt/errors.hpp"
#include "capt/eval.hpp"
#include "capt/pipeline.hpp"
#include "capt/report_io.hpp"
#include "capt/vectors_io.hpp"
#include "capt/version.hpp"

namespace fs = std::filesystem;

namespace {

fs::path corpus_path(const fs::path& store) { return store / "corpus.json"; }
fs::path prune_path(const fs::path& store) { return store / "prune.csv"; }

std::string params_signature(const capt::FeaturizerParams& p) {
  std::string s = "a" + std::to_string(p.ancestor_depth) + "s" +
                  std::to_string(p.sibling_window);
  s += p.binary_counts ? "b1" : "b0";
  s += p.varuse_merge_names ? "m1" : "m0";
  return s;
}

std::vector<capt::CaptConfig> parse_config_list(const std::string& arg) {
  if (arg == "all") return capt::enumerate_configs();
  std::vector<capt::CaptConfig> configs;
  std::size_t start = 0;
  while (start <= arg.size()) {
    std::size_t comma = arg.find(',', start);
    if (comma == std::string::npos) comma = arg.size();
    configs.push_back(capt::parse_config_id(arg.substr(start, comma - start)));
    start = comma + 1;
  }
  return configs;
}

std::vector<std::string> config_id_list(const std::vector<capt::CaptConfig>& configs) {
  std::vector<std::string> ids;
  for (const capt::CaptConfig& c : configs) ids.push_back(capt::config_id(c));
  return ids;
}

capt::Corpus load_store(const fs::path& store) {
  return capt::load_corpus(corpus_path(store));
}

void save_store(const capt::Corpus& corpus, const fs::path& store) {
  fs::create_directories(store);
  capt::save_corpus(corpus, corpus_path(store));
  capt::write_prune_csv(corpus.prune_log, prune_path(store));
}

capt::RunManifest base_manifest(const std::string& command,
                                const capt::Corpus& corpus) {
  capt::RunManifest m;
  m.command = command;
  m.corpus_digest = capt::digest_hex(capt::corpus_digest(corpus));
  m.started_at = capt::detail::utc_timestamp();
  return m;
}

// ---- ingest ----

struct IngestArgs {
  std::string root, lang = "cpp", out, exclude;
};

void cmd_ingest(const IngestArgs& a) {
  capt::Corpus corpus = capt::ingest_corpus(a.root, a.lang);
  if (!a.exclude.empty())
    capt::apply_exclusions(corpus, capt::load_exclusions(a.exclude));
  capt::RunManifest m = base_manifest("ingest", corpus);
  save_store(corpus, a.out);
  m.finished_at = capt::detail::utc_timestamp();
  capt::save_manifest(m, fs::path(a.out) / "manifest.json");
  std::cout << "ingested " << corpus.snippets.size() << " snippets across "
            << corpus.labels().size() << " labels; " << corpus.prune_log.size()
            << " pruned\n";
}

// ---- prune ----

struct PruneArgs {
  std::string store;
  bool lenient = false;
};

void cmd_prune(const PruneArgs& a) {
  capt::Corpus corpus = load_store(a.store);
  const std::size_t before = corpus.snippets.size();
  capt::prune_unparseable(corpus, a.lenient);
  capt::RunManifest m = base_manifest("prune", corpus);
  save_store(corpus, a.store);
  m.finished_at = capt::detail::utc_timestamp();
  capt::save_manifest(m, fs::path(a.store) / "manifest.json");
  std::cout << "kept " << corpus.snippets.size() << " of " << before
            << " snippets (" << (before - corpus.snippets.size())
            << " pruned)\n";
}

// ---- featurize ----

struct FeaturizeArgs {
  std::string store, out, configs = "0-0-0-0";
  bool json = false;
  bool binary_counts = false;
  bool merge_varuse = false;
  unsigned jobs = 1;
};

std::vector<capt::VectorRecord> compute_vectors(
    const capt::Corpus& corpus, const std::vector<capt::PreparedSnippet>& prepared,
    const capt::CaptConfig& config, const capt::FeaturizerParams& params) {
  std::vector<capt::VectorRecord> records(corpus.snippets.size());
  for (std::size_t i = 0; i < prepared.size(); ++i) {
    records[i].snippet_id = corpus.snippets[i].id;
    records[i].vec = capt::snippet_vector(prepared[i], config, params);
  }
  return records;
}

void cmd_featurize(const FeaturizeArgs& a) {
  capt::Corpus corpus = load_store(a.store);
  capt::FeaturizerParams params;
  params.binary_counts = a.binary_counts;
  params.varuse_merge_names = a.merge_varuse;
  std::vector<capt::CaptConfig> configs = parse_config_list(a.configs);
  fs::create_directories(a.out);

  const char* cache_env = std::getenv("CAPT_CACHE_DIR");
  const std::string digest = capt::digest_hex(capt::corpus_digest(corpus));

  capt::RunManifest m = base_manifest("featurize", corpus);
  m.configs = config_id_list(configs);
  m.params = params;

  std::vector<capt::PreparedSnippet> prepared;
  auto ensure_prepared = [&] {
    if (!prepared.empty() || corpus.snippets.empty()) return;
    prepared.resize(corpus.snippets.size());
    std::atomic<std::size_t> next{0};
    capt::detail::run_parallel(
        [&] {
          for (std::size_t i = next.fetch_add(1); i < corpus.snippets.size();
               i = next.fetch_add(1))
            prepared[i] = capt::prepare_snippet(corpus.snippets[i].id,
                                                corpus.snippets[i].text,
                                                corpus.lang);
        },
        a.jobs);
  };

  for (const capt::CaptConfig& config : configs) {
    const std::string id = capt::config_id(config);
    const fs::path out_file = fs::path(a.out) / ("vectors-" + id + ".captvec");
    fs::path cache_file;
    if (cache_env && *cache_env)
      cache_file = fs::path(cache_env) /
                   (digest + "-" + id + "-" + params_signature(params) + ".captvec");

    std::vector<capt::VectorRecord> records;
    if (!cache_file.empty() && fs::exists(cache_file)) {
      records = capt::load_vectors(cache_file);
    } else {
      ensure_prepared();
      records = compute_vectors(corpus, prepared, config, params);
      if (!cache_file.empty()) {
        fs::create_directories(cache_file.parent_path());
        capt::save_vectors(records, cache_file);
      }
    }
    capt::save_vectors(records, out_file);
    if (a.json)
      capt::save_vectors_json(records,
                              fs::path(a.out) / ("vectors-" + id + ".json"));
    std::cout << id << ": " << records.size() << " vectors -> "
              << out_file.string() << "\n";
  }
  m.finished_at = capt::detail::utc_timestamp();
  capt::save_manifest(m, fs::path(a.out) / "manifest.json");
}

// ---- compare ----

struct CompareArgs {
  std::string file_a, file_b, config = "0-0-0-0", lang = "cpp";
  bool dump_scopes = false;
};

capt::PreparedSnippet prepare_file(const fs::path& path, capt::Language lang) {
  std::string text;
  if (!capt::detail::read_file_bytes(path, text))
    throw capt::DataError("cannot read " + path.string());
  capt::SyntaxTree tree = capt::parse_source(text, lang);
  if (capt::has_parse_errors(*tree.root))
    throw capt::DataError("parse-error in " + path.string());
  return capt::prepare_snippet(path.string(), text, lang);
}

void dump_scopes_csv(const capt::PreparedSnippet& snippet, std::ostream& out) {
  out << "ordinal,name,class\n";
  for (std::size_t f = 0; f < snippet.functions.size(); ++f) {
    const capt::PreparedFunction& fn = snippet.functions[f];
    out << "# " << snippet.id << " function " << (f + 1) << "\n";
    for (std::size_t i = 0; i < fn.spt.nodes.size(); ++i) {
      const capt::SptNode& node = fn.spt.nodes[i];
      if (node.kind != capt::SptKind::TokenLeaf ||
          node.syntax_type != "identifier")
        continue;
      auto it = fn.scope.find(node.token_index);
      if (it == fn.scope.end()) continue;
      out << (i + 1) << ',' << capt::detail::csv_field(node.label) << ','
          << capt::id_class_name(it->second) << "\n";
    }
  }
}

void cmd_compare(const CompareArgs& a) {
  const capt::Language lang = capt::language_from_tag(a.lang);
  const capt::CaptConfig config = capt::parse_config_id(a.config);
  capt::PreparedSnippet sa = prepare_file(a.file_a, lang);
  capt::PreparedSnippet sb = prepare_file(a.file_b, lang);
  capt::FeatureVector va = capt::snippet_vector(sa, config);
  capt::FeatureVector vb = capt::snippet_vector(sb, config);
  std::cout << "config " << capt::config_id(config) << "\n"
            << "score " << capt::dot(va, vb) << "\n"
            << "norm2_a " << capt::dot(va, va) << "\n"
            << "norm2_b " << capt::dot(vb, vb) << "\n";
  if (a.dump_scopes) {
    dump_scopes_csv(sa, std::cout);
    dump_scopes_csv(sb, std::cout);
  }
}

// ---- evaluate / sweep ----

struct EvalArgs {
  std::string store, configs = "0-0-0-0";
  std::size_t groups = 1000, group_size = 5;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

void cmd_evaluate(const EvalArgs& a) {
  capt::Corpus corpus = load_store(a.store);
  capt::SweepOptions opt;
  opt.configs = parse_config_list(a.configs);
  opt.group_count = a.groups;
  opt.group_size = a.group_size;
  opt.seed = a.seed;
  opt.jobs = a.jobs;
  capt::SweepReport report = capt::sweep(corpus, opt);
  std::cout << "groups " << report.groups.size() << " (size " << a.group_size
            << ", seed " << a.seed << ")\n";
  bool baseline = false;
  for (const capt::CaptConfig& c : opt.configs) baseline |= c.is_baseline();
  for (const capt::ConfigAggregate& agg : report.per_config) {
    std::cout << capt::config_id(agg.config) << " mean_ap "
              << capt::format_double(agg.mean_ap);
    if (baseline && !agg.config.is_baseline())
      std::cout << " wins " << agg.wins << " losses " << agg.losses << " ties "
                << agg.ties;
    std::cout << "\n";
  }
}

struct SweepArgs {
  std::string store, out, configs = "all";
  std::size_t groups = 1000, group_size = 5;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  bool quiet = false;
};

void cmd_sweep(const SweepArgs& a) {
  capt::Corpus corpus = load_store(a.store);
  const fs::path out_dir = a.out;
  const fs::path checkpoints = out_dir / "checkpoints";
  fs::create_directories(out_dir);

  capt::SweepOptions opt;
  opt.configs = parse_config_list(a.configs);
  opt.group_count = a.groups;
  opt.group_size = a.group_size;
  opt.seed = a.seed;
  opt.jobs = a.jobs;

  capt::RunManifest m = base_manifest("sweep", corpus);
  m.seed = a.seed;
  m.group_count = a.groups;
  m.group_size = a.group_size;
  m.configs = config_id_list(opt.configs);
  m.params = opt.params;

  // a leftover manifest from different inputs makes checkpoints stale
  const fs::path manifest_file = out_dir / "manifest.json";
  if (fs::exists(manifest_file)) {
    capt::RunManifest old = capt::load_manifest(manifest_file);
    if (!old.compatible_with(m))
      throw capt::DataError(
          "output directory holds a sweep with different parameters; use a "
          "fresh directory");
  }
  capt::save_manifest(m, manifest_file);

  opt.load_checkpoint = [&](const capt::CaptConfig& c, std::vector<double>& aps) {
    return capt::load_checkpoint(checkpoints, c, aps);
  };
  opt.save_checkpoint = [&](const capt::CaptConfig& c,
                            const std::vector<double>& aps) {
    capt::write_checkpoint(checkpoints, c, aps);
  };
  std::mutex progress_mutex;
  std::size_t done = 0;
  if (!a.quiet) {
    opt.progress = [&](const std::string& what) {
      std::lock_guard<std::mutex> lock(progress_mutex);
      std::cerr << "[" << ++done << "/" << opt.configs.size() << "] " << what
                << "\n";
    };
  }

  capt::SweepReport report = capt::sweep(corpus, opt);

  bool baseline = false;
  for (const capt::CaptConfig& c : opt.configs) baseline |= c.is_baseline();
  capt::write_records_csv(report.records, out_dir / "records.csv");
  capt::write_groups_csv(report.groups, out_dir / "groups.csv");
  capt::write_aggregates_json(report, baseline, out_dir / "aggregates.json");
  m.finished_at = capt::detail::utc_timestamp();
  capt::save_manifest(m, manifest_file);
  std::cout << "wrote " << report.records.size() << " records to "
            << (out_dir / "records.csv").string() << "\n";
}

// ---- report ----

struct ReportArgs {
  std::string dir;
  bool plots = false;
  std::size_t top = 10;
};

void cmd_report(const ReportArgs& a) {
  const fs::path dir = a.dir;
  capt::RunManifest m = capt::load_manifest(dir / "manifest.json");
  std::vector<capt::EvalRecord> records =
      capt::read_records_csv(dir / "records.csv");
  if (records.empty()) throw capt::DataError("no records in " + dir.string());

  capt::SweepReport report;
  report.records = std::move(records);
  std::map<std::uint32_t, bool> seen_groups;
  bool baseline = false;
  for (const capt::EvalRecord& r : report.records) {
    seen_groups[r.group_index] = true;
    baseline |= r.config.is_baseline();
  }
  for (const auto& [index, _] : seen_groups) {
    capt::ProblemGroup g;
    g.group_index = index;
    report.groups.push_back(g);
  }
  if (baseline) {
    capt::compare_to_baseline(report);
  } else {
    std::map<std::string, std::pair<double, std::size_t>> sums;
    for (const capt::EvalRecord& r : report.records) {
      auto& [sum, n] = sums[capt::config_id(r.config)];
      sum += r.ap;
      ++n;
    }
    for (const auto& [id, sum_n] : sums) {
      capt::ConfigAggregate agg;
      agg.config = capt::parse_config_id(id);
      agg.mean_ap = sum_n.first / static_cast<double>(sum_n.second);
      report.per_config.push_back(agg);
    }
  }
  if (report.per_config.size() == static_cast<std::size_t>(capt::kConfigCount)) {
    for (char category : {'A', 'B', 'C', 'D'}) {
      auto ms = capt::marginal_by_option(report, category);
      report.marginals.insert(report.marginals.end(), ms.begin(), ms.end());
    }
  }

  std::cout << "sweep of " << report.per_config.size() << " configs over "
            << report.groups.size() << " groups (seed " << m.seed << ", size "
            << m.group_size << ", corpus " << m.corpus_digest << ")\n";
  std::vector<capt::ConfigAggregate> by_mean = report.per_config;
  std::sort(by_mean.begin(), by_mean.end(),
            [](const capt::ConfigAggregate& x, const capt::ConfigAggregate& y) {
              if (x.mean_ap != y.mean_ap) return x.mean_ap > y.mean_ap;
              return capt::config_id(x.config) < capt::config_id(y.config);
            });
  std::cout << "top configs by mean AP:\n";
  for (std::size_t i = 0; i < by_mean.size() && i < a.top; ++i) {
    const capt::ConfigAggregate& agg = by_mean[i];
    std::cout << "  " << capt::config_id(agg.config) << "  mean_ap "
              << capt::format_double(agg.mean_ap);
    if (baseline)
      std::cout << "  wins " << agg.wins << " losses " << agg.losses
                << " ties " << agg.ties;
    std::cout << "\n";
  }
  if (!report.marginals.empty()) {
    std::cout << "marginals (mean AP over configs with the option fixed):\n";
    for (const capt::OptionMarginal& mg : report.marginals)
      std::cout << "  " << mg.category << '=' << mg.option << "  mean "
                << capt::format_double(mg.mean) << "  median "
                << capt::format_double(mg.median) << "  max "
                << capt::format_double(mg.max) << "\n";
  }
  if (a.plots) {
    if (!baseline)
      throw capt::DataError("plots need the baseline config in the sweep");
    capt::write_win_rate_svg(report, dir / "win_rate.svg");
    if (!report.marginals.empty())
      capt::write_marginals_svg(report, dir / "marginals.svg");
    std::cout << "plots written to " << (dir / "win_rate.svg").string();
    if (!report.marginals.empty())
      std::cout << " and " << (dir / "marginals.svg").string();
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"code similarity via context-aware parse trees"};
  app.set_version_flag("--version", std::string(capt::kToolVersion));
  app.require_subcommand(1);

  IngestArgs ingest;
  CLI::App* c_ingest = app.add_subcommand("ingest", "read a labeled corpus tree into a store");
  c_ingest->add_option("--root", ingest.root, "corpus root: <root>/<label>/<file>")->required();
  c_ingest->add_option("--lang", ingest.lang, "language tag: c or cpp");
  c_ingest->add_option("--out", ingest.out, "store directory to create")->required();
  c_ingest->add_option("--exclude", ingest.exclude, "newline-separated snippet ids to drop");

  PruneArgs prune;
  CLI::App* c_prune = app.add_subcommand("prune", "drop snippets that do not parse");
  c_prune->add_option("store", prune.store, "store directory")->required();
  c_prune->add_flag("--lenient", prune.lenient, "keep files with at least one clean function");

  FeaturizeArgs feat;
  CLI::App* c_feat = app.add_subcommand("featurize", "write feature vectors for configurations");
  c_feat->add_option("store", feat.store, "store directory")->required();
  c_feat->add_option("--configs", feat.configs, "config id, comma list, or 'all'");
  c_feat->add_option("--out", feat.out, "output directory")->required();
  c_feat->add_flag("--json", feat.json, "also write a JSON dump per config");
  c_feat->add_flag("--binary-counts", feat.binary_counts, "record feature presence, not counts");
  c_feat->add_flag("--merge-varuse", feat.merge_varuse, "chain variable uses by renamed label");
  c_feat->add_option("--jobs", feat.jobs, "worker threads");

  CompareArgs cmp;
  CLI::App* c_cmp = app.add_subcommand("compare", "similarity score of two files");
  c_cmp->add_option("file_a", cmp.file_a)->required();
  c_cmp->add_option("file_b", cmp.file_b)->required();
  c_cmp->add_option("--config", cmp.config, "configuration id");
  c_cmp->add_option("--lang", cmp.lang, "language tag: c or cpp");
  c_cmp->add_flag("--dump-scopes", cmp.dump_scopes, "print identifier classifications as CSV");

  EvalArgs eval;
  CLI::App* c_eval = app.add_subcommand("evaluate", "run the grouped AP protocol, print a summary");
  c_eval->add_option("store", eval.store, "store directory")->required();
  c_eval->add_option("--configs", eval.configs, "config id, comma list, or 'all'");
  c_eval->add_option("--groups", eval.groups, "number of sampled groups");
  c_eval->add_option("--group-size", eval.group_size, "labels per group");
  c_eval->add_option("--seed", eval.seed, "sampling seed");
  c_eval->add_option("--jobs", eval.jobs, "worker threads");

  SweepArgs sweep;
  CLI::App* c_sweep = app.add_subcommand("sweep", "full evaluation across configurations");
  c_sweep->add_option("store", sweep.store, "store directory")->required();
  c_sweep->add_option("--out", sweep.out, "report directory")->required();
  c_sweep->add_option("--configs", sweep.configs, "config id, comma list, or 'all'");
  c_sweep->add_option("--groups", sweep.groups, "number of sampled groups");
  c_sweep->add_option("--group-size", sweep.group_size, "labels per group");
  c_sweep->add_option("--seed", sweep.seed, "sampling seed");
  c_sweep->add_option("--jobs", sweep.jobs, "worker threads");
  c_sweep->add_flag("--quiet", sweep.quiet, "suppress per-config progress");

  ReportArgs rep;
  CLI::App* c_rep = app.add_subcommand("report", "summarize a sweep directory");
  c_rep->add_option("dir", rep.dir, "sweep report directory")->required();
  c_rep->add_flag("--plots", rep.plots, "write SVG charts next to the records");
  c_rep->add_option("--top", rep.top, "configs to list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_ingest->parsed()) cmd_ingest(ingest);
    if (c_prune->parsed()) cmd_prune(prune);
    if (c_feat->parsed()) cmd_featurize(feat);
    if (c_cmp->parsed()) cmd_compare(cmp);
    if (c_eval->parsed()) cmd_evaluate(eval);
    if (c_sweep->parsed()) cmd_sweep(sweep);
    if (c_rep->parsed()) cmd_report(rep);
  } catch (const capt::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const capt::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
