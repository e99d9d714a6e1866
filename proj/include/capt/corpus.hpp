#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "capt/errors.hpp"
#include "capt/parser.hpp"

namespace capt {

// A labeled pile of source files. Layout on disk is <root>/<label>/<file>;
// the snippet id is the path relative to the root, so ids are unique and
// stable across machines.

struct Snippet {
  std::string id;     // "<label>/<file>", '/' separators
  std::string label;
  std::string text;
};

struct PruneEntry {
  std::string id;
  std::string reason;  // "io/encoding", "parse-error", "excluded"
};

struct Corpus {
  Language lang = Language::Cpp;
  std::vector<Snippet> snippets;     // sorted by id
  std::vector<PruneEntry> prune_log;

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const Snippet& s : snippets)
      if (out.empty() || out.back() != s.label) out.push_back(s.label);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

namespace detail {

// permissive decode: strip a UTF-8 BOM, and when the bytes are not
// valid UTF-8, blank every high byte so downstream text stays sane
inline bool valid_utf8(const std::string& s) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    if (b < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    unsigned cp_min;
    if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp_min = 0x80;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp_min = 0x800;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp_min = 0x10000;
    } else {
      return false;
    }
    if (i + len > n) return false;
    unsigned cp = b & (0xFFu >> (len + 1));
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char c = static_cast<unsigned char>(s[i + k]);
      if ((c & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (c & 0x3Fu);
    }
    if (cp < cp_min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      return false;
    i += len;
  }
  return true;
}

inline std::string decode_permissive(std::string bytes) {
  if (bytes.size() >= 3 && bytes.compare(0, 3, "\xEF\xBB\xBF") == 0)
    bytes.erase(0, 3);
  if (!valid_utf8(bytes))
    for (char& ch : bytes)
      if (static_cast<unsigned char>(ch) >= 0x80) ch = '?';
  return bytes;
}

inline bool read_file_bytes(const std::filesystem::path& p, std::string& out) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return false;
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) return false;
  out = std::move(data);
  return true;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

}  // namespace detail

// Reads every regular file under <root>/<label>/, sorted by relative
// path. A missing or unlistable root is fatal; an unreadable file just
// lands in the prune log.
inline Corpus ingest_corpus(const std::filesystem::path& root,
                            const std::string& lang_tag) {
  namespace fs = std::filesystem;
  Corpus corpus;
  corpus.lang = language_from_tag(lang_tag);

  std::error_code ec;
  if (!fs::is_directory(root, ec) || ec)
    throw DataError("corpus root is not a directory: " + root.string());

  std::vector<fs::path> label_dirs;
  for (const auto& entry : fs::directory_iterator(root, ec)) {
    if (entry.is_directory()) label_dirs.push_back(entry.path());
  }
  if (ec) throw DataError("cannot list corpus root: " + root.string());
  std::sort(label_dirs.begin(), label_dirs.end());

  for (const fs::path& dir : label_dirs) {
    const std::string label = dir.filename().string();
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir, ec)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    if (ec) throw DataError("cannot list corpus directory: " + dir.string());
    std::sort(files.begin(), files.end());
    for (const fs::path& file : files) {
      std::string rel = fs::relative(file, root, ec).generic_string();
      if (ec) rel = label + "/" + file.filename().string();
      std::string bytes;
      if (!detail::read_file_bytes(file, bytes)) {
        corpus.prune_log.push_back({rel, "io/encoding"});
        continue;
      }
      corpus.snippets.push_back({rel, label, detail::decode_permissive(std::move(bytes))});
    }
  }

  std::sort(corpus.snippets.begin(), corpus.snippets.end(),
            [](const Snippet& a, const Snippet& b) { return a.id < b.id; });
  return corpus;
}

// Drops snippets whose parse produced error nodes. Lenient mode keeps
// a broken file as long as at least one function inside parses clean.
// Running it twice removes nothing new.
inline void prune_unparseable(Corpus& corpus, bool lenient = false) {
  std::vector<Snippet> kept;
  kept.reserve(corpus.snippets.size());
  for (Snippet& s : corpus.snippets) {
    SyntaxTree tree = parse_source(s.text, corpus.lang);
    bool ok = !has_parse_errors(*tree.root);
    if (!ok && lenient) {
      for (const FunctionInfo& fn : functions_of(tree)) {
        if (fn.clean) {
          ok = true;
          break;
        }
      }
    }
    if (ok)
      kept.push_back(std::move(s));
    else
      corpus.prune_log.push_back({s.id, "parse-error"});
  }
  corpus.snippets = std::move(kept);
}

// Exclusion lists are newline-separated snippet ids. Ids not present
// in the corpus are ignored.
inline std::vector<std::string> load_exclusions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read exclusion list: " + path.string());
  std::vector<std::string> ids;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) ids.push_back(line);
  }
  return ids;
}

inline void apply_exclusions(Corpus& corpus, const std::vector<std::string>& ids) {
  std::unordered_set<std::string> drop(ids.begin(), ids.end());
  std::vector<Snippet> kept;
  kept.reserve(corpus.snippets.size());
  for (Snippet& s : corpus.snippets) {
    if (drop.count(s.id))
      corpus.prune_log.push_back({s.id, "excluded"});
    else
      kept.push_back(std::move(s));
  }
  corpus.snippets = std::move(kept);
}

inline void write_prune_csv(const std::vector<PruneEntry>& log,
                            const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write prune log: " + path.string());
  out << "relative_path,reason\n";
  for (const PruneEntry& e : log)
    out << detail::csv_field(e.id) << ',' << detail::csv_field(e.reason) << '\n';
  if (!out) throw DataError("failed writing prune log: " + path.string());
}

// Content digest over language, ids, labels and text, in snippet
// order. Lands in run manifests so results can be tied to inputs.
inline std::uint64_t corpus_digest(const Corpus& corpus) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char b : s) {
      h ^= b;
      h *= 1099511628211ull;
    }
    h ^= 0xff;
    h *= 1099511628211ull;
  };
  mix(language_tag(corpus.lang));
  for (const Snippet& s : corpus.snippets) {
    mix(s.id);
    mix(s.label);
    mix(s.text);
  }
  return h;
}

inline std::string digest_hex(std::uint64_t h) {
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = hex[h & 0xf];
    h >>= 4;
  }
  return s;
}

inline void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  nlohmann::json j;
  j["format"] = "capt-corpus-1";
  j["language"] = language_tag(corpus.lang);
  j["digest"] = digest_hex(corpus_digest(corpus));
  auto& snips = j["snippets"] = nlohmann::json::array();
  for (const Snippet& s : corpus.snippets)
    snips.push_back({{"id", s.id}, {"label", s.label}, {"text", s.text}});
  auto& log = j["prune_log"] = nlohmann::json::array();
  for (const PruneEntry& e : corpus.prune_log)
    log.push_back({{"id", e.id}, {"reason", e.reason}});
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write corpus store: " + path.string());
  out << j.dump(1, '\t') << '\n';
  if (!out) throw DataError("failed writing corpus store: " + path.string());
}

inline Corpus load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read corpus store: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("corpus store is not valid JSON: " + path.string() +
                    " (" + e.what() + ")");
  }
  try {
    if (j.at("format").get<std::string>() != "capt-corpus-1")
      throw DataError("unrecognized corpus store format in " + path.string());
    Corpus corpus;
    corpus.lang = language_from_tag(j.at("language").get<std::string>());
    for (const auto& s : j.at("snippets"))
      corpus.snippets.push_back({s.at("id").get<std::string>(),
                                 s.at("label").get<std::string>(),
                                 s.at("text").get<std::string>()});
    for (const auto& e : j.at("prune_log"))
      corpus.prune_log.push_back(
          {e.at("id").get<std::string>(), e.at("reason").get<std::string>()});
    return corpus;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("corpus store is missing fields: " + path.string() + " (" +
                    e.what() + ")");
  }
}

}  // namespace capt
