#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "capt/errors.hpp"
#include "capt/featurizer.hpp"

namespace capt {

// Vector store: one record per snippet, binary on disk. Layout after
// the magic is little-endian and length-prefixed throughout:
//
//   "CAPTVEC1"
//   u64 record count
//   per record: str snippet_id, str config_id, u64 entry count,
//               then per entry: str feature, u64 count
//   (str = u32 byte length + bytes)
//
// A JSON mirror of the same records exists for debugging.

struct VectorRecord {
  std::string snippet_id;
  FeatureVector vec;
};

namespace detail {

inline constexpr char kVectorMagic[9] = "CAPTVEC1";

inline void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 4);
}

inline void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

inline void put_str(std::ostream& out, const std::string& s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::uint32_t get_u32(std::istream& in) {
  char b[4] = {};  // short reads decode as zero, not as stack garbage
  in.read(b, 4);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i)
    v = (v << 8) | static_cast<unsigned char>(b[i]);
  return v;
}

inline std::uint64_t get_u64(std::istream& in) {
  char b[8] = {};
  in.read(b, 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i)
    v = (v << 8) | static_cast<unsigned char>(b[i]);
  return v;
}

inline std::string get_str(std::istream& in) {
  std::uint32_t len = get_u32(in);
  std::string s(len, '\0');
  in.read(s.data(), static_cast<std::streamsize>(len));
  return s;
}

}  // namespace detail

inline void save_vectors(const std::vector<VectorRecord>& records,
                         const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write vector store: " + path.string());
  out.write(detail::kVectorMagic, 8);
  detail::put_u64(out, records.size());
  for (const VectorRecord& r : records) {
    detail::put_str(out, r.snippet_id);
    detail::put_str(out, r.vec.config_id());
    detail::put_u64(out, r.vec.items().size());
    for (const auto& [feature, count] : r.vec.items()) {
      detail::put_str(out, feature);
      detail::put_u64(out, count);
    }
  }
  if (!out) throw DataError("failed writing vector store: " + path.string());
}

inline std::vector<VectorRecord> load_vectors(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read vector store: " + path.string());
  char magic[8];
  in.read(magic, 8);
  if (!in || std::string(magic, 8) != detail::kVectorMagic)
    throw DataError("not a vector store: " + path.string());
  const std::uint64_t count = detail::get_u64(in);
  if (!in) throw DataError("truncated vector store: " + path.string());
  std::vector<VectorRecord> records;
  records.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    VectorRecord r;
    r.snippet_id = detail::get_str(in);
    std::string config = detail::get_str(in);
    const std::uint64_t entries = detail::get_u64(in);
    std::vector<FeatureVector::Entry> items;
    items.reserve(entries);
    for (std::uint64_t e = 0; e < entries; ++e) {
      std::string feature = detail::get_str(in);
      std::uint64_t n = detail::get_u64(in);
      if (!items.empty() && feature <= items.back().first)
        throw DataError("vector store entries out of order: " + path.string());
      items.emplace_back(std::move(feature), n);
    }
    if (!in) throw DataError("truncated vector store: " + path.string());
    r.vec = FeatureVector::from_sorted(std::move(config), std::move(items));
    records.push_back(std::move(r));
  }
  return records;
}

inline void save_vectors_json(const std::vector<VectorRecord>& records,
                              const std::filesystem::path& path) {
  nlohmann::json j = nlohmann::json::array();
  for (const VectorRecord& r : records) {
    nlohmann::json features = nlohmann::json::array();
    for (const auto& [feature, count] : r.vec.items())
      features.push_back({feature, count});
    j.push_back({{"snippet_id", r.snippet_id},
                 {"config_id", r.vec.config_id()},
                 {"features", std::move(features)}});
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write vector dump: " + path.string());
  out << j.dump(1, '\t') << '\n';
  if (!out) throw DataError("failed writing vector dump: " + path.string());
}

}  // namespace capt
