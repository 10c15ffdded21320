#pragma once

// A persisted table order -> [(group, q)] over fixed bounds, used as a cache
// in front of recover_candidates. Entries are re-validated on load; queries
// outside the recorded bounds fall back to a cold computation.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include "ordco/recovery.hpp"
#include "ordco/serialize.hpp"

namespace ordco {

inline constexpr const char* kAtlasEnv = "ORDCO_ATLAS";

class AtlasFile {
 public:
  struct Entry {
    std::string group;
    std::string q;
    friend auto operator<=>(const Entry&, const Entry&) = default;
  };

  /// Every nontrivial group of rank <= max_rank over every q in qs.
  static AtlasFile build(unsigned max_rank, std::vector<unsigned long> qs) {
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    AtlasFile a;
    a.max_rank_ = max_rank;
    for (unsigned long q : qs) a.fields_.push_back(PrimePowerField::from_q(q));
    for (const auto& g : enumerate_groups(max_rank)) {
      if (g.trivial()) continue;
      for (const auto& f : a.fields_) a.entries_[to_string(group_order(g, f))].push_back({g.to_string(), to_string(f.q())});
    }
    for (auto& [k, v] : a.entries_) std::sort(v.begin(), v.end());
    return a;
  }

  unsigned max_rank() const { return max_rank_; }
  const std::vector<PrimePowerField>& fields() const { return fields_; }
  const std::map<std::string, std::vector<Entry>>& entries() const { return entries_; }

  Json to_json() const {
    Json qs = Json::array();
    for (const auto& f : fields_) qs.push_back(to_string(f.q()));
    Json entries = Json::object();
    for (const auto& [order, list] : entries_) {
      Json arr = Json::array();
      for (const auto& e : list) arr.push_back({{"group", e.group}, {"q", e.q}});
      entries[order] = arr;
    }
    return {{"format", "ordco-atlas"}, {"version", 1}, {"bounds", {{"max_rank", max_rank_}, {"q", qs}}}, {"entries", entries}};
  }

  /// Parses and re-validates every entry; throws Error on any mismatch.
  static AtlasFile from_json(const Json& j) {
    try {
      if (j.at("format") != "ordco-atlas" || j.at("version") != 1) throw Error("atlas: unsupported format");
      AtlasFile a;
      a.max_rank_ = j.at("bounds").at("max_rank").get<unsigned>();
      std::set<BigInt> qset;
      for (const auto& q : j.at("bounds").at("q")) {
        a.fields_.push_back(PrimePowerField::from_q(parse_bigint(q.get<std::string>())));
        qset.insert(a.fields_.back().q());
      }
      for (const auto& [order, list] : j.at("entries").items()) {
        const BigInt n = parse_bigint(order);
        auto& dst = a.entries_[order];
        for (const auto& e : list) {
          Entry entry{e.at("group").get<std::string>(), e.at("q").get<std::string>()};
          const SemisimpleGroup g = parse_group(entry.group);
          const BigInt q = parse_bigint(entry.q);
          if (!qset.count(q) || g.rank() > a.max_rank_ || group_order(g, q) != n) {
            throw Error("atlas: entry " + entry.group + " over F_" + entry.q + " does not have order " + order);
          }
          dst.push_back(std::move(entry));
        }
        std::sort(dst.begin(), dst.end());
      }
      return a;
    } catch (const Json::exception& e) {
      throw Error(std::string("atlas: malformed document: ") + e.what());
    }
  }

  static AtlasFile load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("atlas: cannot read " + path.string());
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error("atlas: " + path.string() + " is not valid JSON: " + e.what());
    }
    return from_json(j);
  }

  /// Writes to a temporary file in the same directory, then renames over path.
  void save(const std::filesystem::path& path) const {
    const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw Error("atlas: cannot write " + tmp);
      out << to_json().dump(1) << '\n';
      if (!out.flush()) throw Error("atlas: write to " + tmp + " failed");
    }
    std::filesystem::rename(tmp, path);
  }

  /// True when every candidate for `order` within the given bounds must be
  /// among the stored entries: the rank bound is covered and every prime
  /// power that could occur is in the field list.
  bool covers(const BigInt& order, unsigned max_rank, const std::optional<BigInt>& q_max) const {
    if (order < 2 || max_rank > max_rank_) return false;
    // A nontrivial group over F_q has order >= q^3 - q.
    BigInt bound = q_max ? *q_max : order;
    BigInt cube;
    mpz_root(cube.get_mpz_t(), order.get_mpz_t(), 3);
    bound = std::min(bound, BigInt(cube + 1));
    std::set<BigInt> have;
    for (const auto& f : fields_) have.insert(f.q());
    // Walk upward to the first prime power missing from the list.
    for (BigInt q = 2; q <= bound; ++q) {
      if (have.count(q)) continue;
      try {
        PrimePowerField::from_q(q);
        return false;
      } catch (const PreconditionError&) {
      }
    }
    return true;
  }

  /// Stored candidates for order within the bounds, in recover_candidates order.
  std::vector<RecoveryCandidate> lookup(const BigInt& order, unsigned max_rank, const std::optional<BigInt>& q_max) const {
    std::vector<RecoveryCandidate> out;
    auto it = entries_.find(to_string(order));
    if (it == entries_.end()) return out;
    for (const auto& e : it->second) {
      const SemisimpleGroup g = parse_group(e.group);
      const auto f = PrimePowerField::from_q(parse_bigint(e.q));
      if (g.rank() > max_rank || (q_max && f.q() > *q_max)) continue;
      out.push_back({g, f});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  unsigned max_rank_ = 0;
  std::vector<PrimePowerField> fields_;
  std::map<std::string, std::vector<Entry>> entries_;
};

/// Atlas-backed recovery: served from the atlas when it covers the query,
/// otherwise computed cold. `hit` reports which path was taken.
inline std::vector<RecoveryCandidate> recover_with_atlas(const AtlasFile* atlas, const BigInt& order, int max_rank,
                                                         const std::optional<BigInt>& q_max, const FactorOptions& opts,
                                                         bool* hit = nullptr) {
  if (atlas && max_rank >= 0 && atlas->covers(order, static_cast<unsigned>(max_rank), q_max)) {
    if (hit) *hit = true;
    return atlas->lookup(order, static_cast<unsigned>(max_rank), q_max);
  }
  if (hit) *hit = false;
  return recover_candidates(order, max_rank, q_max, opts);
}

inline std::optional<std::filesystem::path> default_atlas_path() {
  const char* env = std::getenv(kAtlasEnv);
  if (!env || !*env) return std::nullopt;
  return std::filesystem::path(env);
}

}  // namespace ordco
