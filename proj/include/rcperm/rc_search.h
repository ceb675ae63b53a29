// Copyright 2026 The rcperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RCPERM_RC_SEARCH_H_
#define RCPERM_RC_SEARCH_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcperm/permutation.h"
#include "rcperm/scoring.h"

namespace rcperm {

enum class SearchMode { kExhaustive, kFiltered };

std::string_view SearchModeName(SearchMode m);
// Throws std::invalid_argument for anything but "exhaustive"/"filtered".
SearchMode ParseSearchMode(std::string_view text);

// The maximizers of t over S_n.
struct RcSet {
  int n = 0;
  SwitchTotal t_max = 0;
  // Sorted by canonical text (lexicographic string order).
  std::vector<Permutation> perms;
  SearchMode mode = SearchMode::kExhaustive;

  friend bool operator==(const RcSet&, const RcSet&) = default;
};

inline constexpr int kExhaustiveGuard = 13;
inline constexpr std::size_t kDefaultSpillThreshold = 1'000'000;

struct SearchConfig {
  int n = 3;
  SearchMode mode = SearchMode::kExhaustive;
  // Number of OpenMP threads working the shard queue.
  int shard_count = 1;
  std::optional<std::filesystem::path> cache_dir;
  // Lifts the exhaustive-mode n <= 13 guard.
  bool allow_large = false;
  // Argmax sets larger than this are streamed to a temporary file.
  std::size_t spill_threshold = kDefaultSpillThreshold;
  // Called from the reducing thread as shards complete (done, total).
  std::function<void(std::int64_t, std::int64_t)> progress;
};

struct SearchStats {
  std::int64_t candidates = 0;
  std::int64_t shards = 0;
  bool from_cache = false;
  // Set when the cache write failed; the result is still valid.
  std::optional<std::string> cache_error;
};

// RC(n) via the OpenMP shard scan. With cache_dir set, a cached result is
// returned when present, otherwise the fresh result is stored.
// Throws GuardError / PreconditionError on invalid configs and
// IntegrityError on a corrupt cache file.
RcSet EnumerateRc(const SearchConfig& cfg, SearchStats* stats = nullptr);

// Single-threaded reference scan sharing no shard or reduction code with
// EnumerateRc: std::next_permutation over S_n (exhaustive) or one DFS over
// the filtered generator.
RcSet EnumerateRcSerial(int n, SearchMode mode);

// Number of permutations the filtered generator emits for n.
std::int64_t CandidateCount(int n);

// Filter predicates applied by the filtered generator, evaluated on a
// complete permutation. Used for naive cross-checks.
bool SatisfiesStructuralFilter(const Permutation& p);

// Cache file location for (n, mode) under `dir`.
std::filesystem::path CachePath(const std::filesystem::path& dir, int n,
                                SearchMode mode);
// Throws std::runtime_error on write failure.
void CacheStore(const RcSet& rc, const std::filesystem::path& dir);
// Empty when no file exists; IntegrityError when the file is unusable.
std::optional<RcSet> CacheLoad(int n, SearchMode mode,
                               const std::filesystem::path& dir);
// Loads whichever mode is cached, exhaustive first.
std::optional<RcSet> CacheLoad(int n, const std::filesystem::path& dir);

std::string RcSetToJson(const RcSet& rc);
RcSet RcSetFromJson(std::string_view text);

}  // namespace rcperm

#endif  // RCPERM_RC_SEARCH_H_
