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

#include "rcperm/rc_search.h"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <utility>

#include "rcperm/errors.h"
#include "search_internal.h"

namespace rcperm {
namespace internal {

ArgmaxAccumulator::ArgmaxAccumulator(int n, std::size_t spill_threshold)
    : n_(n), threshold_(std::max<std::size_t>(spill_threshold, 1)) {}

void ArgmaxAccumulator::Offer(std::span<const int> values, SwitchTotal score) {
  if (!any_ || score > best_) {
    any_ = true;
    best_ = score;
    flat_.clear();
    count_ = 0;
    spilled_ = 0;
    spill_.reset();
  } else if (score < best_) {
    return;
  }
  Append(values);
}

void ArgmaxAccumulator::Append(std::span<const int> values) {
  flat_.insert(flat_.end(), values.begin(), values.end());
  ++count_;
  if (flat_.size() / n_ >= threshold_) Spill();
}

void ArgmaxAccumulator::Spill() {
  if (!spill_) {
    spill_.reset(std::tmpfile());
    if (!spill_) throw std::runtime_error("cannot open argmax spill file");
  }
  if (std::fwrite(flat_.data(), sizeof(int), flat_.size(), spill_.get()) !=
      flat_.size()) {
    throw std::runtime_error("argmax spill write failed");
  }
  spilled_ += flat_.size() / n_;
  flat_.clear();
}

void ArgmaxAccumulator::Merge(ArgmaxAccumulator&& other) {
  if (other.empty()) return;
  if (empty() || other.best_ > best_) {
    *this = std::move(other);
    return;
  }
  if (other.best_ < best_) return;
  for (const auto& member : other.TakeMembers()) Append(member);
}

std::vector<std::vector<int>> ArgmaxAccumulator::TakeMembers() {
  std::vector<std::vector<int>> out;
  out.reserve(count_);
  if (spill_) {
    std::fflush(spill_.get());
    std::rewind(spill_.get());
    std::vector<int> row(n_);
    for (std::size_t r = 0; r < spilled_; ++r) {
      if (std::fread(row.data(), sizeof(int), n_, spill_.get()) !=
          static_cast<std::size_t>(n_)) {
        throw std::runtime_error("argmax spill read failed");
      }
      out.push_back(row);
    }
    spill_.reset();
  }
  for (std::size_t off = 0; off < flat_.size(); off += n_) {
    out.emplace_back(flat_.begin() + off, flat_.begin() + off + n_);
  }
  flat_.clear();
  count_ = 0;
  spilled_ = 0;
  return out;
}

std::vector<ShardTask> ExhaustiveTasks(int n) {
  std::vector<ShardTask> tasks;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) tasks.push_back({Orientation::kAlternating, a, b, 0});
    }
  }
  return tasks;
}

void ScanExhaustiveTask(int n, const ShardTask& task, const Visitor& emit) {
  std::vector<int> v = {task.first, task.second};
  for (int x = 1; x <= n; ++x) {
    if (x != task.first && x != task.second) v.push_back(x);
  }
  do {
    emit(v);
  } while (std::next_permutation(v.begin() + 2, v.end()));
}

namespace {

// 1-based position q (2 <= q <= n) is entered by an ascent from q-1.
bool AscentInto(Orientation o, int q) {
  const bool even = q % 2 == 0;
  return o == Orientation::kAlternating ? even : !even;
}

// Interior positions entered by an ascent are the peaks.
bool IsPeak(Orientation o, int q) { return AscentInto(o, q); }

bool Fits(Orientation o, int q, int prev, int value) {
  return AscentInto(o, q) ? prev < value : prev > value;
}

// Fills positions 3..n-1 under three constraints: alternation in the
// task's orientation, |p1 - pn| = 1 (fixed by the task), and every
// interior peak above both endpoints.
class FilteredDfs {
 public:
  FilteredDfs(int n, const ShardTask& task, const Visitor& emit)
      : n_(n),
        task_(task),
        emit_(emit),
        hi_(std::max(task.first, task.last)),
        values_(n),
        used_(n + 1, false) {
    values_[0] = task.first;
    values_[1] = task.second;
    values_[n - 1] = task.last;
    used_[task.first] = used_[task.last] = used_[task.second] = true;
    for (int q = 3; q <= n - 1; ++q) peaks_left_ += IsPeak(task.orientation, q);
    above_left_ = n - hi_ - (task.second > hi_);
  }

  void Run() { Place(3); }

 private:
  void Place(int q) {
    if (q == n_) {
      emit_(values_);
      return;
    }
    const Orientation o = task_.orientation;
    const bool peak = IsPeak(o, q);
    const int prev = values_[q - 2];
    for (int v = 1; v <= n_; ++v) {
      if (used_[v] || !Fits(o, q, prev, v)) continue;
      if (peak && v <= hi_) continue;
      if (q == n_ - 1 && !Fits(o, n_, v, task_.last)) continue;
      const int above = v > hi_;
      // Not enough large values left for the remaining peaks.
      if (above_left_ - above < peaks_left_ - peak) continue;
      used_[v] = true;
      values_[q - 1] = v;
      peaks_left_ -= peak;
      above_left_ -= above;
      Place(q + 1);
      peaks_left_ += peak;
      above_left_ += above;
      used_[v] = false;
    }
  }

  int n_;
  ShardTask task_;
  const Visitor& emit_;
  int hi_;
  std::vector<int> values_;
  std::vector<bool> used_;
  int peaks_left_ = 0;
  int above_left_ = 0;
};

}  // namespace

std::vector<ShardTask> FilteredTasks(int n) {
  std::vector<ShardTask> tasks;
  for (Orientation o : {Orientation::kAlternating, Orientation::kReverse}) {
    for (int first = 1; first <= n; ++first) {
      for (int last : {first - 1, first + 1}) {
        if (last < 1 || last > n) continue;
        const int hi = std::max(first, last);
        for (int second = 1; second <= n; ++second) {
          if (second == first || second == last) continue;
          if (!Fits(o, 2, first, second)) continue;
          if (IsPeak(o, 2) && second <= hi) continue;
          if (n == 3 && !Fits(o, 3, second, last)) continue;
          tasks.push_back({o, first, second, last});
        }
      }
    }
  }
  return tasks;
}

void ScanFilteredTask(int n, const ShardTask& task, const Visitor& emit) {
  FilteredDfs(n, task, emit).Run();
}

}  // namespace internal

namespace {

using internal::ArgmaxAccumulator;
using internal::ShardTask;

void CheckConfig(const SearchConfig& cfg) {
  if (cfg.n < 3) {
    throw PreconditionError("RC search requires n >= 3, got " +
                            std::to_string(cfg.n));
  }
  if (cfg.n > kMaxScoredLength) {
    throw GuardError("RC search supports n <= 64");
  }
  if (cfg.shard_count < 1) {
    throw PreconditionError("shard_count must be >= 1");
  }
  if (cfg.mode == SearchMode::kExhaustive && cfg.n > kExhaustiveGuard &&
      !cfg.allow_large) {
    throw GuardError("exhaustive search limited to n <= " +
                     std::to_string(kExhaustiveGuard) +
                     " without override, got " + std::to_string(cfg.n));
  }
}

std::vector<ShardTask> TasksFor(int n, SearchMode mode) {
  return mode == SearchMode::kExhaustive ? internal::ExhaustiveTasks(n)
                                         : internal::FilteredTasks(n);
}

void ScanTask(int n, SearchMode mode, const ShardTask& task,
              const internal::Visitor& emit) {
  if (mode == SearchMode::kExhaustive) {
    internal::ScanExhaustiveTask(n, task, emit);
  } else {
    internal::ScanFilteredTask(n, task, emit);
  }
}

void SortCanonical(std::vector<Permutation>& perms) {
  std::sort(perms.begin(), perms.end(),
            [](const Permutation& a, const Permutation& b) {
              return a.ToString() < b.ToString();
            });
}

RcSet Compute(const SearchConfig& cfg, SearchStats* stats) {
  const int n = cfg.n;
  const std::vector<ShardTask> tasks = TasksFor(n, cfg.mode);
  const auto num_tasks = static_cast<std::int64_t>(tasks.size());

  ArgmaxAccumulator global(n, cfg.spill_threshold);
  std::int64_t candidates = 0;
  std::int64_t done = 0;
  std::exception_ptr failure;

#pragma omp parallel num_threads(cfg.shard_count)
  {
    ArgmaxAccumulator local_best(n, cfg.spill_threshold);
    std::int64_t local_candidates = 0;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t t = 0; t < num_tasks; ++t) {
      try {
        ArgmaxAccumulator shard(n, cfg.spill_threshold);
        ScanTask(n, cfg.mode, tasks[t], [&](std::span<const int> v) {
          ++local_candidates;
          shard.Offer(v, TotalSwitchesKernel(v));
        });
        local_best.Merge(std::move(shard));
      } catch (...) {
#pragma omp critical(rcperm_failure)
        if (!failure) failure = std::current_exception();
      }
      if (cfg.progress) {
#pragma omp critical(rcperm_progress)
        cfg.progress(++done, num_tasks);
      }
    }
#pragma omp critical(rcperm_reduce)
    {
      try {
        global.Merge(std::move(local_best));
      } catch (...) {
        if (!failure) failure = std::current_exception();
      }
      candidates += local_candidates;
    }
  }
  if (failure) std::rethrow_exception(failure);

  RcSet rc;
  rc.n = n;
  rc.mode = cfg.mode;
  rc.t_max = global.best();
  for (auto& member : global.TakeMembers()) {
    rc.perms.emplace_back(std::move(member));
  }
  SortCanonical(rc.perms);
  if (stats) {
    stats->candidates = candidates;
    stats->shards = num_tasks;
  }
  return rc;
}

}  // namespace

std::string_view SearchModeName(SearchMode m) {
  return m == SearchMode::kExhaustive ? "exhaustive" : "filtered";
}

SearchMode ParseSearchMode(std::string_view text) {
  if (text == "exhaustive") return SearchMode::kExhaustive;
  if (text == "filtered") return SearchMode::kFiltered;
  throw std::invalid_argument("unknown search mode '" + std::string(text) +
                              "'");
}

RcSet EnumerateRc(const SearchConfig& cfg, SearchStats* stats) {
  CheckConfig(cfg);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  st = SearchStats{};

  if (cfg.cache_dir) {
    if (auto cached = CacheLoad(cfg.n, cfg.mode, *cfg.cache_dir)) {
      st.from_cache = true;
      return *std::move(cached);
    }
  }
  RcSet rc = Compute(cfg, &st);
  if (cfg.cache_dir) {
    try {
      CacheStore(rc, *cfg.cache_dir);
    } catch (const std::exception& e) {
      st.cache_error = e.what();
      std::cerr << "warning: cache write failed: " << e.what() << "\n";
    }
  }
  return rc;
}

RcSet EnumerateRcSerial(int n, SearchMode mode) {
  if (n < 3) throw PreconditionError("RC search requires n >= 3");
  RcSet rc;
  rc.n = n;
  rc.mode = mode;
  bool any = false;
  auto offer = [&](std::span<const int> v) {
    const SwitchTotal t = TotalSwitchesKernel(v);
    if (!any || t > rc.t_max) {
      any = true;
      rc.t_max = t;
      rc.perms.clear();
    }
    if (t == rc.t_max) rc.perms.emplace_back(std::vector<int>(v.begin(), v.end()));
  };
  if (mode == SearchMode::kExhaustive) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    do {
      offer(v);
    } while (std::next_permutation(v.begin(), v.end()));
  } else {
    for (const ShardTask& task : internal::FilteredTasks(n)) {
      internal::ScanFilteredTask(n, task, offer);
    }
  }
  SortCanonical(rc.perms);
  return rc;
}

std::int64_t CandidateCount(int n) {
  if (n < 3) throw PreconditionError("candidate count requires n >= 3");
  std::int64_t count = 0;
  for (const ShardTask& task : internal::FilteredTasks(n)) {
    internal::ScanFilteredTask(n, task,
                               [&](std::span<const int>) { ++count; });
  }
  return count;
}

bool SatisfiesStructuralFilter(const Permutation& p) {
  const int n = p.size();
  if (n < 3) return false;
  const bool alt = IsAlternating(p);
  if (!alt && !IsReverseAlternating(p)) return false;
  if (std::abs(p.at(1) - p.at(n)) != 1) return false;
  const int hi = std::max(p.at(1), p.at(n));
  // Alternating: peaks at even positions. Reverse: at odd positions.
  for (int q = 2; q <= n - 1; ++q) {
    const bool peak = (q % 2 == 0) == alt;
    if (peak && p.at(q) <= hi) return false;
  }
  return true;
}

}  // namespace rcperm
