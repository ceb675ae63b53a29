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

// Shard generation and the argmax reduction shared by the parallel search
// and the candidate counter. Not part of the public API.

#ifndef RCPERM_SRC_SEARCH_INTERNAL_H_
#define RCPERM_SRC_SEARCH_INTERNAL_H_

#include <cstdio>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "rcperm/scoring.h"

namespace rcperm::internal {

enum class Orientation { kAlternating, kReverse };

// Root of one disjoint subtree of the generation tree. Exhaustive shards
// fix positions 1 and 2 (`first`, `second`). Filtered shards fix the
// orientation, both endpoints and position 2.
struct ShardTask {
  Orientation orientation = Orientation::kAlternating;
  int first = 0;
  int second = 0;
  int last = 0;
};

using Visitor = std::function<void(std::span<const int>)>;

std::vector<ShardTask> ExhaustiveTasks(int n);
void ScanExhaustiveTask(int n, const ShardTask& task, const Visitor& emit);

std::vector<ShardTask> FilteredTasks(int n);
void ScanFilteredTask(int n, const ShardTask& task, const Visitor& emit);

// Running (max, argmax set) for one shard. Members past the threshold are
// streamed to an anonymous temporary file.
class ArgmaxAccumulator {
 public:
  ArgmaxAccumulator(int n, std::size_t spill_threshold);

  void Offer(std::span<const int> values, SwitchTotal score);
  // Keeps the larger maximum; unions member sets on a tie.
  void Merge(ArgmaxAccumulator&& other);

  bool empty() const { return !any_; }
  SwitchTotal best() const { return best_; }
  std::size_t count() const { return count_; }
  bool spilled() const { return spilled_ > 0; }

  std::vector<std::vector<int>> TakeMembers();

 private:
  struct FileCloser {
    void operator()(std::FILE* f) const { std::fclose(f); }
  };

  void Append(std::span<const int> values);
  void Spill();

  int n_;
  std::size_t threshold_;
  bool any_ = false;
  SwitchTotal best_ = 0;
  std::vector<int> flat_;
  std::size_t count_ = 0;
  std::size_t spilled_ = 0;
  std::unique_ptr<std::FILE, FileCloser> spill_;
};

}  // namespace rcperm::internal

#endif  // RCPERM_SRC_SEARCH_INTERNAL_H_
