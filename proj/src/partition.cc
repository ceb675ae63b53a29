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

#include "rcperm/partition.h"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "json.hpp"
#include "rcperm/errors.h"

namespace rcperm {
namespace {

Direction DirectionOf(const Permutation& p, const std::vector<int>& positions) {
  if (positions.size() < 2) return Direction::kSingleton;
  return p.at(positions[0]) < p.at(positions[1]) ? Direction::kIncreasing
                                                 : Direction::kDecreasing;
}

MonotonePiece MakePiece(const Permutation& p, std::vector<int> positions) {
  std::sort(positions.begin(), positions.end());
  const Direction d = DirectionOf(p, positions);
  return {PositionSet(std::move(positions)), d};
}

// Backtracking over chain assignments for a fixed chain budget.
class ChainSearch {
 public:
  ChainSearch(const Permutation& p, int budget)
      : p_(p), n_(p.size()), budget_(budget) {
    chains_.reserve(budget);
  }

  bool Solve() { return Assign(0); }

  std::vector<std::vector<int>> TakeChains() {
    std::vector<std::vector<int>> out;
    for (auto& c : chains_) out.push_back(std::move(c.positions));
    return out;
  }

 private:
  struct Chain {
    int dir = 0;  // 0 unset, +1 increasing, -1 decreasing
    int last = 0;
    std::vector<int> positions;
  };

  bool Assign(int i) {
    if (i == n_) return true;
    const int v = p_[i];

    // Existing chains, tightest last value first.
    std::vector<int> order;
    for (int c = 0; c < static_cast<int>(chains_.size()); ++c) {
      const Chain& ch = chains_[c];
      if (ch.dir == 0 || (ch.dir > 0 ? ch.last < v : ch.last > v)) {
        order.push_back(c);
      }
    }
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::abs(chains_[a].last - v) < std::abs(chains_[b].last - v);
    });
    for (int c : order) {
      Chain& ch = chains_[c];
      const int saved_dir = ch.dir;
      const int saved_last = ch.last;
      if (ch.dir == 0) ch.dir = ch.last < v ? 1 : -1;
      ch.last = v;
      ch.positions.push_back(i + 1);
      if (Assign(i + 1)) return true;
      ch.positions.pop_back();
      ch.dir = saved_dir;
      ch.last = saved_last;
    }

    // A new chain may only be opened as the next unused index, which also
    // puts position 1 in chain 1.
    if (static_cast<int>(chains_.size()) < budget_) {
      chains_.push_back({0, v, {i + 1}});
      if (Assign(i + 1)) return true;
      chains_.pop_back();
    }
    return false;
  }

  const Permutation& p_;
  int n_;
  int budget_;
  std::vector<Chain> chains_;
};

bool BlockMonotone(const Permutation& p, const std::vector<int>& block) {
  if (block.size() < 3) return true;
  const bool up = p.at(block[0]) < p.at(block[1]);
  for (size_t i = 1; i + 1 < block.size(); ++i) {
    if ((p.at(block[i]) < p.at(block[i + 1])) != up) return false;
  }
  return true;
}

// Maximal contiguous increasing runs of the values at `positions`.
std::vector<std::vector<int>> IncreasingRuns(const Permutation& p,
                                             const std::vector<int>& positions) {
  std::vector<std::vector<int>> runs;
  for (int pos : positions) {
    if (runs.empty() || p.at(runs.back().back()) > p.at(pos)) {
      runs.push_back({pos});
    } else {
      runs.back().push_back(pos);
    }
  }
  return runs;
}

std::vector<int> Concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

std::string_view CoverSourceName(CoverSource s) {
  return s == CoverSource::kExact ? "exact" : "constructive";
}

int LowerBound(const Permutation& p) {
  const int longest = LongestMonotone(p).positions.size();
  return (p.size() + longest - 1) / longest;
}

PartitionResult PartitionNumber(const Permutation& p) {
  for (int k = LowerBound(p); k <= p.size(); ++k) {
    ChainSearch search(p, k);
    if (!search.Solve()) continue;
    PartitionCover cover{p, {}, CoverSource::kExact};
    for (auto& chain : search.TakeChains()) {
      cover.pieces.push_back(MakePiece(p, std::move(chain)));
    }
    return {k, std::move(cover)};
  }
  // Every position alone is always a cover, so the loop returns at k = n.
  throw std::logic_error("partition search exhausted");
}

int PartitionNumberOracle(const Permutation& p, int guard) {
  const int n = p.size();
  if (n > guard) {
    throw GuardError("partition oracle limited to n <= " +
                     std::to_string(guard));
  }
  // Restricted growth strings label[0] = 0, label[i] <= max(prefix) + 1
  // enumerate each set partition exactly once.
  std::vector<int> label(n, 0);
  int best = n;
  auto evaluate = [&](int blocks) {
    std::vector<std::vector<int>> members(blocks);
    for (int i = 0; i < n; ++i) members[label[i]].push_back(i + 1);
    for (const auto& block : members) {
      if (!BlockMonotone(p, block)) return;
    }
    best = std::min(best, blocks);
  };
  auto recurse = [&](auto& self, int i, int blocks) -> void {
    if (i == n) {
      evaluate(blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  label[0] = 0;
  recurse(recurse, 1, 1);
  return best;
}

int BoundFormula(int n) {
  if (n < 3) throw PreconditionError("bound formula requires n >= 3");
  const int below = (n - 2 + 1) / 2;  // ceil((n - 2) / 2)
  return below / 2 + 2;
}

PartitionCover ConstructiveCover(const Permutation& p,
                                 ConstructiveTrace* trace) {
  const int n = p.size();
  if (n < 3) throw PreconditionError("constructive cover requires n >= 3");
  if (std::abs(p.at(1) - p.at(n)) != 1) {
    throw PreconditionError("endpoints of " + p.ToString() +
                            " do not differ by 1");
  }
  const bool alternating = IsAlternating(p);
  if (!alternating && !IsReverseAlternating(p)) {
    throw PreconditionError(p.ToString() + " is not alternating");
  }

  // Work on the reverse-alternating form; positions are unchanged by
  // complementing, so the pieces map straight back.
  const Permutation q = alternating ? Complement(p) : p;

  std::vector<int> bottom_positions, top_positions;
  for (int pos = 2; pos <= n - 1; ++pos) {
    (pos % 2 == 0 ? bottom_positions : top_positions).push_back(pos);
  }
  const auto bottom = IncreasingRuns(q, bottom_positions);
  const auto top = IncreasingRuns(q, top_positions);
  const int a = static_cast<int>(top.size());
  const int b = static_cast<int>(bottom.size());

  std::vector<std::vector<int>> groups;
  std::vector<bool> bottom_used(b, false), top_used(a, false);

  // The first top run follows the start point.
  if (a >= 1) {
    groups.push_back(Concat({1}, top[0]));
    top_used[0] = true;
  } else {
    groups.push_back({1});
  }
  // The k-th bottom run precedes the (k+1)-st top run.
  for (int k = 1; k <= std::min(b, a - 1); ++k) {
    groups.push_back(Concat(bottom[k - 1], top[k]));
    bottom_used[k - 1] = top_used[k] = true;
  }
  // With more bottom runs than top runs the second-to-last bottom run
  // takes the end point; otherwise the last one does.
  EndpointPairing pairing = EndpointPairing::kLastBottomRun;
  int designated = b;
  if (b > a && b >= 2) {
    designated = b - 1;
    pairing = EndpointPairing::kSecondToLastBottomRun;
  }
  if (designated >= 1 && !bottom_used[designated - 1]) {
    groups.push_back(Concat(bottom[designated - 1], {n}));
    bottom_used[designated - 1] = true;
  } else {
    groups.push_back({n});
    pairing = EndpointPairing::kEndpointAlone;
  }
  for (int k = 0; k < b; ++k) {
    if (!bottom_used[k]) groups.push_back(bottom[k]);
  }
  for (int k = 0; k < a; ++k) {
    if (!top_used[k]) groups.push_back(top[k]);
  }

  PartitionCover cover{p, {}, CoverSource::kConstructive};
  for (auto& group : groups) {
    std::sort(group.begin(), group.end());
    for (size_t i = 1; i < group.size(); ++i) {
      if (q.at(group[i - 1]) >= q.at(group[i])) {
        std::string where;
        for (int pos : group) where += std::to_string(pos) + " ";
        throw ConstructionError("joined group at positions " + where +
                                "of " + p.ToString() + " is not monotone");
      }
    }
    cover.pieces.push_back(MakePiece(p, std::move(group)));
  }
  if (auto bad = ValidateCover(cover)) {
    throw ConstructionError(*bad);
  }

  if (trace) {
    trace->complemented = alternating;
    trace->top_runs = a;
    trace->bottom_runs = b;
    trace->pairing = pairing;
    trace->predicted_bottom_runs = BoundFormula(n) - 1;
  }
  return cover;
}

BoundRow Pmax(int n, const RcSet& rc) {
  if (rc.perms.empty()) throw PreconditionError("empty RC set");
  if (rc.n != n) throw PreconditionError("RC set is for a different n");
  int best = 0;
  for (const Permutation& p : rc.perms) {
    best = std::max(best, PartitionNumber(p).k);
  }
  return {n, best, BoundFormula(n)};
}

std::optional<std::string> ValidateCover(const PartitionCover& cover) {
  const Permutation& p = cover.perm;
  const int n = p.size();
  std::vector<int> owner(n + 1, -1);
  for (int idx = 0; idx < cover.size(); ++idx) {
    const MonotonePiece& piece = cover.pieces[idx];
    if (piece.positions.empty()) return "piece " + std::to_string(idx) + " is empty";
    for (int pos : piece.positions.positions()) {
      if (pos > n) return "position " + std::to_string(pos) + " out of range";
      if (owner[pos] >= 0) {
        return "position " + std::to_string(pos) + " appears in two pieces";
      }
      owner[pos] = idx;
    }
    const std::vector<int> values = Subsequence(p, piece.positions);
    Direction actual = Direction::kSingleton;
    if (values.size() >= 2) {
      const bool up = values[0] < values[1];
      for (size_t i = 1; i < values.size(); ++i) {
        if ((values[i - 1] < values[i]) != up) {
          return "piece " + std::to_string(idx) + " is not monotone";
        }
      }
      actual = up ? Direction::kIncreasing : Direction::kDecreasing;
    }
    if (actual != piece.direction) {
      return "piece " + std::to_string(idx) + " has the wrong direction tag";
    }
  }
  for (int pos = 1; pos <= n; ++pos) {
    if (owner[pos] < 0) return "position " + std::to_string(pos) + " uncovered";
  }
  return std::nullopt;
}

std::string CoverToJson(const PartitionCover& cover) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const MonotonePiece& piece : cover.pieces) {
    const auto span = piece.positions.positions();
    nlohmann::json positions = std::vector<int>(span.begin(), span.end());
    pieces.push_back({{"positions", positions},
                      {"values", Subsequence(cover.perm, piece.positions)},
                      {"direction", std::string(DirectionName(piece.direction))}});
  }
  nlohmann::json doc = {{"perm", cover.perm.ToString()},
                        {"pieces", std::move(pieces)},
                        {"source", std::string(CoverSourceName(cover.source))}};
  return doc.dump();
}

std::string BoundRowToCsv(const BoundRow& row) {
  return std::to_string(row.n) + "," + std::to_string(row.p_max) + "," +
         std::to_string(row.bound);
}

}  // namespace rcperm
