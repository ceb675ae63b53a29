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

// On-disk RC set cache. One JSON file per (n, mode); every load re-scores
// the stored permutations so a damaged file can never pass as a result.

#include <fstream>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "rcperm/errors.h"
#include "rcperm/rc_search.h"

namespace rcperm {
namespace {

constexpr int kSchemaVersion = 1;

using nlohmann::json;

RcSet Decode(const json& doc) {
  if (!doc.is_object()) throw IntegrityError("cache root is not an object");
  if (doc.value("schema", -1) != kSchemaVersion) {
    throw IntegrityError("unsupported cache schema");
  }
  RcSet rc;
  rc.n = doc.at("n").get<int>();
  rc.mode = ParseSearchMode(doc.at("mode").get<std::string>());
  rc.t_max = ParseDecimal(doc.at("t_max").get<std::string>());
  for (const auto& item : doc.at("perms")) {
    rc.perms.push_back(Parse(item.get<std::string>()));
  }
  return rc;
}

void CheckConsistent(const RcSet& rc) {
  if (rc.perms.empty()) throw IntegrityError("cache holds no permutations");
  std::string prev;
  for (const Permutation& p : rc.perms) {
    if (p.size() != rc.n) {
      throw IntegrityError("cached permutation " + p.ToString() +
                           " has wrong length");
    }
    if (TotalSwitchesKernel(p.values()) != rc.t_max) {
      throw IntegrityError("cached permutation " + p.ToString() +
                           " does not attain t_max");
    }
    std::string text = p.ToString();
    if (!prev.empty() && text <= prev) {
      throw IntegrityError("cached permutations not sorted and unique");
    }
    prev = std::move(text);
  }
}

}  // namespace

std::string RcSetToJson(const RcSet& rc) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["n"] = rc.n;
  doc["mode"] = std::string(SearchModeName(rc.mode));
  doc["t_max"] = ToDecimal(rc.t_max);
  json perms = json::array();
  for (const Permutation& p : rc.perms) perms.push_back(p.ToString());
  doc["perms"] = std::move(perms);
  return doc.dump();
}

RcSet RcSetFromJson(std::string_view text) {
  try {
    return Decode(json::parse(text));
  } catch (const IntegrityError&) {
    throw;
  } catch (const std::exception& e) {
    throw IntegrityError(std::string("malformed RC set: ") + e.what());
  }
}

std::filesystem::path CachePath(const std::filesystem::path& dir, int n,
                                SearchMode mode) {
  return dir / ("rc-" + std::to_string(n) + "-" +
                std::string(SearchModeName(mode)) + ".json");
}

void CacheStore(const RcSet& rc, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create cache dir " + dir.string() +
                             ": " + ec.message());
  }
  const auto path = CachePath(dir, rc.n, rc.mode);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << RcSetToJson(rc) << "\n";
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw std::runtime_error("cannot rename " + tmp.string() + ": " +
                             ec.message());
  }
}

std::optional<RcSet> CacheLoad(int n, SearchMode mode,
                               const std::filesystem::path& dir) {
  const auto path = CachePath(dir, n, mode);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  RcSet rc = RcSetFromJson(buffer.str());
  if (rc.n != n || rc.mode != mode) {
    throw IntegrityError(path.string() + " describes a different search");
  }
  try {
    CheckConsistent(rc);
  } catch (const IntegrityError& e) {
    throw IntegrityError(path.string() + ": " + e.what());
  }
  return rc;
}

std::optional<RcSet> CacheLoad(int n, const std::filesystem::path& dir) {
  if (auto rc = CacheLoad(n, SearchMode::kExhaustive, dir)) return rc;
  return CacheLoad(n, SearchMode::kFiltered, dir);
}

}  // namespace rcperm
