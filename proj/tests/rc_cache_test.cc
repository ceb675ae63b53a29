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

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"
#include "rcperm/errors.h"
#include "rcperm/rc_search.h"
#include "test_util.h"

namespace rcperm {
namespace {

using ::rcperm::testing::MakeTempDir;

RcSet Rc6() {
  SearchConfig cfg;
  cfg.n = 6;
  cfg.mode = SearchMode::kFiltered;
  return EnumerateRc(cfg);
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary | std::ios::trunc) << text;
}

TEST(RcCacheTest, StoreThenLoadIsIdentity) {
  const auto dir = MakeTempDir("cache");
  const RcSet rc = Rc6();
  CacheStore(rc, dir);
  const auto loaded = CacheLoad(6, SearchMode::kFiltered, dir);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(*loaded, rc);
  EXPECT_EQ(CacheLoad(6, dir), rc);
}

TEST(RcCacheTest, FileIsSelfDescribing) {
  const std::string json = RcSetToJson(Rc6());
  EXPECT_EQ(json,
            R"({"mode":"filtered","n":6,"perms":["3,2,6,1,5,4","3,5,1,6,2,4",)"
            R"("4,2,6,1,5,3","4,5,1,6,2,3"],"schema":1,"t_max":"64"})");
  EXPECT_EQ(RcSetFromJson(json), Rc6());
}

TEST(RcCacheTest, MissingFileIsEmpty) {
  const auto dir = MakeTempDir("cache-empty");
  EXPECT_FALSE(CacheLoad(99, SearchMode::kFiltered, dir).has_value());
  EXPECT_FALSE(CacheLoad(99, dir).has_value());
}

TEST(RcCacheTest, CorruptFilesRaiseIntegrityErrors) {
  const auto dir = MakeTempDir("cache-corrupt");
  const RcSet rc = Rc6();
  const auto path = CachePath(dir, 6, SearchMode::kFiltered);
  const std::string good = RcSetToJson(rc);

  WriteFile(path, good.substr(0, good.size() / 2));
  EXPECT_THROW(CacheLoad(6, SearchMode::kFiltered, dir), IntegrityError);

  // Well-formed JSON whose member does not attain t_max.
  std::string wrong = good;
  wrong.replace(wrong.find("3,2,6,1,5,4"), 11, "1,2,3,4,5,6");
  WriteFile(path, wrong);
  EXPECT_THROW(CacheLoad(6, SearchMode::kFiltered, dir), IntegrityError);

  std::string schema = good;
  schema.replace(schema.find("\"schema\":1"), 10, "\"schema\":7");
  WriteFile(path, schema);
  EXPECT_THROW(CacheLoad(6, SearchMode::kFiltered, dir), IntegrityError);

  // A file for n = 6 stored under another n's name.
  WriteFile(path, good);
  std::filesystem::copy_file(path, CachePath(dir, 7, SearchMode::kFiltered));
  EXPECT_THROW(CacheLoad(7, SearchMode::kFiltered, dir), IntegrityError);
  EXPECT_EQ(CacheLoad(6, SearchMode::kFiltered, dir), rc);
}

TEST(RcCacheTest, EnumerateUsesCache) {
  const auto dir = MakeTempDir("cache-enum");
  SearchConfig cfg;
  cfg.n = 7;
  cfg.mode = SearchMode::kFiltered;
  cfg.cache_dir = dir;
  SearchStats first, second;
  const RcSet a = EnumerateRc(cfg, &first);
  EXPECT_FALSE(first.from_cache);
  EXPECT_GT(first.candidates, 0);
  EXPECT_TRUE(std::filesystem::exists(CachePath(dir, 7, SearchMode::kFiltered)));
  const RcSet b = EnumerateRc(cfg, &second);
  EXPECT_TRUE(second.from_cache);
  EXPECT_EQ(a, b);
}

TEST(RcCacheTest, WriteFailureIsNonFatal) {
  const auto dir = MakeTempDir("cache-ro");
  const auto blocker = dir / "file";
  WriteFile(blocker, "x");
  SearchConfig cfg;
  cfg.n = 5;
  cfg.mode = SearchMode::kFiltered;
  cfg.cache_dir = blocker / "sub";  // parent is a regular file
  SearchStats stats;
  const RcSet rc = EnumerateRc(cfg, &stats);
  EXPECT_EQ(rc.perms.size(), 8u);
  EXPECT_TRUE(stats.cache_error.has_value());
}

}  // namespace
}  // namespace rcperm
