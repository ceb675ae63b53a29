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

#include "rcperm/golden.h"

namespace rcperm {

const std::map<int, std::vector<std::string>>& GoldenRcLists() {
  static const auto* lists = new std::map<int, std::vector<std::string>>{
      {3, {"132", "213", "231", "312"}},
      {4, {"2143", "2413", "3142", "3412"}},
      {5, {"24153", "25143", "31524", "32514", "34152", "35142", "41523",
           "42513"}},
      {6, {"326154", "351624", "426153", "451623"}},
      {7, {"3517264", "3527164", "3617254", "3627154", "4261735", "4271635",
           "4361725", "4371625", "4517263", "4527163", "4617253", "4627153",
           "5261734", "5271634", "5361724", "5371624"}},
      {8, {"43718265", "46281735", "53718264", "56281734"}},
      {9, {"471639285", "471936285", "472639185", "472936185", "481639275",
           "481936275", "482639175", "482936175", "528174936", "528471936",
           "529174836", "529471836", "538174926", "538471926", "539174826",
           "539471826", "571639284", "571936284", "572639184", "572936184",
           "581639274", "581936274", "582639174", "582936174", "628174935",
           "628471935", "629174835", "629471835", "638174925", "638471925",
           "639174825", "639471825"}},
  };
  return *lists;
}

const std::vector<BoundRow>& GoldenBoundTable() {
  static const auto* rows = new std::vector<BoundRow>{
      {3, 2, 2},  {4, 2, 2},  {5, 2, 3},  {6, 3, 3},
      {7, 3, 3},  {8, 3, 3},  {9, 4, 4},  {10, 4, 4},
      {11, 4, 4}, {12, 4, 4}, {13, 5, 5}, {14, 5, 5},
  };
  return *rows;
}

}  // namespace rcperm
