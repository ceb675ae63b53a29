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

#ifndef RCPERM_GOLDEN_H_
#define RCPERM_GOLDEN_H_

#include <map>
#include <string>
#include <vector>

#include "rcperm/partition.h"

namespace rcperm {

// Reference roller coaster sets for n = 3..9, compact digit form.
const std::map<int, std::vector<std::string>>& GoldenRcLists();

// Reference (n, P_max(n), bound) rows for n = 3..14.
const std::vector<BoundRow>& GoldenBoundTable();

}  // namespace rcperm

#endif  // RCPERM_GOLDEN_H_
