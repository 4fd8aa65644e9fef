// Copyright 2026 The sgmcts Authors
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


#ifndef SGMCTS_TESTS_SUPPORT_TRACE_REPLAY_H_
#define SGMCTS_TESTS_SUPPORT_TRACE_REPLAY_H_

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <vector>

namespace sgmcts::testing {

struct ReplayedNode {
  std::int64_t parent = -1;
  std::int64_t visits = 0;
  double value = 0.0;
  std::vector<std::int64_t> children;
  std::string status = "Open";
};

// Rebuilds the search tree from a trace log and checks, iteration by
// iteration, the bookkeeping laws a correct search obeys. Every violation is
// described in `violations`.
struct TraceReplay {
  std::map<std::int64_t, ReplayedNode> nodes;
  std::int64_t iterations = 0;
  std::vector<std::string> violations;
};

TraceReplay ReplayTrace(std::istream& trace, int max_children);

}  // namespace sgmcts::testing

#endif  // SGMCTS_TESTS_SUPPORT_TRACE_REPLAY_H_
