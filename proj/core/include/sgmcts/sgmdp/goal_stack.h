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

#ifndef SGMCTS_SGMDP_GOAL_STACK_H_
#define SGMCTS_SGMDP_GOAL_STACK_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sgmcts {

class EmptyGoalStack : public std::logic_error {
 public:
  EmptyGoalStack() : std::logic_error("goal stack is empty") {}
};

// Ordered stack of open goals. The bottom element is the root goal; only the
// top element is ever handed to policies and environment predicates.
// Interior goals are reachable solely through serialization.
template <typename Goal>
class GoalStack {
 public:
  GoalStack() = default;
  explicit GoalStack(Goal root) { goals_.push_back(std::move(root)); }

  bool empty() const { return goals_.empty(); }
  std::size_t size() const { return goals_.size(); }

  const Goal& top() const {
    if (goals_.empty()) throw EmptyGoalStack();
    return goals_.back();
  }

  GoalStack Pushed(Goal goal) const {
    GoalStack next = *this;
    next.goals_.push_back(std::move(goal));
    return next;
  }

  // The same stack without its last element.
  GoalStack RemoveLast() const {
    if (goals_.empty()) throw EmptyGoalStack();
    GoalStack next = *this;
    next.goals_.pop_back();
    return next;
  }

  // Bottom-to-top rendering, one `format(goal)` per element, joined by " | ".
  template <typename Format>
  std::string Serialize(Format&& format) const {
    std::string out = "[";
    for (std::size_t i = 0; i < goals_.size(); ++i) {
      if (i > 0) out += " | ";
      out += format(goals_[i]);
    }
    out += "]";
    return out;
  }

  friend bool operator==(const GoalStack& a, const GoalStack& b) {
    return a.goals_ == b.goals_;
  }

 private:
  std::vector<Goal> goals_;
};

}  // namespace sgmcts

#endif  // SGMCTS_SGMDP_GOAL_STACK_H_
