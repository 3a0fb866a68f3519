// Copyright 2026 The cgt-domineering Authors
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

#include "cgt/evaluator.hpp"

#include <algorithm>
#include <vector>

namespace cgt::domineering {

GameId Evaluator::evaluate(const GridPosition& p) {
  std::vector<GridPosition> parts = decompose(p);
  if (parts.size() == 1) return evaluate_component(parts.front());
  std::stable_sort(parts.begin(), parts.end(), [](const GridPosition& a, const GridPosition& b) {
    return a.empty_count() < b.empty_count();
  });
  GameId sum = store_.zero();
  for (const GridPosition& part : parts) sum = store_.add(sum, evaluate_component(part));
  return sum;
}

GameId Evaluator::evaluate_component(const GridPosition& component) {
  if (component.empty_count() <= 1) return store_.zero();
  const GridPosition key = normalize(component);
  if (auto hit = table_.find(key)) return *hit;

  std::vector<GameId> left;
  std::vector<GameId> right;
  for (const GridPosition& q : left_moves(key)) left.push_back(evaluate(q));
  for (const GridPosition& q : right_moves(key)) right.push_back(evaluate(q));
  return table_.insert(key, store_.construct(std::move(left), std::move(right)));
}

Dyadic grid_temperature(Evaluator& evaluator, Thermography& thermography, const GridPosition& p,
                        ThermographMethod method) {
  return thermography.temperature(evaluator.evaluate(p), method);
}

}  // namespace cgt::domineering
