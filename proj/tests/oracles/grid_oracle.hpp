// Copyright 2026 The regcap Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef REGCAP_TESTS_ORACLES_GRID_ORACLE_HPP_
#define REGCAP_TESTS_ORACLES_GRID_ORACLE_HPP_

#include "regcap/hourahead.hpp"

namespace regcap::oracle {

struct GridResult {
  bool feasible = false;
  double objective = 0.0;
  double r = 0.0;
  double p = 0.0;
};

// Brute-force optimum of the hour-t core (future block ignored): revenue
// minus deviation and closed-form degradation cost, over an n x n grid.
// R spans [0, largest feasible R]; for each R the P grid spans the feasible
// interval, found by bisection since the cones are convex. The problem's
// cone data is re-evaluated here with its own formula.
GridResult grid_search(const hourahead::HourAheadProblem& prob, int n);

}  // namespace regcap::oracle

#endif  // REGCAP_TESTS_ORACLES_GRID_ORACLE_HPP_
