// Copyright 2026 The ROSA Engine Authors
//
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

#ifndef ORACLES__NAIVE_FIXPOINT_HPP_
#define ORACLES__NAIVE_FIXPOINT_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "rosa/era/store.hpp"

namespace rosa::oracles
{

struct NaiveResult
{
  std::map<era::InstanceId, std::string> status;
  std::set<era::InstanceId> required;
  int iterations{0};
};

/// Reference evaluation of the status rules: every element starts unknown and
/// all statuses are recomputed from the previous round until nothing changes
/// (Jacobi iteration). Reads the raw store only; shares no code with the
/// reasoner.
NaiveResult naive_fixpoint(const era::Store & store);

/// Random small model over the ROSA schema: a handful of actions, functions,
/// components, measures, designs, configurations, constraints, measurements,
/// failures, selections and open requests.
void populate_random_model(era::Store & store, std::uint64_t seed);

}  // namespace rosa::oracles

#endif  // ORACLES__NAIVE_FIXPOINT_HPP_
