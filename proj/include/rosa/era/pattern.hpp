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

#ifndef ROSA__ERA__PATTERN_HPP_
#define ROSA__ERA__PATTERN_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rosa/era/value.hpp"

namespace rosa::era
{

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge, Has, Absent };

/// `attr op value`. `Has` only requires the attribute to be present and
/// `Absent` requires it to be missing; both ignore `value`.
struct AttrPredicate
{
  std::string attr;
  CompareOp op{CompareOp::Eq};
  Value value;
};

/// The clause's relation has `player_var` among the fillers of `role`.
struct RoleConstraint
{
  std::string role;
  std::string player_var;
};

/// Binds `var` to instances of `type` (subtypes included). A clause with an
/// empty type refers to a variable bound by an earlier clause and only adds
/// predicates to it.
struct Clause
{
  std::string var;
  std::string type;
  std::vector<AttrPredicate> attrs;
  std::vector<RoleConstraint> roles;
};

struct NegationBlock
{
  std::vector<Clause> clauses;
};

/// Conjunctive match pattern with negation-as-failure blocks.
struct Pattern
{
  std::vector<Clause> clauses;
  std::vector<NegationBlock> negations;

  Pattern & add(Clause clause)
  {
    clauses.push_back(std::move(clause));
    return *this;
  }
  Pattern & exclude(NegationBlock block)
  {
    negations.push_back(std::move(block));
    return *this;
  }
};

}  // namespace rosa::era

#endif  // ROSA__ERA__PATTERN_HPP_
