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

#include <algorithm>
#include <set>

#include "rosa/era/store.hpp"

namespace rosa::era
{

namespace
{

// A check that can run once every variable it mentions is bound.
struct Check
{
  enum class Kind { Attr, Role } kind{Kind::Attr};
  std::string var;  // subject (attr owner or relation)
  AttrPredicate attr;
  RoleConstraint role;
};

struct Step
{
  const Clause * clause{nullptr};
  std::vector<Check> checks;  // runnable right after this step binds its var
};

struct Compiled
{
  std::vector<Step> steps;
  std::vector<Check> initial;  // only mention pre-bound variables
};

bool compare(const Value & lhs, CompareOp op, const Value & rhs)
{
  auto ln = lhs.numeric();
  auto rn = rhs.numeric();
  const bool numeric = ln && rn;
  switch (op) {
    case CompareOp::Eq: return numeric ? *ln == *rn : lhs == rhs;
    case CompareOp::Ne: return numeric ? *ln != *rn : !(lhs == rhs);
    default: break;
  }
  if (numeric) {
    switch (op) {
      case CompareOp::Lt: return *ln < *rn;
      case CompareOp::Le: return *ln <= *rn;
      case CompareOp::Gt: return *ln > *rn;
      case CompareOp::Ge: return *ln >= *rn;
      default: return false;
    }
  }
  if (lhs.is_string() && rhs.is_string()) {
    const auto & a = lhs.as_string();
    const auto & b = rhs.as_string();
    switch (op) {
      case CompareOp::Lt: return a < b;
      case CompareOp::Le: return a <= b;
      case CompareOp::Gt: return a > b;
      case CompareOp::Ge: return a >= b;
      default: return false;
    }
  }
  return false;
}

class Matcher
{
public:
  Matcher(const Store & store, const DerivedAttributes & derived)
  : store_(store), derived_(derived) {}

  Compiled compile(const std::vector<Clause> & clauses, const std::set<std::string> & prebound,
    bool negation) const
  {
    Compiled out;
    std::map<std::string, int> bound_at;  // -1 for prebound
    for (const auto & v : prebound) {
      bound_at[v] = -1;
    }
    // first pass: which clause binds which var
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      const Clause & c = clauses[i];
      if (c.var.empty()) {
        throw StoreError("pattern clause without a variable");
      }
      if (c.type.empty()) {
        continue;
      }
      if (bound_at.count(c.var)) {
        throw StoreError("variable '$" + c.var + "' bound twice");
      }
      if (!store_.schema().has_type(c.type)) {
        throw StoreError("pattern references unknown type '" + c.type + "'");
      }
      bound_at[c.var] = static_cast<int>(i);
    }
    auto where = [&](const std::string & var) -> int {
        auto it = bound_at.find(var);
        if (it == bound_at.end()) {
          throw StoreError(
                  std::string(negation ? "unbound negation variable" : "unbound variable") +
                  " '$" + var + "'");
        }
        return it->second;
      };

    out.steps.resize(clauses.size());
    auto place = [&](int idx, Check check) {
        if (idx < 0) {
          out.initial.push_back(std::move(check));
        } else {
          out.steps[static_cast<std::size_t>(idx)].checks.push_back(std::move(check));
        }
      };
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      const Clause & c = clauses[i];
      out.steps[i].clause = c.type.empty() ? nullptr : &c;
      const int subject = where(c.var);
      for (const auto & a : c.attrs) {
        Check ch;
        ch.kind = Check::Kind::Attr;
        ch.var = c.var;
        ch.attr = a;
        place(c.type.empty() ? std::max(subject, static_cast<int>(i)) : subject, std::move(ch));
      }
      for (const auto & r : c.roles) {
        Check ch;
        ch.kind = Check::Kind::Role;
        ch.var = c.var;
        ch.role = r;
        int idx = std::max(subject, where(r.player_var));
        if (c.type.empty()) {
          idx = std::max(idx, static_cast<int>(i));
        }
        place(idx, std::move(ch));
      }
    }
    return out;
  }

  bool run_check(const Check & check, const Binding & b) const
  {
    const Instance & subject = store_.get(b.at(check.var));
    if (check.kind == Check::Kind::Role) {
      const auto & f = subject.fillers(check.role.role);
      return std::binary_search(f.begin(), f.end(), b.at(check.role.player_var));
    }
    std::optional<Value> derived;
    if (derived_) {
      derived = derived_(subject, check.attr.attr);
    }
    const Value * value = derived ? &*derived : subject.get(check.attr.attr);
    switch (check.attr.op) {
      case CompareOp::Has: return value != nullptr;
      case CompareOp::Absent: return value == nullptr;
      default: return value != nullptr && compare(*value, check.attr.op, check.attr.value);
    }
  }

  template<typename Visit>
  void solve(const Compiled & plan, std::size_t idx, Binding & b, const Visit & visit) const
  {
    if (idx == plan.steps.size()) {
      visit(b);
      return;
    }
    const Step & step = plan.steps[idx];
    auto checks_pass = [&]() {
        return std::all_of(
          step.checks.begin(), step.checks.end(),
          [&](const Check & c) {return run_check(c, b);});
      };
    if (!step.clause) {
      if (checks_pass()) {
        solve(plan, idx + 1, b, visit);
      }
      return;
    }
    for (InstanceId id : store_.instances_of(step.clause->type)) {
      b[step.clause->var] = id;
      if (checks_pass()) {
        solve(plan, idx + 1, b, visit);
      }
    }
    b.erase(step.clause->var);
  }

private:
  const Store & store_;
  const DerivedAttributes & derived_;
};

}  // namespace

std::vector<Binding> Store::match(const Pattern & pattern, const DerivedAttributes & derived) const
{
  require_schema();
  Matcher m(*this, derived);
  Compiled positive = m.compile(pattern.clauses, {}, false);

  std::set<std::string> positive_vars;
  for (const auto & c : pattern.clauses) {
    if (!c.type.empty()) {
      positive_vars.insert(c.var);
    }
  }
  std::vector<Compiled> negations;
  for (const auto & block : pattern.negations) {
    negations.push_back(m.compile(block.clauses, positive_vars, true));
  }

  std::vector<Binding> results;
  Binding b;
  if (!std::all_of(
      positive.initial.begin(), positive.initial.end(),
      [&](const Check & c) {return m.run_check(c, b);}))
  {
    return results;
  }
  m.solve(
    positive, 0, b, [&](const Binding & full) {
      for (const auto & neg : negations) {
        bool pre = std::all_of(
          neg.initial.begin(), neg.initial.end(),
          [&](const Check & c) {return m.run_check(c, full);});
        if (!pre) {
          continue;
        }
        bool found = false;
        Binding nb = full;
        m.solve(neg, 0, nb, [&](const Binding &) {found = true;});
        if (found) {
          return;
        }
      }
      results.push_back(full);
    });
  return results;
}

}  // namespace rosa::era
