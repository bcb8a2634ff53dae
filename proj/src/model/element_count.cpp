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

#include "rosa/model/element_count.hpp"

#include "rosa/model/rosa_schema.hpp"

namespace rosa::model
{

ElementCount count_elements(const era::Store & store)
{
  ElementCount count;
  if (!store.has_schema()) {
    return count;
  }
  const auto & schema = store.schema();
  for (auto id : store.all()) {
    const auto & type = store.get(id).type_name;
    if (!schema.is_relation(type)) {
      ++count.entities;
    } else if (is_design_time_relation(type)) {
      ++count.relations;
    }
  }
  return count;
}

}  // namespace rosa::model
