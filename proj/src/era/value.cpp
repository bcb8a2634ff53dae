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

#include "rosa/era/value.hpp"

#include <cstdio>

namespace rosa::era
{

std::string_view to_string(ValueKind kind)
{
  switch (kind) {
    case ValueKind::String: return "string";
    case ValueKind::Double: return "double";
    case ValueKind::Integer: return "integer";
    case ValueKind::Boolean: return "boolean";
    case ValueKind::Datetime: return "datetime";
  }
  return "unknown";
}

ValueKind Value::kind() const
{
  switch (data_.index()) {
    case 0: return ValueKind::String;
    case 1: return ValueKind::Double;
    case 2: return ValueKind::Integer;
    case 3: return ValueKind::Boolean;
    default: return ValueKind::Datetime;
  }
}

const std::string & Value::as_string() const
{
  if (const auto * s = std::get_if<std::string>(&data_)) {
    return *s;
  }
  throw TypeError("value is a " + std::string(era::to_string(kind())) + ", not a string");
}

double Value::as_double() const
{
  if (const auto * d = std::get_if<double>(&data_)) {
    return *d;
  }
  if (const auto * i = std::get_if<std::int64_t>(&data_)) {
    return static_cast<double>(*i);
  }
  throw TypeError("value is a " + std::string(era::to_string(kind())) + ", not a double");
}

std::int64_t Value::as_integer() const
{
  if (const auto * i = std::get_if<std::int64_t>(&data_)) {
    return *i;
  }
  throw TypeError("value is a " + std::string(era::to_string(kind())) + ", not an integer");
}

bool Value::as_boolean() const
{
  if (const auto * b = std::get_if<bool>(&data_)) {
    return *b;
  }
  throw TypeError("value is a " + std::string(era::to_string(kind())) + ", not a boolean");
}

Datetime Value::as_datetime() const
{
  if (const auto * t = std::get_if<Datetime>(&data_)) {
    return *t;
  }
  throw TypeError("value is a " + std::string(era::to_string(kind())) + ", not a datetime");
}

std::optional<double> Value::numeric() const
{
  switch (kind()) {
    case ValueKind::Double: return std::get<double>(data_);
    case ValueKind::Integer: return static_cast<double>(std::get<std::int64_t>(data_));
    case ValueKind::Datetime: return static_cast<double>(std::get<Datetime>(data_).tick);
    default: return std::nullopt;
  }
}

std::string Value::to_string() const
{
  switch (kind()) {
    case ValueKind::String: return std::get<std::string>(data_);
    case ValueKind::Double: {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(data_));
        return buf;
      }
    case ValueKind::Integer: return std::to_string(std::get<std::int64_t>(data_));
    case ValueKind::Boolean: return std::get<bool>(data_) ? "true" : "false";
    case ValueKind::Datetime: return std::to_string(std::get<Datetime>(data_).tick);
  }
  return {};
}

}  // namespace rosa::era
