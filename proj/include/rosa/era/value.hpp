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

#ifndef ROSA__ERA__VALUE_HPP_
#define ROSA__ERA__VALUE_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace rosa::era
{

/// Simulation timestamp. One tick is one simulated second.
struct Datetime
{
  std::int64_t tick{0};
  auto operator<=>(const Datetime &) const = default;
};

enum class ValueKind { String, Double, Integer, Boolean, Datetime };

std::string_view to_string(ValueKind kind);

/// Typed attribute value.
class Value
{
public:
  Value() = default;
  Value(std::string v) : data_(std::move(v)) {}  // NOLINT
  Value(const char * v) : data_(std::string(v)) {}  // NOLINT
  Value(double v) : data_(v) {}  // NOLINT
  Value(std::int64_t v) : data_(v) {}  // NOLINT
  Value(int v) : data_(static_cast<std::int64_t>(v)) {}  // NOLINT
  Value(bool v) : data_(v) {}  // NOLINT
  Value(Datetime v) : data_(v) {}  // NOLINT

  ValueKind kind() const;

  bool is_string() const {return std::holds_alternative<std::string>(data_);}
  bool is_double() const {return std::holds_alternative<double>(data_);}
  bool is_integer() const {return std::holds_alternative<std::int64_t>(data_);}
  bool is_boolean() const {return std::holds_alternative<bool>(data_);}
  bool is_datetime() const {return std::holds_alternative<Datetime>(data_);}

  const std::string & as_string() const;
  double as_double() const;  // integers widen
  std::int64_t as_integer() const;
  bool as_boolean() const;
  Datetime as_datetime() const;

  /// Numeric view used by ordering predicates (double, integer, datetime).
  std::optional<double> numeric() const;

  std::string to_string() const;

  bool operator==(const Value & other) const {return data_ == other.data_;}
  bool operator<(const Value & other) const {return data_ < other.data_;}

private:
  std::variant<std::string, double, std::int64_t, bool, Datetime> data_{std::string{}};
};

class TypeError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

}  // namespace rosa::era

#endif  // ROSA__ERA__VALUE_HPP_
