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

#include "rosa/model/scenario_parser.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace rosa::model
{

namespace
{

std::string format_error(const std::string & message, int line, int column)
{
  if (line <= 0) {
    return message;
  }
  std::ostringstream out;
  out << "line " << line;
  if (column > 0) {
    out << ", column " << column;
  }
  out << ": " << message;
  return out.str();
}

}  // namespace

ScenarioError::ScenarioError(const std::string & message, int line, int column)
: std::runtime_error(format_error(message, line, column)),
  detail_(message), line_(line), column_(column)
{
}

const std::vector<std::string> & behavior_kinds()
{
  static const std::vector<std::string> kinds = {
    "search", "inspect", "recharge", "traverse", "timed", "check", "wait"};
  return kinds;
}

std::string to_string(MeasureKind kind)
{
  switch (kind) {
    case MeasureKind::Plain: return "measure";
    case MeasureKind::Quality: return "quality-attribute";
    case MeasureKind::Environmental: return "environmental-attribute";
  }
  return "measure";
}

std::string to_string(TimelineKind kind)
{
  switch (kind) {
    case TimelineKind::Measurement: return "measure";
    case TimelineKind::ComponentFailure: return "fail";
    case TimelineKind::ComponentRecovery: return "recover";
  }
  return "measure";
}

std::string to_string(MissionNodeKind kind)
{
  switch (kind) {
    case MissionNodeKind::Sequence: return "sequence";
    case MissionNodeKind::Fallback: return "fallback";
    case MissionNodeKind::Condition: return "condition";
    case MissionNodeKind::Action: return "action";
    case MissionNodeKind::Leaf: return "leaf";
  }
  return "sequence";
}

namespace
{

struct Token
{
  std::string text;
  int column;
};

struct Line
{
  int number;
  int indent;  // leading spaces
  std::vector<Token> tokens;
};

enum class Section { None, Model, Timeline, Plant, Mission };

// Splits one physical line, dropping comments. Tabs in indentation are
// rejected because mission nesting is indentation based.
Line tokenize(std::string_view raw, int number)
{
  Line line{number, 0, {}};
  auto hash = raw.find('#');
  if (hash != std::string_view::npos) {
    raw = raw.substr(0, hash);
  }
  if (!raw.empty() && raw.back() == '\r') {
    raw.remove_suffix(1);
  }
  std::size_t i = 0;
  while (i < raw.size() && raw[i] == ' ') {
    ++i;
  }
  if (i < raw.size() && raw[i] == '\t') {
    throw ScenarioError("tab characters are not allowed in indentation", number,
            static_cast<int>(i) + 1);
  }
  line.indent = static_cast<int>(i);
  while (i < raw.size()) {
    if (raw[i] == ' ' || raw[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') {
      ++i;
    }
    line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return line;
}

class Parser
{
public:
  ScenarioDocument run(std::string_view text)
  {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++number;
      Line line = tokenize(text.substr(pos, end - pos), number);
      if (!line.tokens.empty()) {
        lines.push_back(std::move(line));
      }
      pos = end + 1;
    }

    if (lines.empty()) {
      throw ScenarioError("missing header '" + std::string(kScenarioHeader) + "'", 1, 1);
    }
    const Line & header = lines.front();
    if (header.tokens.size() != 2 || header.tokens[0].text != "rosa-scenario") {
      throw ScenarioError(
              "expected header '" + std::string(kScenarioHeader) + "'", header.number,
              header.tokens[0].column);
    }
    if (header.tokens[1].text != "v1") {
      throw ScenarioError(
              "unsupported scenario version '" + header.tokens[1].text + "'", header.number,
              header.tokens[1].column);
    }

    Section section = Section::None;
    std::set<std::string> seen_sections;
    std::vector<const Line *> mission_lines;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const Line & line = lines[i];
      const Token & first = line.tokens.front();
      if (first.text.front() == '[') {
        if (line.tokens.size() != 1 || line.indent != 0) {
          throw ScenarioError("malformed section header", line.number, first.column);
        }
        section = section_of(first);
        if (!seen_sections.insert(first.text).second) {
          throw ScenarioError("duplicate section " + first.text, line.number, first.column);
        }
        current_line_ = line.number;
        continue;
      }
      switch (section) {
        case Section::None:
          throw ScenarioError("statement outside of any section", line.number, first.column);
        case Section::Model:
          require_flat(line);
          model_statement(line);
          break;
        case Section::Timeline:
          require_flat(line);
          timeline_statement(line);
          break;
        case Section::Plant:
          require_flat(line);
          plant_statement(line);
          break;
        case Section::Mission:
          mission_lines.push_back(&line);
          break;
      }
    }
    if (!mission_lines.empty()) {
      build_mission(mission_lines);
    }
    return std::move(doc_);
  }

private:
  Section section_of(const Token & tok)
  {
    if (tok.text == "[model]") {return Section::Model;}
    if (tok.text == "[timeline]") {return Section::Timeline;}
    if (tok.text == "[plant]") {return Section::Plant;}
    if (tok.text == "[mission]") {return Section::Mission;}
    throw ScenarioError("unknown section " + tok.text, current_line_, tok.column);
  }

  static void require_flat(const Line & line)
  {
    if (line.indent != 0) {
      throw ScenarioError("unexpected indentation", line.number, 1);
    }
  }

  [[noreturn]] static void fail(const Line & line, std::size_t index, const std::string & msg)
  {
    int column = index < line.tokens.size() ?
      line.tokens[index].column :
      line.tokens.back().column + static_cast<int>(line.tokens.back().text.size());
    throw ScenarioError(msg, line.number, column);
  }

  static const std::string & need(const Line & line, std::size_t index, const char * what)
  {
    if (index >= line.tokens.size()) {
      fail(line, index, std::string("expected ") + what);
    }
    return line.tokens[index].text;
  }

  static void expect_word(const Line & line, std::size_t index, const char * word)
  {
    if (index >= line.tokens.size() || line.tokens[index].text != word) {
      fail(line, index, std::string("expected '") + word + "'");
    }
  }

  static void expect_end(const Line & line, std::size_t index)
  {
    if (index < line.tokens.size()) {
      fail(line, index, "unexpected '" + line.tokens[index].text + "'");
    }
  }

  static double number(const Line & line, std::size_t index, const char * what)
  {
    const std::string & text = need(line, index, what);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
      fail(line, index, std::string("expected ") + what + ", got '" + text + "'");
    }
    return value;
  }

  static std::int64_t integer(const Line & line, std::size_t index, const char * what)
  {
    const std::string & text = need(line, index, what);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      fail(line, index, std::string("expected ") + what + ", got '" + text + "'");
    }
    return value;
  }

  static std::pair<std::string, std::string> key_value(const Line & line, std::size_t index)
  {
    const std::string & text = need(line, index, "KEY=VALUE");
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
      fail(line, index, "expected KEY=VALUE, got '" + text + "'");
    }
    return {text.substr(0, eq), text.substr(eq + 1)};
  }

  static bool is_assignment(const std::string & text)
  {
    auto eq = text.find('=');
    return eq != std::string::npos && eq > 0;
  }

  // Reads names up to the end of the line or the given stop word.
  static std::vector<std::string> names_until(
    const Line & line, std::size_t & index, const char * stop, const char * what)
  {
    std::vector<std::string> names;
    while (index < line.tokens.size() && (stop == nullptr || line.tokens[index].text != stop)) {
      names.push_back(line.tokens[index].text);
      ++index;
    }
    if (names.empty()) {
      fail(line, index, std::string("expected at least one ") + what);
    }
    return names;
  }

  std::optional<std::int64_t> optional_priority(const Line & line, std::size_t & index)
  {
    if (index >= line.tokens.size()) {
      return std::nullopt;
    }
    expect_word(line, index, "priority");
    auto value = integer(line, index + 1, "priority");
    index += 2;
    return value;
  }

  // -------------------------------------------------------------------------

  void model_statement(const Line & line)
  {
    const std::string & kw = line.tokens[0].text;
    auto & m = doc_.model;
    if (kw == "action") {
      m.actions.push_back({need(line, 1, "action name"), line.number});
      expect_end(line, 2);
    } else if (kw == "function") {
      FunctionDecl decl{need(line, 1, "function name"), false, line.number};
      std::size_t i = 2;
      if (i < line.tokens.size() && line.tokens[i].text == "always-improve") {
        decl.always_improve = true;
        ++i;
      }
      expect_end(line, i);
      m.functions.push_back(decl);
    } else if (kw == "component") {
      ComponentDecl decl;
      decl.name = need(line, 1, "component name");
      decl.line = line.number;
      std::set<std::string> flags;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        const std::string & t = line.tokens[i].text;
        std::string flag = t;
        if (t == "always-improve") {
          decl.always_improve = true;
        } else if (t == "lifecycle") {
          decl.lifecycle = true;
        } else if (is_assignment(t)) {
          auto [k, v] = key_value(line, i);
          flag = k;
          if (k == "package") {
            decl.package = v;
          } else if (k == "executable") {
            decl.executable = v;
          } else {
            fail(line, i, "unknown component option '" + k + "'");
          }
        } else {
          fail(line, i, "unknown component option '" + t + "'");
        }
        if (!flags.insert(flag).second) {
          fail(line, i, "repeated component option '" + flag + "'");
        }
      }
      m.components.push_back(decl);
    } else if (kw == "parameter") {
      ParameterDecl decl;
      decl.label = need(line, 1, "parameter label");
      auto [k, v] = key_value(line, 2);
      decl.key = k;
      decl.value = v;
      decl.line = line.number;
      expect_end(line, 3);
      m.parameters.push_back(decl);
    } else if (kw == "measure" || kw == "quality-attribute" || kw == "environmental-attribute") {
      MeasureKind kind = kw == "measure" ? MeasureKind::Plain :
        kw == "quality-attribute" ? MeasureKind::Quality : MeasureKind::Environmental;
      m.measures.push_back({need(line, 1, "measure name"), kind, line.number});
      expect_end(line, 2);
    } else if (kw == "functional-requirement") {
      FunctionalRequirementDecl decl;
      decl.action = need(line, 1, "action name");
      expect_word(line, 2, "requires");
      std::size_t i = 3;
      decl.functions = names_until(line, i, nullptr, "function");
      decl.line = line.number;
      m.requirements.push_back(decl);
    } else if (kw == "function-design") {
      FunctionDesignDecl decl;
      decl.name = need(line, 1, "function design name");
      expect_word(line, 2, "for");
      decl.function = need(line, 3, "function name");
      expect_word(line, 4, "uses");
      std::size_t i = 5;
      decl.components = names_until(line, i, "priority", "component");
      decl.priority = optional_priority(line, i);
      expect_end(line, i);
      decl.line = line.number;
      m.designs.push_back(decl);
    } else if (kw == "configuration") {
      ConfigurationDecl decl;
      decl.name = need(line, 1, "configuration name");
      expect_word(line, 2, "for");
      decl.component = need(line, 3, "component name");
      expect_word(line, 4, "sets");
      std::size_t i = 5;
      decl.parameters = names_until(line, i, "priority", "parameter");
      decl.priority = optional_priority(line, i);
      expect_end(line, i);
      decl.line = line.number;
      m.configurations.push_back(decl);
    } else if (kw == "constraint") {
      ConstraintDecl decl;
      decl.measure = need(line, 1, "measure name");
      decl.op = need(line, 2, "operator");
      static const std::set<std::string> ops = {">", ">=", "<", "<=", "=="};
      if (ops.count(decl.op) == 0) {
        fail(line, 2, "unknown operator '" + decl.op + "'");
      }
      decl.value = number(line, 3, "number");
      expect_word(line, 4, "on");
      decl.element = need(line, 5, "element name");
      expect_end(line, 6);
      decl.line = line.number;
      m.constraints.push_back(decl);
    } else if (kw == "estimation") {
      EstimationDecl decl;
      decl.measure = need(line, 1, "measure name");
      decl.type = need(line, 2, "'maximize' or 'minimize'");
      if (decl.type != "maximize" && decl.type != "minimize") {
        fail(line, 2, "expected 'maximize' or 'minimize'");
      }
      decl.value = number(line, 3, "number");
      expect_word(line, 4, "on");
      decl.element = need(line, 5, "element name");
      expect_end(line, 6);
      decl.line = line.number;
      m.estimations.push_back(decl);
    } else {
      fail(line, 0, "unknown model statement '" + kw + "'");
    }
  }

  void timeline_statement(const Line & line)
  {
    TimelineEvent ev;
    ev.line = line.number;
    ev.tick = integer(line, 0, "tick");
    if (ev.tick < 0) {
      fail(line, 0, "tick must be non-negative");
    }
    if (ev.tick < last_tick_) {
      fail(line, 0, "ticks must be non-decreasing");
    }
    last_tick_ = ev.tick;
    const std::string & kw = need(line, 1, "event kind");
    std::size_t i = 0;
    if (kw == "measure") {
      ev.kind = TimelineKind::Measurement;
      ev.target = need(line, 2, "measure name");
      ev.value = number(line, 3, "number");
      i = 4;
    } else if (kw == "fail" || kw == "recover") {
      ev.kind = kw == "fail" ? TimelineKind::ComponentFailure : TimelineKind::ComponentRecovery;
      ev.target = need(line, 2, "component name");
      i = 3;
    } else {
      fail(line, 1, "unknown timeline event '" + kw + "'");
    }
    if (i < line.tokens.size()) {
      expect_word(line, i, "label");
      ev.label = need(line, i + 1, "label");
      i += 2;
    }
    expect_end(line, i);
    doc_.timeline.push_back(ev);
  }

  void plant_statement(const Line & line)
  {
    const std::string & kw = line.tokens[0].text;
    auto & p = doc_.plant;
    if (kw == "set") {
      const std::string & key = need(line, 1, "setting name");
      const std::string & value = need(line, 2, "setting value");
      expect_end(line, 3);
      if (!p.settings.emplace(key, value).second) {
        fail(line, 1, "setting '" + key + "' given twice");
      }
    } else if (kw == "monitor") {
      MonitorDecl decl;
      decl.measure = need(line, 1, "measure name");
      decl.variable = need(line, 2, "plant variable");
      expect_word(line, 3, "every");
      decl.period = integer(line, 4, "period");
      if (decl.period < 1) {
        fail(line, 4, "period must be at least 1");
      }
      expect_end(line, 5);
      decl.line = line.number;
      p.monitors.push_back(decl);
    } else if (kw == "factor") {
      FactorDecl decl;
      decl.key = need(line, 1, "parameter key");
      decl.line = line.number;
      if (line.tokens.size() < 3) {
        fail(line, 2, "expected at least one VALUE=FACTOR");
      }
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        auto [k, v] = key_value(line, i);
        double f = 0.0;
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), f);
        if (ec != std::errc() || ptr != v.data() + v.size()) {
          fail(line, i, "factor must be a number");
        }
        decl.factors[k] = f;
      }
      p.factors.push_back(decl);
    } else if (kw == "corridor") {
      CorridorDecl decl;
      decl.name = need(line, 1, "corridor name");
      decl.from = need(line, 2, "start node");
      decl.to = need(line, 3, "end node");
      expect_word(line, 4, "length");
      decl.length = number(line, 5, "length");
      if (decl.length <= 0.0) {
        fail(line, 5, "length must be positive");
      }
      expect_end(line, 6);
      decl.line = line.number;
      p.corridors.push_back(decl);
    } else if (kw == "consumers") {
      std::size_t i = 1;
      auto names = names_until(line, i, nullptr, "component");
      p.consumers.insert(p.consumers.end(), names.begin(), names.end());
    } else if (kw == "behavior") {
      BehaviorDecl decl;
      decl.name = need(line, 1, "behavior name");
      decl.kind = need(line, 2, "behavior kind");
      decl.line = line.number;
      std::size_t i = 3;
      if (i < line.tokens.size() && line.tokens[i].text == "requires") {
        ++i;
        while (i < line.tokens.size() && !is_assignment(line.tokens[i].text)) {
          decl.requires_components.push_back(line.tokens[i].text);
          ++i;
        }
        if (decl.requires_components.empty()) {
          fail(line, i, "expected at least one component");
        }
      }
      for (; i < line.tokens.size(); ++i) {
        auto [k, v] = key_value(line, i);
        if (!decl.params.emplace(k, v).second) {
          fail(line, i, "behavior option '" + k + "' given twice");
        }
      }
      p.behaviors.push_back(decl);
    } else {
      fail(line, 0, "unknown plant statement '" + kw + "'");
    }
  }

  // -------------------------------------------------------------------------

  MissionNode mission_node(const Line & line)
  {
    MissionNode node;
    node.line = line.number;
    const std::string & kw = line.tokens[0].text;
    if (kw == "sequence" || kw == "fallback") {
      node.kind = kw == "sequence" ? MissionNodeKind::Sequence : MissionNodeKind::Fallback;
      if (line.tokens.size() > 1) {
        node.name = line.tokens[1].text;
      }
      expect_end(line, 2);
    } else if (kw == "condition") {
      node.kind = MissionNodeKind::Condition;
      node.action = need(line, 1, "action name");
      expect_end(line, 2);
    } else if (kw == "action") {
      node.kind = MissionNodeKind::Action;
      node.action = need(line, 1, "action name");
      node.behavior = need(line, 2, "behavior name");
      std::size_t i = 3;
      if (i < line.tokens.size()) {
        auto [k, v] = key_value(line, i);
        if (k != "prefer" || v.empty()) {
          fail(line, i, "expected prefer=MEASURE");
        }
        node.preferred_measure = v;
        ++i;
      }
      expect_end(line, i);
    } else if (kw == "leaf") {
      node.kind = MissionNodeKind::Leaf;
      node.behavior = need(line, 1, "behavior name");
      expect_end(line, 2);
    } else {
      fail(line, 0, "unknown mission node '" + kw + "'");
    }
    return node;
  }

  void build_mission(const std::vector<const Line *> & lines)
  {
    // Stack of open nodes by depth; each child is attached when it closes.
    std::vector<MissionNode> stack;
    auto close_to = [&stack](std::size_t depth) {
        while (stack.size() > depth) {
          MissionNode done = std::move(stack.back());
          stack.pop_back();
          stack.back().children.push_back(std::move(done));
        }
      };
    bool have_root = false;
    for (const Line * line : lines) {
      if (line->indent % 2 != 0) {
        throw ScenarioError("mission indentation must be a multiple of two spaces",
                line->number, 1);
      }
      std::size_t depth = static_cast<std::size_t>(line->indent / 2);
      MissionNode node = mission_node(*line);
      if (depth == 0) {
        if (have_root) {
          throw ScenarioError("mission must have a single root node", line->number, 1);
        }
        have_root = true;
        stack.push_back(std::move(node));
        continue;
      }
      if (depth > stack.size()) {
        throw ScenarioError("mission node indented too deeply", line->number, line->indent + 1);
      }
      close_to(depth);
      auto parent_kind = stack.back().kind;
      if (parent_kind != MissionNodeKind::Sequence && parent_kind != MissionNodeKind::Fallback) {
        throw ScenarioError(
                to_string(parent_kind) + " nodes cannot have children", line->number,
                line->indent + 1);
      }
      stack.push_back(std::move(node));
    }
    if (!stack.empty()) {
      close_to(1);
      doc_.mission = std::move(stack.front());
    }
  }

  ScenarioDocument doc_;
  std::int64_t last_tick_{0};
  int current_line_{0};
};

// ---------------------------------------------------------------------------
// writer

std::string number_text(double v)
{
  // Shortest text that reads back to the same double.
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    double back = 0.0;
    std::from_chars(buf, buf + std::char_traits<char>::length(buf), back);
    if (back == v) {
      break;
    }
  }
  return buf;
}

void write_mission(std::ostream & out, const MissionNode & node, int depth)
{
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(node.kind);
  switch (node.kind) {
    case MissionNodeKind::Sequence:
    case MissionNodeKind::Fallback:
      if (!node.name.empty()) {
        out << ' ' << node.name;
      }
      break;
    case MissionNodeKind::Condition:
      out << ' ' << node.action;
      break;
    case MissionNodeKind::Action:
      out << ' ' << node.action << ' ' << node.behavior;
      if (!node.preferred_measure.empty()) {
        out << " prefer=" << node.preferred_measure;
      }
      break;
    case MissionNodeKind::Leaf:
      out << ' ' << node.behavior;
      break;
  }
  out << '\n';
  for (const auto & child : node.children) {
    write_mission(out, child, depth + 1);
  }
}

void join(std::ostream & out, const std::vector<std::string> & names)
{
  for (const auto & n : names) {
    out << ' ' << n;
  }
}

}  // namespace

ScenarioDocument parse_scenario(std::string_view text)
{
  return Parser().run(text);
}

std::string write_scenario(const ScenarioDocument & doc)
{
  std::ostringstream out;
  out << kScenarioHeader << "\n\n[model]\n";
  const auto & m = doc.model;
  for (const auto & a : m.actions) {
    out << "action " << a.name << '\n';
  }
  for (const auto & f : m.functions) {
    out << "function " << f.name << (f.always_improve ? " always-improve" : "") << '\n';
  }
  for (const auto & c : m.components) {
    out << "component " << c.name;
    if (c.always_improve) {out << " always-improve";}
    if (!c.package.empty()) {out << " package=" << c.package;}
    if (!c.executable.empty()) {out << " executable=" << c.executable;}
    if (c.lifecycle) {out << " lifecycle";}
    out << '\n';
  }
  for (const auto & p : m.parameters) {
    out << "parameter " << p.label << ' ' << p.key << '=' << p.value << '\n';
  }
  for (const auto & ms : m.measures) {
    out << to_string(ms.kind) << ' ' << ms.name << '\n';
  }
  for (const auto & r : m.requirements) {
    out << "functional-requirement " << r.action << " requires";
    join(out, r.functions);
    out << '\n';
  }
  for (const auto & d : m.designs) {
    out << "function-design " << d.name << " for " << d.function << " uses";
    join(out, d.components);
    if (d.priority) {out << " priority " << *d.priority;}
    out << '\n';
  }
  for (const auto & c : m.configurations) {
    out << "configuration " << c.name << " for " << c.component << " sets";
    join(out, c.parameters);
    if (c.priority) {out << " priority " << *c.priority;}
    out << '\n';
  }
  for (const auto & c : m.constraints) {
    out << "constraint " << c.measure << ' ' << c.op << ' ' << number_text(c.value) << " on " <<
      c.element << '\n';
  }
  for (const auto & e : m.estimations) {
    out << "estimation " << e.measure << ' ' << e.type << ' ' << number_text(e.value) << " on " <<
      e.element << '\n';
  }

  if (!doc.timeline.empty()) {
    out << "\n[timeline]\n";
    for (const auto & ev : doc.timeline) {
      out << ev.tick << ' ' << to_string(ev.kind) << ' ' << ev.target;
      if (ev.kind == TimelineKind::Measurement) {
        out << ' ' << number_text(ev.value);
      }
      if (!ev.label.empty()) {
        out << " label " << ev.label;
      }
      out << '\n';
    }
  }

  const auto & p = doc.plant;
  if (!p.settings.empty() || !p.consumers.empty() || !p.monitors.empty() ||
    !p.factors.empty() || !p.corridors.empty() || !p.behaviors.empty())
  {
    out << "\n[plant]\n";
    for (const auto & [k, v] : p.settings) {
      out << "set " << k << ' ' << v << '\n';
    }
    if (!p.consumers.empty()) {
      out << "consumers";
      join(out, p.consumers);
      out << '\n';
    }
    for (const auto & mon : p.monitors) {
      out << "monitor " << mon.measure << ' ' << mon.variable << " every " << mon.period << '\n';
    }
    for (const auto & f : p.factors) {
      out << "factor " << f.key;
      for (const auto & [v, factor] : f.factors) {
        out << ' ' << v << '=' << number_text(factor);
      }
      out << '\n';
    }
    for (const auto & c : p.corridors) {
      out << "corridor " << c.name << ' ' << c.from << ' ' << c.to << " length " <<
        number_text(c.length) << '\n';
    }
    for (const auto & b : p.behaviors) {
      out << "behavior " << b.name << ' ' << b.kind;
      if (!b.requires_components.empty()) {
        out << " requires";
        join(out, b.requires_components);
      }
      for (const auto & [k, v] : b.params) {
        out << ' ' << k << '=' << v;
      }
      out << '\n';
    }
  }

  if (doc.mission) {
    out << "\n[mission]\n";
    write_mission(out, *doc.mission, 0);
  }
  return out.str();
}

}  // namespace rosa::model
