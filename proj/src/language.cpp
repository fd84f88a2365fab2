#include "conseq/language.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace conseq {

Statement Statement::make(StatementKind kind, std::optional<std::uint32_t> label) {
  if (kind == StatementKind::Source) {
    if (label) throw std::invalid_argument("source statement cannot carry a label");
    return Statement(kind, 0);
  }
  if (!label) throw std::invalid_argument("event statements require a label");
  if (*label == 0) throw std::invalid_argument("labels are non-zero naturals");
  return Statement(kind, *label);
}

Statement Statement::parse(std::string_view text) {
  if (text == "G") return source();
  StatementKind kind;
  std::string_view digits;
  if (text.starts_with("E'_")) {
    kind = StatementKind::NonEvent;
    digits = text.substr(3);
  } else if (text.starts_with("E_")) {
    kind = StatementKind::Event;
    digits = text.substr(2);
  } else {
    throw std::invalid_argument("malformed statement: '" + std::string(text) + "'");
  }
  std::uint32_t label = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), label);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed statement: '" + std::string(text) + "'");
  }
  return make(kind, label);
}

std::string to_string(const Statement& s) {
  switch (s.kind()) {
    case StatementKind::Source:
      return "G";
    case StatementKind::Event:
      return "E_" + std::to_string(*s.label());
    case StatementKind::NonEvent:
      return "E'_" + std::to_string(*s.label());
  }
  return {};
}

std::string to_string(const StatementSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : set) {
    if (!first) out += ',';
    out += to_string(s);
    first = false;
  }
  return out + "}";
}

std::string tick_render(std::uint32_t label) {
  if (label == 0) throw std::invalid_argument("labels are non-zero naturals");
  return std::string(label, '|');
}

Language::Language(StatementSet statements) : statements_(std::move(statements)) {
  if (statements_.empty()) throw std::invalid_argument("language must be non-empty");
  auto sources = std::count_if(statements_.begin(), statements_.end(),
                               [](const Statement& s) { return s.is_source(); });
  if (sources > 1) throw std::invalid_argument("language holds more than one source");
}

Language Language::trial_language(std::size_t size) {
  if (size == 0) throw std::invalid_argument("language must be non-empty");
  StatementSet out{Statement::source()};
  for (std::uint32_t j = 1; out.size() < size; ++j) {
    out.insert(Statement::event(j));
    if (out.size() < size) out.insert(Statement::non_event(j));
  }
  return Language(std::move(out));
}

}  // namespace conseq
