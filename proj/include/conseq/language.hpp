#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace conseq {

enum class StatementKind : std::uint8_t { Source, Event, NonEvent };

/// A statement of the trial language: the source G, or an event E_j /
/// non-event E'_j carrying a trial label j >= 1.
///
/// Ordering puts G first, then sorts by label, with E_j before E'_j. This is
/// the canonical order used for rendering and for iteration over sets.
class Statement {
 public:
  /// Throws std::invalid_argument on a labeled source, an unlabeled
  /// event/non-event, or label 0.
  static Statement make(StatementKind kind, std::optional<std::uint32_t> label = std::nullopt);

  static Statement source() { return Statement(StatementKind::Source, 0); }
  static Statement event(std::uint32_t label) { return make(StatementKind::Event, label); }
  static Statement non_event(std::uint32_t label) { return make(StatementKind::NonEvent, label); }

  /// Inverse of to_string: "G", "E_3", "E'_3".
  static Statement parse(std::string_view text);

  StatementKind kind() const { return kind_; }
  bool is_source() const { return kind_ == StatementKind::Source; }
  std::optional<std::uint32_t> label() const {
    return is_source() ? std::nullopt : std::optional<std::uint32_t>(label_);
  }

  friend bool operator==(const Statement&, const Statement&) = default;
  friend std::strong_ordering operator<=>(const Statement& a, const Statement& b) {
    if (auto c = b.is_source() <=> a.is_source(); c != 0) return c;
    if (auto c = a.label_ <=> b.label_; c != 0) return c;
    return a.kind_ <=> b.kind_;
  }

 private:
  Statement(StatementKind kind, std::uint32_t label) : kind_(kind), label_(label) {}

  StatementKind kind_;
  std::uint32_t label_;  // 0 for the source
};

using StatementSet = std::set<Statement>;

std::string to_string(const Statement& s);
/// "{G,E_1,E'_2}" in canonical order.
std::string to_string(const StatementSet& set);

/// Tally rendering of a trial label: `label` copies of '|'.
std::string tick_render(std::uint32_t label);

/// A finite, non-empty statement language with at most one source.
class Language {
 public:
  explicit Language(StatementSet statements);

  /// G followed by E_1, E'_1, E_2, E'_2, ... truncated to `size` statements.
  static Language trial_language(std::size_t size);

  const StatementSet& statements() const { return statements_; }
  std::size_t size() const { return statements_.size(); }
  bool contains(const Statement& s) const { return statements_.count(s) != 0; }
  std::vector<Statement> ordered() const { return {statements_.begin(), statements_.end()}; }

 private:
  StatementSet statements_;
};

}  // namespace conseq
