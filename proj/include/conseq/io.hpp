#pragma once

// Text formats shared by the CLI and the golden tests.
//
//   sequence CSV   n,a_n,freq_num,freq_den      freq is the raw pair (a_n, n)
//   sequence JSON  {"n":..,"a":..,"freq":[num,den]}
//   cells CSV      t,assigned_cell,a_1,...,a_m
//   cells JSON     {"trial":t,"cell":k,"counts":[...]}
//   trace JSON     {"trial":j,"event":true|false}
//   report JSON    {"test","stream","statistic","alpha","pass","n","seed"?,"prng_version"}
//
// JSON rows are emitted one object per line.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "conseq/cell_dist.hpp"
#include "conseq/event_seq.hpp"
#include "conseq/freq_seq.hpp"
#include "conseq/stats.hpp"

namespace conseq::io {

using Json = nlohmann::ordered_json;

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

std::string sequence_csv(const CumulativeSequence& seq);
CumulativeSequence parse_sequence_csv(std::string_view text);
std::vector<Json> sequence_json(const CumulativeSequence& seq);

std::string cells_csv(const CellSequences& cells);
CellSequences parse_cells_csv(std::string_view text);
std::vector<Json> cells_json(const CellSequences& cells);

std::vector<Json> trace_json(const LabeledEventSequence& trace);

std::string reports_csv(const std::vector<stats::StreamReport>& reports);
std::vector<Json> reports_json(const std::vector<stats::StreamReport>& reports);

/// One compact JSON object per line.
std::string ndjson(const std::vector<Json>& rows);

}  // namespace conseq::io
