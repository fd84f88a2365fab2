#include "conseq/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace conseq::io {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto pos = line.find(sep);
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::int64_t parse_i64(std::string_view field) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument("malformed integer field: '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, ptr);
}

std::string sequence_csv(const CumulativeSequence& seq) {
  std::ostringstream out;
  out << "n,a_n,freq_num,freq_den\n";
  for (const auto& pt : g_ap(seq)) {
    out << pt.trial << ',' << pt.successes << ',' << pt.successes << ',' << pt.trial << '\n';
  }
  return out.str();
}

CumulativeSequence parse_sequence_csv(std::string_view text) {
  auto rows = lines(text);
  if (rows.empty() || rows.front() != "n,a_n,freq_num,freq_den") {
    throw std::invalid_argument("missing sequence CSV header");
  }
  std::vector<std::int64_t> terms;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto f = split(rows[i], ',');
    if (f.size() != 4) throw std::invalid_argument("sequence CSV row needs 4 fields");
    const auto n = parse_i64(f[0]);
    const auto a = parse_i64(f[1]);
    if (n != static_cast<std::int64_t>(i) || parse_i64(f[2]) != a || parse_i64(f[3]) != n) {
      throw std::invalid_argument("inconsistent sequence CSV row " + std::to_string(i));
    }
    terms.push_back(a);
  }
  return CumulativeSequence(std::move(terms));
}

std::vector<Json> sequence_json(const CumulativeSequence& seq) {
  std::vector<Json> out;
  for (const auto& pt : g_ap(seq)) {
    out.push_back(Json{{"n", pt.trial}, {"a", pt.successes}, {"freq", {pt.successes, pt.trial}}});
  }
  return out;
}

std::string cells_csv(const CellSequences& cells) {
  std::ostringstream out;
  out << "t,assigned_cell";
  for (std::size_t k = 1; k <= cells.sequences.size(); ++k) out << ",a_" << k;
  out << '\n';
  for (std::size_t t = 1; t <= cells.assignment.cells.size(); ++t) {
    out << t << ',' << cells.assignment.cells[t - 1];
    for (const auto& seq : cells.sequences) out << ',' << seq.at(t);
    out << '\n';
  }
  return out.str();
}

CellSequences parse_cells_csv(std::string_view text) {
  auto rows = lines(text);
  if (rows.empty()) throw std::invalid_argument("missing cells CSV header");
  auto header = split(rows.front(), ',');
  if (header.size() < 3 || header[0] != "t" || header[1] != "assigned_cell") {
    throw std::invalid_argument("malformed cells CSV header");
  }
  const std::size_t m = header.size() - 2;
  for (std::size_t k = 1; k <= m; ++k) {
    if (header[k + 1] != "a_" + std::to_string(k)) {
      throw std::invalid_argument("malformed cells CSV header");
    }
  }
  CellSequences out;
  std::vector<std::vector<std::int64_t>> terms(m);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto f = split(rows[i], ',');
    if (f.size() != m + 2 || parse_i64(f[0]) != static_cast<std::int64_t>(i)) {
      throw std::invalid_argument("malformed cells CSV row " + std::to_string(i));
    }
    const auto cell = parse_i64(f[1]);
    if (cell < 1 || cell > static_cast<std::int64_t>(m)) {
      throw std::invalid_argument("cell index outside 1..m");
    }
    out.assignment.cells.push_back(static_cast<std::uint32_t>(cell));
    for (std::size_t k = 0; k < m; ++k) terms[k].push_back(parse_i64(f[k + 2]));
  }
  for (auto& t : terms) out.sequences.emplace_back(std::move(t));
  return out;
}

std::vector<Json> cells_json(const CellSequences& cells) {
  std::vector<Json> out;
  for (std::size_t t = 1; t <= cells.assignment.cells.size(); ++t) {
    Json counts = Json::array();
    for (const auto& seq : cells.sequences) counts.push_back(seq.at(t));
    out.push_back(Json{{"trial", t}, {"cell", cells.assignment.cells[t - 1]}, {"counts", counts}});
  }
  return out;
}

std::vector<Json> trace_json(const LabeledEventSequence& trace) {
  std::vector<Json> out;
  for (const auto& s : trace.entries()) {
    out.push_back(Json{{"trial", *s.label()}, {"event", s.kind() == StatementKind::Event}});
  }
  return out;
}

std::string reports_csv(const std::vector<stats::StreamReport>& reports) {
  std::ostringstream out;
  out << "test,stream,statistic,alpha,pass,n,seed,prng_version\n";
  for (const auto& r : reports) {
    out << r.report.test_name << ',' << stats::to_string(r.stream) << ','
        << format_double(r.report.statistic) << ',' << format_double(r.report.alpha) << ','
        << (r.report.pass ? "true" : "false") << ',' << r.report.n << ',';
    if (r.seed) out << *r.seed;
    out << ',' << stats::kPrngVersion << '\n';
  }
  return out.str();
}

std::vector<Json> reports_json(const std::vector<stats::StreamReport>& reports) {
  std::vector<Json> out;
  for (const auto& r : reports) {
    Json row{{"test", r.report.test_name},
             {"stream", stats::to_string(r.stream)},
             {"statistic", r.report.statistic},
             {"alpha", r.report.alpha},
             {"pass", r.report.pass},
             {"n", r.report.n}};
    if (r.seed) row["seed"] = *r.seed;
    row["prng_version"] = stats::kPrngVersion;
    out.push_back(std::move(row));
  }
  return out;
}

std::string ndjson(const std::vector<Json>& rows) {
  std::string out;
  for (const auto& row : rows) out += row.dump() + '\n';
  return out;
}

}  // namespace conseq::io
