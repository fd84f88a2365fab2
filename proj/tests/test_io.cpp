#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "conseq/io.hpp"

using namespace conseq;
using namespace conseq::io;

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.0), "0");
  EXPECT_EQ(format_double(0.01), "0.01");
  EXPECT_EQ(format_double(1.0 / 3.0), "0.3333333333333333");
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    double v = dist(rng);
    ASSERT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
  }
}

TEST(SequenceCsv, Golden) {
  auto seq = build_ap_prefix(Probability(1, 2), 4);
  EXPECT_EQ(sequence_csv(seq), "n,a_n,freq_num,freq_den\n1,0,0,1\n2,1,1,2\n3,1,1,3\n4,2,2,4\n");
  EXPECT_EQ(parse_sequence_csv(sequence_csv(seq)), seq);
}

TEST(SequenceCsv, RoundTripAndRejects) {
  auto seq = build_nonconvergent(Probability(1, 3), Probability(1, 2), 500).seq;
  EXPECT_EQ(parse_sequence_csv(sequence_csv(seq)), seq);
  EXPECT_THROW(parse_sequence_csv(""), std::invalid_argument);
  EXPECT_THROW(parse_sequence_csv("n,a_n,freq_num,freq_den\n1,0,0,2\n"), std::invalid_argument);
  EXPECT_THROW(parse_sequence_csv("n,a_n,freq_num,freq_den\n1,x,x,1\n"), std::invalid_argument);
  EXPECT_THROW(parse_sequence_csv("n,a_n,freq_num,freq_den\n1,2,2,1\n"), std::invalid_argument);
}

TEST(SequenceJson, Rows) {
  auto rows = sequence_json(build_ap_prefix(Probability(1, 2), 2));
  EXPECT_EQ(ndjson(rows), "{\"n\":1,\"a\":0,\"freq\":[0,1]}\n{\"n\":2,\"a\":1,\"freq\":[1,2]}\n");
}

TEST(CellsCsv, GoldenAndRoundTrip) {
  auto cs = build_cell_sequences(ProbabilityVector::parse("1/4,1/2,1/4"), 3);
  EXPECT_EQ(cells_csv(cs), "t,assigned_cell,a_1,a_2,a_3\n1,2,0,1,0\n2,1,1,1,0\n3,3,1,1,1\n");
  auto big = build_cell_sequences(ProbabilityVector::parse("1/6,1/3,1/2"), 1000);
  auto back = parse_cells_csv(cells_csv(big));
  EXPECT_EQ(back.assignment, big.assignment);
  EXPECT_EQ(back.sequences, big.sequences);
  EXPECT_THROW(parse_cells_csv("t,cell,a_1\n"), std::invalid_argument);
  EXPECT_THROW(parse_cells_csv("t,assigned_cell,a_1\n1,2,1\n"), std::invalid_argument);
}

TEST(CellsJson, Rows) {
  auto cs = build_cell_sequences(ProbabilityVector::parse("1/2,1/2"), 2);
  EXPECT_EQ(ndjson(cells_json(cs)),
            "{\"trial\":1,\"cell\":1,\"counts\":[1,0]}\n{\"trial\":2,\"cell\":2,\"counts\":[1,1]}\n");
}

TEST(TraceJson, Rows) {
  auto trace = realize_trace(Probability(1, 2), 2);
  EXPECT_EQ(ndjson(trace_json(trace)),
            "{\"trial\":1,\"event\":false}\n{\"trial\":2,\"event\":true}\n");
}

TEST(Reports, CsvAndJson) {
  Probability half(1, 2);
  auto reports = stats::compare(to_binary(build_ap_prefix(half, 1000)), half, 42, 0.01);
  auto csv = reports_csv(reports);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "test,stream,statistic,alpha,pass,n,seed,prng_version");
  std::size_t i = 0;
  while (std::getline(in, line)) {
    ASSERT_LT(i, reports.size());
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    ASSERT_EQ(f.size(), 8u) << line;
    EXPECT_EQ(f[0], reports[i].report.test_name);
    // The statistic survives serialization to well within 1e-12.
    EXPECT_NEAR(std::strtod(f[2].c_str(), nullptr), reports[i].report.statistic, 1e-12);
    EXPECT_EQ(f[6], reports[i].seed ? "42" : "");
    EXPECT_EQ(f[7], "splitmix64-v1");
    ++i;
  }
  EXPECT_EQ(i, 4u);

  auto rows = reports_json(reports);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0]["stream"], "designed");
  EXPECT_FALSE(rows[0].contains("seed"));
  EXPECT_EQ(rows[2]["seed"], 42u);
  EXPECT_EQ(rows[2]["prng_version"], "splitmix64-v1");
  EXPECT_EQ(rows[1]["statistic"].get<double>(), reports[1].report.statistic);
  auto reread = Json::parse(rows[3].dump());
  EXPECT_EQ(reread["statistic"].get<double>(), reports[3].report.statistic);
}
