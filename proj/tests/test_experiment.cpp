#include <doctest.h>

#include <sstream>

#include "szego/experiment.hpp"

using namespace szego;
using nlohmann::json;

namespace {

std::string field_of(const json& j) {
  try {
    ExperimentConfig::from_json(j);
  } catch (const config_error& e) {
    return e.field();
  }
  return "";
}

ResultTable small_table() {
  ResultTable t;
  t.columns = {"a", "b"};
  t.add_row({std::int64_t(1), 2.5});
  t.add_row({number(std::numeric_limits<double>::infinity()), std::string("x,\"y\"")});
  return t;
}

std::string strip_time(ResultTable t) {
  t.metadata.erase("wall_time_seconds");
  std::ostringstream os;
  write_json(t, os);
  return os.str();
}

}  // namespace

TEST_CASE("config validation names the offending field") {
  CHECK(field_of({{"experiment", "nope"}}) == "experiment");
  CHECK(field_of(json::object()) == "experiment");
  CHECK(field_of({{"experiment", "reproduce"}, {"N", 2}}) == "N");
  CHECK(field_of({{"experiment", "reproduce"}, {"N", "big"}}) == "N");
  CHECK(field_of({{"experiment", "reproduce"}, {"domain", "annulus"}}) == "domain");
  CHECK(field_of({{"experiment", "reproduce"}, {"domain", "hartogs"}, {"m", 2}, {"n", 4}}) == "m");
  CHECK(field_of({{"experiment", "egg-norms"}, {"tau", 1.5}}) == "tau");
  CHECK(field_of({{"experiment", "rigidity-scan"}, {"q", {0.1, {0.9, 0.9}}}}) == "q");
  CHECK(field_of({{"experiment", "oracle-suite"}, {"seed", -1}}) == "seed");
  CHECK(field_of({{"experiment", "egg-stabilize"}, {"mode", "probe"}, {"k", 3}, {"p", 2}}) == "k");
  CHECK(field_of({{"experiment", "egg-stabilize"}, {"truncations", {8, 4}}}) == "truncations");
  CHECK(field_of({{"experiment", "oracle-suite"}}).empty());
}

TEST_CASE("config echo is complete") {
  const auto c = ExperimentConfig::from_json({{"experiment", "rigidity-scan"}, {"q", {0.1, {0.2, 0.05}}}, {"k", 2}});
  const json echo = c.to_json();
  CHECK(echo["experiment"] == "rigidity-scan");
  CHECK(echo["N"] == 256);
  CHECK(echo["seed"] == 0);
  CHECK(echo["q"][1][1] == 0.05);
  CHECK(ExperimentConfig::from_json(echo).to_json() == echo);
}

TEST_CASE("egg-stabilize reports the threshold") {
  const auto t = run(ExperimentConfig::from_json({{"experiment", "egg-stabilize"}, {"p", 3}, {"tau", 0}}));
  const auto col = std::find(t.columns.begin(), t.columns.end(), "threshold") - t.columns.begin();
  for (const auto& row : t.rows) CHECK(std::get<std::int64_t>(row[col]) == 2);
  CHECK(t.metadata["pass"] == true);
  CHECK(t.metadata["config"]["experiment"] == "egg-stabilize");
  CHECK(t.metadata.contains("library_version"));
  CHECK(t.metadata.contains("wall_time_seconds"));
}

TEST_CASE("reproduce on the Hartogs triangle") {
  const auto t = run(ExperimentConfig::from_json(
      {{"experiment", "reproduce"}, {"domain", "Hartogs"}, {"m", 1}, {"n", 1}, {"k", 1}, {"N", 128}}));
  CHECK(t.metadata["max_rel_error"].get<double>() <= 1e-10);
  CHECK(t.rows.size() == 50);
}

TEST_CASE("oracle suite") {
  const auto t = run(ExperimentConfig::from_json(
      {{"experiment", "oracle-suite"}, {"m_max", 6}, {"n_max", 6}, {"samples", 100}, {"seed", 7}}));
  CHECK(t.rows.size() == 36);
  CHECK(t.metadata["pass"] == true);
}

TEST_CASE("determinism given the seed") {
  const json cfg = {{"experiment", "project-compare"}, {"m", 2}, {"n", 1}, {"k", 1}, {"bandwidth", 6}, {"seed", 3}};
  const auto a = run(ExperimentConfig::from_json(cfg)), b = run(ExperimentConfig::from_json(cfg));
  std::ostringstream ca, cb;
  write_csv(a, ca);
  write_csv(b, cb);
  CHECK(ca.str() == cb.str());
  CHECK(strip_time(a) == strip_time(b));
  json other = cfg;
  other["seed"] = 4;
  std::ostringstream cc;
  write_csv(run(ExperimentConfig::from_json(other)), cc);
  CHECK(cc.str() != ca.str());
}

TEST_CASE("divergence markers are table cells") {
  const auto t = run(ExperimentConfig::from_json(
      {{"experiment", "egg-stabilize"}, {"mode", "probe"}, {"preset", "stabilization-h"}, {"p", 2}, {"k", 1},
       {"extra_pole", 1}, {"measure", "sigma"}, {"truncations", {4, 8}}}));
  CHECK(std::get<std::string>(t.rows.back()[1]) == "inf");
}

TEST_CASE("writers") {
  const ResultTable t = [] {
    ResultTable r;
    r.columns = {"x", "y"};
    r.add_row({std::int64_t(1), 2.0});
    r.add_row({std::int64_t(3), 4.0});
    return r;
  }();
  std::ostringstream csv, gp;
  write_csv(t, csv);
  CHECK(csv.str() == "x,y\r\n1,2\r\n3,4\r\n");
  write_gnuplot(t, gp);
  CHECK(gp.str() == "# x y\n1 2\n3 4\n");

  std::ostringstream quoted;
  write_csv(small_table(), quoted);
  CHECK(quoted.str().find("\"x,\"\"y\"\"\"") != std::string::npos);
  CHECK(quoted.str().find("inf,") != std::string::npos);
}

TEST_CASE("json round trip") {
  ResultTable t = small_table();
  t.metadata["note"] = "hello";
  std::stringstream ss;
  write_json(t, ss);
  const ResultTable back = read_json_table(ss);
  CHECK(back == t);
  CHECK(back.metadata == t.metadata);
}

TEST_CASE("rows must match the header") {
  ResultTable t;
  t.columns = {"a"};
  CHECK_THROWS(t.add_row({1.0, 2.0}));
}

TEST_CASE("emit reports unwritable paths") {
  CHECK_THROWS_AS(emit(small_table(), OutputFormat::csv, "/nonexistent-dir/out.csv"), io_error);
  CHECK_THROWS_AS(parse_format("xml"), config_error);
}

TEST_CASE("Hartogs helpers") {
  for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}, std::pair{5, 3}})
    for (int k = 0; k <= 2; ++k) {
      const auto mono = admissible_hartogs_monomials(m, n, k, 10);
      CHECK(mono.size() == 10);
      for (auto [a, b] : mono) {
        CHECK(a >= 0);
        CHECK(n*a + m*b + m*k >= 0);
      }
      for (const Point& z : hartogs_interior_points(m, n, 5)) {
        CHECK(std::abs(z(1)) <= 0.7 + 1e-15);
        CHECK(std::pow(std::abs(z(0)), m) / std::pow(std::abs(z(1)), n) <= std::pow(0.3, m) + 1e-12);
      }
    }
}
