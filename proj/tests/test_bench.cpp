#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pipadmm/bench.hpp"

using namespace pipadmm;

namespace {

RunSpec small_spec() {
  RunSpec spec;
  spec.problem = ProblemKind::LASSO;
  spec.use_random = true;
  spec.random = RandomLassoSpec{20, 60, 5, 10};
  spec.methods = {{Method::PIP, 1.0}, {Method::PIP, 1.6}, {Method::RELERR_BASELINE, 1.0}};
  return spec;
}

}  // namespace

TEST_CASE("run_bench produces one converged row per method") {
  const auto rows = run_bench(small_spec());
  REQUIRE(rows.size() == 3);
  for (const BenchRow& r : rows) {
    CHECK(r.status == "CONVERGED");
    CHECK(r.out >= 1);
    CHECK(r.inner >= 0);
    CHECK(r.m_step_norm <= 1e-2);
  }
  CHECK(rows[0].method == "pip");
  CHECK(rows[2].method == "relerr");
}

TEST_CASE("identical specs reproduce identical counts") {
  const auto a = run_bench(small_spec());
  const auto b = run_bench(small_spec());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].out == b[i].out);
    CHECK(a[i].inner == b[i].inner);
    CHECK(a[i].objective == b[i].objective);
  }
}

TEST_CASE("certification does not change iteration counts") {
  RunSpec plain = small_spec();
  RunSpec certified = small_spec();
  certified.certify = true;
  const auto a = run_bench(plain);
  const auto b = run_bench(certified);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].out == b[i].out);
    CHECK(a[i].inner == b[i].inner);
  }
}

TEST_CASE("reps run distinct seeds and the summary aggregates them") {
  RunSpec spec = small_spec();
  spec.methods = {{Method::PIP, 1.0}};
  spec.reps = 3;
  const auto rows = run_bench(spec);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].instance != rows[1].instance);
  const std::string summary = summarize_reps(rows);
  CHECK(summary.find("pip theta=1") != std::string::npos);
  CHECK(summary.find("3 runs") != std::string::npos);
}

TEST_CASE("emit_table renders a single row as header plus one line") {
  std::vector<BenchRow> rows = {{"inst", "pip", 1.0, 5, 20, 0.1, 1.5, 0.005, "CONVERGED"}};
  const std::string text = emit_table(rows, EmitFormat::TEXT);
  int lines = 0;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) ++lines;
  CHECK(lines == 2);
}

TEST_CASE("csv emission round-trips") {
  std::vector<BenchRow> rows = {
      {"a", "pip", 1.3, 7, 31, 0.25, 3.25, 0.0075, "CONVERGED"},
      {"b", "relerr", 1.0, 9, 40, 0.5, 4.5, 0.009, "MAX_ITER"},
  };
  const std::string csv = emit_table(rows, EmitFormat::CSV);
  std::istringstream is(csv);
  const auto back = parse_bench_csv(is);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].instance == rows[i].instance);
    CHECK(back[i].method == rows[i].method);
    CHECK(back[i].theta == rows[i].theta);
    CHECK(back[i].out == rows[i].out);
    CHECK(back[i].inner == rows[i].inner);
    CHECK(back[i].time_sec == rows[i].time_sec);
    CHECK(back[i].objective == rows[i].objective);
    CHECK(back[i].m_step_norm == rows[i].m_step_norm);
    CHECK(back[i].status == rows[i].status);
  }
}

TEST_CASE("emit_table refuses an empty row set") {
  CHECK_THROWS_AS(emit_table({}, EmitFormat::TEXT), std::invalid_argument);
}

TEST_CASE("published-scale counts fall in the expected window") {
  // 900x3000 at theta = 1: roughly 26 outer and 195 total inner iterations,
  // with a +-30% allowance across seeds.
  RunSpec spec;
  spec.problem = ProblemKind::LASSO;
  spec.use_random = true;
  spec.random = RandomLassoSpec{900, 3000, 11, 100};
  spec.methods = {{Method::PIP, 1.0}};
  const auto rows = run_bench(spec);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].status == "CONVERGED");
  CHECK(rows[0].out >= 19);
  CHECK(rows[0].out <= 34);
  CHECK(rows[0].inner >= 137);
  CHECK(rows[0].inner <= 253);
}

TEST_CASE("markdown emission is a pipe table") {
  std::vector<BenchRow> rows = {{"inst", "pip", 1.0, 5, 20, 0.1, 1.5, 0.005, "CONVERGED"}};
  const std::string md = emit_table(rows, EmitFormat::MARKDOWN);
  CHECK(md.rfind("| instance", 0) == 0);
  CHECK(md.find("| ---") != std::string::npos);
}

TEST_CASE("certificate file is written next to the results") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string out = (dir / "pipadmm_bench_out.csv").string();
  RunSpec spec = small_spec();
  spec.methods = {{Method::PIP, 1.0}};
  spec.certify = true;
  spec.out_path = out;
  run_bench(spec);
  CHECK(std::filesystem::exists(out));
  CHECK(std::filesystem::exists(out + ".cert.csv"));
  std::ifstream cert(out + ".cert.csv");
  std::string header;
  std::getline(cert, header);
  CHECK(header.rfind("instance,method,theta,k,slack", 0) == 0);
  std::filesystem::remove(out);
  std::filesystem::remove(out + ".cert.csv");
}

TEST_CASE("dataset-backed lasso and logreg runs complete") {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string path = (dir / "pipadmm_bench_data.csv").string();
  {
    std::ofstream out(path);
    // 8 samples, 3 features, labels first
    out << "1,0.9,0.1,0.3\n0,0.2,0.8,0.1\n1,0.7,0.2,0.5\n0,0.1,0.9,0.2\n"
           "1,0.8,0.3,0.4\n0,0.3,0.7,0.3\n1,0.6,0.1,0.6\n0,0.2,0.6,0.1\n";
  }

  RunSpec spec;
  spec.use_random = false;
  spec.dataset_path = path;
  spec.dataset_format = DataFormat::CSV;
  spec.label_column = "0";
  spec.methods = {{Method::PIP, 1.0}};

  spec.problem = ProblemKind::LASSO;
  const auto lasso_rows = run_bench(spec);
  REQUIRE(lasso_rows.size() == 1);
  CHECK(lasso_rows[0].status == "CONVERGED");

  spec.problem = ProblemKind::LOGREG;
  spec.methods = {{Method::PIP, 1.3}, {Method::RELERR_BASELINE, 1.0}};
  const auto logreg_rows = run_bench(spec);
  REQUIRE(logreg_rows.size() == 2);
  CHECK(logreg_rows[0].status == "CONVERGED");
  CHECK(logreg_rows[1].status == "CONVERGED");

  std::filesystem::remove(path);
}

TEST_CASE("invalid method-theta pairs are rejected up front") {
  RunSpec spec = small_spec();
  spec.methods = {{Method::PIP, 1.65}};  // above every admissible bound
  CHECK_THROWS(run_bench(spec));
  spec.methods = {{Method::RELERR_BASELINE, 1.3}};
  CHECK_THROWS(run_bench(spec));
  spec.methods.clear();
  CHECK_THROWS_AS(run_bench(spec), std::invalid_argument);
}
