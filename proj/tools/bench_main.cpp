// Benchmark driver: solves LASSO / l1-regularized logistic regression
// instances with the partially inexact proximal ADMM and its relative-error
// baseline, and reports Out/Inner/Time rows plus optional runtime
// certificates of the contraction inequality and residual bounds.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pipadmm/bench.hpp"

namespace {

bool parse_dims(const std::string& s, Eigen::Index& m, Eigen::Index& n) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) return false;
  try {
    m = std::stol(s.substr(0, comma));
    n = std::stol(s.substr(comma + 1));
  } catch (const std::exception&) {
    return false;
  }
  return m >= 1 && n >= 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partially inexact proximal ADMM benchmark"};

  std::string problem = "lasso";
  app.add_option("--problem", problem, "problem family")
      ->check(CLI::IsMember({"lasso", "logreg"}));

  std::string random_dims;
  app.add_option("--random", random_dims, "random LASSO dimensions as m,n");
  std::string dataset_path;
  app.add_option("--dataset", dataset_path, "dataset file path");
  std::string format = "csv";
  app.add_option("--format", format, "dataset file format")
      ->check(CLI::IsMember({"csv", "sparse"}));
  std::string label_col;
  app.add_option("--label-col", label_col, "label column (0-based index, or name with --header)");
  bool header = false;
  app.add_flag("--header", header, "CSV file has a header row");

  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "base seed for random instances");
  int reps = 1;
  app.add_option("--reps", reps, "number of seeds to run")->check(CLI::PositiveNumber);

  std::vector<std::string> methods;
  app.add_option("--method", methods, "pip or relerr (repeatable)");
  std::vector<double> thetas;
  app.add_option("--theta", thetas, "stepsize per method, paired by order (repeatable)");

  pipadmm::RunSpec spec;
  app.add_option("--beta", spec.beta, "penalty parameter");
  app.add_option("--outer-tol", spec.outer_tol, "M-seminorm stopping threshold");
  app.add_option("--max-outer", spec.max_outer, "outer iteration budget");
  app.add_option("--max-inner", spec.max_inner, "inner iteration budget (0 = 10 * dim)");
  app.add_flag("--certify", spec.certify, "run the certificate monitor and emit a report");
  app.add_option("--out", spec.out_path, "write results CSV here (certificates to <out>.cert.csv)");
  std::string emit = "text";
  app.add_option("--emit", emit, "stdout table format")
      ->check(CLI::IsMember({"text", "csv", "markdown"}));

  CLI11_PARSE(app, argc, argv);

  spec.problem = problem == "lasso" ? pipadmm::ProblemKind::LASSO
                                    : pipadmm::ProblemKind::LOGREG;
  spec.emit = emit == "text" ? pipadmm::EmitFormat::TEXT
              : emit == "csv" ? pipadmm::EmitFormat::CSV
                              : pipadmm::EmitFormat::MARKDOWN;
  spec.reps = reps;

  if (!random_dims.empty() && !dataset_path.empty()) {
    std::cerr << "error: --random and --dataset are mutually exclusive\n";
    return 1;
  }
  if (random_dims.empty() && dataset_path.empty()) {
    std::cerr << "error: one of --random or --dataset is required\n";
    return 1;
  }
  if (!random_dims.empty()) {
    spec.use_random = true;
    if (!parse_dims(random_dims, spec.random.m, spec.random.n)) {
      std::cerr << "error: --random expects m,n with positive integers\n";
      return 1;
    }
    spec.random.seed = seed;
    if (spec.random.sparsity > spec.random.n) spec.random.sparsity = spec.random.n;
  } else {
    spec.use_random = false;
    spec.dataset_path = dataset_path;
    spec.dataset_format = format == "csv" ? pipadmm::DataFormat::CSV
                                          : pipadmm::DataFormat::SPARSE;
    spec.label_column = label_col;
    spec.has_header = header;
    if (reps > 1) {
      std::cerr << "note: --reps applies to random instances; dataset runs once\n";
      spec.reps = 1;
    }
  }

  if (methods.empty()) methods = {"pip"};
  if (thetas.empty()) thetas = std::vector<double>(methods.size(), 1.0);
  if (thetas.size() != methods.size()) {
    std::cerr << "error: --method and --theta counts must match\n";
    return 1;
  }
  for (std::size_t i = 0; i < methods.size(); ++i) {
    pipadmm::MethodTheta mt;
    if (methods[i] == "pip") {
      mt.method = pipadmm::Method::PIP;
    } else if (methods[i] == "relerr") {
      mt.method = pipadmm::Method::RELERR_BASELINE;
    } else {
      std::cerr << "error: unknown method '" << methods[i] << "'\n";
      return 1;
    }
    mt.theta = thetas[i];
    spec.methods.push_back(mt);
  }

  std::vector<pipadmm::BenchRow> rows;
  try {
    rows = pipadmm::run_bench(spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  std::cout << pipadmm::emit_table(rows, spec.emit);
  if (spec.reps > 1) std::cout << '\n' << pipadmm::summarize_reps(rows);

  for (const pipadmm::BenchRow& r : rows) {
    if (r.status != "CONVERGED") return 2;
  }
  return 0;
}
