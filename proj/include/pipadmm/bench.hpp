#ifndef PIPADMM_BENCH_HPP_
#define PIPADMM_BENCH_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "pipadmm/dataset.hpp"
#include "pipadmm/random_lasso.hpp"

namespace pipadmm {

enum class ProblemKind { LASSO, LOGREG };
enum class EmitFormat { TEXT, CSV, MARKDOWN };

struct MethodTheta {
  Method method = Method::PIP;
  double theta = 1.0;
};

struct RunSpec {
  ProblemKind problem = ProblemKind::LASSO;

  bool use_random = true;          ///< random instance vs dataset file
  RandomLassoSpec random;
  std::string dataset_path;
  DataFormat dataset_format = DataFormat::CSV;
  std::string label_column;
  bool has_header = false;

  std::vector<MethodTheta> methods;

  double beta = 1.0;
  double outer_tol = 1e-2;
  int max_outer = 10000;
  int max_inner = 0;

  bool certify = false;            ///< also run the certificate monitor per row
  int reps = 1;                    ///< number of seeds (random sources only)
  std::string out_path;            ///< CSV destination; "" keeps results in memory
  EmitFormat emit = EmitFormat::TEXT;
};

struct BenchRow {
  std::string instance;
  std::string method;
  double theta = 1.0;
  int out = 0;
  long inner = 0;
  double time_sec = 0.0;
  double objective = 0.0;
  double m_step_norm = 0.0;
  std::string status;
};

/// Runs every (method, theta) pair on every instance of the spec with the
/// standard benchmark protocol: zero start, tau2 = 1 - 1e-8 and
/// tau1 = default_tau1(theta) for PIP (tau1 = 0.99 for the baseline),
/// inner acceptance also at ||v|| <= 1e-8. Solver failures become per-row
/// statuses, never exceptions. With `certify`, a reference solve at 1e-8
/// provides the initial-distance estimate and a certificate report is
/// written to `<out_path>.cert.csv` (instance/method/theta-prefixed rows).
std::vector<BenchRow> run_bench(const RunSpec& spec);

/// Renders rows with the stable column order
/// instance, method, theta, out, inner, time_sec, objective, m_step_norm, status.
std::string emit_table(const std::vector<BenchRow>& rows, EmitFormat format);

/// Parses what emit_table(..., CSV) produced.
std::vector<BenchRow> parse_bench_csv(std::istream& is);

/// "method theta: out mean +- halfrange, inner mean +- halfrange" per pair;
/// meaningful when reps > 1.
std::string summarize_reps(const std::vector<BenchRow>& rows);

}  // namespace pipadmm

#endif  // PIPADMM_BENCH_HPP_
