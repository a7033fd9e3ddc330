#include "pipadmm/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pipadmm/ergodic.hpp"
#include "pipadmm/logreg.hpp"
#include "pipadmm/monitor.hpp"
#include "pipadmm/solver.hpp"

namespace pipadmm {

namespace {

struct PreparedInstance {
  std::string name;
  LassoInstance lasso;
  LogRegInstance logreg;
  ProblemKind kind = ProblemKind::LASSO;

  SplitProblem make(const SolverConfig& config) const {
    if (kind == ProblemKind::LASSO) return lasso_problem(lasso, config);
    return logreg_problem(logreg, config);
  }
  double objective(const Vector& y) const {
    return kind == ProblemKind::LASSO ? lasso.objective(y) : logreg.objective(y);
  }
};

std::string status_name(Status s) {
  switch (s) {
    case Status::CONVERGED: return "CONVERGED";
    case Status::MAX_ITER: return "MAX_ITER";
    case Status::INNER_FAILURE: return "INNER_FAILURE";
  }
  return "UNKNOWN";
}

std::string method_name(Method m) {
  return m == Method::PIP ? "pip" : "relerr";
}

SolverConfig protocol_config(const RunSpec& spec, const MethodTheta& mt) {
  SolverConfig c;
  c.beta = spec.beta;
  c.theta = mt.theta;
  c.method = mt.method;
  if (mt.method == Method::PIP) {
    c.tau1 = default_tau1(mt.theta);
    c.tau2 = 1.0 - 1e-8;
  } else {
    c.tau1 = 0.99;
    c.tau2 = 0.0;
  }
  c.inner_abs_tol = 1e-8;
  c.outer_tol = spec.outer_tol;
  c.max_outer = spec.max_outer;
  c.max_inner = spec.max_inner;
  c.validate();
  return c;
}

std::vector<PreparedInstance> prepare_instances(const RunSpec& spec) {
  std::vector<PreparedInstance> out;
  if (spec.use_random) {
    if (spec.problem != ProblemKind::LASSO) {
      throw std::invalid_argument("run_bench: random instances are LASSO-only");
    }
    for (int r = 0; r < std::max(spec.reps, 1); ++r) {
      RandomLassoSpec rs = spec.random;
      rs.seed = spec.random.seed + static_cast<std::uint64_t>(r);
      PreparedInstance inst;
      inst.kind = ProblemKind::LASSO;
      inst.lasso = gen_random_lasso(rs);
      std::ostringstream name;
      name << "rand-" << rs.m << 'x' << rs.n << "-s" << rs.seed;
      inst.name = name.str();
      out.push_back(std::move(inst));
    }
    return out;
  }

  Dataset ds = load_dataset(spec.dataset_path, spec.dataset_format,
                            spec.label_column, spec.has_header);
  if (!ds.has_labels()) {
    throw std::invalid_argument("run_bench: dataset has no label column");
  }
  std::string name = spec.dataset_path;
  if (const auto slash = name.find_last_of('/'); slash != std::string::npos) {
    name = name.substr(slash + 1);
  }
  PreparedInstance inst;
  inst.name = name;
  inst.kind = spec.problem;
  if (spec.problem == ProblemKind::LASSO) {
    ds = apply_scaling(std::move(ds), ScalingMode::COLUMNS);
    inst.lasso = LassoInstance{ds.features, ds.labels, lasso_delta(ds.features, ds.labels)};
  } else {
    inst.logreg = make_logreg_instance(ds.features, ds.labels);
  }
  out.push_back(std::move(inst));
  return out;
}

struct RefPoint {
  Vector x, y, gamma;
};

// Reference saddle point for the initial-distance estimate; solved once per
// instance at tight tolerance and shared across all (method, theta) rows.
// The point used is (x~, y, g~): that is the triple the step-length theory
// certifies as an approximate zero of the saddle operator.
RefPoint reference_solution(const PreparedInstance& inst, const RunSpec& spec) {
  SolverConfig ref;
  ref.beta = spec.beta;
  ref.theta = 1.0;
  ref.outer_tol = 1e-8;
  ref.max_outer = std::max(spec.max_outer, 200000);
  ref.inner_abs_tol = 1e-8;
  SplitProblem p;
  if (inst.kind == ProblemKind::LASSO) {
    // exact proximal x-updates reach tight tolerances fastest
    ref.tau1 = 0.0;
    ref.tau2 = 0.0;
    p = lasso_problem(inst.lasso, ref, LassoInnerMode::DIRECT);
  } else {
    // Newton cannot certify v below the floating-point floor of the Armijo
    // test; the relative-error protocol scales v with the step sizes instead.
    ref.tau1 = default_tau1(1.0);
    ref.tau2 = 1.0 - 1e-8;
    p = logreg_problem(inst.logreg, ref);
  }
  const Vector zx = Vector::Zero(p.x_dim), zy = Vector::Zero(p.y_dim),
               zg = Vector::Zero(p.c_dim);
  const SolveResult res = run(p, ref, zx, zy, zg);
  if (res.status != Status::CONVERGED) {
    throw std::runtime_error("run_bench: reference solve for " + inst.name +
                             " ended with " + status_name(res.status) + " after " +
                             std::to_string(res.outer_count) + " iterations");
  }
  return RefPoint{res.final_iterate.x_tilde, res.final_iterate.y,
                  res.final_iterate.gamma_tilde};
}

}  // namespace

std::vector<BenchRow> run_bench(const RunSpec& spec) {
  if (spec.methods.empty()) {
    throw std::invalid_argument("run_bench: no (method, theta) pairs given");
  }
  for (const MethodTheta& mt : spec.methods) {
    protocol_config(spec, mt);  // validates theta against the tau1 rule
  }

  const std::vector<PreparedInstance> instances = prepare_instances(spec);

  std::ofstream cert_out;
  if (spec.certify && !spec.out_path.empty()) {
    cert_out.open(spec.out_path + ".cert.csv");
    cert_out << "instance,method,theta,k,slack,eta,best_step_norm,pointwise_bound,"
                "r_a_norm,ergodic_bound,eps_x,eps_y,eps_bound,feasibility_gap\n";
    cert_out.precision(17);
  }

  std::vector<BenchRow> rows;
  for (const PreparedInstance& inst : instances) {
    RefPoint ref;
    if (spec.certify) ref = reference_solution(inst, spec);

    for (const MethodTheta& mt : spec.methods) {
      BenchRow row;
      row.instance = inst.name;
      row.method = method_name(mt.method);
      row.theta = mt.theta;
      try {
        const SolverConfig config = protocol_config(spec, mt);
        const SplitProblem p = inst.make(config);
        const Vector zx = Vector::Zero(p.x_dim), zy = Vector::Zero(p.y_dim),
                     zg = Vector::Zero(p.c_dim);
        HpeMonitor monitor(p, config);
        const auto t0 = std::chrono::steady_clock::now();
        const SolveResult res =
            run(p, config, zx, zy, zg, spec.certify ? &monitor : nullptr);
        const auto t1 = std::chrono::steady_clock::now();
        row.time_sec = std::chrono::duration<double>(t1 - t0).count();
        row.out = res.outer_count;
        row.inner = res.total_inner_count;
        row.objective = inst.objective(res.final_iterate.y);
        row.m_step_norm = res.trace.empty() ? 0.0 : res.trace.back().m_step_norm;
        row.status = status_name(res.status);

        if (spec.certify && cert_out.is_open()) {
          const MSeminorm m = MSeminorm::from(p, config);
          const double d0 = d0_estimate(zx, zy, zg, ref.x, ref.y, ref.gamma, m);
          const CertificateReport rep = monitor.finalize(d0);
          for (const CertificateRow& r : rep.rows) {
            cert_out << inst.name << ',' << row.method << ',' << mt.theta << ','
                     << r.k << ',' << r.slack << ',' << r.eta << ','
                     << r.best_step_norm << ',' << r.pointwise_bound << ','
                     << r.r_a_norm << ',' << r.ergodic_bound << ',' << r.eps_x << ','
                     << r.eps_y << ',' << r.eps_bound << ',' << r.feasibility_gap
                     << '\n';
          }
        }
      } catch (const std::exception& e) {
        row.status = std::string("ERROR: ") + e.what();
      }
      rows.push_back(std::move(row));
    }
  }

  if (!spec.out_path.empty()) {
    std::ofstream out(spec.out_path);
    if (!out) throw std::runtime_error("run_bench: cannot open " + spec.out_path);
    out << emit_table(rows, EmitFormat::CSV);
  }
  return rows;
}

std::string emit_table(const std::vector<BenchRow>& rows, EmitFormat format) {
  if (rows.empty()) throw std::invalid_argument("emit_table: no rows");
  std::ostringstream os;
  os.precision(10);

  if (format == EmitFormat::CSV) {
    os << "instance,method,theta,out,inner,time_sec,objective,m_step_norm,status\n";
    std::ostringstream line;
    line.precision(17);
    for (const BenchRow& r : rows) {
      line.str("");
      line << r.instance << ',' << r.method << ',' << r.theta << ',' << r.out << ','
           << r.inner << ',' << r.time_sec << ',' << r.objective << ','
           << r.m_step_norm << ',' << r.status;
      os << line.str() << '\n';
    }
    return os.str();
  }

  const std::vector<std::string> header = {"instance", "method", "theta",   "out",
                                           "inner",    "time_s", "objective", "m_step",
                                           "status"};
  std::vector<std::vector<std::string>> cells;
  for (const BenchRow& r : rows) {
    std::ostringstream theta, time, obj, step;
    theta.precision(4);
    theta << r.theta;
    time << std::fixed << std::setprecision(3) << r.time_sec;
    obj.precision(10);
    obj << r.objective;
    step.precision(4);
    step << std::scientific << r.m_step_norm;
    cells.push_back({r.instance, r.method, theta.str(), std::to_string(r.out),
                     std::to_string(r.inner), time.str(), obj.str(), step.str(),
                     r.status});
  }

  std::vector<std::size_t> w(header.size());
  for (std::size_t j = 0; j < header.size(); ++j) w[j] = header[j].size();
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) w[j] = std::max(w[j], row[j].size());
  }

  const bool md = format == EmitFormat::MARKDOWN;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (md) os << "| ";
      os << std::left << std::setw(static_cast<int>(w[j])) << row[j];
      os << (md ? " " : "  ");
    }
    if (md) os << "|";
    os << '\n';
  };
  emit_row(header);
  if (md) {
    for (std::size_t j = 0; j < header.size(); ++j) {
      os << "| " << std::string(w[j], '-') << ' ';
    }
    os << "|\n";
  }
  for (const auto& row : cells) emit_row(row);
  return os.str();
}

std::vector<BenchRow> parse_bench_csv(std::istream& is) {
  std::vector<BenchRow> rows;
  std::string line;
  if (!std::getline(is, line)) return rows;  // header
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string f;
    BenchRow r;
    std::getline(ss, r.instance, ',');
    std::getline(ss, r.method, ',');
    std::getline(ss, f, ',');
    r.theta = std::stod(f);
    std::getline(ss, f, ',');
    r.out = std::stoi(f);
    std::getline(ss, f, ',');
    r.inner = std::stol(f);
    std::getline(ss, f, ',');
    r.time_sec = std::stod(f);
    std::getline(ss, f, ',');
    r.objective = std::stod(f);
    std::getline(ss, f, ',');
    r.m_step_norm = std::stod(f);
    std::getline(ss, r.status);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string summarize_reps(const std::vector<BenchRow>& rows) {
  std::map<std::pair<std::string, double>, std::vector<const BenchRow*>> groups;
  for (const BenchRow& r : rows) groups[{r.method, r.theta}].push_back(&r);

  std::ostringstream os;
  os.precision(6);
  for (const auto& [key, group] : groups) {
    double out_lo = 1e300, out_hi = -1e300, out_sum = 0.0;
    double in_lo = 1e300, in_hi = -1e300, in_sum = 0.0;
    for (const BenchRow* r : group) {
      out_lo = std::min(out_lo, static_cast<double>(r->out));
      out_hi = std::max(out_hi, static_cast<double>(r->out));
      out_sum += r->out;
      in_lo = std::min(in_lo, static_cast<double>(r->inner));
      in_hi = std::max(in_hi, static_cast<double>(r->inner));
      in_sum += static_cast<double>(r->inner);
    }
    const double n = static_cast<double>(group.size());
    os << key.first << " theta=" << key.second << ": out " << out_sum / n << " +- "
       << (out_hi - out_lo) / 2.0 << ", inner " << in_sum / n << " +- "
       << (in_hi - in_lo) / 2.0 << " (" << group.size() << " runs)\n";
  }
  return os.str();
}

}  // namespace pipadmm
