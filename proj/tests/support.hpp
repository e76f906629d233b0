#pragma once

#include <sys/wait.h>

#include <Eigen/Dense>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gravity/gravity.hpp"

namespace gravity::testkit {

/// Normal-equations least squares, deliberately not sharing code with ols_solve.
inline Eigen::VectorXd normal_equations(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  const Eigen::MatrixXd xtx = X.transpose() * X;
  return xtx.fullPivLu().solve(X.transpose() * y);
}

/// Random unbalanced problem: intercept, `k` time-varying columns, one
/// entity-constant column; entity effects correlated with the first regressor.
inline RegressionProblem random_problem(std::uint64_t seed, int n_entities = 8, int t_min = 3, int t_max = 7,
                                        int k = 2) {
  auto rng = Rng::stream(seed, "test_problem");
  RegressionProblem p;
  p.dependent = "y";
  p.columns.push_back({kInterceptName, "Constant", Role::continuous, true, true});
  for (int j = 0; j < k; ++j) p.columns.push_back({"x" + std::to_string(j), "", Role::continuous, false, false});
  p.columns.push_back({"dist", "", Role::continuous, true, false});

  std::vector<std::vector<double>> rows;
  std::vector<double> ys;
  const auto codes = synthetic_partner_codes(static_cast<std::size_t>(n_entities));
  for (int i = 0; i < n_entities; ++i) {
    const int T = static_cast<int>(rng.uniform_int(t_min, t_max));
    const double alpha = rng.normal();
    const double dist = 5.0 + rng.uniform();
    for (int t = 0; t < T; ++t) {
      std::vector<double> r{1.0};
      for (int j = 0; j < k; ++j) r.push_back(rng.normal() + (j == 0 ? 0.7 * alpha : 0.0));
      r.push_back(dist);
      double y = 0.3 + alpha - 0.8 * dist;
      for (int j = 0; j < k; ++j) y += (1.0 + 0.5 * j) * r[static_cast<std::size_t>(j) + 1];
      y += 0.5 * rng.normal();
      rows.push_back(r);
      ys.push_back(y);
      p.row_keys.push_back({EntityId{"PER", codes[static_cast<std::size_t>(i)]}, TimeIndex{2000 + t}});
    }
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  p.X.resize(n, k + 2);
  p.y.resize(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index j = 0; j < k + 2; ++j) p.X(r, j) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    p.y[r] = ys[static_cast<std::size_t>(r)];
  }
  p.Z.resize(n, 0);
  return p;
}

/// Least squares with one dummy per entity and the time-varying columns.
inline Eigen::VectorXd lsdv_slopes(const RegressionProblem& p, const std::vector<Eigen::Index>& varying) {
  const auto g = group_rows(p.row_keys);
  const auto n = p.X.rows();
  const auto k = static_cast<Eigen::Index>(varying.size());
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, k + static_cast<Eigen::Index>(g.count()));
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index j = 0; j < k; ++j) D(r, j) = p.X(r, varying[static_cast<std::size_t>(j)]);
    D(r, k + static_cast<Eigen::Index>(g.group_of_row[static_cast<std::size_t>(r)])) = 1.0;
  }
  return normal_equations(D, p.y).head(k);
}

inline std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("gravity_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

struct CommandResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

/// Runs a shell command, capturing stdout and stderr through files.
inline CommandResult run_command(const std::string& command, const std::filesystem::path& scratch) {
  const auto out = scratch / "cmd.stdout";
  const auto err = scratch / "cmd.stderr";
  const std::string full = command + " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(full.c_str());
  CommandResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

inline std::string quoted(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

}  // namespace gravity::testkit
