// Regenerates the Dickey-Fuller moment and quantile tables used by the ADF
// p-values and the IPS standardisation.
//
// For every (deterministics, lags, length) cell the ADF t statistic is
// simulated on Gaussian random walks. Each cell draws from its own labelled
// stream, so the output is bit-identical for a fixed seed regardless of which
// cells are generated or in what order.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gravity/random.hpp"
#include "gravity/unitroot.hpp"

namespace {

constexpr std::array<double, 34> kProbabilities = {
    0.0005, 0.001, 0.0025, 0.005, 0.01, 0.025, 0.05, 0.075, 0.1,  0.125, 0.15, 0.2,
    0.25,   0.3,   0.35,   0.4,   0.45, 0.5,   0.55, 0.6,   0.65, 0.7,   0.75, 0.8,
    0.85,   0.875, 0.9,    0.925, 0.95, 0.975, 0.99, 0.995, 0.999, 0.9995};
constexpr std::array<int, 9> kLengths = {8, 10, 15, 20, 25, 50, 100, 250, 500};
constexpr int kMaxLags = 2;

struct CellStats {
  int det = 0;
  int lags = 0;
  int length = 0;
  double mean = 0.0;
  double variance = 0.0;
  std::array<double, kProbabilities.size()> quantiles{};
};

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

CellStats simulate(int det, int lags, int length, int reps, std::uint64_t seed) {
  const auto deterministics = det == 0 ? gravity::Deterministics::constant
                                       : gravity::Deterministics::constant_trend;
  const std::string label =
      "adf/" + std::to_string(det) + "/" + std::to_string(lags) + "/" + std::to_string(length);
  auto rng = gravity::Rng::stream(seed, label);

  std::vector<double> stats;
  stats.reserve(static_cast<std::size_t>(reps));
  std::vector<double> y(static_cast<std::size_t>(length));
  while (static_cast<int>(stats.size()) < reps) {
    double level = 0.0;
    for (auto& v : y) {
      level += rng.normal();
      v = level;
    }
    try {
      stats.push_back(gravity::adf_regression(y, lags, deterministics).t_stat);
    } catch (const gravity::NumericalError&) {
      // measure-zero event for continuous draws; redraw
    }
  }

  CellStats c{det, lags, length};
  double sum = 0.0;
  for (double s : stats) sum += s;
  c.mean = sum / reps;
  double ss = 0.0;
  for (double s : stats) ss += (s - c.mean) * (s - c.mean);
  c.variance = ss / (reps - 1);

  std::sort(stats.begin(), stats.end());
  for (std::size_t i = 0; i < kProbabilities.size(); ++i) {
    const double h = (reps - 1) * kProbabilities[i];
    const auto lo = static_cast<std::size_t>(h);
    const auto hi = std::min(lo + 1, stats.size() - 1);
    c.quantiles[i] = stats[lo] + (h - static_cast<double>(lo)) * (stats[hi] - stats[lo]);
  }
  return c;
}

std::string moments_row(const CellStats& c, int reps) {
  return std::to_string(c.det) + "," + std::to_string(c.lags) + "," + std::to_string(c.length) +
         "," + std::to_string(reps) + "," + num(c.mean) + "," + num(c.variance);
}

std::vector<std::string> quantile_rows(const CellStats& c) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < kProbabilities.size(); ++i) {
    rows.push_back(std::to_string(c.det) + "," + std::to_string(c.lags) + "," +
                   std::to_string(c.length) + "," + num(kProbabilities[i]) + "," +
                   num(c.quantiles[i]));
  }
  return rows;
}

void write_header(const std::string& path, const std::vector<CellStats>& cells, int reps,
                  std::uint64_t seed) {
  std::ofstream out(path);
  out << "#pragma once\n"
         "// Generated by tools/gen_unitroot_tables.cpp; do not edit.\n"
         "// Mirrors data/adf_moments.csv and data/adf_quantiles.csv.\n\n"
         "#include <array>\n#include <cstdint>\n\n"
         "namespace gravity::detail::adf_tables {\n\n";
  out << "inline constexpr std::uint64_t kSeed = " << seed << "ULL;\n";
  out << "inline constexpr int kReplications = " << reps << ";\n";
  out << "inline constexpr std::array<double, " << kProbabilities.size() << "> kProbabilities = {";
  for (std::size_t i = 0; i < kProbabilities.size(); ++i)
    out << (i ? ", " : "") << num(kProbabilities[i]);
  out << "};\n\n"
         "struct Cell {\n"
         "  int deterministics;  // 0 = constant, 1 = constant + trend\n"
         "  int lags;\n"
         "  int length;          // series length T (levels)\n"
         "  double mean;\n"
         "  double variance;\n"
         "  std::array<double, kProbabilities.size()> quantiles;\n"
         "};\n\n";
  out << "inline constexpr std::array<Cell, " << cells.size() << "> kCells{{\n";
  for (const auto& c : cells) {
    out << "    {" << c.det << ", " << c.lags << ", " << c.length << ", " << num(c.mean) << ", "
        << num(c.variance) << ",\n     {";
    for (std::size_t i = 0; i < c.quantiles.size(); ++i)
      out << (i ? ", " : "") << num(c.quantiles[i]);
    out << "}},\n";
  }
  out << "}};\n\n}  // namespace gravity::detail::adf_tables\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulate Dickey-Fuller tables for the unit-root tests"};
  int reps = 100000;
  std::uint64_t seed = 20160101;
  std::string data_dir = "data";
  std::string header = "include/gravity/detail/adf_tables.hpp";
  std::string cell;
  app.add_option("--reps", reps, "Replications per cell")->check(CLI::Range(100, 10000000));
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--data-dir", data_dir, "Directory receiving the CSV tables");
  app.add_option("--header", header, "Generated C++ header path");
  app.add_option("--cell", cell,
                 "Only simulate DET,LAGS,LENGTH and print its CSV rows to stdout");
  CLI11_PARSE(app, argc, argv);

  if (!cell.empty()) {
    int det = 0, lags = 0, length = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(cell);
    if (!(in >> det >> c1 >> lags >> c2 >> length) || c1 != ',' || c2 != ',') {
      std::cerr << "bad --cell, expected DET,LAGS,LENGTH\n";
      return 2;
    }
    const auto c = simulate(det, lags, length, reps, seed);
    std::cout << moments_row(c, reps) << "\n";
    for (const auto& row : quantile_rows(c)) std::cout << row << "\n";
    return 0;
  }

  std::vector<CellStats> cells;
  for (int det = 0; det <= 1; ++det) {
    const auto d = det == 0 ? gravity::Deterministics::constant
                            : gravity::Deterministics::constant_trend;
    for (int lags = 0; lags <= kMaxLags; ++lags) {
      for (int length : kLengths) {
        if (length < gravity::adf_min_length(lags, d)) continue;
        std::cerr << "cell det=" << det << " lags=" << lags << " T=" << length << "\n";
        cells.push_back(simulate(det, lags, length, reps, seed));
      }
    }
  }

  std::ofstream moments(data_dir + "/adf_moments.csv");
  moments << "deterministics,lags,length,replications,mean,variance\n";
  for (const auto& c : cells) moments << moments_row(c, reps) << "\n";
  std::ofstream quantiles(data_dir + "/adf_quantiles.csv");
  quantiles << "deterministics,lags,length,probability,quantile\n";
  for (const auto& c : cells)
    for (const auto& row : quantile_rows(c)) quantiles << row << "\n";
  write_header(header, cells, reps, seed);
  return 0;
}
