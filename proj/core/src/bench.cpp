#include "fulltree/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fulltree/alt_power_list.hpp"
#include "fulltree/binary_list.hpp"
#include "fulltree/naive.hpp"
#include "fulltree/ops.hpp"
#include "fulltree/tree.hpp"

namespace fulltree::bench {

namespace {

std::vector<std::uint64_t> canonical_labels(std::uint64_t n) {
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::uint64_t{0});
  return labels;
}

Tree<std::uint64_t> run_algo(Algo algo, const std::vector<std::uint64_t>& labels) {
  switch (algo) {
    case Algo::naive: {
      auto r = naive::balance(labels);
      if (!r.ok()) throw std::logic_error("naive balancer failed on a benchmark input");
      return std::move(r).value();
    }
    case Algo::typed: return balance_typed(labels).tree();
    case Algo::structural: return balance_structural(labels).tree();
  }
  throw std::logic_error("unknown algorithm");
}

}  // namespace

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::naive: return "naive";
    case Algo::typed: return "typed";
    case Algo::structural: return "structural";
  }
  return "?";
}

std::vector<ScalingRow> measure_scaling(Algo algo, const std::vector<std::uint64_t>& sizes,
                                        std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("at least one trial is required");
  std::vector<ScalingRow> rows;
  rows.reserve(sizes.size());
  for (std::uint64_t n : sizes) {
    const auto labels = canonical_labels(n);
    ScalingRow row;
    row.algo = algo;
    row.n = n;
    std::vector<std::uint64_t> times;
    times.reserve(trials);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      ops::reset();
      const auto start = std::chrono::steady_clock::now();
      Tree<std::uint64_t> t = run_algo(algo, labels);
      const auto stop = std::chrono::steady_clock::now();
      if (t.is_leaf() != labels.empty())
        throw std::logic_error("benchmark result shape is impossible");
      const ops::Counters counts = ops::read();
      const OpCount seen{counts.clauses, counts.allocs, n};
      if (trial == 0) {
        row.ops = seen;
      } else if (seen.clauses != row.ops.clauses || seen.allocs != row.ops.allocs) {
        throw std::logic_error("operation counts varied across trials for n=" +
                               std::to_string(n));
      }
      times.push_back(static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
    }
    std::sort(times.begin(), times.end());
    row.nanos = times[times.size() / 2];
    rows.push_back(row);
  }
  return rows;
}

std::uint64_t measure_cons_amortized(std::uint64_t n) {
  const auto labels = canonical_labels(n);
  ops::reset();
  BinaryList<std::uint64_t> bl = bl_of_list(labels);
  if (bl.value() != n) throw std::logic_error("binary list miscounted its own length");
  return ops::read().cons_clauses;
}

void write_csv(std::ostream& out, const std::vector<ScalingRow>& rows) {
  out << "algo,n,clauses,allocs,nanos\n";
  for (const ScalingRow& r : rows)
    out << algo_name(r.algo) << "," << r.n << "," << r.ops.clauses << "," << r.ops.allocs
        << "," << r.nanos << "\n";
}

double log_log_slope(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points) {
  if (points.size() < 2) throw std::invalid_argument("slope needs at least two points");
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [n, count] : points) {
    xs.push_back(std::log(static_cast<double>(std::max<std::uint64_t>(n, 1))));
    ys.push_back(std::log(static_cast<double>(std::max<std::uint64_t>(count, 1))));
  }
  const double xbar = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double ybar = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - xbar) * (ys[i] - ybar);
    den += (xs[i] - xbar) * (xs[i] - xbar);
  }
  return num / den;
}

}  // namespace fulltree::bench
