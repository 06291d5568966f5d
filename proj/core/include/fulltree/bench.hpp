#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

namespace fulltree::bench {

enum class Algo { naive, typed, structural };

const char* algo_name(Algo a);

struct OpCount {
  std::uint64_t clauses = 0;
  std::uint64_t allocs = 0;
  std::uint64_t n = 0;
};

struct ScalingRow {
  Algo algo = Algo::naive;
  std::uint64_t n = 0;
  OpCount ops;          // deterministic: identical across trials by assertion
  std::uint64_t nanos = 0;  // median wall time over the trials
};

// Balances canonical numeric labels of each size, counting executed clauses
// and constructor calls. Counts must not vary across trials; wall time is
// reported as a median and treated as advisory.
std::vector<ScalingRow> measure_scaling(Algo algo, const std::vector<std::uint64_t>& sizes,
                                        std::size_t trials);

// Total cons clause executions while building a length-n 1-2 binary list;
// amortized constancy means this stays within 2n.
std::uint64_t measure_cons_amortized(std::uint64_t n);

// Header line `algo,n,clauses,allocs,nanos`, then one row per measurement.
void write_csv(std::ostream& out, const std::vector<ScalingRow>& rows);

// Least-squares slope of ln(count) against ln(n); 1.0 means linear growth.
double log_log_slope(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& points);

}  // namespace fulltree::bench
