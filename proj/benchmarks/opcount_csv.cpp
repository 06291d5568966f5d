#include <cstdint>
#include <iostream>
#include <vector>

#include "fulltree/bench.hpp"

// Prints the deterministic operation-count table for all three balancers as
// CSV on standard output. Counts are exact and reproducible; only the nanos
// column is subject to noise.
int main() {
  using fulltree::bench::Algo;

  std::vector<std::uint64_t> sizes;
  for (std::uint64_t n = 1 << 10; n <= (1u << 18); n *= 2) sizes.push_back(n);

  std::vector<fulltree::bench::ScalingRow> rows;
  for (Algo algo : {Algo::naive, Algo::typed, Algo::structural}) {
    const auto measured = fulltree::bench::measure_scaling(algo, sizes, 3);
    rows.insert(rows.end(), measured.begin(), measured.end());
  }
  fulltree::bench::write_csv(std::cout, rows);
  return 0;
}
