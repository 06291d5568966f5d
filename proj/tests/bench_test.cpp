#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fulltree/bench.hpp"

using fulltree::bench::Algo;
using fulltree::bench::ScalingRow;

namespace {

double clause_ratio(const std::vector<ScalingRow>& rows) {
  REQUIRE(rows.size() == 2);
  return static_cast<double>(rows[1].ops.clauses) / static_cast<double>(rows[0].ops.clauses);
}

}  // namespace

TEST_CASE("measure_scaling counts deterministic linear work") {
  for (Algo algo : {Algo::naive, Algo::typed, Algo::structural}) {
    auto rows = fulltree::bench::measure_scaling(algo, {1024, 2048}, 2);
    CHECK(rows[0].n == 1024);
    CHECK(rows[1].n == 2048);
    CHECK(rows[0].ops.clauses > 0);
    // Doubling the input roughly doubles the clause count.
    const double ratio = clause_ratio(rows);
    CHECK(ratio > 1.8);
    CHECK(ratio < 2.2);
  }

  auto zero = fulltree::bench::measure_scaling(Algo::typed, {0}, 3);
  CHECK(zero[0].n == 0);
  CHECK(zero[0].ops.clauses < 16);

  CHECK_THROWS_AS(fulltree::bench::measure_scaling(Algo::naive, {8}, 0),
                  std::invalid_argument);
}

TEST_CASE("cons work stays within twice the length") {
  CHECK(fulltree::bench::measure_cons_amortized(0) == 0);
  CHECK(fulltree::bench::measure_cons_amortized(4) == 5);
  for (std::uint64_t n : {16u, 255u, 1024u, 65536u})
    CHECK(fulltree::bench::measure_cons_amortized(n) <= 2 * n);
}

TEST_CASE("write_csv emits one fixed header and one row per measurement") {
  ScalingRow row;
  row.algo = Algo::naive;
  row.n = 4;
  row.ops = {10, 3, 4};
  row.nanos = 7;
  std::ostringstream out;
  fulltree::bench::write_csv(out, {row});
  CHECK(out.str() == "algo,n,clauses,allocs,nanos\nnaive,4,10,3,7\n");
}

TEST_CASE("log_log_slope recovers polynomial degree") {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> linear;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> quadratic;
  for (std::uint64_t n = 2; n <= 1024; n *= 2) {
    linear.emplace_back(n, 3 * n);
    quadratic.emplace_back(n, n * n);
  }
  CHECK(fulltree::bench::log_log_slope(linear) == doctest::Approx(1.0).epsilon(0.01));
  CHECK(fulltree::bench::log_log_slope(quadratic) == doctest::Approx(2.0).epsilon(0.01));
  CHECK_THROWS_AS(fulltree::bench::log_log_slope({{4, 4}}), std::invalid_argument);
}
