#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "fulltree/tree.hpp"

namespace testsupport {

inline std::vector<std::uint64_t> iota_labels(std::uint64_t n) {
  std::vector<std::uint64_t> labels(n);
  std::iota(labels.begin(), labels.end(), std::uint64_t{1});
  return labels;
}

inline std::vector<int> int_labels(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  return labels;
}

inline std::vector<std::string> string_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

// Every list over the alphabet {0, ..., alphabet-1} of length 0..max_len,
// in length order; the odometer visits alphabet^len lists per length.
inline void for_each_list(int alphabet, std::size_t max_len,
                          const std::function<void(const std::vector<int>&)>& fn) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<int> digits(len, 0);
    for (;;) {
      fn(digits);
      std::size_t at = len;
      while (at > 0 && digits[at - 1] == alphabet - 1) digits[--at] = 0;
      if (at == 0) break;
      ++digits[at - 1];
    }
  }
}

}  // namespace testsupport
