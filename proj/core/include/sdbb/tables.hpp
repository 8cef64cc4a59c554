#pragma once

#include <string>
#include <vector>

namespace sdbb {

// One published [[n,k,d]] benchmark row: stabilizer polynomial, torus basis,
// parameters and the kd^2/n figure of merit.
struct TableRow {
  int table;  // 1 or 2
  long long n, k, d;
  const char* f;
  long long a1x, a1y, a2x, a2y;
  const char* metric;  // as printed, e.g. "6.86"
};

const std::vector<TableRow>& benchmark_rows();

}  // namespace sdbb
