#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace treekummer {

// N x p matrix of strictly positive draws, row-major, with the seed that
// produced it.
struct SampleMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;
  std::uint64_t seed = 0;

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
  std::span<const double> row(int r) const {
    return {data.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)};
  }
  std::vector<double> column(int c) const {
    std::vector<double> out(rows);
    for (int r = 0; r < rows; ++r) out[r] = at(r, c);
    return out;
  }
};

}  // namespace treekummer
