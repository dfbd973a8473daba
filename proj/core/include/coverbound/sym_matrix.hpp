#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coverbound {

// Dense symmetric matrix, packed upper triangle (row major).
class SymMatrix {
 public:
  explicit SymMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("SymMatrix: dim >= 1");
    data_.assign(static_cast<std::size_t>(dim) * (dim + 1) / 2, 0.0);
  }

  int dim() const { return dim_; }

  double operator()(int i, int j) const { return data_[pos(i, j)]; }
  void set(int i, int j, double v) { data_[pos(i, j)] = v; }
  void add(int i, int j, double v) { data_[pos(i, j)] += v; }

  const std::vector<double>& packed() const { return data_; }
  std::vector<double>& packed() { return data_; }

  // Packed offset of (i,j), i <= j after swap.
  std::size_t pos(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= dim_) throw std::out_of_range("SymMatrix: index out of range");
    return static_cast<std::size_t>(i) * dim_ - static_cast<std::size_t>(i) * (i - 1) / 2 +
           static_cast<std::size_t>(j - i);
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j) {
        double v = (*this)(i, j);
        s += (i == j) ? v * v : 2.0 * v * v;
      }
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
  }

  std::vector<double> dense() const {
    std::vector<double> out(static_cast<std::size_t>(dim_) * dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        out[static_cast<std::size_t>(i) * dim_ + j] = (*this)(i, j);
    return out;
  }

 private:
  int dim_;
  std::vector<double> data_;
};

}  // namespace coverbound
