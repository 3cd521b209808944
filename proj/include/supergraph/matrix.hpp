#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace supergraph {

// Dense row-major square matrix.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  const std::vector<T>& data() const { return data_; }

  bool operator==(const SquareMatrix&) const = default;

  // Principal submatrix keeping the listed rows/columns, in the given order.
  SquareMatrix principal(const std::vector<std::size_t>& keep) const {
    SquareMatrix out(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = (*this)(keep[i], keep[j]);
    return out;
  }

  template <class U>
  SquareMatrix<U> cast() const {
    SquareMatrix<U> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using IntMatrix = SquareMatrix<std::int64_t>;
using RealMatrix = SquareMatrix<double>;

}  // namespace supergraph
