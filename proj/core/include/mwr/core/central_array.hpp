#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mwr/core/dense_array.hpp"

namespace mwr {

/// d-dimensional array indexed by tuples in {-n..n}^d, n = halfwidth.
/// Stored as a dense array of side 2n+1 with offset n+1 per axis, so
/// central index i corresponds to dense index i + (n+1)·1.
template <class T = Int>
class CentralArray {
 public:
  using value_type = T;

  CentralArray(std::size_t d, std::int64_t halfwidth, std::vector<T> data)
      : halfwidth_(halfwidth), dense_(d, 2 * halfwidth + 1, std::move(data)) {
    require(halfwidth >= 0, "central halfwidth must be non-negative");
  }

  static CentralArray filled(std::size_t d, std::int64_t halfwidth, const T& value) {
    require(halfwidth >= 0, "central halfwidth must be non-negative");
    return CentralArray(halfwidth, DenseArray<T>::filled(d, 2 * halfwidth + 1, value));
  }

  /// f receives every central index in lexicographic order.
  template <class F>
  static CentralArray generate(std::size_t d, std::int64_t halfwidth, F&& f) {
    require(halfwidth >= 0, "central halfwidth must be non-negative");
    const DTuple shift(d, halfwidth + 1);
    return CentralArray(halfwidth, DenseArray<T>::generate(d, 2 * halfwidth + 1,
                                                           [&](const DTuple& k) { return f(k - shift); }));
  }

  /// Inverse of to_dense(); the dense side must be odd.
  static CentralArray from_dense(DenseArray<T> dense) {
    require(dense.side() % 2 == 1, "central array needs an odd side");
    const auto h = (dense.side() - 1) / 2;
    return CentralArray(h, std::move(dense));
  }

  std::size_t dim() const { return dense_.dim(); }
  std::int64_t halfwidth() const { return halfwidth_; }
  std::int64_t side() const { return dense_.side(); }
  std::size_t size() const { return dense_.size(); }
  std::span<const T> data() const { return dense_.data(); }

  DTuple lower() const { return DTuple(dim(), -halfwidth_); }
  DTuple upper() const { return DTuple(dim(), halfwidth_); }

  bool contains(const DTuple& i) const {
    if (i.size() != dim()) return false;
    for (auto x : i)
      if (x < -halfwidth_ || x > halfwidth_) return false;
    return true;
  }

  DTuple dense_index(const DTuple& i) const {
    if (!contains(i)) throw DomainError("central array index out of range");
    return i + DTuple(dim(), halfwidth_ + 1);
  }

  const T& operator[](const DTuple& i) const { return dense_[dense_index(i)]; }
  T& operator[](const DTuple& i) { return dense_[dense_index(i)]; }

  CentralArray with_cell(const DTuple& i, T value) const {
    return CentralArray(halfwidth_, dense_.with_cell(dense_index(i), std::move(value)));
  }

  /// The same entries renumbered to [2n+1]^d.
  const DenseArray<T>& to_dense() const { return dense_; }

  template <class U>
  CentralArray<U> cast() const {
    return CentralArray<U>::from_dense(dense_.template cast<U>());
  }

  friend bool operator==(const CentralArray&, const CentralArray&) = default;

 private:
  CentralArray(std::int64_t halfwidth, DenseArray<T> dense) : halfwidth_(halfwidth), dense_(std::move(dense)) {}

  std::int64_t halfwidth_;
  DenseArray<T> dense_;
};

}  // namespace mwr
