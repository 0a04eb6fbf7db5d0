#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mwr/core/checked_int.hpp"
#include "mwr/core/digits.hpp"
#include "mwr/core/dtuple.hpp"
#include "mwr/core/errors.hpp"

namespace mwr {

/// d-dimensional array of side n, logically indexed by tuples in [n]^d
/// (1-based), stored row-major (last axis fastest).
template <class T = Int>
class DenseArray {
 public:
  using value_type = T;

  DenseArray(std::size_t d, std::int64_t side, std::vector<T> data)
      : d_(d), side_(side), data_(std::move(data)) {
    require(d >= 1, "array dimension must be positive");
    require(side >= 1, "array side must be positive");
    require(data_.size() == static_cast<std::size_t>(int_pow(side, static_cast<unsigned>(d))),
            "array data length must equal side^d");
  }

  static DenseArray filled(std::size_t d, std::int64_t side, const T& value) {
    require(side >= 1, "array side must be positive");
    return DenseArray(d, side, std::vector<T>(static_cast<std::size_t>(int_pow(side, static_cast<unsigned>(d))), value));
  }

  /// Builds entry-by-entry; f receives every 1-based index in row-major order.
  template <class F>
  static DenseArray generate(std::size_t d, std::int64_t side, F&& f) {
    require(side >= 1, "array side must be positive");
    std::vector<T> data;
    data.reserve(static_cast<std::size_t>(int_pow(side, static_cast<unsigned>(d))));
    for_each_index(DTuple::ones(d), DTuple(d, side), [&](const DTuple& i) { data.push_back(T(f(i))); });
    return DenseArray(d, side, std::move(data));
  }

  std::size_t dim() const { return d_; }
  std::int64_t side() const { return side_; }
  std::size_t size() const { return data_.size(); }
  std::span<const T> data() const { return data_; }

  DTuple lower() const { return DTuple::ones(d_); }
  DTuple upper() const { return DTuple(d_, side_); }

  bool contains(const DTuple& i) const {
    if (i.size() != d_) return false;
    for (auto x : i)
      if (x < 1 || x > side_) return false;
    return true;
  }

  std::size_t linear_index(const DTuple& i) const {
    if (!contains(i)) throw DomainError("array index out of range");
    std::size_t idx = 0;
    for (std::size_t t = 0; t < d_; ++t) idx = idx * static_cast<std::size_t>(side_) + static_cast<std::size_t>(i[t] - 1);
    return idx;
  }

  const T& operator[](const DTuple& i) const { return data_[linear_index(i)]; }
  T& operator[](const DTuple& i) { return data_[linear_index(i)]; }

  /// Copy with one cell replaced.
  DenseArray with_cell(const DTuple& i, T value) const {
    DenseArray copy = *this;
    copy.data_[linear_index(i)] = std::move(value);
    return copy;
  }

  template <class U>
  DenseArray<U> cast() const {
    std::vector<U> out;
    out.reserve(data_.size());
    for (const auto& x : data_) {
      if constexpr (std::is_same_v<U, CheckedInt>) {
        out.push_back(to_checked(x));
      } else {
        out.push_back(U(to_big(x)));
      }
    }
    return DenseArray<U>(d_, side_, std::move(out));
  }

  friend bool operator==(const DenseArray&, const DenseArray&) = default;

 private:
  std::size_t d_;
  std::int64_t side_;
  std::vector<T> data_;
};

}  // namespace mwr
