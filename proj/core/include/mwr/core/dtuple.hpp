#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <type_traits>
#include <vector>

#include "mwr/core/errors.hpp"

namespace mwr {

/// A d-tuple of signed integer indices. Arithmetic is entrywise; all
/// binary operations require equal lengths.
class DTuple {
 public:
  using value_type = std::int64_t;

  DTuple() = default;
  explicit DTuple(std::size_t d, value_type fill = 0) : v_(d, fill) {}
  DTuple(std::initializer_list<value_type> init) : v_(init) {}
  explicit DTuple(std::vector<value_type> v) : v_(std::move(v)) {}

  std::size_t size() const { return v_.size(); }
  value_type operator[](std::size_t t) const { return v_[t]; }
  value_type& operator[](std::size_t t) { return v_[t]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<value_type>& values() const { return v_; }

  /// j^t: the unit vector with a single 1 at position t.
  static DTuple unit(std::size_t d, std::size_t t) {
    DTuple r(d);
    r.v_[t] = 1;
    return r;
  }
  static DTuple ones(std::size_t d) { return DTuple(d, 1); }

  friend DTuple operator+(const DTuple& a, const DTuple& b) {
    check_same(a, b);
    DTuple r(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) r.v_[t] = a.v_[t] + b.v_[t];
    return r;
  }
  friend DTuple operator-(const DTuple& a, const DTuple& b) {
    check_same(a, b);
    DTuple r(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) r.v_[t] = a.v_[t] - b.v_[t];
    return r;
  }
  DTuple operator-() const {
    DTuple r(size());
    for (std::size_t t = 0; t < size(); ++t) r.v_[t] = -v_[t];
    return r;
  }
  /// Δ·i
  friend DTuple operator*(value_type s, const DTuple& a) {
    DTuple r(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) r.v_[t] = s * a.v_[t];
    return r;
  }
  /// i×j, the entrywise product.
  friend DTuple hadamard(const DTuple& a, const DTuple& b) {
    check_same(a, b);
    DTuple r(a.size());
    for (std::size_t t = 0; t < a.size(); ++t) r.v_[t] = a.v_[t] * b.v_[t];
    return r;
  }

  friend bool operator==(const DTuple&, const DTuple&) = default;
  friend auto operator<=>(const DTuple& a, const DTuple& b) { return a.v_ <=> b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const DTuple& a) {
    os << '(';
    for (std::size_t t = 0; t < a.size(); ++t) os << (t ? "," : "") << a.v_[t];
    return os << ')';
  }

 private:
  static void check_same(const DTuple& a, const DTuple& b) {
    require(a.size() == b.size(), "d-tuple length mismatch");
  }
  std::vector<value_type> v_;
};

inline std::int64_t l1norm(const DTuple& i) {
  std::int64_t s = 0;
  for (auto x : i) s += x < 0 ? -x : x;
  return s;
}

/// Binary vector with bit t = 0 exactly when i_t < 0.
inline DTuple tuple_type(const DTuple& i) {
  DTuple r(i.size());
  for (std::size_t t = 0; t < i.size(); ++t) r[t] = i[t] < 0 ? 0 : 1;
  return r;
}

inline std::size_t count_nonnegative(const DTuple& i) {
  std::size_t c = 0;
  for (auto x : i) c += x >= 0;
  return c;
}

/// B_d in lexicographic order (bit 0 most significant).
inline std::vector<DTuple> boolean_cube(std::size_t d) {
  std::vector<DTuple> out;
  out.reserve(std::size_t{1} << d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    DTuple j(d);
    for (std::size_t t = 0; t < d; ++t) j[t] = (mask >> (d - 1 - t)) & 1U;
    out.push_back(std::move(j));
  }
  return out;
}

/// Visits every tuple in the box lo..hi (inclusive) in lexicographic order.
/// The callback may return void, or bool where false stops the walk.
template <class F>
void for_each_index(const DTuple& lo, const DTuple& hi, F&& f) {
  require(lo.size() == hi.size(), "d-tuple length mismatch");
  const std::size_t d = lo.size();
  for (std::size_t t = 0; t < d; ++t)
    if (lo[t] > hi[t]) return;
  DTuple cur = lo;
  const DTuple& view = cur;
  while (true) {
    if constexpr (std::is_same_v<decltype(f(view)), bool>) {
      if (!f(view)) return;
    } else {
      f(view);
    }
    std::size_t t = d;
    for (;;) {
      if (t == 0) return;
      --t;
      if (cur[t] < hi[t]) {
        ++cur[t];
        break;
      }
      cur[t] = lo[t];
    }
  }
}

}  // namespace mwr
