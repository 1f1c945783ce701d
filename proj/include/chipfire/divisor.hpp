#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "chipfire/graph.hpp"

namespace chipfire {

// Finite formal integer combination of metric-graph points. Only nonzero
// coefficients are stored; points are kept in canonical order, so equal
// divisors compare equal structurally.
class Divisor {
public:
  Divisor() = default;

  void add(const MetricPoint& p, int64_t count) {
    if (count == 0) return;
    auto [it, inserted] = chips_.try_emplace(p, 0);
    it->second += count;
    degree_ += count;
    if (it->second == 0) chips_.erase(it);
  }

  int64_t coefficient(const MetricPoint& p) const {
    auto it = chips_.find(p);
    return it == chips_.end() ? 0 : it->second;
  }

  int64_t degree() const { return degree_; }
  size_t support_size() const { return chips_.size(); }
  bool is_zero() const { return chips_.empty(); }
  bool is_effective() const {
    for (auto& [p, c] : chips_) {
      if (c < 0) return false;
    }
    return true;
  }

  auto begin() const { return chips_.begin(); }
  auto end() const { return chips_.end(); }

  Divisor& operator+=(const Divisor& o) {
    for (auto& [p, c] : o.chips_) add(p, c);
    return *this;
  }
  Divisor& operator-=(const Divisor& o) {
    for (auto& [p, c] : o.chips_) add(p, -c);
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
  friend Divisor operator*(int64_t k, const Divisor& d) {
    Divisor r;
    if (k != 0) {
      for (auto& [p, c] : d.chips_) r.add(p, k * c);
    }
    return r;
  }
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.chips_ == b.chips_; }
  friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

  // Lines `chip <vertex> <count>` or `chip <edge> <offset_num>/<offset_den> <count>`.
  std::string to_text(const ModelGraph& g) const;
  static Divisor parse(const ModelGraph& g, std::istream& in);
  static Divisor parse(const ModelGraph& g, const std::string& text);

private:
  std::map<MetricPoint, int64_t> chips_;
  int64_t degree_ = 0;
};

inline Divisor single_chip(const MetricPoint& p, int64_t count = 1) {
  Divisor d;
  d.add(p, count);
  return d;
}

// K = sum over vertices of (deg(v) - 2) * v.
Divisor canonical_divisor(const ModelGraph& g);

}  // namespace chipfire
