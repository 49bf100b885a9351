#pragma once

#include "threepv/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace threepv {

/// Finite formal combination of keys with exact coefficients.
/// Invariant: no stored coefficient is zero.
template <class Key>
class SparseVector {
 public:
  using Map = std::map<Key, Rational>;

  SparseVector() = default;
  SparseVector(const Key& k, const Rational& c) { add(k, c); }

  void add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const SparseVector& other, const Rational& c) {
    if (c == 0) return;
    for (const auto& [k, v] : other.terms_) add(k, v * c);
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  SparseVector& operator+=(const SparseVector& o) {
    add_scaled(o, 1);
    return *this;
  }
  SparseVector& operator-=(const SparseVector& o) {
    add_scaled(o, -1);
    return *this;
  }
  SparseVector& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= c;
    }
    return *this;
  }

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator-(SparseVector a) { return a *= Rational(-1); }
  friend SparseVector operator*(const Rational& c, SparseVector a) { return a *= c; }
  friend SparseVector operator*(SparseVector a, const Rational& c) { return a *= c; }
  friend bool operator==(const SparseVector& a, const SparseVector& b) { return a.terms_ == b.terms_; }

  /// Renders "c1*k1 + c2*k2" with a caller-supplied key printer; "0" when empty.
  template <class KeyPrinter>
  std::string format(KeyPrinter&& key_name) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += to_string(v);
      std::string name = key_name(k);
      if (!name.empty()) out += "*" + name;
    }
    return out;
  }

 private:
  Map terms_;
};

}  // namespace threepv
