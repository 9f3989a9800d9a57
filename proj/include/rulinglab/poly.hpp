// Exact Laurent-polynomial arithmetic.
//
// HalfLaurent: Z[z^{1/2}, z^{-1/2}] with the exponent stored as an integer
// number of half-steps (2x the z-exponent), so weights in (1/2)Z need no
// rationals.  MultiLaurent: Z[a^{±1}, z^{±1/2}, A, B] with A,B-exponents >= 0.
// Coefficients are arbitrary precision (skein coefficients grow fast).

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rulinglab {

using BigInt = boost::multiprecision::cpp_int;

class HalfLaurent {
 public:
  // key = 2 * (exponent of z); value = nonzero coefficient
  using Terms = std::map<int, BigInt>;

  HalfLaurent() = default;
  explicit HalfLaurent(BigInt c) {
    if (c != 0) terms_[0] = std::move(c);
  }

  // monomial c * z^(half_steps/2)
  static HalfLaurent monomial(int half_steps, BigInt c = 1) {
    HalfLaurent p;
    if (c != 0) p.terms_[half_steps] = std::move(c);
    return p;
  }
  static HalfLaurent zero() { return HalfLaurent(); }
  static HalfLaurent one() { return HalfLaurent(BigInt(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HalfLaurent& operator+=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  HalfLaurent& operator-=(const HalfLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
    HalfLaurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  HalfLaurent& operator*=(const HalfLaurent& o) { return *this = *this * o; }

  HalfLaurent scaled(const BigInt& k) const {
    HalfLaurent r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
  }

  bool operator==(const HalfLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const HalfLaurent& o) const { return !(*this == o); }

  void add_term(int half_steps, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(half_steps);
    if (it == terms_.end()) {
      terms_.emplace(half_steps, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // "z^-2 + z^-1 + 1"; half-integer exponents print as e.g. z^-1/2
  std::string str() const;
  // parse the same textual form; throws std::invalid_argument on garbage
  static HalfLaurent parse(const std::string& s);

 private:
  Terms terms_;
};

// exponent tuple (e_a, e_z_half_steps, e_A, e_B)
using MLKey = std::array<int, 4>;

class MultiLaurent {
 public:
  using Terms = std::map<MLKey, BigInt>;

  MultiLaurent() = default;
  explicit MultiLaurent(BigInt c) {
    if (c != 0) terms_[{0, 0, 0, 0}] = std::move(c);
  }
  static MultiLaurent monomial(int ea, int ez_half, int eA, int eB, BigInt c = 1) {
    MultiLaurent p;
    if (c != 0) p.terms_[{ea, ez_half, eA, eB}] = std::move(c);
    return p;
  }
  static MultiLaurent zero() { return MultiLaurent(); }
  static MultiLaurent one() { return MultiLaurent(BigInt(1)); }
  static MultiLaurent a(int e = 1) { return monomial(e, 0, 0, 0); }
  static MultiLaurent z_half(int half_steps) { return monomial(0, half_steps, 0, 0); }
  static MultiLaurent A() { return monomial(0, 0, 1, 0); }
  static MultiLaurent B() { return monomial(0, 0, 0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiLaurent& operator+=(const MultiLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiLaurent& operator-=(const MultiLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MultiLaurent operator+(MultiLaurent a, const MultiLaurent& b) { return a += b; }
  friend MultiLaurent operator-(MultiLaurent a, const MultiLaurent& b) { return a -= b; }
  friend MultiLaurent operator*(const MultiLaurent& a, const MultiLaurent& b) {
    MultiLaurent r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return r;
  }
  MultiLaurent& operator*=(const MultiLaurent& o) { return *this = *this * o; }

  MultiLaurent scaled(const BigInt& k) const {
    MultiLaurent r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
  }

  bool operator==(const MultiLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiLaurent& o) const { return !(*this == o); }

  void add_term(const MLKey& k, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // largest e_a among terms; meaningless on zero (caller checks is_zero)
  int deg_a() const;

  std::string str() const;

 private:
  Terms terms_;
};

// substitute A <- (z - 1), B <- -1; a ring homomorphism onto the (a,z) subring
MultiLaurent ml_substitute_AB(const MultiLaurent& p);

// coefficient of a^e as a z-polynomial; requires e_A = e_B = 0 everywhere
HalfLaurent ml_coefficient_of_a(const MultiLaurent& p, int e);

}  // namespace rulinglab
