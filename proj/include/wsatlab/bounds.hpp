#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wsatlab {

/// Exact fraction with a positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  std::int64_t floor() const;
  std::int64_t ceil() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::int64_t binom2(std::int64_t k);

/// Closed interval for wsat(n, K_{s,t}) with the clauses that produced it.
struct WsatBound {
  int n = 0, s = 0, t = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  bool exact = false;
  std::vector<std::string> sources;

  std::string source() const;
};

/// Intersects every applicable clause of the known-value table. Throws
/// DiscrepancyError if two clauses contradict each other.
WsatBound known_wsat(int n, int s, int t);

/// Upper bound on the edge count of a j-erasable graph on k vertices:
/// C(k,2) for k <= j + 2, otherwise alpha*k - beta with
/// alpha = C(j+1,2) + 1 and beta = alpha*j + 1.
std::int64_t fj_bound(int j, int k);

/// The breakdown recursion r(k) = 1 + max r(k1) + r(k2) over k1 + k2 = k + j,
/// j + 1 <= k1, k2 <= k - 1, with r(k) = C(k,2) for k <= j + 2.
std::int64_t fj_recursion(int j, int k);

/// Most erase steps the semi-invariant allows from (f0, c0): 2n - (f0 + 2 c0).
std::int64_t q_step_bound(int n, int f0, int c0);

}  // namespace wsatlab
