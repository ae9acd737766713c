#include "wsatlab/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "wsatlab/error.hpp"

namespace wsatlab {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
Rational Rational::operator-(const Rational& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
Rational Rational::operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }
Rational Rational::operator/(const Rational& o) const { return {num_ * o.den_, den_ * o.num_}; }

std::strong_ordering Rational::operator<=>(const Rational& o) const { return num_ * o.den_ <=> o.num_ * den_; }

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::int64_t binom2(std::int64_t k) { return k * (k - 1) / 2; }

std::string WsatBound::source() const {
  std::string out;
  for (const auto& s : sources) {
    if (!out.empty()) out += "; ";
    out += s;
  }
  return out;
}

namespace {

class Table {
 public:
  Table(int n, int s, int t) {
    bound_.n = n;
    bound_.s = s;
    bound_.t = t;
  }

  void exact(std::int64_t value, const std::string& tag) { clause(value, value, tag); }
  void lower(std::int64_t value, const std::string& tag) { clause(value, std::nullopt, tag); }
  void upper(std::int64_t value, const std::string& tag) { clause(std::nullopt, value, tag); }
  void clause(std::optional<std::int64_t> lo, std::optional<std::int64_t> hi, const std::string& tag) {
    if (lo) lo_ = lo_ ? std::max(*lo_, *lo) : *lo;
    if (hi) hi_ = hi_ ? std::min(*hi_, *hi) : *hi;
    bound_.sources.push_back(tag);
  }

  WsatBound finish(std::int64_t floor, std::int64_t ceiling) {
    bound_.lower = lo_ ? std::max(*lo_, floor) : floor;
    bound_.upper = hi_ ? std::min(*hi_, ceiling) : ceiling;
    if (bound_.sources.empty()) bound_.sources.push_back("trivial");
    if (bound_.lower > bound_.upper)
      throw DiscrepancyError("known-value clauses contradict for (n,s,t) = (" + std::to_string(bound_.n) + "," +
                             std::to_string(bound_.s) + "," + std::to_string(bound_.t) + "): " + bound_.source());
    bound_.exact = bound_.lower == bound_.upper;
    return bound_;
  }

 private:
  WsatBound bound_;
  std::optional<std::int64_t> lo_, hi_;
};

}  // namespace

WsatBound known_wsat(int n, int s, int t) {
  if (s < 1 || t < s || n < s + t) throw InvalidArgument("known_wsat needs 1 <= s <= t and n >= s + t");
  const std::int64_t total = binom2(n);
  const int g = std::gcd(s, t);
  Table table(n, s, t);

  if (s == 1 && n > t + 1) table.exact(binom2(t), "star");
  if (s >= 2 && n == s + t) table.exact(binom2(s + t - 1) + (g == 1 ? 0 : 1), "n=s+t");
  if (s == 2 && t == 2 && n > 4) table.exact(n, "K_{2,2}");
  if (s == 2 && t == 3 && n > 5) table.exact(n + 1, "K_{2,3}");
  if (s == 2 && t >= 3 && n > t + 2) {
    const bool low = n >= 2 * t - 1 || t % 2 == 1;
    table.exact(n - (low ? 2 : 1) + binom2(t), "K_{2,t}");
  }
  if (s > 2 && t == s && n == 2 * s + 1) table.exact(total - (4 * s - 4), "balanced n=2s+1");
  if (s > 2 && t > s && n == s + t + 1) {
    if (g == 1) {
      table.exact(total - (2 * s + 2 * t - 2), "n=s+t+1 coprime");
    } else {
      table.clause(total - (2 * s + 2 * t - 2), total - (2 * s + 2 * t - 3), "n=s+t+1 non-coprime");
      const bool appendix = (s == 4 && t == 6) || (s == 6 && t == 8) || (s == 8 && t == 10);
      if (appendix) table.upper(total - (2 * s + 2 * t - 2), "appendix construction");
    }
  }
  const int j = n - s - t;
  if (s > 2 && s <= t && j >= 2 && j < t - 2) {
    table.upper(total - static_cast<std::int64_t>(j) * (s + t - 2) - 2 * t + 3, "n=s+t+j upper");
    if (j == 2) table.lower(total - 4 * (s + t) + 1, "n=s+t+2 lower");
    // 3 <= j <= 2(s+t)/3 - 5/3, cleared of denominators.
    if (j >= 3 && 3 * j <= 2 * (s + t) - 5) {
      const Rational lo = Rational(total) - Rational(19 * (j + 1) * (s + t - 1), 12);
      table.lower(lo.ceil(), "n=s+t+j connectivity lower");
    }
  }
  if (s >= 2 && t == s && n >= 3 * s - 3) {
    // (s-1)(n+1-s/2), doubled to stay in integers.
    table.exact((s - 1) * (2 * n + 2 - s) / 2, "balanced large n");
  }
  if (s >= 2 && t == s + 1 && n >= 3 * t - 3) table.exact((s - 1) * (2 * n + 2 - s) / 2 + 1, "K_{s,s+1} large n");
  if (s >= 2 && t > s) {
    if (n >= 2 * (s + t) - 3) table.upper(static_cast<std::int64_t>(s - 1) * (n - s) + binom2(t), "large n upper");
    if (n >= 3 * t - 3) table.lower(static_cast<std::int64_t>(s - 1) * (n - t + 1) + binom2(t), "large n lower");
  }
  return table.finish(s >= 2 ? n - 1 : 0, total);
}

std::int64_t fj_bound(int j, int k) {
  if (j < 2 || k < j + 1) throw InvalidArgument("fj_bound needs j >= 2 and k >= j + 1");
  if (k <= j + 2) return binom2(k);
  const std::int64_t alpha = binom2(j + 1) + 1;
  const std::int64_t beta = alpha * j + 1;
  return alpha * k - beta;
}

std::int64_t fj_recursion(int j, int k) {
  if (j < 2 || k < j + 1) throw InvalidArgument("fj_recursion needs j >= 2 and k >= j + 1");
  std::vector<std::int64_t> r(static_cast<std::size_t>(k) + 1, 0);
  for (int x = j + 1; x <= k; ++x) {
    if (x <= j + 2) {
      r[x] = binom2(x);
      continue;
    }
    std::int64_t best = 0;
    for (int k1 = j + 1; k1 <= x - 1; ++k1) {
      const int k2 = x + j - k1;
      if (k2 < j + 1 || k2 > x - 1) continue;
      best = std::max(best, r[k1] + r[k2]);
    }
    r[x] = 1 + best;
  }
  return r[k];
}

std::int64_t q_step_bound(int n, int f0, int c0) {
  if (f0 < 0 || c0 < 1 || c0 > n) throw InvalidArgument("q_step_bound needs f0 >= 0 and 1 <= c0 <= n");
  return 2 * static_cast<std::int64_t>(n) - (f0 + 2 * static_cast<std::int64_t>(c0));
}

}  // namespace wsatlab
