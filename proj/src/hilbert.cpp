#include "ncalg/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ncalg {

TruncatedSeries::TruncatedSeries(std::size_t cap) : coeffs_(cap + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, std::size_t cap)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(cap + 1);
}

TruncatedSeries TruncatedSeries::from_integers(std::span<const Integer> coefficients,
                                               std::size_t cap) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < coefficients.size() && i <= cap; ++i)
    c.emplace_back(coefficients[i]);
  return TruncatedSeries(std::move(c), cap);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t cap) const {
  return TruncatedSeries(coeffs_, std::min(cap, this->cap()));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.cap(), b.cap()));
  for (std::size_t i = 0; i <= out.cap(); ++i) out.coeffs_[i] = a[i] + b[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.cap(), b.cap()));
  for (std::size_t i = 0; i <= out.cap(); ++i) out.coeffs_[i] = a[i] - b[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.cap(), b.cap()));
  for (std::size_t i = 0; i <= out.cap(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= out.cap(); ++j) out.coeffs_[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& s) {
  if (s[0] == 0) throw std::domain_error("series has zero constant term");
  std::vector<Rational> r(s.cap() + 1);
  Rational inv = 1 / s[0];
  r[0] = inv;
  for (std::size_t d = 1; d <= s.cap(); ++d) {
    Rational acc = 0;
    for (std::size_t i = 1; i <= d; ++i) acc += s[i] * r[d - i];
    r[d] = -acc * inv;
  }
  return TruncatedSeries(std::move(r), s.cap());
}

TruncatedSeries substitute_neg(const TruncatedSeries& s) {
  std::vector<Rational> c(s.coefficients().begin(), s.coefficients().end());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return TruncatedSeries(std::move(c), s.cap());
}

Integer binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Integer r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

Integer matchings(long n, long j) {
  if (n < 0 || j < 0) return 0;
  if (j == 0) return 1;
  if (2 * j > n) return 0;
  // M(m, k) = M(m-1, k) + M(m-2, k-1), filled row by row.
  std::vector<std::vector<Integer>> m(static_cast<std::size_t>(n) + 1,
                                      std::vector<Integer>(static_cast<std::size_t>(j) + 1));
  for (long a = 0; a <= n; ++a) {
    m[a][0] = 1;
    for (long k = 1; k <= j; ++k) {
      if (a < 2) continue;
      m[a][k] = m[a - 1][k] + m[a - 2][k - 1];
    }
  }
  return m[n][j];
}

Integer h_coefficient(long n, long i) {
  if (n < 0 || i < 0 || i > n) return 0;
  Integer total = 0;
  for (long j = 0; 2 * j <= n && j <= i; ++j)
    total += matchings(n, j) * binomial(n - 2 * j, i - j);
  return total;
}

std::vector<Integer> h_coefficients(long n) {
  std::vector<Integer> out;
  for (long i = 0; i <= n; ++i) out.push_back(h_coefficient(n, i));
  return out;
}

TruncatedSeries h_poly(long n) {
  if (n < 0) throw std::invalid_argument("h_poly requires n >= 0");
  auto c = h_coefficients(n);
  return TruncatedSeries::from_integers(c, static_cast<std::size_t>(n));
}

bool verify_palindrome(long n) {
  auto c = h_coefficients(n);
  return std::equal(c.begin(), c.end(), c.rbegin());
}

bool verify_triple_recurrence(long n) {
  for (long m = 2; m <= n; ++m)
    for (long k = 1; k <= m + 1; ++k)
      if (h_coefficient(m, k) != h_coefficient(m - 1, k) + h_coefficient(m - 1, k - 1) +
                                     h_coefficient(m - 2, k - 1))
        return false;
  return true;
}

bool verify_generating_function(long n_max, long k_max) {
  // Bivariate polynomials as (t-degree, x-degree) -> coefficient.
  using Bivariate = std::map<std::pair<long, long>, Integer>;
  Bivariate series;
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= std::min(n, k_max); ++k) {
      Integer c = h_coefficient(n, k);
      if (c != 0) series[{n, k}] = c;
    }
  const Bivariate denominator = {{{0, 0}, 1}, {{1, 0}, -1}, {{1, 1}, -1}, {{2, 1}, -1}};
  Bivariate product;
  for (const auto& [dk, dc] : denominator)
    for (const auto& [sk, sc] : series) {
      long t = dk.first + sk.first;
      long x = dk.second + sk.second;
      if (t > n_max || x > k_max) continue;
      product[{t, x}] += dc * sc;
    }
  for (long n = 0; n <= n_max; ++n)
    for (long k = 0; k <= k_max; ++k) {
      auto it = product.find({n, k});
      Integer got = it == product.end() ? Integer(0) : it->second;
      if (got != ((n == 0 && k == 0) ? 1 : 0)) return false;
    }
  return true;
}

TruncatedSeries koszul_hilbert(std::span<const Integer> dual_coefficients,
                               std::size_t cap) {
  auto dual = TruncatedSeries::from_integers(dual_coefficients, cap);
  return reciprocal(substitute_neg(dual));
}

bool integer_coefficients(const TruncatedSeries& s, std::vector<Integer>& out) {
  out.clear();
  for (const auto& c : s.coefficients()) {
    if (!is_integer(c)) return false;
    out.push_back(boost::multiprecision::numerator(c));
  }
  return true;
}

std::string format_series(const TruncatedSeries& s, bool with_remainder) {
  std::string out;
  for (std::size_t i = 0; i <= s.cap(); ++i) {
    const auto& c = s[i];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0 || mag != 1) out += to_string(mag);
    if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  if (with_remainder) out += " + O(x^" + std::to_string(s.cap() + 1) + ")";
  return out;
}

}  // namespace ncalg
