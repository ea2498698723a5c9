#pragma once

// Truncated power series with exact coefficients, path-graph matchings and
// the dual Hilbert polynomials H_n(x) of the path algebras.

#include <span>
#include <string>
#include <vector>

#include "ncalg/rational.hpp"

namespace ncalg {

/// Power series known exactly through degree cap(). Binary operations on
/// series with different caps truncate to the smaller one.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t cap);
  TruncatedSeries(std::vector<Rational> coefficients, std::size_t cap);
  static TruncatedSeries from_integers(std::span<const Integer> coefficients,
                                       std::size_t cap);

  std::size_t cap() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t degree) const { return coeffs_.at(degree); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  TruncatedSeries truncated(std::size_t cap) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// 1/s through s.cap(). Throws std::domain_error on a zero constant term.
TruncatedSeries reciprocal(const TruncatedSeries& s);
/// s(-x): odd coefficients change sign.
TruncatedSeries substitute_neg(const TruncatedSeries& s);

/// C(a, b), zero whenever b < 0, b > a or a < 0.
Integer binomial(long a, long b);

/// Number of j-edge matchings of the n-vertex path.
Integer matchings(long n, long j);

/// Coefficients H_n^0..H_n^n of H_n(x) = sum_j M(n,j) C(n-2j, i-j) x^i.
/// Zero-length for n < 0.
std::vector<Integer> h_coefficients(long n);
TruncatedSeries h_poly(long n);

/// H_n^i, zero outside 0 <= i <= n.
Integer h_coefficient(long n, long i);

bool verify_palindrome(long n);
/// H_m^k = H_{m-1}^k + H_{m-1}^{k-1} + H_{m-2}^{k-1} for 2 <= m <= n, k >= 1.
bool verify_triple_recurrence(long n);
/// (1 - t - xt - xt^2) * sum_n t^n H_n(x) == 1 on every t^n x^k with
/// n <= n_max, k <= k_max.
bool verify_generating_function(long n_max, long k_max);

/// Hilbert series of a Koszul algebra from its dual's: 1 / h(-x) through cap.
TruncatedSeries koszul_hilbert(std::span<const Integer> dual_coefficients,
                               std::size_t cap);

/// True when every coefficient is an integer; fills `out` with them.
bool integer_coefficients(const TruncatedSeries& s, std::vector<Integer>& out);

std::string format_series(const TruncatedSeries& s, bool with_remainder = true);

}  // namespace ncalg
