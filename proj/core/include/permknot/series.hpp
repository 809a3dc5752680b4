#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace permknot {

using BigInt = boost::multiprecision::cpp_int;

// Truncated integer power series: coefficients of x^0..x^N for truncation
// order N. Arithmetic is exact modulo x^{N+1}; mixing orders truncates to
// the smaller one.
class IntSeries {
 public:
  explicit IntSeries(int order);
  explicit IntSeries(std::vector<BigInt> coefficients);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const BigInt& operator[](int k) const;
  BigInt& operator[](int k);
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept;

  friend IntSeries operator+(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator-(const IntSeries& a, const IntSeries& b);
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);

 private:
  std::vector<BigInt> c_;
};

enum class CountMethod { Exhaustive, Generator };

// Counting bounds: Exhaustive walks all n! permutations, Generator walks
// only the counted objects (125,107,063 of them at n = 13).
inline constexpr int kMaxExhaustiveCount = 10;
inline constexpr int kMaxGeneratorCount = 13;

std::uint64_t count_shallow(int n, CountMethod method);

// Unique power-series solution of x^2 G^3 + (x^2 - 3x + 1) G^2 + (3x - 2) G + 1 = 0
// with a_0 = a_1 = 1, computed order by order through truncation order N.
IntSeries series_coefficients(int order);

// True iff s satisfies the cubic above modulo x^{order+1}.
bool verify_residual(const IntSeries& s);

}  // namespace permknot
