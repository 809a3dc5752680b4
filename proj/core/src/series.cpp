#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permknot/permutation.hpp"
#include "permknot/recursions.hpp"
#include "permknot/series.hpp"
#include "permknot/statistics.hpp"

namespace permknot {

IntSeries::IntSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

IntSeries::IntSeries(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw std::invalid_argument("series needs at least a constant term");
}

const BigInt& IntSeries::operator[](int k) const {
  if (k < 0 || k > order()) throw std::out_of_range("series coefficient index out of range");
  return c_[static_cast<std::size_t>(k)];
}

BigInt& IntSeries::operator[](int k) {
  if (k < 0 || k > order()) throw std::out_of_range("series coefficient index out of range");
  return c_[static_cast<std::size_t>(k)];
}

bool IntSeries::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](const BigInt& v) { return v == 0; });
}

IntSeries operator+(const IntSeries& a, const IntSeries& b) {
  IntSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
  return r;
}

IntSeries operator-(const IntSeries& a, const IntSeries& b) {
  IntSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
  return r;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  IntSeries r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) {
    BigInt acc = 0;
    for (int i = std::max(0, k - b.order()); i <= std::min(k, a.order()); ++i) {
      acc += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(k - i)];
    }
    r[k] = std::move(acc);
  }
  return r;
}

namespace {

// Series with the given low-order coefficients, zero-padded (or truncated)
// to the requested order.
IntSeries poly(int order, std::initializer_list<int> low) {
  IntSeries p(order);
  int k = 0;
  for (int v : low) {
    if (k > order) break;
    p[k++] = v;
  }
  return p;
}

// sum over a + b = m of h[a] h[b], indices restricted to 1..hi
BigInt conv2(const std::vector<BigInt>& h, int m, int hi) {
  BigInt acc = 0;
  for (int a = std::max(1, m - hi); a <= std::min(m - 1, hi); ++a) {
    acc += h[static_cast<std::size_t>(a)] * h[static_cast<std::size_t>(m - a)];
  }
  return acc;
}

// sum over a + b + c = m of h[a] h[b] h[c], indices at least 1
BigInt conv3(const std::vector<BigInt>& h, int m, int hi) {
  BigInt acc = 0;
  for (int a = std::max(1, m - 2 * hi); a <= std::min(m - 2, hi); ++a) {
    acc += h[static_cast<std::size_t>(a)] * conv2(h, m - a, hi);
  }
  return acc;
}

}  // namespace

IntSeries series_coefficients(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  const int N = order;

  // Solve for H = G - 1, which satisfies
  //   x^2 H^3 + (4x^2 - 3x + 1) H^2 + (5x^2 - 3x) H + 2x^2 = 0
  // with h_0 = 0 and the combinatorial branch h_1 = 1. For n >= 2 the
  // coefficient of x^{n+1} is linear in h_n with pivot 2 h_1 - 3 = -1.
  std::vector<BigInt> h(static_cast<std::size_t>(N) + 1);
  if (N >= 1) h[1] = 1;
  if (N >= 2) {
    const BigInt pivot = 2 * h[1] - 3;
    if (pivot == 0) throw std::logic_error("series solve degenerated past the order-1 branch");
    for (int n = 2; n <= N; ++n) {
      const int m = n + 1;
      BigInt known = conv3(h, m - 2, N);
      known += 4 * conv2(h, m - 2, N) - 3 * conv2(h, m - 1, N) + conv2(h, m, N);
      known += 5 * h[static_cast<std::size_t>(n - 1)];
      h[static_cast<std::size_t>(n)] = -known / pivot;
    }
  }

  std::vector<BigInt> a(h);
  a[0] = 1;
  return IntSeries(std::move(a));
}

bool verify_residual(const IntSeries& s) {
  const int N = s.order();
  const IntSeries x2 = poly(N, {0, 0, 1});
  const IntSeries quad = poly(N, {1, -3, 1});
  const IntSeries lin = poly(N, {-2, 3});
  const IntSeries one = poly(N, {1});
  const IntSeries s2 = s * s;
  const IntSeries residual = x2 * s2 * s + quad * s2 + lin * s + one;
  return residual.is_zero();
}

std::uint64_t count_shallow(int n, CountMethod method) {
  if (n < 1) throw std::invalid_argument("counting needs n >= 1");
  if (method == CountMethod::Exhaustive) {
    if (n > kMaxExhaustiveCount) {
      throw std::domain_error("exhaustive counting is limited to n <= " +
                              std::to_string(kMaxExhaustiveCount));
    }
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::uint64_t count = 0;
    do {
      if (is_shallow(Permutation(Permutation::unchecked, v))) ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    return count;
  }
  if (n > kMaxGeneratorCount) {
    throw std::domain_error("generator counting is limited to n <= " +
                            std::to_string(kMaxGeneratorCount));
  }
  std::uint64_t count = 0;
  for_each_shallow(n, [&count](std::span<const int>) { ++count; });
  return count;
}

}  // namespace permknot
