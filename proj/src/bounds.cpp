#include "gdcage/bounds.hpp"

#include <stdexcept>

namespace gdcage {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("bounds: integer overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("bounds: integer overflow");
  return r;
}

// sum_{i=0}^{hi} (k-1)^i, 0 for hi < 0.
std::int64_t geom_sum(int k, int hi) {
  std::int64_t sum = 0, pw = 1;
  for (int i = 0; i <= hi; ++i) {
    sum = checked_add(sum, pw);
    pw = checked_mul(pw, k - 1);
  }
  return sum;
}

// sum of (k-1)^e over e = start, start+2, ..., while e <= hi_exp.
std::int64_t geom_sum_step2(int k, int start, int hi_exp) {
  std::int64_t sum = 0;
  std::int64_t pw = 1;
  for (int i = 0; i < start; ++i) pw = checked_mul(pw, k - 1);
  for (int e = start; e <= hi_exp; e += 2) {
    sum = checked_add(sum, pw);
    pw = checked_mul(checked_mul(pw, k - 1), k - 1);
  }
  return sum;
}

}  // namespace

std::int64_t moore(int k, int g) {
  if (k < 2) throw std::invalid_argument("moore: k < 2");
  if (g <= 0) return 0;
  const int t = g / 2;
  if (g % 2 == 1)
    return checked_add(1, checked_mul(k, geom_sum(k, t - 1)));
  return checked_mul(2, geom_sum(k, t - 1));
}

std::pair<std::int64_t, std::int64_t> moore_split(int k, int g) {
  if (g % 2 == 0) throw std::invalid_argument("moore_split: g must be odd");
  if (g < 1) return {0, 0};
  const int t = g / 2;
  // M0 sums (k-1)^(2i+1) for 0 <= i <= floor((t-2)/2), M1 sums (k-1)^(2i)
  // for 0 <= i <= floor((t-1)/2); negative upper indices give empty sums.
  std::int64_t m0 = checked_add(
      1, checked_mul(k, geom_sum_step2(k, 1, t - 2 >= 0 ? t - 1 : -1)));
  std::int64_t m1 = checked_mul(k, geom_sum_step2(k, 0, t - 1));
  return {m0, m1};
}

std::int64_t lower_bound_m_prime(int k, int g, int d) {
  if (k < 3 || g < 3) throw std::invalid_argument("m_prime: k,g >= 3 required");
  const int t = g / 2;
  if (d < t) throw std::invalid_argument("m_prime: d < floor(g/2)");
  if (d <= 2 * t)
    return checked_add(moore(k, g), moore(k, 2 * (d - t) - 1));
  const int rem = d - (2 * t + 1);
  const int r = rem / g;
  const int s = rem % g;
  return checked_add(checked_mul(r + 2, moore(k, g)), moore(k, s));
}

std::int64_t lower_bound_m_double_prime(int k, int g, int d) {
  if (k < 3 || g < 4 || g % 2 != 0)
    throw std::invalid_argument("m_double_prime: even g >= 4 required");
  const int t = g / 2;
  if (d < t || d > g)
    throw std::invalid_argument("m_double_prime: need floor(g/2) <= d <= g");
  const int h = 2 * d - 2 * t - 1;
  if (h <= 0) return moore(k, g);
  auto [m0, m1] = moore_split(k, h);
  return checked_add(moore(k, g), checked_mul(2, std::max(m0, m1)));
}

std::int64_t lower_bound(int k, int g, int d) {
  if (k < 3 || g < 3) throw std::invalid_argument("lower_bound: k,g >= 3");
  if (d < g / 2) throw std::invalid_argument("lower_bound: d < floor(g/2)");
  if (g % 2 == 0 && d <= g) return lower_bound_m_double_prime(k, g, d);
  return lower_bound_m_prime(k, g, d);
}

std::int64_t exact_order_3_4(int d) {
  if (d < 2) throw std::invalid_argument("exact_order_3_4: d >= 2");
  if (d == 2) return 6;
  if (d == 3) return 8;
  if (d == 4) return 12;
  const int j = (d - 5) % 4;
  const int c = (d - 5) / 4;
  return 14 + 2 * j + 6 * static_cast<std::int64_t>(c);
}

std::int64_t exact_count_3_4(int d) {
  if (d < 9) throw std::invalid_argument("exact_count_3_4: d >= 9");
  switch (d % 4) {
    case 1:
      return 1;
    case 2:
      return 4;
    case 3:
      return 17 + d / 8;
    default:
      return 27 + static_cast<std::int64_t>(d) + (d - 4) / 8;
  }
}

std::int64_t exact_order_3_5(int d) {
  if (d < 2) throw std::invalid_argument("exact_order_3_5: d >= 2");
  if (d <= 4) return 2 * d + 6;
  const int m = d % 5;
  return (m == 0 || m == 1) ? 2 * static_cast<std::int64_t>(d) + 10
                            : 2 * static_cast<std::int64_t>(d) + 8;
}

std::int64_t exact_count_3_5(int d) {
  if (d < 6) throw std::invalid_argument("exact_count_3_5: d >= 6");
  switch (d % 5) {
    case 1:
      return d - d / 10;
    case 2:
      return 1;
    case 3:
      return 4;
    case 4:
      return 10;
    default: {
      // 128 + 11.3d resp. 138.5 + 11.3d, evaluated as exact rationals.
      std::int64_t num = (d % 10 == 0) ? 1280 + 113 * static_cast<std::int64_t>(d)
                                       : 1385 + 113 * static_cast<std::int64_t>(d);
      if (num % 10 != 0)
        throw std::logic_error("exact_count_3_5: non-integral count");
      return num / 10;
    }
  }
}

std::int64_t exact_order_k_3_3(int k) {
  if (k < 3) throw std::invalid_argument("exact_order_k_3_3: k >= 3");
  return 2 * (static_cast<std::int64_t>(k) + 1);
}

BoundsReport bounds_report(int k, int g, int d) {
  BoundsReport rep;
  rep.k = k;
  rep.g = g;
  rep.d = d;
  rep.moore_kg = moore(k, g);
  rep.m_prime = lower_bound_m_prime(k, g, d);
  if (g % 2 == 0 && g >= 4 && d >= g / 2 && d <= g)
    rep.m_double_prime = lower_bound_m_double_prime(k, g, d);
  rep.combined = lower_bound(k, g, d);
  if (k == 3 && g == 4 && d >= 2) {
    rep.exact_order = exact_order_3_4(d);
    if (d >= 9) rep.exact_count = exact_count_3_4(d);
  } else if (k == 3 && g == 5 && d >= 2) {
    rep.exact_order = exact_order_3_5(d);
    if (d >= 6) rep.exact_count = exact_count_3_5(d);
  } else if (g == 3 && d == 3 && k >= 3) {
    rep.exact_order = exact_order_k_3_3(k);
  }
  return rep;
}

}  // namespace gdcage
