#pragma once

#include <cstdint>
#include <optional>
#include <utility>

namespace gdcage {

// Closed-form lower bounds and exact values for (k;g,d)-graphs. All
// arithmetic is checked 64-bit; overflow raises instead of wrapping.

// Moore bound M(k,g); 0 for g <= 0.
std::int64_t moore(int k, int g);

// Split of M(k,g) for odd g into even/odd layer parities towards the center
// of the Moore tree. Sums to moore(k,g).
std::pair<std::int64_t, std::int64_t> moore_split(int k, int g);

// Diameter-aware lower bound M'(k;g,d); requires d >= floor(g/2).
std::int64_t lower_bound_m_prime(int k, int g, int d);

// Sharpened bound M''(k;g,d) for even g and floor(g/2) <= d <= g; only
// bipartite graphs can attain it.
std::int64_t lower_bound_m_double_prime(int k, int g, int d);

// Combined bound M(k;g,d): M'' when d <= g and g even, else M'.
std::int64_t lower_bound(int k, int g, int d);

// Exact orders and cage counts for the closed-form families.
std::int64_t exact_order_3_4(int d);              // d >= 2
std::int64_t exact_count_3_4(int d);              // d >= 9
std::int64_t exact_order_3_5(int d);              // d >= 2
std::int64_t exact_count_3_5(int d);              // d >= 6
std::int64_t exact_order_k_3_3(int k);            // k >= 3

struct BoundsReport {
  int k = 0, g = 0, d = 0;
  std::int64_t moore_kg = 0;
  std::int64_t m_prime = 0;
  std::optional<std::int64_t> m_double_prime;
  std::int64_t combined = 0;
  std::optional<std::int64_t> exact_order;
  std::optional<std::int64_t> exact_count;
};

// All bounds for a triple, with exact order/count filled in when one of the
// closed-form families applies.
BoundsReport bounds_report(int k, int g, int d);

}  // namespace gdcage
