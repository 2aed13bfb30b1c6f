#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace lowlying::partitions {

/// A surjection sigma: {1..alpha} -> {1..s} in restricted-growth form: every
/// value is 1 or one more than some earlier value. Each one is the canonical
/// labelling of a set partition of alpha elements into s blocks.
struct RGSurjection {
  int s = 0;
  std::vector<int> sigma;  // values in 1..s

  [[nodiscard]] int alpha() const { return static_cast<int>(sigma.size()); }
  // varpi_u = #sigma^{-1}(u), u = 1..s (returned 0-indexed).
  [[nodiscard]] std::vector<int> multiplicities() const;
};

bool is_restricted_growth(std::span<const int> sigma);

inline constexpr int kMaxAlpha = 12;

// All of P(alpha, s), generated depth-first. Requires 1 <= s <= alpha <= 12.
std::vector<RGSurjection> enumerate_rg(int alpha, int s);

using ProfilePredicate = std::function<bool(int)>;

// Keeps sigma whose every multiplicity satisfies `pred`.
std::vector<RGSurjection> filter_profile(const std::vector<RGSurjection>& list,
                                         const ProfilePredicate& pred);

inline bool at_least_two(int w) { return w >= 2; }
inline bool exactly_two(int w) { return w == 2; }

// alpha! / (2^{alpha/2} (alpha/2)!) for even alpha <= 20.
std::uint64_t count_pair_partitions(int alpha);

struct ReorderSides {
  double lhs = 0.0;
  double rhs = 0.0;
};

using MultiFunction = std::function<double(std::span<const double>)>;

/// Both sides of the reordering identity
///   sum_{j_1..j_m} g(x_{j_1}, ..., x_{j_m})
///     = sum_{s<=m} sum_{sigma in P(m,s)} sum_{i_1..i_s distinct}
///         g(x_{i_sigma(1)}, ..., x_{i_sigma(m)}).
/// Requires m <= 5 and xs.size() <= 8.
ReorderSides reorder_check(int m, const MultiFunction& g, std::span<const double> xs);

}  // namespace lowlying::partitions
