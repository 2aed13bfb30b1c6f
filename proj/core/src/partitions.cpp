#include "lowlying/partitions.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lowlying::partitions {

std::vector<int> RGSurjection::multiplicities() const {
  std::vector<int> w(static_cast<std::size_t>(s), 0);
  for (int v : sigma) ++w[static_cast<std::size_t>(v - 1)];
  return w;
}

bool is_restricted_growth(std::span<const int> sigma) {
  int running_max = 0;
  for (int v : sigma) {
    if (v < 1 || v > running_max + 1) return false;
    running_max = std::max(running_max, v);
  }
  return true;
}

namespace {

void extend(int alpha, int s, std::vector<int>& prefix, int running_max,
            std::vector<RGSurjection>& out) {
  const int pos = static_cast<int>(prefix.size());
  if (pos == alpha) {
    if (running_max == s) out.push_back({s, prefix});
    return;
  }
  // Not enough positions left to reach label s.
  if (s - running_max > alpha - pos) return;
  const int top = std::min(running_max + 1, s);
  for (int v = 1; v <= top; ++v) {
    prefix.push_back(v);
    extend(alpha, s, prefix, std::max(running_max, v), out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<RGSurjection> enumerate_rg(int alpha, int s) {
  if (s < 1 || alpha < s || alpha > kMaxAlpha)
    throw std::invalid_argument("enumerate_rg: need 1 <= s <= alpha <= " +
                                std::to_string(kMaxAlpha) + ", got alpha=" +
                                std::to_string(alpha) + ", s=" + std::to_string(s));
  std::vector<RGSurjection> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(alpha));
  extend(alpha, s, prefix, 0, out);
  return out;
}

std::vector<RGSurjection> filter_profile(const std::vector<RGSurjection>& list,
                                         const ProfilePredicate& pred) {
  std::vector<RGSurjection> out;
  for (const auto& sigma : list) {
    bool keep = true;
    for (int w : sigma.multiplicities()) keep = keep && pred(w);
    if (keep) out.push_back(sigma);
  }
  return out;
}

std::uint64_t count_pair_partitions(int alpha) {
  if (alpha <= 0 || alpha % 2 != 0 || alpha > 20)
    throw std::invalid_argument("count_pair_partitions: alpha must be even in [2, 20], got " +
                                std::to_string(alpha));
  // (alpha-1)!! = alpha! / (2^{alpha/2} (alpha/2)!)
  std::uint64_t result = 1;
  for (int k = alpha - 1; k > 1; k -= 2) result *= static_cast<std::uint64_t>(k);
  return result;
}

namespace {

// Visits every tuple in {0..n-1}^m.
template <typename F>
void for_each_tuple(std::size_t m, std::size_t n, F&& f) {
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    f(idx);
    std::size_t k = m;
    while (k > 0 && ++idx[k - 1] == n) idx[--k] = 0;
    if (k == 0) return;
  }
}

}  // namespace

ReorderSides reorder_check(int m, const MultiFunction& g, std::span<const double> xs) {
  if (m < 1 || m > 5) throw std::invalid_argument("reorder_check: need 1 <= m <= 5");
  if (xs.size() > 8) throw std::invalid_argument("reorder_check: at most 8 points");
  ReorderSides sides;
  if (xs.empty()) return sides;
  const auto arity = static_cast<std::size_t>(m);

  std::vector<double> args(arity);
  for_each_tuple(arity, xs.size(), [&](const std::vector<std::size_t>& j) {
    for (std::size_t k = 0; k < arity; ++k) args[k] = xs[j[k]];
    sides.lhs += g(args);
  });

  for (std::size_t s = 1; s <= std::min(arity, xs.size()); ++s) {
    const auto sigmas = enumerate_rg(m, static_cast<int>(s));
    for_each_tuple(s, xs.size(), [&](const std::vector<std::size_t>& i) {
      for (std::size_t a = 0; a < s; ++a)
        for (std::size_t b = a + 1; b < s; ++b)
          if (i[a] == i[b]) return;
      for (const auto& sigma : sigmas) {
        for (std::size_t k = 0; k < arity; ++k)
          args[k] = xs[i[static_cast<std::size_t>(sigma.sigma[k] - 1)]];
        sides.rhs += g(args);
      }
    });
  }
  return sides;
}

}  // namespace lowlying::partitions
