#include "test_helpers.hpp"

#include <functional>

#include "nullcert/linalg.hpp"

namespace nullcert::testing {

namespace {

// Enumerates subsets of size k.
void subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
             std::size_t start, const std::function<bool(const std::vector<std::size_t>&)>& fn,
             bool& done) {
  if (done) return;
  if (cur.size() == k) {
    done = fn(cur);
    return;
  }
  for (std::size_t i = start; i < n && !done; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, i + 1, fn, done);
    cur.pop_back();
  }
}

}  // namespace

bool in_hull_bruteforce(const std::vector<RationalPoint>& points, const RationalPoint& x) {
  if (points.empty()) return false;
  const int n = static_cast<int>(x.size());
  for (std::size_t k = 1; k <= points.size() && k <= static_cast<std::size_t>(n) + 1; ++k) {
    bool done = false;
    std::vector<std::size_t> cur;
    subsets(
        points.size(), k, cur, 0,
        [&](const std::vector<std::size_t>& subset) {
          // Solve for barycentric coordinates over the subset.
          RationalMatrix a(n + 1, static_cast<int>(k));
          std::vector<Rational> rhs;
          for (int i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < k; ++j) a.at(i, static_cast<int>(j)) = points[subset[j]][i];
            rhs.push_back(x[i]);
          }
          for (std::size_t j = 0; j < k; ++j) a.at(n, static_cast<int>(j)) = 1;
          rhs.emplace_back(1);
          // Unique solution needed, otherwise a larger subset covers it.
          if (rank_exact(a) != static_cast<int>(k)) return false;
          const auto lambda = solve_exact(a, rhs);
          if (!lambda) return false;
          for (const auto& l : *lambda) {
            if (l < 0) return false;
          }
          return true;
        },
        done);
    if (done) return true;
  }
  return false;
}

}  // namespace nullcert::testing
