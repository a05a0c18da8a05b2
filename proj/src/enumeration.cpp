#include "icube4/enumeration.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace icube4 {

namespace {

void check_budget(i64 n, const EnumBudget& budget) {
  require(n >= 1, Errc::invalid_argument, "norm must be positive");
  require(n <= budget.max_norm, Errc::budget_exceeded, "norm exceeds the search budget");
}

// Candidate filtering shared by every backtracking search: indices of
// vectors orthogonal to v.
std::vector<int> filter_orthogonal(const std::vector<IVec>& all, const std::vector<int>& cand,
                                   const IVec& v) {
  std::vector<int> out;
  out.reserve(cand.size());
  for (int t : cand) {
    i64 s = 0;
    for (size_t u = 0; u < v.size(); ++u) s += all[t][u] * v[u];
    if (s == 0) out.push_back(t);
  }
  return out;
}

i64 count_tuples(const std::vector<IVec>& all, const std::vector<int>& cand, int depth_left) {
  if (depth_left == 0) return 1;
  if (depth_left == 1) return static_cast<i64>(cand.size());
  i64 total = 0;
  for (int t : cand)
    total += count_tuples(all, filter_orthogonal(all, cand, all[t]), depth_left - 1);
  return total;
}

void collect_tuples(const std::vector<IVec>& all, const std::vector<int>& cand, int depth_left,
                    std::vector<int>& chosen, std::vector<ICube>& out) {
  if (depth_left == 0) {
    ICube c;
    c.vectors.reserve(chosen.size());
    for (int t : chosen) c.vectors.push_back(all[t]);
    out.push_back(std::move(c));
    return;
  }
  for (int t : cand) {
    chosen.push_back(t);
    collect_tuples(all, filter_orthogonal(all, cand, all[t]), depth_left - 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<IVec> vectors_of_norm(i64 N, int n, const EnumBudget& budget) {
  require(n >= 1, Errc::invalid_argument, "dimension must be positive");
  check_budget(N, budget);
  std::vector<IVec> out;
  IVec v(n);
  auto rec = [&](auto&& self, int level, i64 remaining) -> void {
    if (level == n) {
      if (remaining == 0) out.push_back(v);
      return;
    }
    const i64 bound = isqrt(remaining);
    for (i64 x = -bound; x <= bound; ++x) {
      v[level] = x;
      self(self, level + 1, remaining - x * x);
    }
  };
  rec(rec, 0, N);
  return out;
}

i64 count_icubes_serial(int m, i64 N, const EnumBudget& budget) {
  require(m >= 1 && m <= 4, Errc::invalid_argument, "m must be between 1 and 4");
  const std::vector<IVec> all = vectors_of_norm(N, 4, budget);
  std::vector<int> cand(all.size());
  for (size_t t = 0; t < all.size(); ++t) cand[t] = static_cast<int>(t);
  return count_tuples(all, cand, m);
}

i64 count_icubes_brute(int m, i64 N, const EnumBudget& budget) {
  require(m >= 1 && m <= 4, Errc::invalid_argument, "m must be between 1 and 4");
  const std::vector<IVec> all = vectors_of_norm(N, 4, budget);
  if (m == 1) return static_cast<i64>(all.size());
  std::vector<int> cand(all.size());
  for (size_t t = 0; t < all.size(); ++t) cand[t] = static_cast<int>(t);
  const int first_count = static_cast<int>(all.size());
  i64 total = 0;
  // Splitting over the first vector is exact: the per-branch counts are
  // independent and summation is order-free.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
#endif
  for (int t = 0; t < first_count; ++t)
    total += count_tuples(all, filter_orthogonal(all, cand, all[t]), m - 1);
  return total;
}

std::vector<ICube> enumerate_icubes(int m, i64 N, const EnumBudget& budget) {
  require(m >= 1 && m <= 4, Errc::invalid_argument, "m must be between 1 and 4");
  const std::vector<IVec> all = vectors_of_norm(N, 4, budget);
  std::vector<int> cand(all.size());
  for (size_t t = 0; t < all.size(); ++t) cand[t] = static_cast<int>(t);
  const int first_count = static_cast<int>(all.size());

  // Per-first-vector buckets concatenated in index order: identical to the
  // single-threaded lexicographic enumeration.
  std::vector<std::vector<ICube>> buckets(first_count);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int t = 0; t < first_count; ++t) {
    std::vector<int> chosen{t};
    collect_tuples(all, filter_orthogonal(all, cand, all[t]), m - 1, chosen, buckets[t]);
  }

  std::vector<ICube> out;
  for (auto& b : buckets) {
    for (auto& c : b) {
      if (budget.max_results && static_cast<i64>(out.size()) >= *budget.max_results) return out;
      out.push_back(std::move(c));
    }
  }
  return out;
}

i64 count_primary_primitive(i64 N, const EnumBudget& budget) {
  require(N % 2 == 1, Errc::even_input, "defined for odd norms");
  check_budget(N, budget);
  i64 count = 0;
  for (const Quat& q : elements_of_norm(N))
    if (q.is_lipschitz() && is_primary(q) && is_primitive(q)) ++count;
  return count;
}

i64 count_primary_gamma(i64 N, const EnumBudget& budget) {
  require(N % 2 == 1, Errc::even_input, "defined for odd norms");
  check_budget(N, budget);
  const Quat i_unit = quat_i();
  i64 count = 0;
  for (const Quat& q : elements_of_norm(N))
    if (q.is_lipschitz() && is_primary(q) && is_primitive(q * i_unit * q.conjugate())) ++count;
  return count;
}

i64 count_orderly_primitive(int m, i64 N, const EnumBudget& budget) {
  require(m >= 2 && m <= 4, Errc::invalid_argument, "m must be between 2 and 4");
  require(N % 2 == 1, Errc::even_input, "defined for odd norms");
  check_budget(N, budget);
  const std::vector<IVec> all = vectors_of_norm(N, 4, budget);

  // Position l of an orderly tuple must lie in the parity class of the l-th
  // basis letter, so each level searches one class bucket only.
  std::array<std::vector<int>, 4> buckets;
  for (size_t t = 0; t < all.size(); ++t) {
    KElem g = parity_class(quat_from_vec(all[t]));
    buckets[static_cast<int>(g)].push_back(static_cast<int>(t));
  }

  std::vector<int> chosen;
  i64 count = 0;
  auto rec = [&](auto&& self, int level) -> void {
    if (level == m) {
      i64 g = 0;
      for (int t : chosen)
        for (i64 x : all[t]) g = std::gcd(g, x);
      if (g == 1) ++count;
      return;
    }
    for (int t : buckets[level]) {
      bool ok = true;
      for (int u : chosen)
        if (dot(all[t], all[u]) != 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(t);
      self(self, level + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace icube4
