#pragma once

#include <optional>
#include <vector>

#include "icube4/icube.hpp"

namespace icube4 {

// Search budgets, enforced before a search starts. The defaults keep every
// exhaustive search at desk scale.
inline constexpr i64 kDefaultIcubeNormBudget = 50;   // icube enumeration
inline constexpr i64 kDefaultFamilyNormBudget = 45;  // quaternion family counts

struct EnumBudget {
  i64 max_norm = kDefaultIcubeNormBudget;
  std::optional<i64> max_results;  // truncates enumerate_icubes output
};

// All v in Z^n with |v|^2 = N, in lexicographic order, no duplicates.
// Throws: invalid_argument, budget_exceeded.
std::vector<IVec> vectors_of_norm(i64 N, int n = 4, const EnumBudget& budget = {});

// Ordered m-tuples of pairwise twins of norm N in Z^4, by backtracking with
// incremental orthogonality pruning; deterministic lexicographic order.
// Throws: invalid_argument, budget_exceeded.
std::vector<ICube> enumerate_icubes(int m, i64 N, const EnumBudget& budget = {});

// Exact m-icube count. count_icubes_serial is the single-threaded reference;
// count_icubes_brute splits over the first vector (OpenMP when available)
// and must return the same value.
i64 count_icubes_serial(int m, i64 N, const EnumBudget& budget = {});
i64 count_icubes_brute(int m, i64 N, const EnumBudget& budget = {});

// Direct exhaustive counts of the quaternion families behind the closed
// counting formulas. N must be odd and within budget.
// Throws: even_input, budget_exceeded.
i64 count_primary_primitive(i64 N, const EnumBudget& budget = {kDefaultFamilyNormBudget});
i64 count_primary_gamma(i64 N, const EnumBudget& budget = {kDefaultFamilyNormBudget});
i64 count_orderly_primitive(int m, i64 N, const EnumBudget& budget = {kDefaultFamilyNormBudget});

}  // namespace icube4
