#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

/// Controls for the exhaustive subset scans.
struct EnumOptions {
  int limit = 24;   ///< largest order accepted (hard cap 30)
  int workers = 1;  ///< worker threads for forcing_profile
};

inline constexpr int enumeration_hard_cap = 30;

/// Record of one maximal run of the forcing rule.  Forces fire in
/// ascending forcer label so traces are reproducible; the final set is
/// order-independent either way.
struct ClosureTrace {
  Mask initial = 0;
  std::vector<std::pair<int, int>> steps;  // (forcer, forced)
  Mask final_set = 0;
};

ClosureTrace closure(const Graph& g, Mask initial);
/// Final colored set only; the hot path for enumeration.
Mask closure_mask(const Graph& g, Mask initial);
bool is_forcing(const Graph& g, Mask s);

/// z[i] = number of forcing sets of cardinality i, for i = 0..n.
struct ForcingProfile {
  int n = 0;
  std::vector<std::uint64_t> z;

  /// Non-forcing count C(n,i) - z[i]; zero outside 0..n.
  std::uint64_t zprime(int i) const;
  /// Smallest i with z[i] > 0.
  int forcing_number() const;

  bool operator==(const ForcingProfile&) const = default;
};

/// Exact binomial coefficient; zero when k < 0, n < 0 or k > n.  Exact in
/// 64 bits for every n <= 62.
std::uint64_t binomial(int n, int k);

/// Exhaustive scan of all 2^n subsets.  The subset range may be split
/// across workers; per-cardinality counts are summed in worker order, so
/// the result is identical for any worker count.
ForcingProfile forcing_profile(const Graph& g, const EnumOptions& opts = {});

/// Closed-form path profile: z(P_n; i) = C(n,i) - C(n-i-1, i).
ForcingProfile path_profile_formula(int n);

int zero_forcing_number(const Graph& g, const EnumOptions& opts = {});

/// F is a fort when every outside vertex has != 1 neighbors in F.
bool is_fort(const Graph& g, Mask f);
/// Minimum-cardinality fort of size <= size_bound, smallest mask first.
std::optional<Mask> find_fort_upto(const Graph& g, int size_bound);
/// Whether some fort F has #F <= z(G) + 1.
bool fort_criterion_applies(const Graph& g, const EnumOptions& opts = {});

}  // namespace zf
