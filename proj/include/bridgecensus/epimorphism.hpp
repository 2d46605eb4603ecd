#ifndef BRIDGECENSUS_EPIMORPHISM_HPP
#define BRIDGECENSUS_EPIMORPHISM_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bridgecensus/knot.hpp"

namespace bridgecensus {

/// Type-(2n+1) expansion over a standard base a = (a1,...,am):
///
///   [e1*a, 2c1, e2*a^-1, 2c2, ..., e2n*a^-1, 2c_2n, e_{2n+1}*a]
///
/// where a^-1 is a reversed and ei*a applies the sign entrywise. A knot whose
/// fraction admits such an expansion has a knot group mapping onto the group
/// of the base's knot, and conversely every epimorphism between 2-bridge knot
/// groups arises this way.
struct OrsExpansion {
  ContinuedFraction base;       // standard continued fraction of the target
  std::int64_t n = 1;           // the type is 2n+1
  std::vector<int> eps;         // 2n+1 signs, each +-1, eps[0] = +1
  std::vector<std::int64_t> c;  // 2n connector halves; the expansion stores 2*c[i]
};

/// One row of the epimorphism census.
struct CensusRecord {
  TwoBridgeKnot source;
  TwoBridgeKnot target;
  OrsExpansion witness;
};

/// Cap on the number of expansions an enumeration may visit.
struct ExpansionBudget {
  std::uint64_t limit = 20'000'000;
  std::uint64_t used = 0;

  void charge(std::uint64_t amount = 1) {
    used += amount;
    if (used > limit) fail(ErrorKind::BudgetExceeded, "expansion budget exceeded");
  }
};

/// Structural validity: sign and size constraints, the exclusion of c_i = 0
/// with eps_i*eps_{i+1} = -1 (such expansions reduce to type 2n-1), and a
/// standard base.
bool is_valid_expansion(const OrsExpansion& e);

/// The expansion written out as one continued fraction of length (2n+1)m + 2n.
ContinuedFraction expansion_cf(const OrsExpansion& e);

/// Sign-change indicators of connector i (1-based, 1 <= i <= 2n):
/// psi(i) = 1 iff eps_i * c_i < 0, psi_bar(i) = 1 iff c_i * eps_{i+1} < 0.
int psi(const OrsExpansion& e, std::int64_t i);
int psi_bar(const OrsExpansion& e, std::int64_t i);

/// Crossing number of the expanded knot without rewriting:
/// (2n+1)|a| + sum_i (2|c_i| - psi(i) - psi_bar(i)).
std::int64_t expansion_crossing(const OrsExpansion& e);

/// Reduced connector costs cbar_i = 2|c_i| - psi(i) - psi_bar(i), each >= 0;
/// their sum is expansion_crossing(e) - (2n+1)|a|.
std::vector<std::int64_t> reduced_costs(const OrsExpansion& e);

/// Visits every valid expansion over the target's standard base with crossing
/// number at most max_crossing, without duplicates, in a deterministic order
/// (n ascending, then cost budget k ascending, then cost compositions
/// lexicographically, with the two connector realisations per position).
/// The visitor may return false to stop early.
void enumerate_expansions(const TwoBridgeKnot& target, std::int64_t max_crossing,
                          const std::function<bool(const OrsExpansion&)>& visit,
                          ExpansionBudget* budget = nullptr);

/// As enumerate_expansions, but restricted to expansions whose crossing
/// number is exactly `crossing` (one (n, k) cell per admissible type).
void enumerate_expansions_at(const TwoBridgeKnot& target, std::int64_t crossing,
                             const std::function<bool(const OrsExpansion&)>& visit,
                             ExpansionBudget* budget = nullptr);

/// Groups the enumerated expansions by their canonicalized source knot.
std::map<TwoBridgeKnot, std::vector<OrsExpansion>> sources(const TwoBridgeKnot& target,
                                                           std::int64_t max_crossing,
                                                           ExpansionBudget* budget = nullptr);

/// Decides whether the source knot group maps onto the target knot group,
/// returning a witness expansion when it does. The search is exact: only
/// types with (2n+1)*c(target) <= c(source) can realise the source.
std::optional<OrsExpansion> admits_epimorphism(const TwoBridgeKnot& source, const TwoBridgeKnot& target,
                                               ExpansionBudget* budget = nullptr);

/// All nontrivial knots (other than the source itself) whose groups the
/// source's group maps onto; candidates have crossing number <= c(source)/3.
std::vector<CensusRecord> targets(const TwoBridgeKnot& source, ExpansionBudget* budget = nullptr);

/// Number of expansions enumerate_expansions would visit, from the closed
/// form 2^(2n) * C(2n+k-1, k) summed over the admissible (n, k) cells.
Integer count_expansions(const TwoBridgeKnot& target, std::int64_t max_crossing);

/// Same count restricted to crossing number exactly `crossing`.
Integer count_expansions_at(const TwoBridgeKnot& target, std::int64_t crossing);

}  // namespace bridgecensus

#endif  // BRIDGECENSUS_EPIMORPHISM_HPP
