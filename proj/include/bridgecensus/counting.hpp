#ifndef BRIDGECENSUS_COUNTING_HPP
#define BRIDGECENSUS_COUNTING_HPP

#include <cstdint>
#include <map>

#include "bridgecensus/epimorphism.hpp"

namespace bridgecensus {

/// Exact binomial coefficient a!/(b!(a-b)!), requiring 0 <= b <= a.
Integer binomial(std::int64_t a, std::int64_t b);

/// Number of 2-bridge knots with crossing number n >= 3 (closed form with
/// four branches by n mod 4).
Integer tk(std::int64_t n);

/// Sum of tk(k) for 3 <= k <= floor(n/3); an upper bound for ek(n).
/// Returns 0 for n < 9.
Integer cumulative_tk(std::int64_t n);

/// The sharper bound ek(n) <= floor((n-3)/6).
std::int64_t ek_upper_bound(std::int64_t n);

/// True when the entry sequence equals its reverse.
bool is_palindromic(const ContinuedFraction& cf);

/// Counting series of a target knot: coeffs[c] is the number of distinct
/// 2-bridge knots with crossing number c whose knot groups map onto the
/// target's. Complete for every exponent <= truncation.
struct GenFunSeries {
  TwoBridgeKnot target;
  std::map<std::int64_t, Integer> coeffs;
  std::int64_t truncation;

  Integer coefficient(std::int64_t exponent) const {
    auto it = coeffs.find(exponent);
    return it == coeffs.end() ? Integer(0) : it->second;
  }
};

/// Closed-form series up to t^max_exponent. Non-palindromic bases contribute
/// 2^(2n) * C(2n+k-1, k) at exponent (2n+1)c + k; palindromic bases use the
/// halved count with the symmetric-expansion correction on even k.
GenFunSeries genfun(const TwoBridgeKnot& target, std::int64_t max_exponent);

enum class EkMethod { Exact, Bound };

/// EK(n): the maximal number of knot groups (proper, nontrivial) a 2-bridge
/// knot group with n crossings maps onto. Exact mode enumerates expansions
/// over every candidate target with crossing <= n/3 and inverts the map;
/// Bound mode returns ek_upper_bound(n).
std::int64_t ek(std::int64_t n, EkMethod method, ExpansionBudget* budget = nullptr);

}  // namespace bridgecensus

#endif  // BRIDGECENSUS_COUNTING_HPP
