#include "bridgecensus/counting.hpp"

#include <algorithm>
#include <set>

namespace bridgecensus {

Integer binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) fail(ErrorKind::OutOfRange, "binomial requires 0 <= b <= a");
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Integer tk(std::int64_t n) {
  if (n < 3) fail(ErrorKind::OutOfRange, "tk requires n >= 3");
  const auto e = static_cast<unsigned long>(n);
  switch (n % 4) {
    case 0:
      return (pow2(e - 3) + pow2((e - 4) / 2)) / 3;
    case 1:
      return (pow2(e - 3) + pow2((e - 3) / 2)) / 3;
    case 2:
      return (pow2(e - 3) + pow2((e - 4) / 2) - 1) / 3;
    default:
      return (pow2(e - 3) + pow2((e - 3) / 2) + 1) / 3;
  }
}

Integer cumulative_tk(std::int64_t n) {
  Integer sum = 0;
  for (std::int64_t k = 3; k <= n / 3; ++k) sum += tk(k);
  return sum;
}

std::int64_t ek_upper_bound(std::int64_t n) {
  if (n < 3) fail(ErrorKind::OutOfRange, "ek_upper_bound requires n >= 3");
  return (n - 3) / 6;
}

bool is_palindromic(const ContinuedFraction& cf) {
  const auto& e = cf.entries();
  return std::equal(e.begin(), e.end(), e.rbegin());
}

GenFunSeries genfun(const TwoBridgeKnot& target, std::int64_t max_exponent) {
  if (max_exponent < 3) fail(ErrorKind::OutOfRange, "genfun requires a truncation >= 3");
  GenFunSeries series{target, {}, max_exponent};
  const std::int64_t c = target.crossing_number();
  const bool palindromic = is_palindromic(target.std_cf());
  for (std::int64_t n = 1; (2 * n + 1) * c <= max_exponent; ++n) {
    const std::int64_t kmax = max_exponent - (2 * n + 1) * c;
    for (std::int64_t k = 0; k <= kmax; ++k) {
      Integer count;
      if (!palindromic) {
        count = pow2(static_cast<unsigned long>(2 * n)) * binomial(2 * n + k - 1, k);
      } else if (k % 2 != 0) {
        count = pow2(static_cast<unsigned long>(2 * n - 1)) * binomial(2 * n + k - 1, k);
      } else {
        count = pow2(static_cast<unsigned long>(2 * n - 1)) * binomial(2 * n + k - 1, k) +
                pow2(static_cast<unsigned long>(n - 1)) * binomial(n + k / 2 - 1, k / 2);
      }
      series.coeffs[(2 * n + 1) * c + k] += count;
    }
  }
  return series;
}

std::int64_t ek(std::int64_t n, EkMethod method, ExpansionBudget* budget) {
  if (n < 3) fail(ErrorKind::OutOfRange, "ek requires n >= 3");
  if (method == EkMethod::Bound) return ek_upper_bound(n);

  // Inverse enumeration: expand every candidate target (there are few) and
  // collect, per source with crossing exactly n, the set of its targets.
  ExpansionBudget local;
  ExpansionBudget& bud = budget ? *budget : local;

  std::vector<TwoBridgeKnot> candidates;
  for (std::int64_t cn = 3; cn <= n / 3; ++cn) {
    auto knots = enumerate_knots(cn);
    candidates.insert(candidates.end(), knots.begin(), knots.end());
  }

  // Fail before doing any work if the census cannot fit the budget.
  Integer predicted = 0;
  for (const auto& target : candidates) predicted += count_expansions_at(target, n);
  if (predicted + Integer(static_cast<unsigned long>(bud.used)) > Integer(static_cast<unsigned long>(bud.limit)))
    fail(ErrorKind::BudgetExceeded, "ek(" + std::to_string(n) + ") needs " + predicted.get_str() + " expansions");

  std::map<TwoBridgeKnot, std::set<TwoBridgeKnot>> targets_of;
  for (const auto& target : candidates) {
    enumerate_expansions_at(
        target, n,
        [&](const OrsExpansion& e) {
          TwoBridgeKnot src = canonicalize(cf_eval(expansion_cf(e)));
          if (src.crossing_number() != n)
            fail(ErrorKind::Internal, "expansion crossing mismatch in census at n=" + std::to_string(n));
          targets_of[src].insert(target);
          return true;
        },
        &bud);
  }

  std::size_t best = 0;
  for (const auto& [source, tset] : targets_of) best = std::max(best, tset.size());
  return static_cast<std::int64_t>(best);
}

}  // namespace bridgecensus
