#ifndef BRIDGECENSUS_KNOT_HPP
#define BRIDGECENSUS_KNOT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bridgecensus/continued_fraction.hpp"

namespace bridgecensus {

/// Canonical representative of a 2-bridge knot up to mirror image.
///
/// The stored fraction q/p satisfies: p odd, p >= 3, 0 < q < p/2,
/// gcd(q,p) = 1, and q is minimal in the orbit {q, p-q, q^-1, p-q^-1} (mod p)
/// intersected with (0, p/2). The orbit quotients by both Schubert moves and
/// by mirror image. The standard continued fraction of the canonical fraction
/// and the crossing number (its entry sum) are cached.
class TwoBridgeKnot {
 public:
  const Fraction& fraction() const { return fraction_; }
  const ContinuedFraction& std_cf() const { return std_cf_; }
  std::int64_t crossing_number() const { return crossing_; }

  bool operator==(const TwoBridgeKnot& o) const { return fraction_ == o.fraction_; }
  std::strong_ordering operator<=>(const TwoBridgeKnot& o) const { return fraction_ <=> o.fraction_; }

  std::string str() const { return "K(" + fraction_.str() + ")"; }

 private:
  friend TwoBridgeKnot canonicalize(const Fraction& f);
  TwoBridgeKnot(Fraction fraction, ContinuedFraction std_cf, std::int64_t crossing)
      : fraction_(std::move(fraction)), std_cf_(std::move(std_cf)), crossing_(crossing) {}

  Fraction fraction_;
  ContinuedFraction std_cf_;
  std::int64_t crossing_;
};

/// Schubert-canonical knot for q/p. The numerator may be any integer and is
/// reduced mod p first. Throws IsLink for even p and Trivial for p = 1.
TwoBridgeKnot canonicalize(const Fraction& f);

/// True when the two fractions describe equivalent knots (up to mirror).
bool equivalent(const Fraction& f1, const Fraction& f2);

/// Crossing number: entry sum of the standard continued fraction.
std::int64_t crossing_number(const TwoBridgeKnot& k);

/// Even-length sequence over {-2,0,2} with nonzero ends in which every 0 is
/// flanked by two equal entries. Unique per knot up to negation and reversal;
/// the stored representative is the lexicographically least of the four
/// variants.
class EvenStandardCf {
 public:
  explicit EvenStandardCf(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::int64_t length() const { return static_cast<std::int64_t>(entries_.size()); }

  bool operator==(const EvenStandardCf&) const = default;

  std::string str() const { return ContinuedFraction(entries_).str(); }

 private:
  std::vector<std::int64_t> entries_;
};

/// The even standard continued fraction of k, computed by the all-even
/// Euclidean expansion (quotients forced even) of whichever orbit
/// representative admits one of even length, each quotient +-2c split into c
/// copies of +-2 separated by zeros.
EvenStandardCf even_standard_cf(const TwoBridgeKnot& k);

/// Length 2n of the even standard continued fraction; the crossing number c
/// satisfies 2n+1 <= c <= 4n.
std::int64_t escf_length(const TwoBridgeKnot& k);

/// All 2-bridge knots with crossing number exactly n, sorted by fraction.
/// Generated from the compositions of n with ends >= 2 (the standard forms),
/// keeping odd denominators and one of each reversed pair.
std::vector<TwoBridgeKnot> enumerate_knots(std::int64_t n);

}  // namespace bridgecensus

#endif  // BRIDGECENSUS_KNOT_HPP
