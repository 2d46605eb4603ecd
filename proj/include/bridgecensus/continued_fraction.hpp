#ifndef BRIDGECENSUS_CONTINUED_FRACTION_HPP
#define BRIDGECENSUS_CONTINUED_FRACTION_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bridgecensus/fraction.hpp"

namespace bridgecensus {

/// Finite integer continued fraction [a1,...,am] = 1/(a1 + 1/(a2 + ...)).
/// The empty sequence is the identity (value 0) and only appears as an
/// intermediate of the rewriting operations.
class ContinuedFraction {
 public:
  ContinuedFraction() = default;
  explicit ContinuedFraction(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}
  ContinuedFraction(std::initializer_list<std::int64_t> entries) : entries_(entries) {}

  /// Parses "[a1,a2,...]"; whitespace around entries is ignored.
  static ContinuedFraction parse(std::string_view text);

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  ContinuedFraction reversed() const {
    return ContinuedFraction(std::vector<std::int64_t>(entries_.rbegin(), entries_.rend()));
  }

  Integer entry_sum() const {
    Integer s = 0;
    for (auto e : entries_) s += e;
    return s;
  }

  bool operator==(const ContinuedFraction&) const = default;

  std::string str() const;

 private:
  std::vector<std::int64_t> entries_;
};

/// 2x2 integer matrix; products of continued-fraction generators have
/// determinant +-1 (each generator has determinant -1).
struct Matrix2 {
  Integer m11, m12, m21, m22;

  static Matrix2 identity() { return {1, 0, 0, 1}; }
  static Matrix2 generator(std::int64_t x) { return {Integer(x), 1, 1, 0}; }

  Matrix2 operator*(const Matrix2& o) const {
    return {Integer(m11 * o.m11 + m12 * o.m21), Integer(m11 * o.m12 + m12 * o.m22),
            Integer(m21 * o.m11 + m22 * o.m21), Integer(m21 * o.m12 + m22 * o.m22)};
  }

  Integer determinant() const { return Integer(m11 * m22 - m12 * m21); }
};

/// Ordered product of the generator matrices ((x,1),(1,0)) over the entries;
/// the empty sequence yields the identity.
Matrix2 cf_matrix(const ContinuedFraction& cf);

/// Value of the continued fraction as m21/m11 of its matrix, in lowest terms
/// with positive denominator. Throws UndefinedValue when m11 = 0.
Fraction cf_eval(const ContinuedFraction& cf);

/// All-positive expansion of f in (0,1) by the Euclidean algorithm (floor
/// division at every step); the last entry is always >= 2.
ContinuedFraction euclid_cf(const Fraction& f);

/// Removes zeros: an interior zero merges its neighbours
/// ([..,u,0,w,..] -> [..,u+w,..], leftmost first), a trailing zero drops
/// together with the entry before it ([..,x,a,0] has the same value as
/// [..,x]). A leading zero cannot be removed without changing the value
/// ([0,a,rest] is the reciprocal of [a,rest]) and is kept. Throws
/// UndefinedValue when the result degenerates to [0].
ContinuedFraction delete_zeros(ContinuedFraction cf);

/// Counters for the rewriting moves, used by the property tests to check
/// that every case of the negative-block elimination is exercised.
struct RewriteTrace {
  long block_case[4] = {0, 0, 0, 0};  // the four negative-block rewrite cases
  long isolated_shift = 0;            // [..,x,-1,y,..] -> [..,x-2,1,y-2,..]
  long isolated_tail = 0;             // [..,x,-1] -> [..,x-1]
  long quad_collapse = 0;             // [..,1,-1,1,z,R] -> [..,-z,-R]
  long deferred_head = 0;             // block skipped while head-adjacent
};

/// Rewrites a mixed-sign continued fraction into an all-positive one with the
/// same value. The input must evaluate into (0,1) and start with a positive
/// entry (MalformedInput otherwise). Negative blocks are eliminated leftmost
/// first; blocks sitting directly behind a transient leading zero or one are
/// deferred until the rest of the sequence has been rewritten, which is always
/// possible for values in (0,1).
ContinuedFraction remove_negatives(ContinuedFraction cf, RewriteTrace* trace = nullptr);

/// Standard form: all entries positive, first and last >= 2 (interior entries
/// equal to 1 are allowed). remove_negatives followed by absorbing trailing
/// ones via [a1,...,a_{m-1},1] = [a1,...,a_{m-1}+1]. Values in (1/2,1) have no
/// standard form (the leading entry would be 1) and raise OutOfRange.
/// Idempotent, and unique for the value.
ContinuedFraction standardize(ContinuedFraction cf, RewriteTrace* trace = nullptr);

/// True when all entries are positive and the first and last are >= 2.
bool is_standard(const ContinuedFraction& cf);

}  // namespace bridgecensus

#endif  // BRIDGECENSUS_CONTINUED_FRACTION_HPP
