#include "bridgecensus/continued_fraction.hpp"

#include <optional>
#include <random>

#include "doctest.h"

using namespace bridgecensus;

namespace {

Fraction frac(long q, long p) { return Fraction(Integer(q), Integer(p)); }

// Direct recursive evaluation 1/(a1 + 1/(a2 + ...)) in projective pairs: the
// independent oracle for the matrix route. Returns nullopt when the final
// denominator vanishes.
std::optional<Fraction> recursive_eval(const std::vector<std::int64_t>& entries) {
  Integer num = 0, den = 1;  // value of the empty tail
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    // 1/(a + num/den) = den/(a*den + num)
    Integer t = (*it) * den + num;
    num = den;
    den = t;
  }
  if (den == 0) return std::nullopt;
  return Fraction(num, den);
}

ContinuedFraction rand_cf(std::mt19937& rng, int max_len, int max_abs) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_int_distribution<int> entry_dist(-max_abs, max_abs);
  std::vector<std::int64_t> e(static_cast<std::size_t>(len_dist(rng)));
  for (auto& x : e) x = entry_dist(rng);
  return ContinuedFraction(std::move(e));
}

bool in_unit_interval(const Fraction& f) { return f.num() > 0 && f.num() < f.den(); }

}  // namespace

TEST_CASE("cf_matrix basics") {
  Matrix2 single = cf_matrix(ContinuedFraction{3});
  CHECK(single.m11 == 3);
  CHECK(single.m12 == 1);
  CHECK(single.m21 == 1);
  CHECK(single.m22 == 0);

  Matrix2 id = cf_matrix(ContinuedFraction{});
  CHECK(id.m11 == 1);
  CHECK(id.m12 == 0);
  CHECK(id.m21 == 0);
  CHECK(id.m22 == 1);

  Matrix2 m = cf_matrix(ContinuedFraction{5, 2, 2});
  CHECK(m.m11 == 27);
  CHECK(m.m21 == 5);
  CHECK(m.determinant() == -1);
}

TEST_CASE("cf_eval on known expansions") {
  CHECK(cf_eval(ContinuedFraction{5, 2, 2}) == frac(5, 27));
  CHECK(cf_eval(ContinuedFraction{3, 0, 3, -2, 3}) == frac(5, 27));
  CHECK(cf_eval(ContinuedFraction{2, 1, 3, 1, 5}) == frac(29, 81));
  CHECK(cf_eval(ContinuedFraction{9}) == frac(1, 9));
  CHECK_THROWS_AS(cf_eval(ContinuedFraction{0}), Error);
  CHECK(cf_eval(ContinuedFraction{}) == Fraction());
}

TEST_CASE("cf_eval matches recursive evaluation") {
  std::mt19937 rng(7);
  int checked = 0;
  while (checked < 2000) {
    ContinuedFraction cf = rand_cf(rng, 10, 9);
    auto direct = recursive_eval(cf.entries());
    Matrix2 m = cf_matrix(cf);
    if (m.m11 == 0) {
      // the two routes must agree on definedness whenever the recursive
      // route never divided by zero; skip the genuinely undefined ones
      continue;
    }
    Fraction via_matrix = cf_eval(cf);
    if (direct) {
      CHECK(via_matrix == *direct);
      ++checked;
    }
  }
}

TEST_CASE("euclid_cf") {
  CHECK(euclid_cf(frac(5, 27)) == ContinuedFraction{5, 2, 2});
  CHECK(euclid_cf(frac(19, 45)) == ContinuedFraction{2, 2, 1, 2, 2});
  CHECK(euclid_cf(frac(1, 3)) == ContinuedFraction{3});
  CHECK_THROWS_AS(euclid_cf(frac(3, 2)), Error);
  CHECK_THROWS_AS(euclid_cf(Fraction()), Error);
  CHECK_THROWS_AS(euclid_cf(frac(-1, 3)), Error);

  // round trip on random reduced fractions
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> dist(1, 1000000);
  for (int trial = 0; trial < 2000; ++trial) {
    long p = dist(rng);
    if (p < 2) continue;
    long q = dist(rng) % (p - 1) + 1;
    Fraction f = frac(q, p);
    CHECK(cf_eval(euclid_cf(f)) == f);
  }
}

TEST_CASE("delete_zeros") {
  CHECK(delete_zeros(ContinuedFraction{3, 0, 3, -2, 3}) == ContinuedFraction{6, -2, 3});
  CHECK(delete_zeros(ContinuedFraction{2, 1, 3}) == ContinuedFraction{2, 1, 3});
  CHECK(delete_zeros(ContinuedFraction{3, 0, 3, 0, 3}) == ContinuedFraction{9});
  // trailing zero drops together with its neighbour
  CHECK(delete_zeros(ContinuedFraction{5, 2, 0}) == ContinuedFraction{5});
  CHECK(cf_eval(ContinuedFraction{5, 2, 0}) == frac(1, 5));
  // a leading zero stays: [0,a,rest] is the reciprocal of [a,rest]
  CHECK(delete_zeros(ContinuedFraction{0, 4, 2}) == ContinuedFraction{0, 4, 2});
  CHECK_THROWS_AS(delete_zeros(ContinuedFraction{0, 0, 0}), Error);

  std::mt19937 rng(13);
  int checked = 0;
  while (checked < 3000) {
    ContinuedFraction cf = rand_cf(rng, 12, 9);
    if (cf_matrix(cf).m11 == 0) continue;
    Fraction before = cf_eval(cf);
    ContinuedFraction reduced = delete_zeros(cf);
    if (reduced.empty()) {
      CHECK(before == Fraction());
    } else {
      CHECK(cf_eval(reduced) == before);
    }
    ++checked;
  }
}

TEST_CASE("remove_negatives on the worked examples") {
  RewriteTrace trace;
  CHECK(remove_negatives(ContinuedFraction{3, -5, 4, 1, -2}, &trace) == ContinuedFraction{2, 1, 3, 1, 5});
  CHECK(trace.block_case[1] > 0);  // the single-entry interior case
  CHECK(trace.block_case[3] > 0);  // the single-entry tail case

  ContinuedFraction pos = remove_negatives(ContinuedFraction{3, -2, 3, -2, 3});
  CHECK(cf_eval(pos) == frac(19, 45));
  CHECK(pos == ContinuedFraction{2, 2, 1, 2, 2});

  CHECK(remove_negatives(ContinuedFraction{5, 2, 2}) == ContinuedFraction{5, 2, 2});

  CHECK_THROWS_AS(remove_negatives(ContinuedFraction{-3, 2}), Error);
  CHECK_THROWS_AS(remove_negatives(ContinuedFraction{0, 4, 2}), Error);
}

TEST_CASE("remove_negatives handles head-adjacent blocks") {
  // After zero deletion this becomes [0,-2,1,-2,3]: the first block hides
  // behind a leading zero and must wait for the one to its right.
  ContinuedFraction tricky{3, 0, -3, -2, 1, -2, 3};
  Fraction value = cf_eval(tricky);
  CHECK(value == frac(1, 2));
  ContinuedFraction rewritten = remove_negatives(tricky);
  CHECK(cf_eval(rewritten) == value);
  CHECK(rewritten == ContinuedFraction{2});
}

TEST_CASE("standardize") {
  CHECK(standardize(ContinuedFraction{3, -5, 4, 1, -2}) == ContinuedFraction{2, 1, 3, 1, 5});
  CHECK(standardize(ContinuedFraction{5, 2, 2}) == ContinuedFraction{5, 2, 2});
  CHECK(standardize(ContinuedFraction{2, 2, 1, 2, 2}) == ContinuedFraction{2, 2, 1, 2, 2});
  CHECK(standardize(ContinuedFraction{2, 1, 3, 1, 4, 1}) == ContinuedFraction{2, 1, 3, 1, 5});
  // 1/2 = [1,1] = [2]
  CHECK(standardize(ContinuedFraction{1, 1}) == ContinuedFraction{2});
  // values in (1/2,1) have no standard form
  CHECK_THROWS_AS(standardize(ContinuedFraction{1, 2}), Error);
}

TEST_CASE("rewriting fuzz: value preservation, idempotence, case coverage") {
  std::mt19937 rng(17);
  RewriteTrace trace;
  int accepted = 0;
  while (accepted < 20000) {
    ContinuedFraction cf = rand_cf(rng, 12, 9);
    const auto& e = cf.entries();
    if (e[0] <= 0) continue;
    if (cf_matrix(cf).m11 == 0) continue;
    Fraction value = cf_eval(cf);
    if (!in_unit_interval(value)) continue;
    ++accepted;

    ContinuedFraction positive = remove_negatives(cf, &trace);
    CHECK(cf_eval(positive) == value);
    for (auto x : positive.entries()) CHECK(x > 0);

    // standard form exists iff the value is in (0,1/2]
    if (2 * value.num() <= value.den()) {
      ContinuedFraction standard = standardize(cf);
      CHECK(cf_eval(standard) == value);
      CHECK(is_standard(standard));
      CHECK(standardize(standard) == standard);  // idempotent
    } else {
      CHECK_THROWS_AS(standardize(cf), Error);
    }
  }
  // all four block rewrite cases must fire
  for (int i = 0; i < 4; ++i) CHECK(trace.block_case[i] > 0);
  CHECK(trace.isolated_shift > 0);
  CHECK(trace.isolated_tail > 0);
}

TEST_CASE("parsing and printing") {
  CHECK(ContinuedFraction::parse("[3,0,3,-2,3]") == ContinuedFraction{3, 0, 3, -2, 3});
  CHECK(ContinuedFraction::parse(" [ 2 , 1 ] ") == ContinuedFraction{2, 1});
  CHECK(ContinuedFraction::parse("[7]").str() == "[7]");
  CHECK_THROWS_AS(ContinuedFraction::parse("2,1"), Error);
  CHECK_THROWS_AS(ContinuedFraction::parse("[2,]"), Error);
  CHECK_THROWS_AS(ContinuedFraction::parse("[2 3]"), Error);

  CHECK(Fraction::parse("29/81") == frac(29, 81));
  CHECK(Fraction::parse("-5/27") == frac(-5, 27));
  CHECK(Fraction::parse("4/-6") == frac(-2, 3));
  CHECK(Fraction::parse("7") == frac(7, 1));
  CHECK_THROWS_AS(Fraction::parse("a/b"), Error);
  CHECK_THROWS_AS(Fraction::parse("1/0"), Error);
  CHECK(frac(29, 81).str() == "29/81");
}
