#include "bridgecensus/knot.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace bridgecensus {

TwoBridgeKnot canonicalize(const Fraction& f) {
  const Integer& p = f.den();
  if (p == 1) fail(ErrorKind::Trivial, "denominator 1: the trivial knot");
  if (mpz_even_p(p.get_mpz_t())) fail(ErrorKind::IsLink, "even denominator " + p.get_str() + ": a 2-bridge link");

  Integer q = f.num() % p;
  if (q < 0) q += p;
  // gcd(q,p) = 1 because f is reduced, so q != 0 here.
  Integer qi = mod_inverse(q, p);

  Integer best = std::min(q, Integer(p - q));
  best = std::min(best, std::min(qi, Integer(p - qi)));
  // p is odd, so best < p/2 strictly.

  Fraction canonical(best, p);
  ContinuedFraction std_cf = euclid_cf(canonical);  // value < 1/2, so the form is standard
  std::int64_t crossing = to_int64(std_cf.entry_sum());
  return TwoBridgeKnot(std::move(canonical), std::move(std_cf), crossing);
}

bool equivalent(const Fraction& f1, const Fraction& f2) {
  return canonicalize(f1) == canonicalize(f2);
}

std::int64_t crossing_number(const TwoBridgeKnot& k) { return k.crossing_number(); }

namespace {

std::vector<std::int64_t> least_variant(const std::vector<std::int64_t>& s) {
  std::vector<std::int64_t> best = s;
  auto consider = [&](std::vector<std::int64_t> v) {
    if (v < best) best = std::move(v);
  };
  std::vector<std::int64_t> neg(s.size()), rev(s.rbegin(), s.rend());
  std::transform(s.begin(), s.end(), neg.begin(), std::negate<>());
  consider(neg);
  std::vector<std::int64_t> negrev(rev.size());
  std::transform(rev.begin(), rev.end(), negrev.begin(), std::negate<>());
  consider(rev);
  consider(negrev);
  return best;
}

}  // namespace

EvenStandardCf::EvenStandardCf(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() % 2 != 0)
    fail(ErrorKind::Internal, "even standard cf must have even positive length");
  if (entries_.front() == 0 || entries_.back() == 0)
    fail(ErrorKind::Internal, "even standard cf must have nonzero ends");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto e = entries_[i];
    if (e != -2 && e != 0 && e != 2) fail(ErrorKind::Internal, "even standard cf entry outside {-2,0,2}");
    if (e == 0 && entries_[i - 1] != entries_[i + 1])
      fail(ErrorKind::Internal, "zero not flanked by equal entries");
  }
  entries_ = least_variant(entries_);
}

namespace {

// Division chain with even quotients: at each step num = e*den + r with e
// even and |r| < |den|. Fails exactly when some intermediate ratio is an odd
// integer.
std::optional<std::vector<std::int64_t>> even_euclid(Integer num, Integer den) {
  std::vector<std::int64_t> out;
  while (den != 0) {
    Integer e0 = 2 * floor_div(num, Integer(2 * den));
    bool found = false;
    for (int step = 0; step <= 2 && !found; step += 2) {
      Integer e = e0 + step;
      Integer r = num - e * den;
      if (abs(r) < abs(den)) {
        out.push_back(to_int64(e));
        num = den;
        den = r;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

std::vector<std::int64_t> split_even_entries(const std::vector<std::int64_t>& quotients) {
  std::vector<std::int64_t> out;
  for (auto e : quotients) {
    const std::int64_t sign = e > 0 ? 2 : -2;
    std::int64_t copies = (e > 0 ? e : -e) / 2;
    for (std::int64_t c = 0; c < copies; ++c) {
      if (c) out.push_back(0);
      out.push_back(sign);
    }
  }
  return out;
}

}  // namespace

EvenStandardCf even_standard_cf(const TwoBridgeKnot& k) {
  const Integer& p = k.fraction().den();
  const Integer& q = k.fraction().num();
  Integer qi = mod_inverse(q, p);
  const Integer reps[4] = {q, Integer(p - q), qi, Integer(p - qi)};
  for (const Integer& rep : reps) {
    auto quotients = even_euclid(p, rep);
    if (!quotients) continue;
    std::vector<std::int64_t> split = split_even_entries(*quotients);
    if (split.size() % 2 != 0) continue;
    EvenStandardCf result(std::move(split));
    // the expansion must describe the same knot
    if (canonicalize(cf_eval(ContinuedFraction(result.entries()))) == k) return result;
    fail(ErrorKind::Internal, "even expansion of " + k.str() + " evaluates to a different knot");
  }
  fail(ErrorKind::Internal, "no even standard expansion found for " + k.str());
}

std::int64_t escf_length(const TwoBridgeKnot& k) { return even_standard_cf(k).length(); }

namespace {

void compositions_with_big_ends(std::int64_t n, std::vector<std::int64_t>& prefix,
                                const std::function<void(const std::vector<std::int64_t>&)>& emit) {
  const bool first = prefix.empty();
  const std::int64_t lo = first ? 2 : 1;
  for (std::int64_t part = lo; part <= n; ++part) {
    prefix.push_back(part);
    if (part == n) {
      if (part >= 2) emit(prefix);
    } else {
      compositions_with_big_ends(n - part, prefix, emit);
    }
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TwoBridgeKnot> enumerate_knots(std::int64_t n) {
  if (n < 3) fail(ErrorKind::OutOfRange, "crossing number must be >= 3");
  std::vector<TwoBridgeKnot> out;
  std::vector<std::int64_t> prefix;
  compositions_with_big_ends(n, prefix, [&](const std::vector<std::int64_t>& comp) {
    // one representative per reversed pair; standard forms are unique up to
    // reversal, so this dedupes knots
    std::vector<std::int64_t> rev(comp.rbegin(), comp.rend());
    if (rev < comp) return;
    Fraction value = cf_eval(ContinuedFraction(comp));
    if (mpz_even_p(value.den().get_mpz_t())) return;  // 2-bridge link
    out.push_back(canonicalize(value));
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bridgecensus
