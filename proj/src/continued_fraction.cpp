#include "bridgecensus/continued_fraction.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>
#include <sstream>

namespace bridgecensus {

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
  auto bad = [&]() -> ContinuedFraction {
    fail(ErrorKind::MalformedInput, "cannot parse continued fraction: '" + std::string(text) + "'");
  };
  std::size_t i = 0, n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= n || text[i] != '[') return bad();
  ++i;
  std::vector<std::int64_t> entries;
  skip_ws();
  if (i < n && text[i] == ']') {
    ++i;
  } else {
    for (;;) {
      skip_ws();
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + n, value);
      if (ec != std::errc()) return bad();
      i = static_cast<std::size_t>(ptr - text.data());
      entries.push_back(value);
      skip_ws();
      if (i < n && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < n && text[i] == ']') {
        ++i;
        break;
      }
      return bad();
    }
  }
  skip_ws();
  if (i != n) return bad();
  return ContinuedFraction(std::move(entries));
}

std::string ContinuedFraction::str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out << ',';
    out << entries_[i];
  }
  out << ']';
  return out.str();
}

Matrix2 cf_matrix(const ContinuedFraction& cf) {
  Matrix2 m = Matrix2::identity();
  for (auto x : cf.entries()) m = m * Matrix2::generator(x);
  return m;
}

Fraction cf_eval(const ContinuedFraction& cf) {
  Matrix2 m = cf_matrix(cf);
  if (m.m11 == 0) fail(ErrorKind::UndefinedValue, "continued fraction has no value: " + cf.str());
  return Fraction(m.m21, m.m11);
}

ContinuedFraction euclid_cf(const Fraction& f) {
  if (!(f.num() > 0 && f.num() < f.den()))
    fail(ErrorKind::OutOfRange, "euclid_cf requires a value in (0,1), got " + f.str());
  std::vector<std::int64_t> out;
  Integer num = f.num();
  Integer den = f.den();
  while (num != 0) {
    Integer q = den / num;  // both positive
    Integer r = den - q * num;
    out.push_back(to_int64(q));
    den = num;
    num = r;
  }
  return ContinuedFraction(std::move(out));
}

namespace {

// Interior zeros merge their neighbours; trailing zeros drop together with
// the entry before them. A leading zero has no value-preserving removal and
// stays put.
void zero_normalize(std::vector<std::int64_t>& s) {
  for (;;) {
    if (s.size() >= 2 && s.back() == 0) {
      s.pop_back();
      s.pop_back();
      continue;
    }
    bool merged = false;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
      if (s[i] == 0) {
        s[i - 1] += s[i + 1];
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        merged = true;
        break;
      }
    }
    if (!merged) break;
  }
}

// The four rewrite cases for a maximal negative block -b1..-bl preceded by x,
// written so that all produced entries are nonnegative whenever the context
// is positive. Interleaved with zero deletion this eliminates the block.
void apply_block_case(std::vector<std::int64_t>& s, std::size_t i, std::size_t l, RewriteTrace& trace) {
  const std::int64_t x = s[i - 1];
  const bool has_following = i + l < s.size();
  std::vector<std::int64_t> out;
  out.reserve(s.size() + 4);
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i) - 1);
  out.push_back(x - 1);
  out.push_back(1);
  if (has_following) {
    if (l >= 2) {
      out.push_back(-s[i] - 1);
      for (std::size_t j = 1; j + 1 < l; ++j) out.push_back(-s[i + j]);
      out.push_back(-s[i + l - 1] - 1);
      trace.block_case[0]++;
    } else {
      out.push_back(-s[i] - 2);
      trace.block_case[1]++;
    }
    out.push_back(1);
    out.push_back(s[i + l] - 1);
    out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(i + l) + 1, s.end());
  } else {
    if (l >= 2) {
      out.push_back(-s[i] - 1);
      for (std::size_t j = 1; j + 1 < l; ++j) out.push_back(-s[i + j]);
      out.push_back(-s[i + l - 1]);
      trace.block_case[2]++;
    } else {
      out.push_back(-s[i] - 1);
      trace.block_case[3]++;
    }
  }
  s = std::move(out);
}

bool all_positive(const std::vector<std::int64_t>& s) {
  return std::all_of(s.begin(), s.end(), [](std::int64_t e) { return e > 0; });
}

}  // namespace

ContinuedFraction delete_zeros(ContinuedFraction cf) {
  std::vector<std::int64_t> s = cf.entries();
  zero_normalize(s);
  if (s.size() == 1 && s[0] == 0)
    fail(ErrorKind::UndefinedValue, "zero deletion left " + cf.str() + " without a value");
  return ContinuedFraction(std::move(s));
}

ContinuedFraction remove_negatives(ContinuedFraction cf, RewriteTrace* trace) {
  RewriteTrace local;
  RewriteTrace& tr = trace ? *trace : local;

  if (cf.empty() || cf.entries()[0] <= 0)
    fail(ErrorKind::MalformedInput, "leading entry must be positive: " + cf.str());
  {
    Fraction v = cf_eval(cf);  // UndefinedValue when the value does not exist
    if (!(v.num() > 0 && v.num() < v.den()))
      fail(ErrorKind::OutOfRange, "value of " + cf.str() + " is " + v.str() + ", not in (0,1)");
    Integer total = 0;
    for (auto e : cf.entries()) total += (e < 0 ? -Integer(e) : Integer(e));
    if (total > (Integer(1) << 60)) fail(ErrorKind::OutOfRange, "entries too large to rewrite");
  }

  std::vector<std::int64_t> s = cf.entries();
  zero_normalize(s);

  // Every move strictly decreases (sum of |entries|, length), so this bound
  // is never reached.
  long guard = 0;
  const long guard_max = 1000000;

  for (;;) {
    if (++guard > guard_max) fail(ErrorKind::Internal, "rewriting did not terminate");
    const std::size_t n = s.size();

    // Pick the leftmost negative block whose rewrite keeps the entry before
    // it nonnegative. Deferred instead: a block that starts the sequence
    // (zero deletion can merge the head negative), one sitting directly
    // behind a transient leading 0, and an isolated -1 behind a leading 1
    // whose moves would push the head below zero. For values in (0,1) an
    // eligible block always exists further right.
    std::size_t pick = n, pick_len = 0;
    bool any_negative = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] >= 0) continue;
      any_negative = true;
      std::size_t l = 1;
      while (i + l < n && s[i + l] < 0) ++l;
      bool eligible = i > 0;
      if (eligible) {
        const std::int64_t x = s[i - 1];
        if (x == 0) {
          eligible = false;
        } else if (i == 1 && x == 1 && l == 1 && s[i] == -1 && i + 1 < n) {
          const std::int64_t y = s[i + 1];
          if (y >= 2) {
            eligible = false;
          } else if (y == 1 && i + 2 < n && s[i + 2] > 0) {
            eligible = false;
          }
        }
      }
      if (eligible) {
        pick = i;
        pick_len = l;
        break;
      }
      tr.deferred_head++;
      i += l - 1;
    }
    if (!any_negative) break;
    if (pick == n) fail(ErrorKind::Internal, "only head-adjacent negative blocks left");

    const std::size_t i = pick, l = pick_len;
    if (l == 1 && s[i] == -1) {
      if (i + 1 == s.size()) {
        // [..,x,-1] = [..,x-1]
        s.pop_back();
        s[i - 1] -= 1;
        tr.isolated_tail++;
      } else if (s[i - 1] == 1 && s[i + 1] == 1) {
        if (i + 2 == s.size()) {
          // absorb the trailing 1 into the -1: [..,x,-1,1] = [..,x,0]
          s.pop_back();
          s.back() += 1;
          tr.isolated_tail++;
        } else {
          // [..,1,-1,1,z,R] = [..,-z,-R]
          const std::int64_t z = s[i + 2];
          std::vector<std::int64_t> out(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i) - 1);
          out.push_back(-z);
          for (std::size_t j = i + 3; j < s.size(); ++j) out.push_back(-s[j]);
          s = std::move(out);
          tr.quad_collapse++;
        }
      } else {
        // [..,x,-1,y,..] = [..,x-2,1,y-2,..]
        s[i - 1] -= 2;
        s[i] = 1;
        s[i + 1] -= 2;
        tr.isolated_shift++;
      }
    } else {
      apply_block_case(s, i, l, tr);
    }
    zero_normalize(s);
  }

  if (s.empty() || !all_positive(s))
    fail(ErrorKind::Internal, "rewriting finished in a non-positive state");

  // absorb trailing ones: [..,x,1] = [..,x+1]
  while (s.size() >= 2 && s.back() == 1) {
    s.pop_back();
    s.back() += 1;
  }
  return ContinuedFraction(std::move(s));
}

ContinuedFraction standardize(ContinuedFraction cf, RewriteTrace* trace) {
  ContinuedFraction positive = remove_negatives(std::move(cf), trace);
  const auto& s = positive.entries();
  if (s.front() == 1)
    fail(ErrorKind::OutOfRange, "values in (1/2,1) have no standard form (leading entry 1)");
  assert(s.back() >= 2);
  return positive;
}

bool is_standard(const ContinuedFraction& cf) {
  const auto& e = cf.entries();
  if (e.empty()) return false;
  if (e.front() < 2 || e.back() < 2) return false;
  return std::all_of(e.begin(), e.end(), [](std::int64_t x) { return x > 0; });
}

}  // namespace bridgecensus
