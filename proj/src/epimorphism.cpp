#include "bridgecensus/epimorphism.hpp"

#include <algorithm>
#include <cassert>

#include "bridgecensus/counting.hpp"

namespace bridgecensus {

bool is_valid_expansion(const OrsExpansion& e) {
  if (e.n < 1) return false;
  if (e.eps.size() != static_cast<std::size_t>(2 * e.n + 1)) return false;
  if (e.c.size() != static_cast<std::size_t>(2 * e.n)) return false;
  if (e.eps[0] != 1) return false;
  for (int s : e.eps)
    if (s != 1 && s != -1) return false;
  if (!is_standard(e.base)) return false;
  for (std::size_t i = 0; i < e.c.size(); ++i)
    if (e.c[i] == 0 && e.eps[i] * e.eps[i + 1] == -1) return false;  // reduces to type 2n-1
  return true;
}

ContinuedFraction expansion_cf(const OrsExpansion& e) {
  const auto& fwd = e.base.entries();
  std::vector<std::int64_t> rev(fwd.rbegin(), fwd.rend());
  std::vector<std::int64_t> out;
  out.reserve(fwd.size() * static_cast<std::size_t>(2 * e.n + 1) + static_cast<std::size_t>(2 * e.n));
  for (std::int64_t b = 0; b <= 2 * e.n; ++b) {
    const auto& block = (b % 2 == 0) ? fwd : rev;
    const int sign = e.eps[static_cast<std::size_t>(b)];
    for (auto entry : block) out.push_back(sign * entry);
    if (b < 2 * e.n) out.push_back(2 * e.c[static_cast<std::size_t>(b)]);
  }
  return ContinuedFraction(std::move(out));
}

int psi(const OrsExpansion& e, std::int64_t i) {
  if (i < 1 || i > 2 * e.n) fail(ErrorKind::OutOfRange, "psi index out of range");
  return e.eps[static_cast<std::size_t>(i - 1)] * e.c[static_cast<std::size_t>(i - 1)] < 0 ? 1 : 0;
}

int psi_bar(const OrsExpansion& e, std::int64_t i) {
  if (i < 1 || i > 2 * e.n) fail(ErrorKind::OutOfRange, "psi_bar index out of range");
  return e.c[static_cast<std::size_t>(i - 1)] * e.eps[static_cast<std::size_t>(i)] < 0 ? 1 : 0;
}

std::int64_t expansion_crossing(const OrsExpansion& e) {
  std::int64_t total = (2 * e.n + 1) * to_int64(e.base.entry_sum());
  for (std::int64_t i = 1; i <= 2 * e.n; ++i) {
    const std::int64_t ci = e.c[static_cast<std::size_t>(i - 1)];
    total += 2 * (ci < 0 ? -ci : ci) - psi(e, i) - psi_bar(e, i);
  }
  return total;
}

std::vector<std::int64_t> reduced_costs(const OrsExpansion& e) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(2 * e.n));
  for (std::int64_t i = 1; i <= 2 * e.n; ++i) {
    const std::int64_t ci = e.c[static_cast<std::size_t>(i - 1)];
    out.push_back(2 * (ci < 0 ? -ci : ci) - psi(e, i) - psi_bar(e, i));
  }
  return out;
}

namespace {

// Depth-first realisation of one (n, k) cell: position i takes cost j (the
// last position takes the remainder) and each cost admits exactly two
// connectors. An even cost keeps the sign, an odd cost flips it.
struct CellEnumerator {
  OrsExpansion work;
  const std::function<bool(const OrsExpansion&)>& visit;
  ExpansionBudget* budget;
  bool stopped = false;

  void run(std::int64_t k) { rec(0, k); }

  void rec(std::int64_t pos, std::int64_t remaining) {
    const std::int64_t positions = 2 * work.n;
    if (pos == positions) {
      if (budget) budget->charge();
      if (!visit(work)) stopped = true;
      return;
    }
    const bool last = pos == positions - 1;
    for (std::int64_t j = last ? remaining : 0; j <= remaining; ++j) {
      const int eps_i = work.eps[static_cast<std::size_t>(pos)];
      const int eps_next = (j % 2 == 0) ? eps_i : -eps_i;
      std::int64_t options[2];
      if (j % 2 == 0) {
        options[0] = eps_i * (j / 2);
        options[1] = -eps_i * ((j + 2) / 2);
      } else {
        options[0] = (j + 1) / 2;
        options[1] = -(j + 1) / 2;
      }
      for (std::int64_t cval : options) {
        work.c[static_cast<std::size_t>(pos)] = cval;
        work.eps[static_cast<std::size_t>(pos + 1)] = eps_next;
        rec(pos + 1, remaining - j);
        if (stopped) return;
      }
    }
  }
};

// Runs one (n, k) cell over the given base; returns false when the visitor
// stopped the enumeration.
bool enumerate_cell(const TwoBridgeKnot& target, std::int64_t n, std::int64_t k,
                    const std::function<bool(const OrsExpansion&)>& visit, ExpansionBudget* budget) {
  OrsExpansion seed;
  seed.base = target.std_cf();
  seed.n = n;
  seed.eps.assign(static_cast<std::size_t>(2 * n + 1), 1);
  seed.c.assign(static_cast<std::size_t>(2 * n), 0);
  CellEnumerator en{std::move(seed), visit, budget};
  en.run(k);
  return !en.stopped;
}

TwoBridgeKnot source_knot(const OrsExpansion& e) { return canonicalize(cf_eval(expansion_cf(e))); }

}  // namespace

void enumerate_expansions(const TwoBridgeKnot& target, std::int64_t max_crossing,
                          const std::function<bool(const OrsExpansion&)>& visit, ExpansionBudget* budget) {
  const std::int64_t c = target.crossing_number();
  for (std::int64_t n = 1; (2 * n + 1) * c <= max_crossing; ++n) {
    const std::int64_t kmax = max_crossing - (2 * n + 1) * c;
    for (std::int64_t k = 0; k <= kmax; ++k)
      if (!enumerate_cell(target, n, k, visit, budget)) return;
  }
}

void enumerate_expansions_at(const TwoBridgeKnot& target, std::int64_t crossing,
                             const std::function<bool(const OrsExpansion&)>& visit, ExpansionBudget* budget) {
  const std::int64_t c = target.crossing_number();
  for (std::int64_t n = 1; (2 * n + 1) * c <= crossing; ++n)
    if (!enumerate_cell(target, n, crossing - (2 * n + 1) * c, visit, budget)) return;
}

std::map<TwoBridgeKnot, std::vector<OrsExpansion>> sources(const TwoBridgeKnot& target,
                                                           std::int64_t max_crossing, ExpansionBudget* budget) {
  std::map<TwoBridgeKnot, std::vector<OrsExpansion>> grouped;
  enumerate_expansions(
      target, max_crossing,
      [&](const OrsExpansion& e) {
        grouped[source_knot(e)].push_back(e);
        return true;
      },
      budget);
  return grouped;
}

std::optional<OrsExpansion> admits_epimorphism(const TwoBridgeKnot& source, const TwoBridgeKnot& target,
                                               ExpansionBudget* budget) {
  const std::int64_t cs = source.crossing_number();
  const std::int64_t ct = target.crossing_number();
  if (cs < 3 * ct) return std::nullopt;

  // All-zero connectors first: they witness the divisibility towers
  // K(1/((2n+1)p)) -> K(1/p) in constant time.
  for (std::int64_t n = 1; (2 * n + 1) * ct <= cs; ++n) {
    if ((2 * n + 1) * ct != cs) continue;
    OrsExpansion e;
    e.base = target.std_cf();
    e.n = n;
    e.eps.assign(static_cast<std::size_t>(2 * n + 1), 1);
    e.c.assign(static_cast<std::size_t>(2 * n), 0);
    if (source_knot(e) == source) return e;
  }

  // Exact search: only cells with (2n+1)*ct + k = cs can produce the source.
  std::optional<OrsExpansion> witness;
  enumerate_expansions_at(
      target, cs,
      [&](const OrsExpansion& e) {
        if (source_knot(e) == source) {
          witness = e;
          return false;
        }
        return true;
      },
      budget);
  return witness;
}

std::vector<CensusRecord> targets(const TwoBridgeKnot& source, ExpansionBudget* budget) {
  std::vector<CensusRecord> out;
  const std::int64_t cs = source.crossing_number();
  for (std::int64_t cn = 3; cn <= cs / 3; ++cn) {
    for (const TwoBridgeKnot& cand : enumerate_knots(cn)) {
      if (auto witness = admits_epimorphism(source, cand, budget))
        out.push_back(CensusRecord{source, cand, std::move(*witness)});
    }
  }
  return out;
}

Integer count_expansions(const TwoBridgeKnot& target, std::int64_t max_crossing) {
  const std::int64_t c = target.crossing_number();
  Integer total = 0;
  for (std::int64_t crossing = 3 * c; crossing <= max_crossing; ++crossing)
    total += count_expansions_at(target, crossing);
  return total;
}

Integer count_expansions_at(const TwoBridgeKnot& target, std::int64_t crossing) {
  const std::int64_t c = target.crossing_number();
  Integer total = 0;
  for (std::int64_t n = 1; (2 * n + 1) * c <= crossing; ++n) {
    const std::int64_t k = crossing - (2 * n + 1) * c;
    total += pow2(static_cast<unsigned long>(2 * n)) * binomial(2 * n + k - 1, k);
  }
  return total;
}

}  // namespace bridgecensus
