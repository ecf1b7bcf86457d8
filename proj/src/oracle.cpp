#include "doubling/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "doubling/errors.hpp"

namespace doubling {
namespace {

using u64 = unsigned long long;

constexpr u64 kSat = 1ull << 62;

u64 sat_add(u64 a, u64 b) {
  u64 s = a + b;
  if (s < a || s >= kSat) return kSat;
  return s;
}

u64 sat_mul(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kSat / b) return kSat;
  return a * b;
}

/// Pascal triangle rows 0..n, columns 0..k, saturated well below overflow.
class BinomialTable {
public:
  BinomialTable(std::size_t n, std::size_t k) : cols_(k + 1), rows_(n + 1) {
    for (std::size_t i = 0; i <= n; ++i) {
      rows_[i].assign(cols_, 0);
      rows_[i][0] = 1;
      for (std::size_t j = 1; j < cols_ && j <= i; ++j) {
        u64 up_left = rows_[i - 1][j - 1];
        u64 up = j <= i - 1 ? rows_[i - 1][j] : 0;
        rows_[i][j] = sat_add(up_left, up);
      }
    }
  }

  u64 c(std::size_t n, std::size_t j) const {
    if (j >= cols_) return 0;
    if (n >= rows_.size()) return kSat;
    return rows_[n][j];
  }

private:
  std::size_t cols_;
  std::vector<std::vector<u64>> rows_;
};

/// Lexicographic combination with the given rank (combinatorial number system).
std::vector<std::size_t> unrank_combination(u64 rank, std::size_t n, std::size_t k,
                                            const BinomialTable& table) {
  std::vector<std::size_t> idx(k);
  std::size_t c = 0;
  for (std::size_t pos = 0; pos < k; ++pos) {
    const std::size_t remaining = k - pos;
    while (c < n) {
      u64 cnt = table.c(n - 1 - c, remaining - 1);
      if (cnt <= rank) {
        rank -= cnt;
        ++c;
      } else {
        break;
      }
    }
    idx[pos] = c++;
  }
  return idx;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] != n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Progression test from multiply/equality alone, kept free of any call into
/// the recovery algorithms so corpus verdicts stay independent.
bool gp_naive(const Group& g, const OrderedSet& s) {
  const std::size_t k = s.size();
  if (k == 1) return true;
  GroupElement y = s[0];
  GroupElement x = g.multiply(g.inverse(s[0]), s[1]);
  if (g.multiply(x, y) != g.multiply(y, x)) return false;
  GroupElement cur = y;
  for (std::size_t i = 1; i < k; ++i) {
    cur = g.multiply(cur, x);
    if (cur != s[i]) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> first_noncommuting(const Group& g,
                                                                     const OrderedSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.multiply(s[i], s[j]) != g.multiply(s[j], s[i])) return std::make_pair(i, j);
  return std::nullopt;
}

void check_subset(const Group& g, std::vector<GroupElement> elements, CorpusReport& partial) {
  const std::size_t k = elements.size();
  try {
    OrderedSet s = ordered_set_from_sorted(g, std::move(elements));
    ProductSet ps;
    try {
      ps = product_set(s);
    } catch (const InternalOrderViolation& e) {
      partial.violations.push_back({"doubling-floor", e.what(), s.elements});
      return;
    }
    const std::size_t doubling = ps.size();
    if (doubling < 2 * k - 1) {
      partial.violations.push_back(
          {"doubling-floor",
           "|S^2| = " + std::to_string(doubling) + " below 2k-1 = " + std::to_string(2 * k - 1),
           s.elements});
      return;
    }
    partial.class_counts[static_cast<std::size_t>(classify_doubling(k, doubling))]++;

    const bool gp = gp_naive(g, s);
    if (gp != (doubling == 2 * k - 1))
      partial.violations.push_back(
          {"gp-biconditional",
           "|S^2| = " + std::to_string(doubling) + " but the naive progression check says " +
               (gp ? "progression" : "not a progression"),
           s.elements});

    const auto bad = first_noncommuting(g, s);
    if (doubling <= 3 * k - 3 && bad)
      partial.violations.push_back(
          {"abelian-bound",
           "|S^2| = " + std::to_string(doubling) + " <= 3k-3 yet elements " +
               std::to_string(bad->first + 1) + " and " + std::to_string(bad->second + 1) +
               " do not commute",
           s.elements});

    if (k >= 3 && doubling <= 3 * k - 4) {
      const std::size_t before = partial.violations.size();
      try {
        RecoveryResult rec = recover_structure(s);
        const ProgressionWitness& w = rec.witness;
        if (!verify_witness(s, w))
          partial.violations.push_back({"recovery", "witness failed re-verification", s.elements});
        if (!two_isomorphism_check(s, w))
          partial.violations.push_back(
              {"two-isomorphism", "additive coincidences differ from product coincidences",
               s.elements});
        if (!rank_bound_check(s, w))
          partial.violations.push_back(
              {"rank-bound", "witness does not reconstruct S from two generators", s.elements});
        const auto e = recover_via_step_euclid(s);
        if (!e)
          partial.violations.push_back(
              {"euclid-agreement", "step oracle found no witness", s.elements});
        else if (e->base != w.base || e->step != w.step || e->exponents != w.exponents)
          partial.violations.push_back(
              {"euclid-agreement", "step oracle disagrees with the inductive recovery",
               s.elements});
      } catch (const OrderUndecidedError&) {
        throw;
      } catch (const Error& e) {
        partial.violations.push_back({"recovery", e.what(), s.elements});
      }
      if (partial.violations.size() == before) partial.recovered++;
    }

    if (doubling == 3 * k - 2 && bad) partial.sharp_witnesses.push_back(s.elements);
  } catch (const OrderUndecidedError&) {
    partial.skipped_undecided++;
  }
}

void run_block(const Group& g, const std::vector<GroupElement>& ball, std::size_t k,
               const BinomialTable& table, u64 start, u64 count, CorpusReport& partial) {
  if (count == 0) return;
  const std::size_t n = ball.size();
  std::vector<std::size_t> idx = unrank_combination(start, n, k, table);
  for (u64 done = 0;;) {
    std::vector<GroupElement> elems;
    elems.reserve(k);
    for (std::size_t i : idx) elems.push_back(ball[i]);
    check_subset(g, std::move(elems), partial);
    partial.subsets_checked++;
    if (++done >= count) break;
    if (!next_combination(idx, n)) break;
  }
}

void run_sampled(const Group& g, const std::vector<GroupElement>& ball, std::size_t k,
                 const BinomialTable& table, const std::vector<u64>& ordinals, u64 start,
                 u64 count, CorpusReport& partial) {
  const std::size_t n = ball.size();
  for (u64 i = start; i < start + count; ++i) {
    std::vector<std::size_t> idx = unrank_combination(ordinals[i], n, k, table);
    std::vector<GroupElement> elems;
    elems.reserve(k);
    for (std::size_t j : idx) elems.push_back(ball[j]);
    check_subset(g, std::move(elems), partial);
    partial.subsets_checked++;
  }
}

void merge_into(CorpusReport& report, CorpusReport& partial) {
  report.subsets_checked += partial.subsets_checked;
  report.skipped_undecided += partial.skipped_undecided;
  report.recovered += partial.recovered;
  for (std::size_t i = 0; i < report.class_counts.size(); ++i)
    report.class_counts[i] += partial.class_counts[i];
  std::move(partial.violations.begin(), partial.violations.end(),
            std::back_inserter(report.violations));
  std::move(partial.sharp_witnesses.begin(), partial.sharp_witnesses.end(),
            std::back_inserter(report.sharp_witnesses));
}

}  // namespace

unsigned long long ball_size(const BallSpec& spec) {
  if (spec.radius < 0) throw ParseError("radius must be >= 0");
  const u64 width = 2 * static_cast<u64>(spec.radius) + 1;
  switch (spec.group.kind) {
    case GroupKind::integers:
      return width;
    case GroupKind::zlex: {
      u64 total = 1;
      for (int i = 0; i < spec.group.dim; ++i) total = sat_mul(total, width);
      return total;
    }
    case GroupKind::heisenberg:
      return sat_mul(sat_mul(width, width), width);
    case GroupKind::bs12: {
      const u64 odd = 2 * ((static_cast<u64>(spec.radius) + 1) / 2);
      return sat_mul(sat_add(1, sat_mul(odd, width)), width);
    }
    case GroupKind::free2: {
      u64 total = 1;
      u64 layer = 4;
      for (int l = 1; l <= spec.radius; ++l) {
        total = sat_add(total, layer);
        layer = sat_mul(layer, 3);
      }
      return total;
    }
  }
  return 0;
}

std::vector<GroupElement> enumerate_ball(const BallSpec& spec, std::size_t cap) {
  const u64 predicted = ball_size(spec);
  if (predicted > cap)
    throw BallTooLargeError("ball holds " + std::to_string(predicted) +
                            " elements, over the cap of " + std::to_string(cap));
  Group g(spec.group);
  const long r = spec.radius;
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(predicted));
  switch (spec.group.kind) {
    case GroupKind::integers:
      for (long n = -r; n <= r; ++n) out.push_back(g.integer(n));
      break;
    case GroupKind::zlex: {
      const int dim = g.descriptor().dim;
      std::vector<long> cur(dim, -r);
      while (true) {
        std::vector<mpz_class> v(cur.begin(), cur.end());
        out.push_back(g.lex_vector(std::move(v)));
        int pos = dim - 1;
        while (pos >= 0 && cur[pos] == r) cur[pos--] = -r;
        if (pos < 0) break;
        ++cur[pos];
      }
      break;
    }
    case GroupKind::heisenberg:
      for (long a = -r; a <= r; ++a)
        for (long b = -r; b <= r; ++b)
          for (long c = -r; c <= r; ++c) out.push_back(g.heisenberg_element(a, b, c));
      break;
    case GroupKind::bs12:
      for (long n = -r; n <= r; ++n) {
        out.push_back(g.bs12_element(0, 0, n));
        for (long m = -r; m <= r; ++m) {
          if (m % 2 == 0) continue;
          for (long e = -r; e <= r; ++e) out.push_back(g.bs12_element(m, e, n));
        }
      }
      break;
    case GroupKind::free2: {
      std::vector<std::string> layer = {""};
      out.push_back(g.word(""));
      const char letters[4] = {'x', 'y', 'X', 'Y'};
      for (long l = 1; l <= r; ++l) {
        std::vector<std::string> next;
        next.reserve(layer.size() * 3 + 1);
        for (const std::string& w : layer)
          for (char c : letters) {
            if (!w.empty() && invert_letter(w.back()) == c) continue;
            next.push_back(w + c);
          }
        for (const std::string& w : next) out.push_back(g.word(w));
        layer = std::move(next);
      }
      break;
    }
  }
  std::sort(out.begin(), out.end(),
            [&g](const GroupElement& a, const GroupElement& b) { return g.less(a, b); });
  return out;
}

CorpusReport verify_corpus(const BallSpec& spec, const KRange& k_range,
                           const VerifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  if (k_range.lo < 1 || k_range.lo > k_range.hi)
    throw ParseError("k range must satisfy 1 <= lo <= hi");
  std::vector<GroupElement> ball = enumerate_ball(spec, opts.ball_cap);
  Group g(spec.group);

  CorpusReport report;
  report.group = spec.group;
  report.radius = spec.radius;
  report.k_lo = k_range.lo;
  report.k_hi = k_range.hi;
  report.ball_count = ball.size();

  const std::size_t n = ball.size();
  BinomialTable table(n, k_range.hi);

  u64 planned = 0;
  for (std::size_t k = k_range.lo; k <= k_range.hi && k <= n; ++k) {
    u64 t = table.c(n, k);
    planned = sat_add(planned, opts.sample > 0 ? std::min<u64>(t, opts.sample) : t);
  }
  if (planned > opts.subset_cap)
    throw SubsetCapError("sweep would visit " + std::to_string(planned) +
                         " subsets, over the cap of " + std::to_string(opts.subset_cap));

  const int jobs = std::max(1, opts.jobs);
  for (std::size_t k = k_range.lo; k <= k_range.hi && k <= n; ++k) {
    const u64 total = table.c(n, k);
    if (total == 0) continue;

    std::vector<u64> sampled;
    u64 work = total;
    if (opts.sample > 0 && opts.sample < total) {
      std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ull * static_cast<u64>(k)));
      std::uniform_int_distribution<u64> dist(0, total - 1);
      std::set<u64> chosen;
      while (chosen.size() < opts.sample) chosen.insert(dist(rng));
      sampled.assign(chosen.begin(), chosen.end());
      work = sampled.size();
    }

    const int workers =
        static_cast<int>(std::min<u64>(static_cast<u64>(jobs), work == 0 ? 1 : work));
    std::vector<CorpusReport> partials(static_cast<std::size_t>(workers));
    auto run_worker = [&](int wi) {
      const u64 base = work / static_cast<u64>(workers);
      const u64 rem = work % static_cast<u64>(workers);
      const u64 lo = static_cast<u64>(wi) * base + std::min<u64>(static_cast<u64>(wi), rem);
      const u64 cnt = base + (static_cast<u64>(wi) < rem ? 1 : 0);
      auto& partial = partials[static_cast<std::size_t>(wi)];
      try {
        if (sampled.empty())
          run_block(g, ball, k, table, lo, cnt, partial);
        else
          run_sampled(g, ball, k, table, sampled, lo, cnt, partial);
      } catch (const std::exception& e) {
        partial.violations.push_back({"worker-error", e.what(), {}});
      }
    };
    if (workers == 1) {
      run_worker(0);
    } else {
      std::vector<std::thread> threads;
      threads.reserve(static_cast<std::size_t>(workers));
      for (int wi = 0; wi < workers; ++wi) threads.emplace_back(run_worker, wi);
      for (auto& th : threads) th.join();
    }
    for (auto& partial : partials) merge_into(report, partial);
  }

  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::vector<OrderedSet> find_sharp_witnesses(const BallSpec& spec, std::size_t k,
                                             const VerifyOptions& opts) {
  if (k < 1) throw ParseError("k must be >= 1");
  std::vector<GroupElement> ball = enumerate_ball(spec, opts.ball_cap);
  Group g(spec.group);
  const std::size_t n = ball.size();
  std::vector<OrderedSet> out;
  if (k > n) return out;
  BinomialTable table(n, k);
  if (table.c(n, k) > opts.subset_cap)
    throw SubsetCapError("sweep would visit " + std::to_string(table.c(n, k)) +
                         " subsets, over the cap of " + std::to_string(opts.subset_cap));
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    std::vector<GroupElement> elems;
    elems.reserve(k);
    for (std::size_t i : idx) elems.push_back(ball[i]);
    try {
      OrderedSet s = ordered_set_from_sorted(g, std::move(elems));
      ProductSet ps = product_set(s);
      if (ps.size() == 3 * k - 2 && first_noncommuting(g, s)) out.push_back(std::move(s));
    } catch (const OrderUndecidedError&) {
    }
  } while (next_combination(idx, n));
  return out;
}

bool cross_check_recoveries(const OrderedSet& s) {
  const Group& g = s.group;
  const std::size_t k = s.size();
  RecoveryResult rec = recover_structure(s);
  const ProgressionWitness& w = rec.witness;

  std::optional<ProgressionWitness> e = recover_via_step_euclid(s);
  if (!e)
    throw MismatchFoundError("the step oracle found no witness; the induction gives base " +
                             describe_element(w.base) + ", step " + describe_element(w.step));
  if (e->base != w.base || e->step != w.step || e->exponents != w.exponents)
    throw MismatchFoundError("recoveries disagree: induction gives base " +
                             describe_element(w.base) + ", step " + describe_element(w.step) +
                             "; the step oracle gives base " + describe_element(e->base) +
                             ", step " + describe_element(e->step));

  std::vector<GroupElement> candidates;
  auto add_candidate = [&candidates](GroupElement d) {
    for (const auto& c : candidates)
      if (c == d) return;
    candidates.push_back(std::move(d));
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      add_candidate(g.multiply(g.inverse(s[i]), s[j]));
  add_candidate(e->step);

  std::vector<GroupElement> targets;
  targets.reserve(k);
  GroupElement inv0 = g.inverse(s[0]);
  for (std::size_t i = 0; i < k; ++i) targets.push_back(g.multiply(inv0, s[i]));

  const mpz_class& n = w.bound;
  mpz_class best(-1);
  for (const auto& cand : candidates) {
    mpz_class longest(0);
    bool covers = true;
    for (const auto& target : targets) {
      bool found = false;
      GroupElement cur = g.identity();
      for (mpz_class t = 0; t <= n; ++t) {
        if (cur == target) {
          found = true;
          if (t > longest) longest = t;
          break;
        }
        cur = g.multiply(cur, cand);
      }
      if (!found) {
        covers = false;
        break;
      }
    }
    if (covers) {
      mpz_class length = longest + 1;
      if (best < 0 || length < best) best = length;
    }
  }
  if (best < 0 || best > n + 1)
    throw MismatchFoundError("no candidate step covers the set within length N+1 = " +
                             mpz_class(n + 1).get_str());
  return true;
}

}  // namespace doubling
