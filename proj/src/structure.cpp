#include "doubling/structure.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "doubling/errors.hpp"
#include "doubling/freiman.hpp"

namespace doubling {

const char* justification_name(Justification j) {
  switch (j) {
    case Justification::OrderSqueeze: return "order-squeeze";
    case Justification::CountBound: return "count-bound";
    case Justification::BaseCase: return "base-case";
  }
  return "unknown";
}

namespace {

std::string var(std::size_t i) { return "x" + std::to_string(i + 1); }

std::string prod_label(std::size_t i, std::size_t j) { return var(i) + "*" + var(j); }

std::string power_label(const mpz_class& t) { return "y*x^" + t.get_str(); }

}  // namespace

std::optional<ProgressionWitness> is_geometric_progression(const OrderedSet& s) {
  const Group& g = s.group;
  const std::size_t k = s.size();
  if (k == 1) {
    ProgressionWitness w;
    w.base = s[0];
    w.step = g.identity();
    w.exponents = {mpz_class(0)};
    w.bound = 0;
    w.normalized = true;
    return w;
  }
  GroupElement y = s[0];
  GroupElement x = g.multiply(g.inverse(s[0]), s[1]);
  if (!g.commutes(x, y)) return std::nullopt;
  GroupElement cur = y;
  std::vector<mpz_class> ts;
  ts.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0) cur = g.multiply(cur, x);
    if (cur != s[i]) return std::nullopt;
    ts.emplace_back(static_cast<long>(i));
  }
  ProgressionWitness w;
  w.base = std::move(y);
  w.step = std::move(x);
  w.exponents = std::move(ts);
  w.bound = static_cast<long>(k - 1);
  w.normalized = true;
  return w;
}

MinimalDoublingClassification classify_minimal_doubling(const OrderedSet& s) {
  const std::size_t k = s.size();
  if (k < 2)
    throw HypothesisNotMetError("minimal-doubling classification needs k >= 2, got k = " +
                                std::to_string(k));
  ProductSet ps = product_set(s);
  MinimalDoublingClassification out;
  out.doubling = ps.size();
  out.witness = is_geometric_progression(s);
  out.is_gp = out.witness.has_value();
  const bool minimal = ps.size() == 2 * k - 1;
  if (out.is_gp && !minimal)
    throw LemmaViolationError("geometric progression with |S^2| = " + std::to_string(ps.size()) +
                              " instead of 2k-1 = " + std::to_string(2 * k - 1));
  if (!out.is_gp && minimal)
    throw LemmaViolationError("|S^2| = 2k-1 = " + std::to_string(ps.size()) +
                              " yet the set is not a geometric progression");
  return out;
}

DerivationRecord lemma_l2_forced_relations(const OrderedSet& s) {
  const std::size_t k = s.size();
  ProductSet ps = product_set(s);
  if (ps.size() >= 2 * k)
    throw HypothesisNotMetError("the squeeze needs |S^2| = 2k-1; got |S^2| = " +
                                std::to_string(ps.size()) + " >= 2k = " + std::to_string(2 * k));
  const Group& g = s.group;
  DerivationRecord record;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    GroupElement lhs = g.multiply(s[1], s[j]);
    GroupElement rhs = g.multiply(s[0], s[j + 1]);
    if (lhs != rhs)
      throw LemmaViolationError("forced equality " + prod_label(1, j) + " = " +
                                prod_label(0, j + 1) + " does not hold");
    record.add(prod_label(1, j), prod_label(0, j + 1), std::move(lhs), std::move(rhs),
               Justification::OrderSqueeze);
  }
  return record;
}

ProgressionWitness recover_base_k3(const OrderedSet& s, DerivationRecord& record) {
  const std::size_t k = s.size();
  if (k != 3)
    throw HypothesisNotMetError("base case needs k = 3, got k = " + std::to_string(k));
  ProductSet ps = product_set(s);
  if (ps.size() > 5)
    throw HypothesisNotMetError("base case needs |S^2| <= 5, got |S^2| = " +
                                std::to_string(ps.size()));
  const Group& g = s.group;

  GroupElement lhs1 = g.multiply(s[0], s[2]);
  GroupElement rhs1 = g.multiply(s[1], s[1]);
  if (lhs1 != rhs1)
    throw TheoremViolationError(TheoremViolationError::Reason::ForcedEqualityFailed,
                                "x1*x3 = x2*x2 fails although |S^2| <= 5 forces it");
  record.add(prod_label(0, 2), prod_label(1, 1), std::move(lhs1), std::move(rhs1),
             Justification::BaseCase);

  GroupElement lhs2 = g.multiply(s[0], s[1]);
  GroupElement rhs2 = g.multiply(s[1], s[0]);
  if (lhs2 != rhs2)
    throw TheoremViolationError(TheoremViolationError::Reason::ForcedEqualityFailed,
                                "x1*x2 = x2*x1 fails although |S^2| <= 5 forces it");
  record.add(prod_label(0, 1), prod_label(1, 0), std::move(lhs2), std::move(rhs2),
             Justification::BaseCase);

  ProgressionWitness w;
  w.base = s[0];
  w.step = g.multiply(g.inverse(s[0]), s[1]);
  w.exponents = {mpz_class(0), mpz_class(1), mpz_class(2)};
  w.bound = static_cast<long>(ps.size() - 3);
  w.normalized = true;
  if (!verify_witness(s, w))
    throw VerificationFailedError("k = 3 witness failed re-verification by multiplication");
  return w;
}

ProgressionWitness recover_base_k3(const OrderedSet& s) {
  DerivationRecord record;
  return recover_base_k3(s, record);
}

ProgressionWitness extend_witness_case1(const ProgressionWitness& t_witness,
                                        const GroupElement& x_k, const OrderedSet& s,
                                        DerivationRecord& record) {
  const Group& g = s.group;
  const std::size_t k = s.size();
  if (k < 2)
    throw HypothesisNotMetError("case 1 extension needs k >= 2, got k = " + std::to_string(k));
  if (s[k - 1] != x_k)
    throw HypothesisNotMetError("x_k must be the maximum of S");
  OrderedSet t = prefix_set(s, k - 1);
  if (t_witness.exponents.size() != k - 1 || !verify_witness(t, t_witness))
    throw VerificationFailedError("the supplied witness does not cover T = S minus its maximum");
  ProductSet ps = product_set(s);
  if (ps.size() > 3 * k - 4)
    throw HypothesisNotMetError("case 1 needs |S^2| <= 3k-4; got |S^2| = " +
                                std::to_string(ps.size()) + " for k = " + std::to_string(k));
  ProductSet pt = product_set(t);

  for (std::size_t a = 0; a + 1 < k; ++a) {
    GroupElement p = g.multiply(x_k, t[a]);
    std::size_t pos = pt.find(g, p);
    if (pos == ProductSet::npos) continue;
    const auto& fac = pt.factorizations[pos].front();
    const std::size_t u = static_cast<std::size_t>(fac.first);
    const std::size_t v = static_cast<std::size_t>(fac.second);
    mpz_class tk = t_witness.exponents[u] + t_witness.exponents[v] - t_witness.exponents[a];
    GroupElement rebuilt = g.multiply(t_witness.base, g.power(t_witness.step, tk));
    if (rebuilt != x_k)
      throw VerificationFailedError("coincidence " + prod_label(k - 1, a) + " = " +
                                    prod_label(u, v) + " gives exponent " + tk.get_str() +
                                    " but " + power_label(tk) + " differs from " + var(k - 1));
    record.add(prod_label(k - 1, a), prod_label(u, v), p, g.multiply(t[u], t[v]),
               Justification::CountBound);
    record.add(var(k - 1), power_label(tk), x_k, rebuilt, Justification::CountBound);
    ProgressionWitness w = t_witness;
    w.exponents.push_back(tk);
    w.bound = std::max(w.bound, tk);
    w.normalized = false;
    return w;
  }
  throw TheoremViolationError(TheoremViolationError::Reason::EmptyIntersection,
                              "x_k*T misses T^2 although |S^2| <= 3k-4 forces a coincidence");
}

ProgressionWitness extend_witness_case1(const ProgressionWitness& t_witness,
                                        const GroupElement& x_k, const OrderedSet& s) {
  DerivationRecord record;
  return extend_witness_case1(t_witness, x_k, s, record);
}

ProgressionWitness derive_case2(const OrderedSet& s, DerivationRecord& record) {
  const Group& g = s.group;
  const std::size_t k = s.size();
  if (k < 4)
    throw HypothesisNotMetError("case 2 needs k >= 4, got k = " + std::to_string(k));
  ProductSet ps = product_set(s);
  if (ps.size() > 3 * k - 4)
    throw HypothesisNotMetError("case 2 needs |S^2| <= 3k-4; got |S^2| = " +
                                std::to_string(ps.size()) + " for k = " + std::to_string(k));

  const GroupElement& xk = s[k - 1];
  const GroupElement& xk1 = s[k - 2];
  const GroupElement& xk2 = s[k - 3];

  GroupElement l1 = g.multiply(xk1, xk);
  GroupElement r1 = g.multiply(xk, xk1);
  if (l1 != r1)
    throw TheoremViolationError(TheoremViolationError::Reason::ForcedEqualityFailed,
                                "forced commutation " + prod_label(k - 2, k - 1) + " = " +
                                    prod_label(k - 1, k - 2) + " does not hold");
  record.add(prod_label(k - 2, k - 1), prod_label(k - 1, k - 2), std::move(l1), std::move(r1),
             Justification::OrderSqueeze);

  GroupElement l2 = g.multiply(xk2, xk);
  GroupElement r2 = g.multiply(xk, xk2);
  if (l2 != r2)
    throw TheoremViolationError(TheoremViolationError::Reason::ForcedEqualityFailed,
                                "forced commutation " + prod_label(k - 3, k - 1) + " = " +
                                    prod_label(k - 1, k - 3) + " does not hold");
  record.add(prod_label(k - 3, k - 1), prod_label(k - 1, k - 3), l2, r2,
             Justification::OrderSqueeze);

  GroupElement r3 = g.multiply(xk1, xk1);
  if (r2 != r3)
    throw TheoremViolationError(TheoremViolationError::Reason::ForcedEqualityFailed,
                                "forced equality " + prod_label(k - 1, k - 3) + " = " +
                                    prod_label(k - 2, k - 2) + " does not hold");
  record.add(prod_label(k - 1, k - 3), prod_label(k - 2, k - 2), std::move(r2), std::move(r3),
             Justification::OrderSqueeze);

  GroupElement y = xk;
  GroupElement x = g.multiply(xk1, g.inverse(xk));
  std::vector<mpz_class> ts(k);
  ts[k - 1] = 0;
  GroupElement cur = y;
  mpz_class tcur = 0;
  const mpz_class search_cap(static_cast<long>(2 * k - 4));
  for (std::size_t idx = k - 1; idx-- > 0;) {
    bool found = false;
    while (tcur < search_cap) {
      ++tcur;
      cur = g.multiply(cur, x);
      if (cur == s[idx]) {
        ts[idx] = tcur;
        found = true;
        break;
      }
    }
    if (!found)
      throw TheoremViolationError(TheoremViolationError::Reason::ExponentNotFound,
                                  "no exponent t <= 2k-4 with y*x^t = " + var(idx));
    record.add(var(idx), power_label(tcur), s[idx], cur, Justification::CountBound);
  }

  ProgressionWitness w;
  w.base = std::move(y);
  w.step = std::move(x);
  w.bound = ts.front();
  w.exponents = std::move(ts);
  w.normalized = false;
  return w;
}

ProgressionWitness derive_case2(const OrderedSet& s) {
  DerivationRecord record;
  return derive_case2(s, record);
}

RecoveryResult recover_structure(const OrderedSet& s) {
  const std::size_t k = s.size();
  if (k < 3)
    throw HypothesisNotMetError("structure recovery needs k >= 3, got k = " + std::to_string(k));
  ProductSet ps = product_set(s);
  if (ps.size() > 3 * k - 4)
    throw HypothesisNotMetError("structure recovery needs |S^2| <= 3k-4; got |S^2| = " +
                                std::to_string(ps.size()) + " for k = " + std::to_string(k));

  DerivationRecord record;
  ProgressionWitness w;
  if (k == 3) {
    w = recover_base_k3(s, record);
  } else {
    OrderedSet t = prefix_set(s, k - 1);
    ProductSet pt = product_set(t);
    if (pt.size() <= 3 * (k - 1) - 4) {
      RecoveryResult sub = recover_structure(t);
      record.append(sub.record);
      w = extend_witness_case1(sub.witness, s[k - 1], s, record);
    } else {
      w = derive_case2(s, record);
    }
  }

  w = normalize_witness(s.group, w);
  freiman_3k4_integers(w.exponents);
  mpz_class n(static_cast<long>(ps.size() - k));
  if (w.exponents.back() > n)
    throw TheoremViolationError(TheoremViolationError::Reason::BoundExceeded,
                                "recovered exponent " + w.exponents.back().get_str() +
                                    " exceeds N = |S^2| - k = " + n.get_str());
  w.bound = n;
  if (!verify_witness(s, w))
    throw VerificationFailedError("recovered witness failed re-verification by multiplication");

  RecoveryResult out;
  out.witness = std::move(w);
  out.record = std::move(record);
  return out;
}

std::optional<ProgressionWitness> recover_via_step_euclid(const OrderedSet& s) {
  const Group& g = s.group;
  const std::size_t k = s.size();
  if (k < 2) return std::nullopt;
  try {
    std::vector<GroupElement> diffs;
    diffs.reserve(k - 1);
    GroupElement inv0 = g.inverse(s[0]);
    for (std::size_t i = 1; i < k; ++i) diffs.push_back(g.multiply(inv0, s[i]));
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      if (!g.commutes(diffs[i], s[0])) return std::nullopt;
      for (std::size_t j = i + 1; j < diffs.size(); ++j)
        if (!g.commutes(diffs[i], diffs[j])) return std::nullopt;
    }

    std::vector<GroupElement> pool = diffs;
    const GroupElement id = g.identity();
    const int max_rounds = 1024;
    int rounds = 0;
    while (true) {
      std::sort(pool.begin(), pool.end(),
                [&](const GroupElement& a, const GroupElement& b) { return g.less(a, b); });
      pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
      if (pool.size() <= 1) break;
      if (++rounds > max_rounds) return std::nullopt;
      GroupElement smallest = pool.front();
      GroupElement sinv = g.inverse(smallest);
      std::vector<GroupElement> next;
      next.push_back(std::move(smallest));
      for (std::size_t i = 1; i < pool.size(); ++i) {
        GroupElement reduced = g.multiply(pool[i], sinv);
        if (reduced != id) next.push_back(std::move(reduced));
      }
      pool = std::move(next);
    }
    GroupElement step = pool.front();

    ProductSet ps = product_set(s);
    const std::size_t cap = ps.size();
    std::vector<GroupElement> powers;
    powers.push_back(step);
    std::vector<mpz_class> ts;
    ts.reserve(k);
    ts.emplace_back(0);
    for (const GroupElement& d : diffs) {
      bool found = false;
      for (std::size_t e = 1; e <= cap; ++e) {
        if (powers.size() < e) powers.push_back(g.multiply(powers.back(), step));
        if (powers[e - 1] == d) {
          ts.emplace_back(static_cast<long>(e));
          found = true;
          break;
        }
      }
      if (!found) return std::nullopt;
    }

    ProgressionWitness w;
    w.base = s[0];
    w.step = std::move(step);
    w.bound = ts.back();
    w.exponents = std::move(ts);
    w.normalized = false;
    return normalize_witness(g, w);
  } catch (const OrderUndecidedError&) {
    return std::nullopt;
  } catch (const ResourceCapError&) {
    return std::nullopt;
  }
}

ProgressionWitness normalize_witness(const Group& group, ProgressionWitness w) {
  const std::size_t k = w.exponents.size();
  if (k == 0) throw VerificationFailedError("witness has no exponents");
  if (k == 1) {
    ProgressionWitness out;
    out.base = group.multiply(w.base, group.power(w.step, w.exponents[0]));
    out.step = group.identity();
    out.exponents = {mpz_class(0)};
    out.bound = 0;
    out.normalized = true;
    return out;
  }

  Ordering c = group.compare(w.step, group.identity());
  if (c == Ordering::Equal)
    throw VerificationFailedError("an identity step cannot cover more than one element");
  if (c == Ordering::Less) {
    w.step = group.inverse(w.step);
    for (auto& t : w.exponents) t = -t;
  }

  mpz_class mn = *std::min_element(w.exponents.begin(), w.exponents.end());
  if (mn != 0) {
    w.base = group.multiply(w.base, group.power(w.step, mn));
    for (auto& t : w.exponents) t -= mn;
  }

  mpz_class d = 0;
  for (const auto& t : w.exponents) d = gcd(d, t);
  if (d > 1) {
    w.step = group.power(w.step, d);
    for (auto& t : w.exponents) t /= d;
  }

  for (std::size_t i = 0; i + 1 < w.exponents.size(); ++i)
    if (w.exponents[i] >= w.exponents[i + 1])
      throw VerificationFailedError("normalized exponents are not strictly ascending");
  w.bound = w.exponents.back();
  w.normalized = true;
  return w;
}

bool verify_witness(const OrderedSet& s, const ProgressionWitness& w) {
  const Group& g = s.group;
  const std::size_t k = s.size();
  if (w.exponents.size() != k) return false;
  if (!g.commutes(w.step, w.base)) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (g.multiply(w.base, g.power(w.step, w.exponents[i])) != s[i]) return false;
  if (w.normalized) {
    if (w.exponents.front() != 0) return false;
    mpz_class d = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (w.exponents[i] < 0 || w.exponents[i] > w.bound) return false;
      if (i + 1 < k && w.exponents[i] >= w.exponents[i + 1]) return false;
      d = gcd(d, w.exponents[i]);
    }
    if (k >= 2 && d != 1) return false;
  }
  return true;
}

bool two_isomorphism_check(const OrderedSet& s, const ProgressionWitness& w) {
  const Group& g = s.group;
  const std::size_t k = s.size();
  if (w.exponents.size() != k) return false;
  std::vector<std::vector<GroupElement>> prod(k);
  std::vector<std::vector<mpz_class>> sum(k);
  for (std::size_t a = 0; a < k; ++a) {
    prod[a].reserve(k);
    sum[a].reserve(k);
    for (std::size_t b = 0; b < k; ++b) {
      prod[a].push_back(g.multiply(s[a], s[b]));
      sum[a].push_back(w.exponents[a] + w.exponents[b]);
    }
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d < k; ++d) {
          const bool products_equal = prod[a][b] == prod[c][d];
          const bool sums_equal = sum[a][b] == sum[c][d];
          if (products_equal != sums_equal) return false;
        }
  return true;
}

AbelianCheckResult abelian_generation_check(const OrderedSet& s) {
  const Group& g = s.group;
  const std::size_t k = s.size();
  ProductSet ps = product_set(s);
  AbelianCheckResult out;
  out.abelian = true;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      GroupElement lhs = g.multiply(s[i], s[j]);
      GroupElement rhs = g.multiply(s[j], s[i]);
      if (lhs != rhs) {
        out.abelian = false;
        out.record.add(prod_label(i, j), prod_label(j, i), std::move(lhs), std::move(rhs),
                       Justification::CountBound, false);
      }
    }
  if (!out.abelian && ps.size() <= 3 * k - 3) {
    const DerivationStep& bad = out.record.steps.front();
    throw TheoremViolationError(TheoremViolationError::Reason::General,
                                "|S^2| = " + std::to_string(ps.size()) +
                                    " <= 3k-3 = " + std::to_string(3 * k - 3) + " yet " +
                                    bad.lhs_label + " != " + bad.rhs_label);
  }
  return out;
}

bool rank_bound_check(const OrderedSet& s, const ProgressionWitness& w) {
  const Group& g = s.group;
  if (w.exponents.size() != s.size()) return false;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (g.multiply(w.base, g.power(w.step, w.exponents[i])) != s[i]) return false;
  return true;
}

}  // namespace doubling
