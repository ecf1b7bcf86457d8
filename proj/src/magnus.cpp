#include "doubling/magnus.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <unordered_map>

#include "doubling/errors.hpp"

namespace doubling {

MagnusSeries MagnusSeries::one(int degree_cap) {
  MagnusSeries s(degree_cap);
  s.terms_.emplace_back(std::string(), mpz_class(1));
  return s;
}

MagnusSeries MagnusSeries::generator(char variable, bool inverse, int degree_cap) {
  MagnusSeries s(degree_cap);
  if (!inverse) {
    s.terms_.emplace_back(std::string(), mpz_class(1));
    if (degree_cap >= 1) s.terms_.emplace_back(std::string(1, variable), mpz_class(1));
    return s;
  }
  // (1 + V)^-1 = 1 - V + V^2 - ... truncated at the cap.
  std::string mono;
  int sign = 1;
  for (int d = 0; d <= degree_cap; ++d) {
    s.terms_.emplace_back(mono, mpz_class(sign));
    mono.push_back(variable);
    sign = -sign;
  }
  return s;
}

MagnusSeries MagnusSeries::times(const MagnusSeries& other) const {
  const int cap = degree_cap_;
  std::map<std::string, mpz_class, DegLexLess> acc;
  for (const Term& t1 : terms_) {
    const std::size_t room = static_cast<std::size_t>(cap) - t1.first.size();
    for (const Term& t2 : other.terms_) {
      if (t2.first.size() > room) continue;
      acc[t1.first + t2.first] += t1.second * t2.second;
    }
  }
  MagnusSeries out(cap);
  out.terms_.reserve(acc.size());
  for (auto& [mono, coeff] : acc) {
    if (coeff != 0) out.terms_.emplace_back(mono, std::move(coeff));
  }
  return out;
}

mpz_class MagnusSeries::coefficient(const std::string& monomial) const {
  DegLexLess lt;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), monomial,
      [&](const Term& t, const std::string& m) { return lt(t.first, m); });
  if (it != terms_.end() && it->first == monomial) return it->second;
  return 0;
}

std::optional<Ordering> MagnusSeries::compare(const MagnusSeries& a, const MagnusSeries& b) {
  DegLexLess lt;
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    // A monomial missing from one side has coefficient zero there.
    if (ib == b.terms_.end() || (ia != a.terms_.end() && lt(ia->first, ib->first))) {
      return sgn(ia->second) > 0 ? Ordering::Greater : Ordering::Less;
    }
    if (ia == a.terms_.end() || lt(ib->first, ia->first)) {
      return sgn(ib->second) > 0 ? Ordering::Less : Ordering::Greater;
    }
    if (ia->second != ib->second) {
      return ia->second > ib->second ? Ordering::Greater : Ordering::Less;
    }
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

namespace {

struct ExpansionCache {
  int degree_cap = -1;
  std::unordered_map<std::string, std::unique_ptr<const MagnusSeries>> by_word;
};

}  // namespace

const MagnusSeries& magnus_expand(const std::string& word, int degree_cap) {
  if (degree_cap < 1) throw Error("magnus degree cap must be positive");
  thread_local ExpansionCache cache;
  if (cache.degree_cap != degree_cap) {
    cache.by_word.clear();
    cache.degree_cap = degree_cap;
  }
  if (cache.by_word.size() > (1u << 20)) cache.by_word.clear();
  auto it = cache.by_word.find(word);
  if (it != cache.by_word.end()) return *it->second;

  MagnusSeries series = MagnusSeries::one(degree_cap);
  for (char c : word) {
    const bool inverse = (c == 'X' || c == 'Y');
    const char variable = (c == 'x' || c == 'X') ? 'X' : 'Y';
    series = series.times(MagnusSeries::generator(variable, inverse, degree_cap));
  }
  auto stored = std::make_unique<const MagnusSeries>(std::move(series));
  const MagnusSeries& ref = *stored;
  cache.by_word.emplace(word, std::move(stored));
  return ref;
}

}  // namespace doubling
