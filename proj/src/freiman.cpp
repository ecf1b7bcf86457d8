#include "doubling/freiman.hpp"

#include <algorithm>
#include <string>

#include "doubling/errors.hpp"

namespace doubling {

std::vector<mpz_class> integer_sumset(const std::vector<mpz_class>& a) {
  std::vector<mpz_class> sums;
  sums.reserve(a.size() * a.size());
  for (const auto& p : a)
    for (const auto& q : a) sums.push_back(p + q);
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

APWitness freiman_3k4_integers(const std::vector<mpz_class>& a) {
  std::vector<mpz_class> v = a;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  const std::size_t k = v.size();
  if (k < 3)
    throw HypothesisNotMetError("progression cover needs at least 3 distinct integers, got " +
                                std::to_string(k));

  std::vector<mpz_class> ss = integer_sumset(v);
  if (ss.size() > 3 * k - 4)
    throw HypothesisNotMetError("|A+A| = " + std::to_string(ss.size()) + " exceeds 3k-4 = " +
                                std::to_string(3 * k - 4) + " for k = " + std::to_string(k));

  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, mpz_class(x - v.front()));
  mpz_class diameter = (v.back() - v.front()) / g;
  mpz_class allowed(static_cast<long>(ss.size() - k));
  if (diameter > allowed)
    throw TheoremViolationError(TheoremViolationError::Reason::BoundExceeded,
                                "normalized diameter " + diameter.get_str() +
                                    " exceeds |A+A| - k = " + allowed.get_str());

  APWitness w;
  w.base = v.front();
  w.step = g;
  w.length = diameter + 1;
  return w;
}

}  // namespace doubling
