#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace doubling {

enum class Ordering { Less, Equal, Greater };

/// Graded-lex order on monomials in the noncommuting variables X, Y:
/// lower total degree first, then lexicographic with X before Y.
/// Monomials are words over {'X','Y'}; "" is the constant monomial.
struct DegLexLess {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;  // 'X' < 'Y' in ASCII
  }
};

/// Truncated noncommutative formal power series in X, Y with unbounded
/// integer coefficients. Terms are kept sorted in graded-lex order; no
/// stored monomial exceeds the degree cap and no coefficient is zero.
class MagnusSeries {
public:
  using Term = std::pair<std::string, mpz_class>;

  explicit MagnusSeries(int degree_cap) : degree_cap_(degree_cap) {}

  static MagnusSeries one(int degree_cap);
  /// Series image of a single group generator: 1 + V, or the truncated
  /// geometric series 1 - V + V^2 - ... for the inverse generator.
  static MagnusSeries generator(char variable, bool inverse, int degree_cap);

  MagnusSeries times(const MagnusSeries& other) const;

  int degree_cap() const { return degree_cap_; }
  const std::vector<Term>& terms() const { return terms_; }
  mpz_class coefficient(const std::string& monomial) const;

  bool operator==(const MagnusSeries& o) const { return terms_ == o.terms_; }

  /// First-differing-coefficient comparison in graded-lex monomial order.
  /// Returns nullopt when the truncations are identical (the caller decides
  /// whether that means equality or an undecided comparison).
  static std::optional<Ordering> compare(const MagnusSeries& a, const MagnusSeries& b);

private:
  int degree_cap_;
  std::vector<Term> terms_;
};

/// Expands a reduced word over {'x','y','X','Y'} via x -> 1+X,
/// x^-1 -> 1-X+X^2-..., truncating at the degree cap. Memoized per thread.
const MagnusSeries& magnus_expand(const std::string& word, int degree_cap);

}  // namespace doubling
