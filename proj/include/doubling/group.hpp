#pragma once

#include <string>

#include <gmpxx.h>

#include "doubling/element.hpp"
#include "doubling/magnus.hpp"

namespace doubling {

inline constexpr int kDefaultMagnusCap = 12;

/// Names one of the five concrete groups together with its parameters.
struct GroupDescriptor {
  GroupKind kind = GroupKind::integers;
  int dim = 0;                              // zlex only
  int magnus_degree_cap = kDefaultMagnusCap;  // free2 only

  static GroupDescriptor integers();
  static GroupDescriptor zlex(int dim);
  static GroupDescriptor heisenberg();
  static GroupDescriptor bs12();
  static GroupDescriptor free2(int magnus_degree_cap = kDefaultMagnusCap);

  bool operator==(const GroupDescriptor& o) const {
    return kind == o.kind && dim == o.dim && magnus_degree_cap == o.magnus_degree_cap;
  }
};

/// Exact arithmetic and a computable bi-invariant total order for one group.
/// A Group is a cheap value (just the descriptor); elements are dumb data and
/// every operation is a pure function of its arguments, safe to call
/// concurrently. Magnus-expansion memoization is per thread.
class Group {
public:
  explicit Group(GroupDescriptor descriptor);

  const GroupDescriptor& descriptor() const { return descriptor_; }
  GroupKind kind() const { return descriptor_.kind; }

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, const mpz_class& n) const;
  GroupElement power(const GroupElement& a, long n) const { return power(a, mpz_class(n)); }

  /// Total bi-invariant order. Throws OrderUndecidedError for free2 when the
  /// truncated expansions agree up to the degree cap yet the words differ.
  Ordering compare(const GroupElement& a, const GroupElement& b) const;
  bool less(const GroupElement& a, const GroupElement& b) const {
    return compare(a, b) == Ordering::Less;
  }
  bool commutes(const GroupElement& a, const GroupElement& b) const;

  /// Element factories (validated; canonical form enforced).
  GroupElement integer(mpz_class n) const;
  GroupElement lex_vector(std::vector<mpz_class> v) const;
  GroupElement heisenberg_element(mpz_class a, mpz_class b, mpz_class c) const;
  GroupElement bs12_element(mpz_class mantissa, mpz_class exponent, mpz_class n) const;
  GroupElement word(const std::string& letters) const;

private:
  void check_kind(const GroupElement& a) const;

  GroupDescriptor descriptor_;
};

/// One human-readable rendering per kind, used in messages and table output.
/// (The JSON schema lives in io.hpp.)
std::string describe_element(const GroupElement& a);

}  // namespace doubling
