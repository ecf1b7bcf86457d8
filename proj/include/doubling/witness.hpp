#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "doubling/element.hpp"

namespace doubling {

/// Certificate that S is contained in {y * x^t : t in [0, N]} for commuting
/// y (base) and x (step). Exponents are aligned with S in ascending order.
///
/// When normalized: x > identity, the exponents are strictly ascending with
/// minimum 0 and gcd of pairwise differences 1, and every exponent lies in
/// [0, bound]. Unnormalized witnesses (as produced mid-recovery) may have a
/// descending exponent sequence and a step below the identity. A singleton
/// set is the one degenerate case: its witness carries the identity step.
struct ProgressionWitness {
  GroupElement base;  // y
  GroupElement step;  // x
  std::vector<mpz_class> exponents;
  mpz_class bound;    // N
  bool normalized = false;
};

/// Arithmetic progression {base + j*step : 0 <= j < length} covering an
/// integer set.
struct APWitness {
  mpz_class base;
  mpz_class step;    // >= 1
  mpz_class length;
};

enum class Justification { OrderSqueeze, CountBound, BaseCase };

const char* justification_name(Justification j);

/// One forced product equality from a proof case, re-checkable by
/// multiplication. `holds` is false only for the recorded counterexample
/// pair of a failed commutation scan.
struct DerivationStep {
  std::string lhs_label;
  std::string rhs_label;
  GroupElement lhs_value;
  GroupElement rhs_value;
  Justification tag;
  bool holds = true;
};

struct DerivationRecord {
  std::vector<DerivationStep> steps;

  void add(std::string lhs_label, std::string rhs_label, GroupElement lhs_value,
           GroupElement rhs_value, Justification tag, bool holds = true) {
    steps.push_back(DerivationStep{std::move(lhs_label), std::move(rhs_label),
                                   std::move(lhs_value), std::move(rhs_value), tag, holds});
  }
  void append(const DerivationRecord& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  }
};

}  // namespace doubling
