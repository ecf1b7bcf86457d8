#pragma once

#include <vector>

#include <gmpxx.h>

#include "doubling/witness.hpp"

namespace doubling {

/// Sorted distinct pairwise sums A+A of an integer set (input need not be
/// sorted; duplicates are ignored).
std::vector<mpz_class> integer_sumset(const std::vector<mpz_class>& a);

/// Freiman's 3k-4 theorem for integers: if |A| = k >= 3 and |A+A| <= 3k-4
/// then A lies in an arithmetic progression of length |A+A| - k + 1.
/// Returns the minimal cover (base = min A, step = gcd of the differences)
/// after asserting its length stays within that bound.
APWitness freiman_3k4_integers(const std::vector<mpz_class>& a);

}  // namespace doubling
