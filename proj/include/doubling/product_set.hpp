#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "doubling/group.hpp"

namespace doubling {

/// The set S = {x_1 < ... < x_k}: strictly ascending, duplicate-free, k >= 1.
struct OrderedSet {
  Group group;
  std::vector<GroupElement> elements;
  int duplicates_dropped = 0;

  std::size_t size() const { return elements.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements[i]; }
};

/// Sorts, deduplicates, and records how many duplicates were dropped.
OrderedSet make_ordered_set(const Group& group, std::vector<GroupElement> raw);

/// Constructs directly from elements already strictly ascending (verified).
OrderedSet ordered_set_from_sorted(const Group& group, std::vector<GroupElement> sorted);

/// Returns the prefix {x_1, ..., x_m} of S.
OrderedSet prefix_set(const OrderedSet& s, std::size_t m);

/// S^2 = {ab : a, b in S} with, for each product, every ordered index pair
/// (i, j) such that x_i * x_j equals it. Both (i, j) and (j, i) appear when
/// the products coincide; nothing is identified.
struct ProductSet {
  std::vector<GroupElement> elements;  // strictly ascending
  std::vector<std::vector<std::pair<int, int>>> factorizations;  // parallel

  std::size_t size() const { return elements.size(); }
  /// Index of the product in elements, or npos.
  std::size_t find(const Group& group, const GroupElement& p) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

ProductSet product_set(const OrderedSet& s);

enum class DoublingClass {
  MinimalGP,           // |S^2| = 2k-1
  AtLeast2k,           // residual band (empty for every k with exact arithmetic)
  WithinFreimanBound,  // |S^2| <= 3k-4, k >= 3
  WithinAbelianBound,  // |S^2| = 3k-3
  Above,               // |S^2| >= 3k-2
};

const char* doubling_class_name(DoublingClass c);

/// Pure classification of a doubling value against the thresholds; checks run
/// in the order MinimalGP, WithinFreimanBound, WithinAbelianBound, Above.
DoublingClass classify_doubling(std::size_t k, std::size_t doubling);

struct DoublingReport {
  std::size_t k = 0;
  std::size_t doubling = 0;      // |S^2|
  std::size_t slack = 0;         // |S^2| - (2k-1)
  DoublingClass doubling_class = DoublingClass::Above;
};

DoublingReport doubling_report(const OrderedSet& s);

/// The forced chain x_1x_1 < x_1x_2 < ... < x_1x_k < x_2x_k < ... < x_kx_k
/// of 2k-1 elements of S^2, verified strictly ascending.
std::vector<GroupElement> boundary_chain(const OrderedSet& s);

}  // namespace doubling
