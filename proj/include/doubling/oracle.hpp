#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "doubling/product_set.hpp"
#include "doubling/structure.hpp"

namespace doubling {

inline constexpr std::size_t kDefaultBallCap = 100000;
inline constexpr unsigned long long kDefaultSubsetCap = 10000000;

/// Finite box of elements to draw subsets from. The radius bounds, per kind:
/// integers |n| <= r; zlex and heisenberg every coordinate in [-r, r]; bs12
/// |m| <= r, |e| <= r, |n| <= r over canonical dyadics; free2 word length <= r.
struct BallSpec {
  GroupDescriptor group;
  int radius = 1;
};

/// Element count of the ball, computed without materializing it.
unsigned long long ball_size(const BallSpec& spec);

/// All distinct canonical elements of the box, sorted ascending.
std::vector<GroupElement> enumerate_ball(const BallSpec& spec,
                                         std::size_t cap = kDefaultBallCap);

/// Inclusive range of subset sizes to sweep.
struct KRange {
  std::size_t lo = 3;
  std::size_t hi = 3;
};

struct Violation {
  std::string check;
  std::string detail;
  std::vector<GroupElement> elements;
};

struct VerifyOptions {
  int jobs = 1;
  unsigned long long subset_cap = kDefaultSubsetCap;
  std::size_t ball_cap = kDefaultBallCap;
  unsigned long long sample = 0;  // 0 = exhaustive; else number of sampled subsets per k
  unsigned long long seed = 0;    // sampling seed; ignored when exhaustive
};

/// Outcome of one corpus sweep. Workers process contiguous ordinal blocks of
/// the subset enumeration and partial results merge in block order, so the
/// report is identical for every worker count. elapsed_seconds is wall clock
/// and excluded from the canonical serialization.
struct CorpusReport {
  GroupDescriptor group;
  int radius = 0;
  std::size_t k_lo = 0;
  std::size_t k_hi = 0;
  unsigned long long ball_count = 0;
  unsigned long long subsets_checked = 0;
  unsigned long long skipped_undecided = 0;
  unsigned long long recovered = 0;
  std::array<unsigned long long, 5> class_counts{};  // indexed by DoublingClass
  std::vector<Violation> violations;
  std::vector<std::vector<GroupElement>> sharp_witnesses;
  double elapsed_seconds = 0.0;
};

/// Sweeps every k-subset of the ball for each k in range and checks, from
/// multiply/compare primitives where independence demands it: the doubling
/// floor |S^2| >= 2k-1, the progression dichotomy at 2k-1, pairwise
/// commutation whenever |S^2| <= 3k-3, and the full recovery pipeline with
/// the Euclid cross-check whenever |S^2| <= 3k-4. Free-group subsets whose
/// comparisons exceed the degree cap are counted as skips, never as passes.
CorpusReport verify_corpus(const BallSpec& spec, const KRange& k_range,
                           const VerifyOptions& opts = {});

/// All k-subsets with |S^2| = 3k-2 containing a non-commuting pair, in
/// enumeration order.
std::vector<OrderedSet> find_sharp_witnesses(const BallSpec& spec, std::size_t k,
                                             const VerifyOptions& opts = {});

/// Runs both recovery algorithms and requires identical normalized output,
/// then confirms by brute force (candidate steps drawn from the pairwise
/// differences plus the Euclid step) that a progression of length at most
/// N+1 covers S. Base and step agreement is checked elementwise; the stored
/// bounds may differ since only the inductive recovery certifies N.
bool cross_check_recoveries(const OrderedSet& s);

}  // namespace doubling
