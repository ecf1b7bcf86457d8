#include <algorithm>
#include <vector>

#include "doctest.h"

#include "doubling/errors.hpp"
#include "doubling/group.hpp"
#include "doubling/io.hpp"
#include "doubling/oracle.hpp"
#include "doubling/product_set.hpp"
#include "doubling/structure.hpp"

using namespace doubling;

namespace {

OrderedSet int_set(const Group& g, std::vector<long> values) {
  std::vector<GroupElement> elems;
  for (long v : values) elems.push_back(g.integer(v));
  return make_ordered_set(g, std::move(elems));
}

unsigned long long count_at(const CorpusReport& r, DoublingClass c) {
  return r.class_counts[static_cast<std::size_t>(c)];
}

}  // namespace

TEST_CASE("ball sizes") {
  CHECK(ball_size({GroupDescriptor::integers(), 5}) == 11);
  CHECK(ball_size({GroupDescriptor::zlex(2), 2}) == 25);
  CHECK(ball_size({GroupDescriptor::heisenberg(), 1}) == 27);
  CHECK(ball_size({GroupDescriptor::bs12(), 1}) == 21);
  CHECK(ball_size({GroupDescriptor::free2(), 2}) == 17);
}

TEST_CASE("ball enumeration is sorted and complete") {
  BallSpec spec{GroupDescriptor::heisenberg(), 1};
  std::vector<GroupElement> ball = enumerate_ball(spec);
  Group g(spec.group);
  REQUIRE(ball.size() == 27);
  for (std::size_t i = 1; i < ball.size(); ++i) CHECK(g.less(ball[i - 1], ball[i]));
  CHECK(std::find(ball.begin(), ball.end(), g.identity()) != ball.end());
  CHECK(std::find(ball.begin(), ball.end(), g.heisenberg_element(1, 1, 1)) != ball.end());
  CHECK(std::find(ball.begin(), ball.end(), g.heisenberg_element(-1, 0, 1)) != ball.end());

  BallSpec bspec{GroupDescriptor::bs12(), 1};
  std::vector<GroupElement> bball = enumerate_ball(bspec);
  Group b(bspec.group);
  REQUIRE(bball.size() == 21);
  for (std::size_t i = 1; i < bball.size(); ++i) CHECK(b.less(bball[i - 1], bball[i]));
  CHECK(std::find(bball.begin(), bball.end(), b.bs12_element(-1, -1, 0)) != bball.end());
  CHECK(std::find(bball.begin(), bball.end(), b.bs12_element(0, 0, 1)) != bball.end());

  BallSpec fspec{GroupDescriptor::free2(), 2};
  std::vector<GroupElement> fball = enumerate_ball(fspec);
  Group f(fspec.group);
  REQUIRE(fball.size() == 17);
  CHECK(std::find(fball.begin(), fball.end(), f.word("xy")) != fball.end());
  CHECK(std::find(fball.begin(), fball.end(), f.identity()) != fball.end());
  for (const auto& w : fball) CHECK(w.as_word().letters.size() <= 2);
}

TEST_CASE("ball cap refuses oversized enumerations") {
  CHECK_THROWS_AS(enumerate_ball({GroupDescriptor::integers(), 5}, 5), BallTooLargeError);
  VerifyOptions opts;
  opts.ball_cap = 5;
  CHECK_THROWS_AS(verify_corpus({GroupDescriptor::integers(), 5}, KRange{3, 3}, opts),
                  BallTooLargeError);
}

TEST_CASE("subset cap refuses oversized sweeps") {
  VerifyOptions opts;
  opts.subset_cap = 10;
  CHECK_THROWS_AS(verify_corpus({GroupDescriptor::integers(), 5}, KRange{3, 3}, opts),
                  SubsetCapError);
}

TEST_CASE("bad k ranges are rejected") {
  CHECK_THROWS_AS(verify_corpus({GroupDescriptor::integers(), 2}, KRange{4, 3}, {}),
                  ParseError);
  CHECK_THROWS_AS(verify_corpus({GroupDescriptor::integers(), 2}, KRange{0, 3}, {}),
                  ParseError);
}

TEST_CASE("integer sweep finds no violations and counts progressions") {
  CorpusReport r = verify_corpus({GroupDescriptor::integers(), 3}, KRange{3, 4}, {});
  CHECK(r.ball_count == 7);
  CHECK(r.subsets_checked == 35 + 35);
  CHECK(r.skipped_undecided == 0);
  CHECK(r.violations.empty());
  // over the integers every subset here is within 3k-3, so none is sharp
  CHECK(r.sharp_witnesses.empty());
  CHECK(count_at(r, DoublingClass::AtLeast2k) == 0);
  unsigned long long total = 0;
  for (auto c : r.class_counts) total += c;
  CHECK(total == r.subsets_checked);
  // 3-term progressions in [-3,3]: 5 with step 1, 3 with step 2, 1 with step 3
  CHECK(count_at(r, DoublingClass::MinimalGP) >= 9);
  CHECK(r.recovered ==
        count_at(r, DoublingClass::MinimalGP) + count_at(r, DoublingClass::WithinFreimanBound));
}

TEST_CASE("worker count does not change the report") {
  VerifyOptions one;
  one.jobs = 1;
  VerifyOptions three;
  three.jobs = 3;
  CorpusReport a = verify_corpus({GroupDescriptor::integers(), 2}, KRange{3, 4}, one);
  CorpusReport b = verify_corpus({GroupDescriptor::integers(), 2}, KRange{3, 4}, three);
  CHECK(report_to_json(a) == report_to_json(b));

  CorpusReport c = verify_corpus({GroupDescriptor::bs12(), 1}, KRange{3, 3}, one);
  CorpusReport d = verify_corpus({GroupDescriptor::bs12(), 1}, KRange{3, 3}, three);
  CHECK(report_to_json(c) == report_to_json(d));
}

TEST_CASE("sampling is deterministic in the seed and worker count") {
  VerifyOptions a;
  a.sample = 20;
  a.seed = 42;
  a.jobs = 1;
  VerifyOptions b = a;
  b.jobs = 2;
  CorpusReport ra = verify_corpus({GroupDescriptor::heisenberg(), 1}, KRange{3, 3}, a);
  CorpusReport rb = verify_corpus({GroupDescriptor::heisenberg(), 1}, KRange{3, 3}, b);
  CHECK(report_to_json(ra) == report_to_json(rb));
  CHECK(ra.subsets_checked <= 20);
  CHECK(ra.subsets_checked > 0);
  CHECK(ra.violations.empty());

  VerifyOptions c = a;
  c.seed = 43;
  CorpusReport rc = verify_corpus({GroupDescriptor::heisenberg(), 1}, KRange{3, 3}, c);
  // different seed, same totals structure; sharp sets found may differ
  CHECK(rc.subsets_checked == ra.subsets_checked);
}

TEST_CASE("bs12 sweep at k=3 is violation-free and finds sharp sets") {
  CorpusReport r = verify_corpus({GroupDescriptor::bs12(), 1}, KRange{3, 3}, {});
  CHECK(r.subsets_checked == 1330);
  CHECK(r.violations.empty());
  CHECK_FALSE(r.sharp_witnesses.empty());
  CHECK(r.recovered ==
        count_at(r, DoublingClass::MinimalGP) + count_at(r, DoublingClass::WithinFreimanBound));
}

TEST_CASE("free2 sweep with a coarse cap skips but never guesses") {
  CorpusReport r = verify_corpus({GroupDescriptor::free2(2), 2}, KRange{3, 3}, {});
  CHECK(r.subsets_checked == 680);
  CHECK(r.skipped_undecided > 0);
  CHECK(r.skipped_undecided < r.subsets_checked);
  CHECK(r.violations.empty());

  CorpusReport fine = verify_corpus({GroupDescriptor::free2(12), 1}, KRange{3, 3}, {});
  CHECK(fine.subsets_checked == 10);
  CHECK(fine.skipped_undecided == 0);
  CHECK(fine.violations.empty());
}

TEST_CASE("sharp witness search pins the boundary examples") {
  std::vector<OrderedSet> heis = find_sharp_witnesses({GroupDescriptor::heisenberg(), 1}, 3, {});
  Group g(GroupDescriptor::heisenberg());
  std::vector<GroupElement> canonical = {g.identity(), g.heisenberg_element(0, 1, 0),
                                         g.heisenberg_element(1, 0, 0)};
  bool found = false;
  for (const auto& s : heis)
    if (s.elements == canonical) found = true;
  CHECK(found);
  for (const auto& s : heis) CHECK(product_set(s).size() == 7);
}

TEST_CASE("cross-check agrees on recovered witnesses") {
  Group g(GroupDescriptor::integers());
  CHECK(cross_check_recoveries(int_set(g, {0, 1, 2, 3})));
  CHECK(cross_check_recoveries(int_set(g, {0, 2, 3, 4})));
  CHECK(cross_check_recoveries(int_set(g, {0, 2, 4, 6})));
  CHECK(cross_check_recoveries(int_set(g, {0, 1, 2, 3, 5})));

  Group h(GroupDescriptor::heisenberg());
  GroupElement t = h.heisenberg_element(1, 0, 1);
  std::vector<GroupElement> elems;
  GroupElement cur = t;
  for (int i = 0; i < 4; ++i) {
    elems.push_back(cur);
    cur = h.multiply(cur, t);
  }
  CHECK(cross_check_recoveries(make_ordered_set(h, std::move(elems))));

  Group z(GroupDescriptor::zlex(2));
  OrderedSet rank2 = make_ordered_set(
      z, {z.identity(), z.lex_vector({mpz_class(0), mpz_class(1)}),
          z.lex_vector({mpz_class(1), mpz_class(0)})});
  CHECK_THROWS_AS(cross_check_recoveries(rank2), HypothesisNotMetError);
}
