#include <string>
#include <vector>

#include "doctest.h"

#include "doubling/errors.hpp"
#include "doubling/group.hpp"
#include "doubling/magnus.hpp"

using namespace doubling;

TEST_CASE("integers arithmetic and order") {
  Group g(GroupDescriptor::integers());
  GroupElement a = g.integer(5);
  GroupElement b = g.integer(-3);
  CHECK(g.multiply(a, b) == g.integer(2));
  CHECK(g.inverse(a) == g.integer(-5));
  CHECK(g.power(a, 3) == g.integer(15));
  CHECK(g.power(a, -2) == g.integer(-10));
  CHECK(g.power(a, 0) == g.identity());
  CHECK(g.compare(b, a) == Ordering::Less);
  CHECK(g.compare(a, a) == Ordering::Equal);
  CHECK(g.commutes(a, b));
}

TEST_CASE("zlex order is lexicographic") {
  Group g(GroupDescriptor::zlex(2));
  GroupElement a = g.lex_vector({mpz_class(0), mpz_class(5)});
  GroupElement b = g.lex_vector({mpz_class(1), mpz_class(-3)});
  CHECK(g.less(a, b));
  CHECK(g.multiply(a, b) == g.lex_vector({mpz_class(1), mpz_class(2)}));
  CHECK(g.inverse(b) == g.lex_vector({mpz_class(-1), mpz_class(3)}));
  CHECK_THROWS_AS(g.lex_vector({mpz_class(1)}), KindMismatchError);
  CHECK_THROWS_AS(GroupDescriptor::zlex(0), Error);
}

TEST_CASE("heisenberg product, inverse, power") {
  Group g(GroupDescriptor::heisenberg());
  GroupElement p = g.heisenberg_element(1, 2, 3);
  GroupElement q = g.heisenberg_element(4, 5, 6);
  CHECK(g.multiply(p, q) == g.heisenberg_element(5, 7, 14));
  CHECK(g.inverse(g.heisenberg_element(1, 1, 1)) == g.heisenberg_element(-1, -1, 0));
  CHECK(g.multiply(p, g.inverse(p)) == g.identity());
  CHECK(g.power(g.heisenberg_element(1, 0, 1), 2) == g.heisenberg_element(2, 0, 2));
  CHECK(g.power(g.heisenberg_element(1, 1, 0), 2) == g.heisenberg_element(2, 2, 1));
  CHECK(g.power(g.heisenberg_element(1, 1, 0), -1) == g.heisenberg_element(-1, -1, 1));
}

TEST_CASE("heisenberg order and commutation") {
  Group g(GroupDescriptor::heisenberg());
  GroupElement e = g.identity();
  GroupElement z = g.heisenberg_element(0, 0, 1);
  GroupElement x = g.heisenberg_element(1, 0, 0);
  GroupElement y = g.heisenberg_element(0, 1, 0);
  CHECK(g.less(e, z));
  CHECK(g.less(z, y));
  CHECK(g.less(y, x));
  CHECK(g.less(g.heisenberg_element(0, 1, 100), x));
  CHECK_FALSE(g.commutes(x, y));
  CHECK(g.commutes(z, x));
  CHECK(g.commutes(z, y));
  // x y x^-1 y^-1 is the central generator
  GroupElement comm = g.multiply(g.multiply(x, y), g.multiply(g.inverse(x), g.inverse(y)));
  CHECK(comm == z);
}

TEST_CASE("bs12 semidirect product arithmetic") {
  Group g(GroupDescriptor::bs12());
  GroupElement t = g.bs12_element(1, 0, 1);  // (q, n) = (1, 1)
  CHECK(g.multiply(t, t) == g.bs12_element(3, 0, 2));
  CHECK(g.inverse(t) == g.bs12_element(-1, -1, -1));
  CHECK(g.multiply(t, g.inverse(t)) == g.identity());

  GroupElement a = g.bs12_element(1, 0, 0);  // (1, 0)
  GroupElement b = g.bs12_element(0, 0, 1);  // (0, 1)
  // (0,1)(1,0) = (2, 1) while (1,0)(0,1) = (1, 1)
  CHECK(g.multiply(b, a) == g.bs12_element(1, 1, 1));
  CHECK(g.multiply(a, b) == g.bs12_element(1, 0, 1));
  CHECK_FALSE(g.commutes(a, b));
}

TEST_CASE("bs12 mantissa canonicalization") {
  CHECK(Dyadic::make(4, 0) == Dyadic{1, 2});
  CHECK(Dyadic::make(6, -1) == Dyadic{3, 0});
  CHECK(Dyadic::make(0, 5) == Dyadic::zero());
  CHECK(Dyadic::make(-12, 2) == Dyadic{-3, 4});
  Group g(GroupDescriptor::bs12());
  CHECK(g.bs12_element(4, 0, 0) == g.bs12_element(1, 2, 0));
}

TEST_CASE("bs12 order sorts by n first, then q") {
  Group g(GroupDescriptor::bs12());
  GroupElement big_q = g.bs12_element(5, 0, 0);   // (5, 0)
  GroupElement small_q = g.bs12_element(0, 0, 1); // (0, 1)
  CHECK(g.less(big_q, small_q));
  CHECK(g.less(g.bs12_element(-1, -1, 0), g.bs12_element(1, -1, 0)));  // -1/2 < 1/2
  CHECK(g.less(g.bs12_element(1, -1, 0), g.bs12_element(1, 0, 0)));    // 1/2 < 1
}

TEST_CASE("free word reduction") {
  CHECK(reduce_word("xX") == "");
  CHECK(reduce_word("xyYx") == "xx");
  CHECK(reduce_word("xYyXxy") == "xy");
  CHECK(reduce_word("xyXY") == "xyXY");
  Group g(GroupDescriptor::free2());
  CHECK(g.word("xX") == g.identity());
  CHECK(g.multiply(g.word("xy"), g.word("Yx")) == g.word("xx"));
  CHECK(g.inverse(g.word("xyX")) == g.word("xYX"));
  CHECK_THROWS_AS(g.word("abc"), Error);
}

TEST_CASE("magnus expansion of the commutator") {
  const MagnusSeries& s = magnus_expand("xyXY", 2);
  CHECK(s.coefficient("") == 1);
  CHECK(s.coefficient("X") == 0);
  CHECK(s.coefficient("Y") == 0);
  CHECK(s.coefficient("XY") == 1);
  CHECK(s.coefficient("YX") == -1);
  CHECK(s.coefficient("XX") == 0);
}

TEST_CASE("free2 order decides low-degree comparisons") {
  Group g(GroupDescriptor::free2());
  GroupElement e = g.identity();
  CHECK(g.less(e, g.word("x")));
  CHECK(g.less(g.word("X"), e));
  CHECK(g.less(g.word("y"), g.word("x")));
  CHECK(g.less(g.word("X"), g.word("y")));
  // conjugation-invariance spot check: a < b implies gag^-1 vs gbg^-1 keeps order
  GroupElement a = g.word("y");
  GroupElement b = g.word("x");
  GroupElement c = g.word("xy");
  GroupElement left_a = g.multiply(c, a);
  GroupElement left_b = g.multiply(c, b);
  CHECK(g.less(left_a, left_b));
}

TEST_CASE("free2 order throws when the degree cap is too small") {
  Group coarse(GroupDescriptor::free2(2));
  // [[x,y],x] deviates from 1 only at degree 3, invisible at cap 2.
  GroupElement deep = coarse.word("xyXYxyxYXX");
  CHECK(deep != coarse.identity());
  CHECK_THROWS_AS(coarse.compare(deep, coarse.identity()), OrderUndecidedError);

  Group fine(GroupDescriptor::free2(12));
  GroupElement same = fine.word("xyXYxyxYXX");
  CHECK(fine.compare(same, fine.identity()) != Ordering::Equal);
}

TEST_CASE("kind mismatch is rejected") {
  Group zi(GroupDescriptor::integers());
  Group zh(GroupDescriptor::heisenberg());
  CHECK_THROWS_AS(zi.multiply(zi.integer(1), zh.heisenberg_element(1, 0, 0)),
                  KindMismatchError);
}

TEST_CASE("bi-invariance holds on a small integer sample") {
  Group g(GroupDescriptor::integers());
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        if (a >= b) continue;
        GroupElement ga = g.multiply(g.integer(c), g.integer(a));
        GroupElement gb = g.multiply(g.integer(c), g.integer(b));
        CHECK(g.less(ga, gb));
      }
}

TEST_CASE("bi-invariance holds on a heisenberg sample") {
  Group g(GroupDescriptor::heisenberg());
  std::vector<GroupElement> pool;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) pool.push_back(g.heisenberg_element(a, b, c));
  for (const auto& a : pool)
    for (const auto& b : pool) {
      if (!g.less(a, b)) continue;
      for (const auto& c : pool) {
        CHECK(g.less(g.multiply(c, a), g.multiply(c, b)));
        CHECK(g.less(g.multiply(a, c), g.multiply(b, c)));
      }
    }
}

TEST_CASE("describe_element renders every kind") {
  Group zi(GroupDescriptor::integers());
  CHECK(describe_element(zi.integer(-7)) == "-7");
  Group zf(GroupDescriptor::free2());
  CHECK(describe_element(zf.identity()) == "1");
  CHECK(describe_element(zf.word("xY")) == "xY");
}
