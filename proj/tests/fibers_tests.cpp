#include <vector>

#include "doctest.h"
#include "fibers.hpp"
#include "fixtures.hpp"
#include "types.hpp"

using glued::build_nabla;
using glued::enumerate_fiber;
using glued::Fiber;
using glued::fiber_nonempty;
using glued::graded_lex_compare;
using glued::GroupElement;
using glued::is_member;
using glued::NablaComplex;
using glued::nabla_restricted;
using glued::Semigroup;
using glued::Side;
using glued::SplitSpec;
using glued::split_fiber;
using glued::Vec;
using fixtures::vec;

namespace {

GroupElement free2(const Semigroup& s, long a, long b) {
  return s.group().element({}, vec({a, b}));
}

GroupElement free1(const Semigroup& s, long a) {
  return s.group().element({}, vec({a}));
}

std::vector<Vec> members(const Semigroup& s, long a, long b) {
  return enumerate_fiber(s, free2(s, a, b)).members;
}

}  // namespace

TEST_CASE("fibers of the eight-generator example match the hand enumeration") {
  Semigroup s = fixtures::thoma();

  // (13,13): x1*x4, y1*y4, y2*y3 — ascending lexicographic order.
  CHECK(members(s, 13, 13) ==
        std::vector<Vec>{vec({0, 0, 0, 0, 0, 1, 1, 0}), vec({0, 0, 0, 0, 1, 0, 0, 1}),
                         vec({1, 0, 0, 1, 0, 0, 0, 0})});

  // (16,16): y3*y4, y1*y2^2, y1^4.
  CHECK(members(s, 16, 16) ==
        std::vector<Vec>{vec({0, 0, 0, 0, 0, 0, 1, 1}), vec({0, 0, 0, 0, 1, 2, 0, 0}),
                         vec({0, 0, 0, 0, 4, 0, 0, 0})});

  // (18,18): y4^2, y2^3, y1*y3^2, y1^3*y2.
  CHECK(members(s, 18, 18) ==
        std::vector<Vec>{vec({0, 0, 0, 0, 0, 0, 0, 2}), vec({0, 0, 0, 0, 0, 3, 0, 0}),
                         vec({0, 0, 0, 0, 1, 0, 2, 0}), vec({0, 0, 0, 0, 3, 1, 0, 0})});

  // (10,55): x3^5, x2^2*x4^3.
  CHECK(members(s, 10, 55) ==
        std::vector<Vec>{vec({0, 0, 5, 0, 0, 0, 0, 0}), vec({0, 2, 0, 3, 0, 0, 0, 0})});

  // (15,24): x3*y2*y3, x3*y1*y4, x2^3, x1*x3*x4.
  CHECK(members(s, 15, 24) ==
        std::vector<Vec>{vec({0, 0, 1, 0, 0, 1, 1, 0}), vec({0, 0, 1, 0, 1, 0, 0, 1}),
                         vec({0, 3, 0, 0, 0, 0, 0, 0}), vec({1, 0, 1, 1, 0, 0, 0, 0})});

  // (13,52): x4^3*y2*y3, x4^3*y1*y4, x2*x3^4, x1*x4^4.
  CHECK(members(s, 13, 52) ==
        std::vector<Vec>{vec({0, 0, 0, 3, 0, 1, 1, 0}), vec({0, 0, 0, 3, 1, 0, 0, 1}),
                         vec({0, 1, 4, 0, 0, 0, 0, 0}), vec({1, 0, 0, 4, 0, 0, 0, 0})});

  // (12,12): y2^2, y1^3.  (14,14): y3^2, y1^2*y2.  (15,15): y2*y4, y1^2*y3.
  CHECK(members(s, 12, 12) ==
        std::vector<Vec>{vec({0, 0, 0, 0, 0, 2, 0, 0}), vec({0, 0, 0, 0, 3, 0, 0, 0})});
  CHECK(members(s, 14, 14) ==
        std::vector<Vec>{vec({0, 0, 0, 0, 0, 0, 2, 0}), vec({0, 0, 0, 0, 2, 1, 0, 0})});
  CHECK(members(s, 15, 15) ==
        std::vector<Vec>{vec({0, 0, 0, 0, 0, 1, 0, 1}), vec({0, 0, 0, 0, 2, 0, 1, 0})});

  // A generator degree factors only through its generator.
  CHECK(members(s, 13, 0) == std::vector<Vec>{vec({1, 0, 0, 0, 0, 0, 0, 0})});

  // Degrees outside the semigroup have empty fibers.
  CHECK(members(s, 1, 1).empty());
  CHECK(members(s, 5, 5).empty());
  CHECK_FALSE(is_member(s, free2(s, 5, 5)));
  CHECK(is_member(s, free2(s, 13, 13)));
}

TEST_CASE("component structure of the gcd complexes") {
  Semigroup s = fixtures::thoma();

  NablaComplex n13 = build_nabla(enumerate_fiber(s, free2(s, 13, 13)));
  CHECK(n13.edges.empty());
  CHECK(n13.components.size() == 3);

  NablaComplex n16 = build_nabla(enumerate_fiber(s, free2(s, 16, 16)));
  CHECK(n16.components.size() == 2);
  // y1*y2^2 and y1^4 share y1; y3*y4 is isolated and holds the smallest index.
  CHECK(n16.components[0] == std::vector<std::size_t>{0});
  CHECK(n16.components[1] == std::vector<std::size_t>{1, 2});

  NablaComplex n18 = build_nabla(enumerate_fiber(s, free2(s, 18, 18)));
  CHECK(n18.components.size() == 2);

  NablaComplex n1524 = build_nabla(enumerate_fiber(s, free2(s, 15, 24)));
  CHECK(n1524.components.size() == 2);
  // x2^3 is the only member avoiding x3.
  CHECK(n1524.components[0] == std::vector<std::size_t>{0, 1, 3});
  CHECK(n1524.components[1] == std::vector<std::size_t>{2});

  // Connected fiber: a single member.
  NablaComplex gen = build_nabla(enumerate_fiber(s, free2(s, 13, 0)));
  CHECK(gen.components.size() == 1);
  CHECK(gen.edges.empty());
}

TEST_CASE("numerical semigroup fibers") {
  Semigroup s = fixtures::numerical({4, 6, 9});
  Fiber f12 = enumerate_fiber(s, free1(s, 12));
  CHECK(f12.members == std::vector<Vec>{vec({0, 2, 0}), vec({3, 0, 0})});
  CHECK(build_nabla(f12).components.size() == 2);

  Fiber f18 = enumerate_fiber(s, free1(s, 18));
  CHECK(f18.members ==
        std::vector<Vec>{vec({0, 0, 2}), vec({0, 3, 0}), vec({3, 1, 0})});
  NablaComplex n18 = build_nabla(f18);
  CHECK(n18.components.size() == 2);
  CHECK(n18.components[0] == std::vector<std::size_t>{0});
  CHECK(n18.components[1] == std::vector<std::size_t>{1, 2});

  for (long gap : {1, 2, 3, 5, 7, 11}) {
    CHECK(enumerate_fiber(s, free1(s, gap)).members.empty());
    CHECK_FALSE(fiber_nonempty(s, free1(s, gap)));
  }
}

TEST_CASE("fiber_nonempty honors the allowed-generator mask") {
  Semigroup s = fixtures::thoma();
  GroupElement d = free2(s, 13, 13);
  std::vector<bool> left(8, false);
  std::vector<bool> right(8, false);
  for (int i = 0; i < 4; ++i) left[i] = true;
  for (int i = 4; i < 8; ++i) right[i] = true;
  CHECK(fiber_nonempty(s, d, &left));
  CHECK(fiber_nonempty(s, d, &right));

  GroupElement d2 = free2(s, 10, 55);
  CHECK(fiber_nonempty(s, d2, &left));
  CHECK_FALSE(fiber_nonempty(s, d2, &right));

  GroupElement d3 = free2(s, 18, 18);
  CHECK_FALSE(fiber_nonempty(s, d3, &left));
  CHECK(fiber_nonempty(s, d3, &right));
}

TEST_CASE("split classification of fiber members") {
  Semigroup s = fixtures::thoma();
  SplitSpec split = SplitSpec::from_left(8, {0, 1, 2, 3});

  auto f13 = enumerate_fiber(s, free2(s, 13, 13));
  auto cls = split_fiber(f13, split);
  CHECK(cls.pure_left == std::vector<std::size_t>{2});
  CHECK(cls.pure_right == std::vector<std::size_t>{0, 1});
  CHECK(cls.mixed.empty());

  auto f1524 = enumerate_fiber(s, free2(s, 15, 24));
  auto cls2 = split_fiber(f1524, split);
  CHECK(cls2.pure_left == std::vector<std::size_t>{2, 3});
  CHECK(cls2.pure_right.empty());
  CHECK(cls2.mixed == std::vector<std::size_t>{0, 1});

  NablaComplex left_only = nabla_restricted(f13, split, Side::Left);
  CHECK(left_only.fiber.members.size() == 1);
  CHECK(left_only.components.size() == 1);
  NablaComplex right_only = nabla_restricted(f13, split, Side::Right);
  CHECK(right_only.fiber.members.size() == 2);
  CHECK(right_only.components.size() == 2);
}

TEST_CASE("torsion fibers meet both sides at the glued degree") {
  Semigroup s = fixtures::torsion_example();
  GroupElement d = s.degree(vec({2, 0, 2, 0, 0, 0, 0}));
  Fiber f = enumerate_fiber(s, d);
  // Contains at least the two witnesses x1^2*x3^2 and y1*y2^2*y3.
  bool has_left = false;
  bool has_right = false;
  for (const Vec& m : f.members) {
    if (m == vec({2, 0, 2, 0, 0, 0, 0})) has_left = true;
    if (m == vec({0, 0, 0, 0, 1, 2, 1})) has_right = true;
  }
  CHECK(has_left);
  CHECK(has_right);
}

TEST_CASE("graded lex order ranks by weight first") {
  Semigroup s = fixtures::numerical({4, 6, 9});
  CHECK(graded_lex_compare(s, vec({1, 0, 0}), vec({0, 1, 0})) < 0);   // 4 < 6
  CHECK(graded_lex_compare(s, vec({0, 0, 1}), vec({2, 0, 0})) > 0);   // 9 > 8
  CHECK(graded_lex_compare(s, vec({0, 2, 0}), vec({3, 0, 0})) < 0);   // tie, lex
  CHECK(graded_lex_compare(s, vec({1, 1, 0}), vec({1, 1, 0})) == 0);
}
