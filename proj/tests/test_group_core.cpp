#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "vilenkin/radix.hpp"

using namespace vilenkin;

namespace {

// independent greedy mixed-radix division oracle
std::vector<int> greedy_digits(std::int64_t n, const RadixSequence& r) {
  std::vector<int> d(static_cast<std::size_t>(r.depth()), 0);
  for (int j = r.depth() - 1; j >= 0; --j) {
    d[static_cast<std::size_t>(j)] = static_cast<int>(n / r.product(j));
    n %= r.product(j);
  }
  return d;
}

// independent run-count oracle for the digit variation
std::int64_t count_runs(std::int64_t n, const RadixSequence& r) {
  auto e = expand_index(n, r);
  std::int64_t runs = 0;
  bool in_run = false;
  for (int j = 0; j < r.depth(); ++j) {
    bool nz = e.digits[static_cast<std::size_t>(j)] != 0;
    if (nz && !in_run) ++runs;
    in_run = nz;
  }
  return runs;
}

}  // namespace

TEST_CASE("radix parsing") {
  RadixSequence r = RadixSequence::parse("2,3,4,3");
  CHECK(r.depth() == 4);
  CHECK(r.radix(2) == 4);
  CHECK(r.product(4) == 72);
  CHECK(r.lambda() == 4);

  RadixSequence dyadic = RadixSequence::parse("2^10");
  CHECK(dyadic.depth() == 10);
  CHECK(dyadic.product(10) == 1024);

  RadixSequence mixed = RadixSequence::parse("2^3,3^2");
  CHECK(mixed.depth() == 5);
  CHECK(mixed.product(5) == 8 * 9);

  CHECK_THROWS_AS(RadixSequence::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(RadixSequence::parse("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(RadixSequence::parse("2^25"), std::invalid_argument);  // M_N cap
}

TEST_CASE("expand_index matches the greedy division oracle") {
  RadixSequence r = RadixSequence::parse("2,3,4");
  auto e = expand_index(17, r);
  CHECK(e.digits == std::vector<int>{1, 2, 2});
  CHECK(e.digits == greedy_digits(17, r));

  RadixSequence dy = RadixSequence::parse("2^6");
  CHECK(expand_index(5, dy).digits == std::vector<int>{1, 0, 1, 0, 0, 0});
  CHECK(expand_index(0, dy).digits == std::vector<int>(6, 0));

  for (std::int64_t n = 0; n < r.product(3); ++n)
    CHECK(expand_index(n, r).digits == greedy_digits(n, r));
  CHECK_THROWS_AS(expand_index(24, r), std::out_of_range);
}

TEST_CASE("compose_index inverts expand_index") {
  for (const char* spec : {"2^8", "2,3,4,3,2", "3^5"}) {
    RadixSequence r = RadixSequence::parse(spec);
    for (std::int64_t n = 0; n < r.product(r.depth()); ++n)
      CHECK(compose_index(expand_index(n, r).digits, r) == n);
  }
  RadixSequence r = RadixSequence::parse("2,3,4");
  CHECK(compose_index(std::vector<int>{1, 2, 2}, r) == 17);
  CHECK(compose_index(std::vector<int>{0, 0, 0}, r) == 0);
  CHECK_THROWS_AS(compose_index(std::vector<int>{2, 0, 0}, r), std::domain_error);
}

TEST_CASE("lead_trail structural indices") {
  RadixSequence dy = RadixSequence::parse("2^8");
  auto lt = lead_trail(5, dy);
  CHECK(lt.lead == 0);
  CHECK(lt.trail == 2);
  CHECK(lt.spread == 2);

  RadixSequence r = RadixSequence::parse("2,3,4");
  lt = lead_trail(17, r);
  CHECK(lt.lead == 0);
  CHECK(lt.trail == 2);
  CHECK(lt.spread == 2);

  for (int k = 0; k < 8; ++k) {
    auto single = lead_trail(dy.product(k), dy);
    CHECK(single.lead == k);
    CHECK(single.trail == k);
    CHECK(single.spread == 0);
  }
  for (std::int64_t n = 1; n < 256; ++n) {
    auto bounds = lead_trail(n, dy);
    CHECK(dy.product(bounds.trail) <= n);
    CHECK(n < dy.product(bounds.trail + 1));
  }
  CHECK_THROWS_AS(lead_trail(0, dy), std::domain_error);
}

TEST_CASE("variation counts nonzero-digit runs twice") {
  RadixSequence dy = RadixSequence::parse("2^10");
  CHECK(variation(5, dy).v == 4);   // runs {0}, {2}
  CHECK(variation(5, dy).v_star == 0);
  CHECK(variation(3, dy).v == 2);   // single run {0,1}
  CHECK(variation(1, dy).v == 2);
  for (int k = 1; k < 10; ++k) CHECK(variation(dy.product(k), dy).v == 2);

  for (std::int64_t n = 1; n < 1024; ++n)
    CHECK(variation(n, dy).v == 2 * count_runs(n, dy));

  // v* literal: |(-d mod m) - 1| per nonzero digit; m=4 digit 1 scores 2
  RadixSequence r = RadixSequence::parse("2,3,4,3,2");
  std::int64_t n_digit1_at2 = r.product(2);  // digits (0,0,1,0,0)
  CHECK(variation(n_digit1_at2, r).v == 2);
  CHECK(variation(n_digit1_at2, r).v_star == 2);
  std::int64_t n_digit3_at2 = 3 * r.product(2);
  CHECK(variation(n_digit3_at2, r).v_star == 0);
  CHECK_THROWS_AS(variation(0, r), std::domain_error);
}

TEST_CASE("point arithmetic is a group") {
  RadixSequence r = RadixSequence::parse("2,3");
  GroupPoint x{{1, 2}}, y{{0, 2}};
  CHECK(point_sub(x, y, r).digits == std::vector<int>{1, 0});

  RadixSequence big = RadixSequence::parse("2,3,4,3,2");
  std::int64_t grid = big.product(5);
  GroupPoint zero{std::vector<int>(5, 0)};
  for (std::int64_t a = 0; a < grid; a += 7) {
    GroupPoint xa = point_from_index(a, 5, big);
    CHECK(index_of_point(point_add(xa, zero, big), big) == a);
    CHECK(index_of_point(point_sub(xa, xa, big), big) == 0);
    for (std::int64_t b = 0; b < grid; b += 11) {
      GroupPoint xb = point_from_index(b, 5, big);
      CHECK(index_of_point(point_sub(point_add(xa, xb, big), xb, big), big) == a);
    }
  }
  GroupPoint short_point{{1}};
  CHECK_THROWS_AS(point_add(x, short_point, r), std::invalid_argument);
}

TEST_CASE("basis points") {
  RadixSequence dy = RadixSequence::parse("2^3");
  CHECK(basis_point(0, 3, dy).digits == std::vector<int>{1, 0, 0});
  RadixSequence r = RadixSequence::parse("2,3,4");
  CHECK(basis_point(2, 3, r).digits == std::vector<int>{0, 0, 1});
  CHECK_THROWS_AS(basis_point(3, 3, r), std::out_of_range);
}

TEST_CASE("coset classification") {
  RadixSequence dy = RadixSequence::parse("2^3");
  GroupPoint zero{{0, 0, 0}};
  CHECK(classify_coset(zero, 3, dy).inside);

  GroupPoint a{{1, 0, 0}};
  auto ca = classify_coset(a, 3, dy);
  CHECK(ca.s == 0);
  CHECK(ca.k == 0);
  CHECK(ca.l == 3);

  GroupPoint b{{1, 0, 1}};
  auto cb = classify_coset(b, 3, dy);
  CHECK(cb.k == 0);
  CHECK(cb.l == 2);

  // partition: every nonzero point lands in exactly one cell
  std::int64_t outside = 0;
  for (std::int64_t t = 1; t < 8; ++t) {
    auto cls = classify_coset(point_from_index(t, 3, dy), 3, dy);
    CHECK_FALSE(cls.inside);
    ++outside;
  }
  CHECK(outside == 7);
}

TEST_CASE("special q indices") {
  RadixSequence dy = RadixSequence::parse("2^10");
  CHECK(special_index_q(0, dy) == 1);
  CHECK(special_index_q(1, dy) == 5);
  CHECK(special_index_q(2, dy) == 21);
  CHECK(special_index_q(3, dy) == 85);
  CHECK_THROWS_AS(special_index_q(5, dy), std::out_of_range);

  RadixSequence r = RadixSequence::parse("2,3,4,3,2");
  CHECK(special_index_q(1, r) == 1 + 6);
  CHECK(special_index_q(2, r) == 1 + 6 + 72);
}
