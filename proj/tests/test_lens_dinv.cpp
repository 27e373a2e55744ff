#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "fixtures.hpp"
#include "h2u/errors.hpp"
#include "h2u/lens_dinv.hpp"
#include "h2u/two_bridge.hpp"

using namespace h2u;

TEST_CASE("L(23,3) labeled table matches the frozen values") {
  auto t = d_lens(TwoBridgeLink{23, 3});
  REQUIRE(t.labeled);
  REQUIRE(t.d.size() == 23);
  CHECK(t.p == 23);
  CHECK(t.q == 3);
  CHECK(t.d == fixtures::rationals(fixtures::kD23));
}

TEST_CASE("the (23,3) labeling shifts the raw table by j0 = 1") {
  auto raw = d_lens_raw(23, 3);
  auto t = d_lens(TwoBridgeLink{23, 3});
  REQUIRE(raw.size() == 23);
  for (std::int64_t i = 0; i < 23; ++i)
    CHECK(t.d[static_cast<std::size_t>(i)] == raw[static_cast<std::size_t>((i + 1) % 23)]);
}

TEST_CASE("f(23, i) matches the frozen values") {
  auto expected = fixtures::rationals(fixtures::kF23);
  for (std::int64_t i = 0; i < 23; ++i)
    CHECK(f_term(23, i) == expected[static_cast<std::size_t>(i)]);
}

TEST_CASE("small labeled tables") {
  using fixtures::frac;
  CHECK(d_lens(TwoBridgeLink{3, 1}).d ==
        std::vector<Rational>{frac(1, 2), frac(-1, 6), frac(-1, 6)});
  CHECK(d_lens(TwoBridgeLink{5, 2}).d ==
        std::vector<Rational>{frac(0), frac(-2, 5), frac(2, 5), frac(2, 5), frac(-2, 5)});
  CHECK(d_lens(TwoBridgeLink{5, 3}).d ==
        std::vector<Rational>{frac(0), frac(2, 5), frac(-2, 5), frac(-2, 5), frac(2, 5)});
  CHECK(d_lens(TwoBridgeLink{5, 1}).d ==
        std::vector<Rational>{frac(1), frac(1, 5), frac(-1, 5), frac(-1, 5), frac(1, 5)});

  auto unknot = d_lens(TwoBridgeLink{1, 0});
  CHECK(unknot.labeled);
  CHECK(unknot.d == std::vector<Rational>{frac(0)});
}

TEST_CASE("even order falls back to the raw table") {
  using fixtures::frac;
  auto t = d_lens(TwoBridgeLink{4, 1});
  CHECK_FALSE(t.labeled);
  CHECK(t.d == std::vector<Rational>{frac(3, 4), frac(0), frac(-1, 4), frac(0)});
  CHECK(d_lens_raw(4, 1) == t.d);
  CHECK_THROWS_AS(to_c1_labeling(t.d, 4, 1), EvenOrderError);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(d_lens_raw(0, 1), InvalidParameterError);
  CHECK_THROWS_AS(d_lens_raw(1, 1), InvalidParameterError);
  CHECK_THROWS_AS(d_lens_raw(5, 0), InvalidParameterError);
  CHECK_THROWS_AS(d_lens_raw(5, 5), InvalidParameterError);
  CHECK_THROWS_AS(d_lens_raw(24, 6), NonCoprimeError);
  CHECK_THROWS_AS(to_c1_labeling(std::vector<Rational>(4, Rational(0)), 5, 2),
                  InvalidParameterError);

  CHECK_THROWS_AS(f_term(23, -1), OutOfRangeError);
  CHECK_THROWS_AS(f_term(23, 23), OutOfRangeError);
  CHECK_THROWS_AS(f_term(0, 0), InvalidParameterError);
  CHECK(f_term(1, 0) == Rational(0));
}

TEST_CASE("labeled symmetry d(i) = d(-i) and 4pq-integrality, odd p <= 199") {
  for (std::int64_t p = 3; p <= 199; p += 2)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto t = d_lens(TwoBridgeLink{p, q});
      REQUIRE(t.labeled);
      REQUIRE(static_cast<std::int64_t>(t.d.size()) == p);
      bool symmetric = true, integral = true;
      Rational scale(Integer(4) * p * q);
      for (std::int64_t i = 0; i < p; ++i) {
        if (t.d[static_cast<std::size_t>(i)] != t.d[static_cast<std::size_t>((p - i) % p)])
          symmetric = false;
        if (!is_integer(t.d[static_cast<std::size_t>(i)] * scale)) integral = false;
      }
      CHECK(symmetric);
      CHECK(integral);
    }
}

TEST_CASE("raw tables are 4pq-integral for even p as well") {
  for (std::int64_t p = 2; p <= 100; p += 2)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto raw = d_lens_raw(p, q);
      bool integral = true;
      Rational scale(Integer(4) * p * q);
      for (const auto& r : raw)
        if (!is_integer(r * scale)) integral = false;
      CHECK(integral);
    }
}

TEST_CASE("orientation reversal negates the labeled table, odd p <= 99") {
  for (std::int64_t p = 3; p <= 99; p += 2)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto t = d_lens(TwoBridgeLink{p, q});
      auto m = d_lens(TwoBridgeLink{p, p - q});
      bool negated = true;
      for (std::int64_t i = 0; i < p; ++i)
        if (m.d[static_cast<std::size_t>(i)] != -t.d[static_cast<std::size_t>(i)])
          negated = false;
      CHECK(negated);
    }
}

TEST_CASE("q and q^{-1} give the same table up to a unit relabeling, odd p <= 99") {
  for (std::int64_t p = 3; p <= 99; p += 2)
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      auto t = d_lens(TwoBridgeLink{p, q});
      auto ti = d_lens(TwoBridgeLink{p, mod_inverse(q, p)});

      auto a = t.d, b = ti.d;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);

      bool unit_found = false;
      for (std::int64_t u = 1; u < p && !unit_found; ++u) {
        if (std::gcd(u, p) != 1) continue;
        bool matches = true;
        for (std::int64_t i = 0; i < p && matches; ++i)
          if (ti.d[static_cast<std::size_t>(u * i % p)] != t.d[static_cast<std::size_t>(i)])
            matches = false;
        unit_found = matches;
      }
      CHECK(unit_found);
    }
}
