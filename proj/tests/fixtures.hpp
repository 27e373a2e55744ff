#pragma once

// Frozen reference values for L(23,3) / S(23,3), kept separate from the
// library's own embedded copies so a regression in the recursion or the
// labeling cannot hide behind shared constants.

#include <cstdint>
#include <utility>
#include <vector>

#include "h2u/rational.hpp"

namespace fixtures {

inline h2u::Rational frac(long long n, long long d = 1) {
  return h2u::Rational(h2u::Integer(n), h2u::Integer(d));
}

// d-invariants of L(23,3) in the c1 labeling, i = 0..22.
inline const std::vector<std::pair<long long, long long>> kD23 = {
    {3, 2},    {85, 46},  {41, 46},  {29, 46},  {49, 46},  {9, 46},
    {1, 46},   {25, 46},  {-11, 46}, {-15, 46}, {13, 46},  {-19, 46},
    {-19, 46}, {13, 46},  {-15, 46}, {-11, 46}, {25, 46},  {1, 46},
    {9, 46},   {49, 46},  {29, 46},  {41, 46},  {85, 46}};

// f(23, i), i = 0..22.
inline const std::vector<std::pair<long long, long long>> kF23 = {
    {11, 2},   {-11, 46}, {209, 46}, {-7, 46},  {169, 46}, {1, 46},
    {133, 46}, {13, 46},  {101, 46}, {29, 46},  {73, 46},  {49, 46},
    {49, 46},  {73, 46},  {29, 46},  {101, 46}, {13, 46},  {133, 46},
    {1, 46},   {169, 46}, {-7, 46},  {209, 46}, {-11, 46}};

// I_{-1,8}(i) = I_{-1,15}(i) for L(23,3), i = 0..22.
inline const std::vector<long long> kI23 = {4, 0, 4, -2, 4, 0, 2, 0, 2, 0, 2, 0,
                                            0, 2, 0, 2, 0, 2, 0, 4, -2, 4, 0};

inline std::vector<h2u::Rational> rationals(
    const std::vector<std::pair<long long, long long>>& v) {
  std::vector<h2u::Rational> out;
  out.reserve(v.size());
  for (auto [n, d] : v) out.push_back(frac(n, d));
  return out;
}

}  // namespace fixtures
