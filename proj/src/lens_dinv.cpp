#include "h2u/lens_dinv.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "h2u/errors.hpp"

namespace h2u {

std::vector<Rational> d_lens_raw(std::int64_t p, std::int64_t q) {
  if (p < 1) throw InvalidParameterError("p must be positive");
  if (p == 1) {
    if (q != 0) throw InvalidParameterError("L(1,q) requires q = 0");
    return {Rational(0)};
  }
  if (q < 1 || q >= p)
    throw InvalidParameterError("need 0 < q < p for L(" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
  if (std::gcd(p, q) != 1)
    throw NonCoprimeError("L(p,q) needs gcd(p,q) = 1");

  // Euclidean chain down to L(1,0), then evaluate the recursion bottom-up.
  std::vector<std::pair<std::int64_t, std::int64_t>> chain;
  while (p > 1) {
    chain.emplace_back(p, q);
    std::int64_t r = p % q;
    p = q;
    q = r;
  }

  std::vector<Rational> table{Rational(0)};
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    auto [pp, qq] = *it;
    std::vector<Rational> next(static_cast<std::size_t>(pp));
    Integer den = Integer(4) * pp * qq;
    for (std::int64_t j = 0; j < pp; ++j) {
      Integer n = 2 * j + 1 - pp - qq;
      next[static_cast<std::size_t>(j)] =
          Rational(n * n - Integer(pp) * qq, den) - table[static_cast<std::size_t>(j % qq)];
    }
    table = std::move(next);
  }
  return table;
}

CorrectionTable to_c1_labeling(const std::vector<Rational>& raw, std::int64_t p, std::int64_t q) {
  if (p % 2 == 0) throw EvenOrderError("c1 labeling needs odd p");
  if (p < 1) throw InvalidParameterError("p must be positive");
  if (static_cast<std::int64_t>(raw.size()) != p)
    throw InvalidParameterError("raw table size does not match p");

  // 2 is invertible mod odd p with inverse (p+1)/2.
  std::int64_t target = mod_reduce(p + q - 1, p);
  std::int64_t j0 = static_cast<std::int64_t>(
      Integer(target) * ((p + 1) / 2) % p);

  CorrectionTable out;
  out.p = p;
  out.q = mod_reduce(q, p);
  out.labeled = true;
  out.d.resize(raw.size());
  for (std::int64_t i = 0; i < p; ++i)
    out.d[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>((i + j0) % p)];

  for (std::int64_t i = 0; i < p; ++i)
    if (out.d[static_cast<std::size_t>(i)] != out.d[static_cast<std::size_t>((p - i) % p)])
      throw SymmetryFailureError("labeled d-table is not symmetric under i -> -i");
  return out;
}

CorrectionTable d_lens(const TwoBridgeLink& link) {
  auto raw = d_lens_raw(link.p, link.q);
  if (link.p % 2 != 0) return to_c1_labeling(raw, link.p, link.q);
  return {link.p, link.q, false, std::move(raw)};
}

Rational f_term(std::int64_t p, std::int64_t i) {
  if (p < 1) throw InvalidParameterError("p must be positive");
  if (i < 0 || i >= p)
    throw OutOfRangeError("label " + std::to_string(i) + " outside [0, " + std::to_string(p) + ")");
  Integer num = (i % 2 == 0) ? Integer(p - i) * (p - i) - p : Integer(i) * i - p;
  return Rational(num, Integer(4) * p);
}

}  // namespace h2u
