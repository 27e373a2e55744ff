#include "h2u/two_bridge.hpp"

#include <numeric>
#include <string>

#include "h2u/errors.hpp"

namespace h2u {

std::int64_t mod_reduce(std::int64_t x, std::int64_t p) {
  if (p < 1) throw InvalidParameterError("modulus must be positive");
  std::int64_t r = x % p;
  if (r < 0) r += p;
  return r;
}

TwoBridgeLink normalize(std::int64_t p, std::int64_t q) {
  if (p < 1) throw InvalidParameterError("p must be positive, got " + std::to_string(p));
  if (p == 1) return {1, 0};
  std::int64_t r = mod_reduce(q, p);
  if (std::gcd(p, r) != 1)
    throw NonCoprimeError("gcd(" + std::to_string(p) + ", " + std::to_string(r) + ") != 1");
  return {p, r};
}

std::int64_t mod_inverse(std::int64_t q, std::int64_t p) {
  if (p < 1) throw InvalidParameterError("modulus must be positive");
  if (p == 1) return 0;
  std::int64_t a = mod_reduce(q, p);
  if (std::gcd(a, p) != 1)
    throw NonCoprimeError(std::to_string(q) + " is not a unit mod " + std::to_string(p));
  // extended Euclid on (a, p); x tracks the coefficient of a
  std::int64_t r0 = a, r1 = p, x0 = 1, x1 = 0;
  while (r1 != 0) {
    std::int64_t k = r0 / r1;
    std::int64_t r2 = r0 - k * r1;
    std::int64_t x2 = x0 - k * x1;
    r0 = r1; r1 = r2;
    x0 = x1; x1 = x2;
  }
  return mod_reduce(x0, p);
}

std::vector<std::int64_t> units_of(std::int64_t p) {
  if (p < 1) throw InvalidParameterError("modulus must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t u = 1; u < p; ++u)
    if (std::gcd(u, p) == 1) out.push_back(u);
  return out;
}

ContinuedFraction cf_expand(std::int64_t p, std::int64_t q) {
  if (p < 1) throw InvalidParameterError("p must be positive");
  if (p == 1 && q == 0) return {{1}};
  if (q < 1 || q >= p)
    throw InvalidParameterError("need 0 < q < p for the expansion of " +
                                std::to_string(p) + "/" + std::to_string(q));
  if (std::gcd(p, q) != 1)
    throw NonCoprimeError("gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  ContinuedFraction cf;
  while (q != 0) {
    cf.terms.push_back(p / q);
    std::int64_t r = p % q;
    p = q;
    q = r;
  }
  return cf;
}

ContinuedFraction cf_expand(const TwoBridgeLink& link) {
  return cf_expand(link.p, link.q);
}

Rational cf_eval(const ContinuedFraction& cf) {
  if (cf.terms.empty()) throw InvalidParameterError("empty continued fraction");
  Rational v = cf.terms.back();
  for (std::size_t k = cf.terms.size() - 1; k-- > 0;) {
    if (v == 0) throw DegenerateFractionError("zero tail in continued fraction");
    v = Rational(cf.terms[k]) + Rational(1) / v;
  }
  return v;
}

bool equivalent(const TwoBridgeLink& a, const TwoBridgeLink& b, bool up_to_mirror) {
  if (a.p != b.p) return false;
  if (a.p == 1) return true;
  if (b.q == a.q) return true;
  std::int64_t inv = mod_inverse(a.q, a.p);
  if (b.q == inv) return true;
  if (!up_to_mirror) return false;
  return b.q == mod_reduce(-a.q, a.p) || b.q == mod_reduce(-inv, a.p);
}

std::int64_t determinant(const TwoBridgeLink& link) { return link.p; }

}  // namespace h2u
