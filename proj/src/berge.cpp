#include "h2u/berge.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "h2u/errors.hpp"

namespace h2u {

namespace {

using i128 = __int128;

i128 mod128(i128 x, i128 m) {
  i128 r = x % m;
  if (r < 0) r += m;
  return r;
}

i128 isqrt128(i128 n) {
  if (n < 0) return -1;
  i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Divisors in ascending order; 0 is treated as having the single divisor 1
// (only reachable as k+epsilon = 0 at k = 1).
std::vector<std::int64_t> divisors_of(std::int64_t n) {
  if (n == 0) return {1};
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// alpha = i*k + sign (mod k^2).  Solutions with a fixed sign form one residue
// class i0 (mod k) with i0 = ((alpha - sign) mod k^2)/k, so only i0 needs a
// gcd test; the smallest valid (i, sign) is reported, + preferred on ties.
std::optional<FamilyIParams> check_family_I(i128 am, std::int64_t k) {
  i128 m = static_cast<i128>(k) * k;
  std::optional<FamilyIParams> best;
  for (int sign : {+1, -1}) {
    i128 a = mod128(am - sign, m);
    if (a % k != 0) continue;
    std::int64_t i0 = static_cast<std::int64_t>(a / k);
    std::int64_t g = std::gcd(i0, k);
    if (g != 1 && g != 2) continue;
    if (!best || i0 < best->i) best = FamilyIParams{i0, sign, g};
  }
  return best;
}

std::optional<FamilyEpsDParams> check_family_II(i128 am, std::int64_t k) {
  i128 m = static_cast<i128>(k) * k;
  for (int eps : {+1, -1}) {
    std::int64_t n = k - eps;
    for (std::int64_t d : divisors_of(n)) {
      if ((n / d) % 2 == 0) continue;
      i128 val = mod128(static_cast<i128>(2 * k + eps) * d, m);
      for (int outer : {+1, -1})
        if (mod128(am - outer * val, m) == 0) return FamilyEpsDParams{eps, d, outer};
    }
  }
  return std::nullopt;
}

std::optional<FamilyEpsDParams> check_family_III(i128 am, std::int64_t k) {
  i128 m = static_cast<i128>(k) * k;
  for (int eps : {+1, -1}) {
    for (std::int64_t d : divisors_of(2 * k - eps)) {
      i128 val = mod128(static_cast<i128>(k + eps) * d, m);
      for (int outer : {+1, -1})
        if (mod128(am - outer * val, m) == 0) return FamilyEpsDParams{eps, d, outer};
    }
  }
  return std::nullopt;
}

std::optional<FamilyEpsDParams> check_family_IV(i128 am, std::int64_t k) {
  i128 m = static_cast<i128>(k) * k;
  for (int eps : {+1, -1}) {
    for (std::int64_t d : divisors_of(k + eps)) {
      if (d % 2 == 0) continue;
      i128 val = mod128(static_cast<i128>(k + eps) * d, m);
      for (int outer : {+1, -1})
        if (mod128(am - outer * val, m) == 0) return FamilyEpsDParams{eps, d, outer};
    }
  }
  return std::nullopt;
}

std::optional<FamilyVParams> check_family_V(std::int64_t alpha, std::int64_t k) {
  for (int s1 : {+1, -1})
    for (int s2 : {+1, -1})
      if (mod128(static_cast<i128>(k) * k + static_cast<i128>(s1) * k + s2, alpha) == 0)
        return FamilyVParams{s1, s2};
  return std::nullopt;
}

// Families VI and VII exist only when 88*alpha - 7 is a perfect square; the
// root determines j, and k is derived from it.
void append_quadratic(std::int64_t alpha, std::int64_t beta, std::int64_t kmax,
                      std::vector<BergeWitness>& out) {
  i128 disc = static_cast<i128>(88) * alpha - 7;
  i128 s = isqrt128(disc);
  if (s * s != disc) return;
  struct Shape {
    BergeFamily fam;
    std::int64_t lin, con, koff;
  };
  for (auto [fam, lin, con, koff] : {Shape{BergeFamily::VI, 9, 1, 2},
                                     Shape{BergeFamily::VII, 13, 2, 3}}) {
    for (int sgn : {+1, -1}) {
      i128 num = -lin + sgn * s;
      if (mod128(num, 44) != 0) continue;
      i128 j = num / 44;
      if (22 * j * j + lin * j + con != alpha) continue;
      i128 k = 11 * j + koff;
      if (k < 0) k = -k;
      k = mod128(k, alpha);
      if (k == 0) k = alpha;
      if (k > kmax) continue;
      i128 ksq = mod128(k * k, alpha);
      for (int ks : {+1, -1})
        if (mod128(beta - ks * ksq, alpha) == 0)
          out.push_back({fam, static_cast<std::int64_t>(k), ks,
                         FamilyQuadraticParams{static_cast<std::int64_t>(j)}});
    }
  }
}

}  // namespace

std::string to_string(BergeFamily f) {
  switch (f) {
    case BergeFamily::I: return "I";
    case BergeFamily::II: return "II";
    case BergeFamily::III: return "III";
    case BergeFamily::IV: return "IV";
    case BergeFamily::V: return "V";
    case BergeFamily::VI: return "VI";
    case BergeFamily::VII: return "VII";
  }
  throw InvalidParameterError("unknown family");
}

std::vector<BergeWitness> find_berge_witnesses(std::int64_t alpha, std::int64_t beta,
                                               std::optional<std::int64_t> k_max) {
  if (alpha < 2) throw InvalidParameterError("alpha must be at least 2");
  beta = mod_reduce(beta, alpha);
  if (std::gcd(alpha, beta) != 1)
    throw NonCoprimeError("beta must be a unit mod alpha");
  std::int64_t kmax = k_max.value_or(alpha);
  if (kmax < 1) throw InvalidParameterError("k_max must be positive");

  std::vector<BergeWitness> out;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    i128 m = static_cast<i128>(k) * k;
    i128 am = mod128(alpha, m);
    i128 ksq = mod128(m, alpha);
    for (int ks : {+1, -1}) {
      if (mod128(beta - ks * ksq, alpha) != 0) continue;
      if (auto p = check_family_I(am, k)) out.push_back({BergeFamily::I, k, ks, *p});
      if (auto p = check_family_II(am, k)) out.push_back({BergeFamily::II, k, ks, *p});
      if (auto p = check_family_III(am, k)) out.push_back({BergeFamily::III, k, ks, *p});
      if (auto p = check_family_IV(am, k)) out.push_back({BergeFamily::IV, k, ks, *p});
      if (auto p = check_family_V(alpha, k)) out.push_back({BergeFamily::V, k, ks, *p});
    }
  }
  append_quadratic(alpha, beta, kmax, out);
  std::stable_sort(out.begin(), out.end(), [](const BergeWitness& a, const BergeWitness& b) {
    if (a.k != b.k) return a.k < b.k;
    return static_cast<int>(a.family) < static_cast<int>(b.family);
  });
  return out;
}

std::optional<FamilyIParams> family_I_condition(std::int64_t alpha, std::int64_t k) {
  if (alpha < 1 || k < 1) throw InvalidParameterError("alpha and k must be positive");
  return check_family_I(mod128(alpha, static_cast<i128>(k) * k), k);
}

bool verify_witness(const BergeWitness& w, std::int64_t alpha, std::int64_t beta) {
  if (alpha < 2 || w.k < 1) return false;
  beta = mod_reduce(beta, alpha);
  if (std::gcd(alpha, beta) != 1) return false;
  if (w.ksq_sign != 1 && w.ksq_sign != -1) return false;
  std::int64_t k = w.k;
  i128 m = static_cast<i128>(k) * k;
  if (mod128(beta - w.ksq_sign * mod128(m, alpha), alpha) != 0) return false;
  i128 am = mod128(alpha, m);

  switch (w.family) {
    case BergeFamily::I: {
      auto* p = std::get_if<FamilyIParams>(&w.params);
      if (!p || p->i < 0 || static_cast<i128>(p->i) >= m) return false;
      if (p->sign != 1 && p->sign != -1) return false;
      std::int64_t g = std::gcd(p->i, k);
      if (g != p->gcd_value || (g != 1 && g != 2)) return false;
      return mod128(am - (static_cast<i128>(p->i) * k + p->sign), m) == 0;
    }
    case BergeFamily::II: {
      auto* p = std::get_if<FamilyEpsDParams>(&w.params);
      if (!p || p->d < 1 || (p->epsilon != 1 && p->epsilon != -1)) return false;
      if (p->outer_sign != 1 && p->outer_sign != -1) return false;
      std::int64_t n = k - p->epsilon;
      if (n % p->d != 0 || ((n / p->d) % 2) == 0) return false;
      i128 val = static_cast<i128>(2 * k + p->epsilon) * p->d;
      return mod128(am - p->outer_sign * val, m) == 0;
    }
    case BergeFamily::III: {
      auto* p = std::get_if<FamilyEpsDParams>(&w.params);
      if (!p || p->d < 1 || (p->epsilon != 1 && p->epsilon != -1)) return false;
      if (p->outer_sign != 1 && p->outer_sign != -1) return false;
      if ((2 * k - p->epsilon) % p->d != 0) return false;
      i128 val = static_cast<i128>(k + p->epsilon) * p->d;
      return mod128(am - p->outer_sign * val, m) == 0;
    }
    case BergeFamily::IV: {
      auto* p = std::get_if<FamilyEpsDParams>(&w.params);
      if (!p || p->d < 1 || (p->epsilon != 1 && p->epsilon != -1)) return false;
      if (p->outer_sign != 1 && p->outer_sign != -1) return false;
      if (p->d % 2 == 0 || (k + p->epsilon) % p->d != 0) return false;
      i128 val = static_cast<i128>(k + p->epsilon) * p->d;
      return mod128(am - p->outer_sign * val, m) == 0;
    }
    case BergeFamily::V: {
      auto* p = std::get_if<FamilyVParams>(&w.params);
      if (!p || (p->sign1 != 1 && p->sign1 != -1) || (p->sign2 != 1 && p->sign2 != -1))
        return false;
      return mod128(m + static_cast<i128>(p->sign1) * k + p->sign2, alpha) == 0;
    }
    case BergeFamily::VI:
    case BergeFamily::VII: {
      auto* p = std::get_if<FamilyQuadraticParams>(&w.params);
      if (!p) return false;
      bool six = w.family == BergeFamily::VI;
      i128 j = p->j;
      if (22 * j * j + (six ? 9 : 13) * j + (six ? 1 : 2) != alpha) return false;
      i128 kk = 11 * j + (six ? 2 : 3);
      if (kk < 0) kk = -kk;
      kk = mod128(kk, alpha);
      if (kk == 0) kk = alpha;
      return kk == k;
    }
  }
  return false;
}

BergeAnswer u2_is_one_2bridge(const TwoBridgeLink& link, std::optional<std::int64_t> k_max) {
  if (link.p < 2)
    throw InvalidParameterError("realization test needs determinant at least 2");
  auto ws = find_berge_witnesses(link.p, link.q, k_max);
  return {!ws.empty(), std::move(ws)};
}

}  // namespace h2u
