#include "h2u/composite.hpp"

#include <numeric>

#include "h2u/berge.hpp"
#include "h2u/errors.hpp"

namespace h2u {

namespace {

// Does S(r, s) fall in the class of S(r, t), up to inversion and, in mirror
// mode, negation?
bool fits_class(std::int64_t r, std::int64_t s, std::int64_t t, bool mirror) {
  return equivalent({r, s}, {r, mod_reduce(t, r)}, mirror);
}

std::optional<CaseAWitness> find_case_a(const TwoBridgeLink& l, const TwoBridgeLink& r,
                                        bool mirror, bool swapped) {
  if (r.p != l.q) return std::nullopt;
  if (!fits_class(r.p, r.q, l.p % l.q, mirror)) return std::nullopt;
  return CaseAWitness{swapped};
}

std::optional<CaseBWitness> find_case_b(const TwoBridgeLink& l, const TwoBridgeLink& r,
                                        bool mirror, bool swapped) {
  std::int64_t v = l.p;
  for (int eps : {+1, -1}) {
    bool q_fits = l.q == mod_reduce(eps, l.p) || (mirror && l.q == mod_reduce(-eps, l.p));
    if (!q_fits) continue;
    std::int64_t n = r.p - eps;
    for (std::int64_t a = 1; v * a <= n; ++a) {
      if (n % (v * a) != 0) continue;
      std::int64_t b = n / (v * a);
      if (std::gcd(a, b) != 1) continue;
      auto va2 = static_cast<std::int64_t>(static_cast<__int128>(v) * a % r.p * a % r.p);
      if (fits_class(r.p, r.q, va2, mirror)) return CaseBWitness{swapped, v, eps, a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(CompositeCase c) {
  switch (c) {
    case CompositeCase::CaseA: return "CaseA";
    case CompositeCase::CaseB: return "CaseB";
    case CompositeCase::None: return "None";
  }
  throw InvalidParameterError("unknown composite case");
}

CompositeVerdict composite_u2_one(const TwoBridgeLink& first, const TwoBridgeLink& second,
                                  bool up_to_mirror) {
  if (first.p < 2 || second.p < 2)
    throw TrivialSummandError("both summands must be nontrivial");

  CompositeVerdict v;
  v.case_a = find_case_a(first, second, up_to_mirror, false);
  if (!v.case_a) v.case_a = find_case_a(second, first, up_to_mirror, true);
  v.case_b = find_case_b(first, second, up_to_mirror, false);
  if (!v.case_b) v.case_b = find_case_b(second, first, up_to_mirror, true);

  v.u2_is_one = v.case_a.has_value() || v.case_b.has_value();
  v.kind = v.case_a ? CompositeCase::CaseA
                    : (v.case_b ? CompositeCase::CaseB : CompositeCase::None);
  return v;
}

std::int64_t u2_upper_bound(const TwoBridgeLink& link) {
  if (link.p == 1) return 0;
  auto cf = cf_expand(link);
  auto n = static_cast<std::int64_t>(cf.terms.size());

  // Walk suffixes right to left; tail values are p_i/q_i with p_i <= p.
  std::vector<std::int64_t> ub(cf.terms.size());
  Rational tail;
  for (std::int64_t i = n - 1; i >= 0; --i) {
    auto idx = static_cast<std::size_t>(i);
    tail = (i == n - 1) ? Rational(cf.terms[idx])
                        : Rational(cf.terms[idx]) + Rational(1) / tail;
    std::int64_t pi = static_cast<std::int64_t>(numerator(tail));
    std::int64_t qi = static_cast<std::int64_t>(denominator(tail));
    std::int64_t base;
    if (pi == 1) {
      base = 0;
    } else if (i == n - 1) {
      base = (cf.terms[idx] >= -1 && cf.terms[idx] <= 1) ? 0 : 1;
    } else {
      base = u2_is_one_2bridge(normalize(pi, qi)).u2_is_one ? 1 : 1 + ub[idx + 1];
    }
    ub[idx] = (i == n - 1) ? base : std::min(base, 1 + ub[idx + 1]);
  }
  return ub[0];
}

U2Classification u2_classify(const TwoBridgeLink& link) {
  U2Classification c;
  c.link = link;
  if (link.p == 1) {
    c.lower = c.upper = 0;
    c.exact = 0;
    c.provenance = {"unknot"};
    return c;
  }
  auto answer = u2_is_one_2bridge(link);
  if (answer.u2_is_one) {
    c.lower = c.upper = 1;
    c.exact = 1;
    c.provenance = {"berge-realizable"};
    return c;
  }
  c.lower = 2;
  c.upper = u2_upper_bound(link);
  c.provenance = {"not-berge-realizable", "suffix-bound"};
  if (c.upper < c.lower)
    throw SymmetryFailureError("upper bound fell below the realization lower bound");
  if (c.lower == c.upper) c.exact = c.lower;
  return c;
}

}  // namespace h2u
