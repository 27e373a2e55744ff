#include "h2u/selftest.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "h2u/berge.hpp"
#include "h2u/catalog.hpp"
#include "h2u/cli.hpp"
#include "h2u/composite.hpp"
#include "h2u/lens_dinv.hpp"
#include "h2u/obstruction.hpp"
#include "h2u/two_bridge.hpp"

namespace h2u {

namespace {

struct Frac {
  long long n, d;
};

// S(23,3) fixtures, as printed in the worked example.
constexpr Frac kD23[] = {{3, 2},    {85, 46},  {41, 46},  {29, 46}, {49, 46},  {9, 46},
                         {1, 46},   {25, 46},  {-11, 46}, {-15, 46}, {13, 46}, {-19, 46},
                         {-19, 46}, {13, 46},  {-15, 46}, {-11, 46}, {25, 46}, {1, 46},
                         {9, 46},   {49, 46},  {29, 46},  {41, 46},  {85, 46}};
constexpr Frac kF23[] = {{11, 2},   {-11, 46}, {209, 46}, {-7, 46},  {169, 46}, {1, 46},
                         {133, 46}, {13, 46},  {101, 46}, {29, 46},  {73, 46},  {49, 46},
                         {49, 46},  {73, 46},  {29, 46},  {101, 46}, {13, 46},  {133, 46},
                         {1, 46},   {169, 46}, {-7, 46},  {209, 46}, {-11, 46}};
constexpr long long kI23[] = {4, 0, 4, -2, 4, 0, 2, 0, 2, 0, 2, 0,
                              0, 2, 0, 2, 0, 2, 0, 4, -2, 4, 0};

std::vector<Rational> fracs(const Frac* a, std::size_t n) {
  std::vector<Rational> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Rational(a[i].n, a[i].d);
  return v;
}

bool has_epsd_witness(const std::vector<BergeWitness>& ws, BergeFamily fam, std::int64_t k,
                      int eps, std::int64_t d) {
  for (const auto& w : ws) {
    if (w.family != fam || w.k != k) continue;
    const auto* p = std::get_if<FamilyEpsDParams>(&w.params);
    if (p && p->epsilon == eps && p->d == d) return true;
  }
  return false;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

}  // namespace

int run_selftest(std::ostream& out) {
  int idx = 0, fails = 0;
  auto check = [&](bool ok, const std::string& what) {
    ++idx;
    out << (ok ? "ok " : "FAIL ") << idx << " - " << what << "\n";
    if (!ok) ++fails;
  };

  check(normalize(45, 64) == TwoBridgeLink{45, 19}, "normalize(45,64) = (45,19)");
  check(determinant(normalize(43, 25)) == 43 && determinant(normalize(23, 3)) == 23,
        "determinants of S(43,25) and S(23,3)");

  const auto d23 = fracs(kD23, 23);
  const auto link23 = normalize(23, 3);
  const auto raw23 = d_lens_raw(23, 3);
  const auto table23 = d_lens(link23);

  {
    auto a = raw23, b = d23;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    check(a == b, "raw d-table of L(23,3) matches the printed multiset");
  }
  check(table23.labeled && table23.d == d23, "labeled d-table of L(23,3), all 23 entries");
  {
    bool ok = true;
    for (int i = 0; i < 23; ++i) ok = ok && table23.d[i] == raw23[(i + 1) % 23];
    check(ok, "c1 labeling of L(23,3) is the raw table shifted by j0 = 1");
  }
  check(table23.d[11] == Rational(-19, 46) && table23.d[12] == Rational(-19, 46),
        "d(11) = d(12) = -19/46");
  {
    bool ok = true;
    for (int i = 0; i < 23; ++i) ok = ok && f_term(23, i) == Rational(kF23[i].n, kF23[i].d);
    check(ok, "f(23,i) table, all 23 entries");
  }

  check(has_epsd_witness(find_berge_witnesses(43, 25), BergeFamily::II, 5, -1, 2),
        "witnesses of (43,25) contain family II, k=5, eps=-1, d=2");
  check(has_epsd_witness(find_berge_witnesses(55, 34), BergeFamily::III, 12, -1, 5),
        "witnesses of (55,34) contain family III, k=12, eps=-1, d=5");
  check(u2_is_one_2bridge(normalize(43, 25)).u2_is_one, "S(43,25) is realizable");
  {
    auto a = u2_is_one_2bridge(normalize(47, 34));
    check(a.u2_is_one && has_epsd_witness(a.witnesses, BergeFamily::II, 9, -1, 2),
          "S(47,34) is realizable via family II, k=9, eps=-1, d=2");
  }

  {
    std::vector<Rational> iref(23);
    for (int i = 0; i < 23; ++i) iref[i] = Rational(kI23[i]);
    check(i_sequence(table23, -1, 8) == iref && i_sequence(table23, -1, 15) == iref,
          "I sequences for (eps=-1, u=8) and (eps=-1, u=15)");
  }
  {
    bool ok = true;
    for (int eps : {+1, -1})
      for (std::int64_t u : units_of(23))
        ok = ok && i_sequence(table23, eps, u)[0] == Rational(eps * 3 + 11, 2);
    check(ok, "I(0) = (eps*3 + 11)/2 for every (eps, u)");
  }
  {
    auto rep = matching_exists(table23);
    std::vector<std::pair<int, std::int64_t>> passing;
    bool entries_ok = true;
    for (const auto& d : rep.diagnostics) {
      if (d.first_failure != FailureKind::Negative) continue;
      passing.emplace_back(d.epsilon, d.u);
      entries_ok = entries_ok && d.failure_index == 3 && d.I[3] == Rational(-2) &&
                   d.I[20] == Rational(-2);
    }
    std::vector<std::pair<int, std::int64_t>> expected{{-1, 8}, {-1, 15}};
    check(!rep.feasible && rep.feasible_pairs.empty() && passing == expected && entries_ok,
          "matching for L(23,3): infeasible, parity-passing pairs (-1,8), (-1,15) fail at -2");
  }

  check(transfer_obstruction(link23, TransferAssumption::NegToPos).conclusion ==
            TransferConclusion::U2AtLeastTwo,
        "transfer under neg-to-pos: u2 >= 2");
  check(transfer_obstruction(link23, TransferAssumption::Amphicheiral).conclusion ==
            TransferConclusion::U2AtLeastTwo,
        "transfer under amphicheiral: u2 >= 2");

  {
    auto v = composite_u2_one(normalize(5, 2), normalize(2, 1));
    check(v.u2_is_one && v.kind == CompositeCase::CaseA,
          "composite S(5,2) # S(2,1): u2 = 1 via Case A");
  }
  check(cf_expand(link23).terms == std::vector<std::int64_t>{7, 1, 2} &&
            u2_upper_bound(link23) == 2,
        "suffix bound for S(23,3) is 2 via [7,1,2]");
  {
    auto c23 = u2_classify(link23);
    auto c43 = u2_classify(normalize(43, 25));
    check(c23.exact == 2 && c43.exact == 1, "u2_classify: S(23,3) exact 2, S(43,25) exact 1");
  }

  {
    std::ostringstream o, e;
    int rc = cli::run({"u2", "23", "3"}, o, e);
    auto ls = lines_of(o.str());
    check(rc == 0 && !ls.empty() && ls.back() == "u2 = 2 (exact)",
          "cli: 'u2 23 3' ends with 'u2 = 2 (exact)'");
  }
  {
    std::ostringstream o, e;
    int rc = cli::run({"dtable", "23", "3", "--format", "csv"}, o, e);
    auto ls = lines_of(o.str());
    bool ok = rc == 0 && ls.size() == 24 && ls[0] == "i,numerator,denominator";
    for (int i = 0; ok && i < 23; ++i) {
      Rational r(kD23[i].n, kD23[i].d);
      ok = ls[static_cast<std::size_t>(i) + 1] ==
           std::to_string(i) + "," + numerator(r).str() + "," + denominator(r).str();
    }
    check(ok, "cli: 'dtable 23 3 --format csv' matches all 23 rows");
  }
  {
    std::ostringstream o, e;
    int rc = cli::run({"composite", "5", "2", "2", "1"}, o, e);
    auto ls = lines_of(o.str());
    check(rc == 0 && !ls.empty() && ls[0] == "u2 = 1 (Case A)",
          "cli: 'composite 5 2 2 1' reports u2 = 1 (Case A)");
  }
  {
    std::ostringstream o, e;
    int rc = cli::run({"enumerate", "--max-p", "55", "--knots-only"}, o, e);
    check(rc == 0 && o.str().find("S(55,34): u2 = 1 (exact)\n") != std::string::npos,
          "cli: 'enumerate --max-p 55 --knots-only' includes S(55,34) exact 1");
  }
  {
    std::ostringstream o, e;
    check(cli::run({"catalog"}, o, e) == 0, "cli: catalog verifies all fixtures");
  }

  out << "selftest: " << (idx - fails) << "/" << idx << " passed\n";
  return fails;
}

}  // namespace h2u
