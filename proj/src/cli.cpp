#include "h2u/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "h2u/berge.hpp"
#include "h2u/catalog.hpp"
#include "h2u/composite.hpp"
#include "h2u/errors.hpp"
#include "h2u/json_io.hpp"
#include "h2u/lens_dinv.hpp"
#include "h2u/obstruction.hpp"
#include "h2u/selftest.hpp"
#include "h2u/two_bridge.hpp"

namespace h2u::cli {

namespace {

enum class Format { Text, Json, Csv };

struct Ctx {
  std::int64_t p = 0, q = 0, r = 0, s = 0;
  std::int64_t max_p = 0, kmax = 0;
  bool raw = false, mirror = false, knots_only = false;
  std::string assume;
  std::string cache;
  std::string format = "text";
};

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

std::string link_str(const TwoBridgeLink& l) {
  return "S(" + std::to_string(l.p) + "," + std::to_string(l.q) + ")";
}

std::string u2_phrase(const U2Classification& c) {
  if (c.exact) return "u2 = " + std::to_string(*c.exact) + " (exact)";
  return "u2 in [" + std::to_string(c.lower) + ", " + std::to_string(c.upper) + "]";
}

std::string seq_text(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

std::string witness_text(const BergeWitness& w) {
  std::ostringstream o;
  o << "k=" << w.k << " family=" << to_string(w.family) << " ksq_sign=" << sign_str(w.ksq_sign);
  if (const auto* p = std::get_if<FamilyIParams>(&w.params))
    o << " i=" << p->i << " sign=" << sign_str(p->sign) << " gcd=" << p->gcd_value;
  else if (const auto* p = std::get_if<FamilyEpsDParams>(&w.params))
    o << " epsilon=" << sign_str(p->epsilon) << " d=" << p->d
      << " outer_sign=" << sign_str(p->outer_sign);
  else if (const auto* p = std::get_if<FamilyVParams>(&w.params))
    o << " sign1=" << sign_str(p->sign1) << " sign2=" << sign_str(p->sign2);
  else if (const auto* p = std::get_if<FamilyQuadraticParams>(&w.params))
    o << " j=" << p->j;
  return o.str();
}

int csv_unsupported(const char* cmd, std::ostream& err) {
  err << "error: csv output is not available for '" << cmd << "'\n";
  return 1;
}

int cmd_u2(const Ctx& ctx, Format f, std::ostream& out, std::ostream& err) {
  if (f == Format::Csv) return csv_unsupported("u2", err);
  auto link = normalize(ctx.p, ctx.q);
  auto cls = u2_classify(link);
  if (f == Format::Json) {
    out << dump_pretty(classification_json(cls));
    return 0;
  }
  out << link_str(link) << ": 2-bridge " << (link.is_knot() ? "knot" : "link")
      << ", determinant " << link.p << "\n";
  out << "provenance: " << join(cls.provenance, ", ") << "\n";
  out << "bounds: lower " << cls.lower << ", upper " << cls.upper << "\n";
  out << u2_phrase(cls) << "\n";
  return 0;
}

int cmd_berge(const Ctx& ctx, Format f, bool kmax_given, std::ostream& out, std::ostream& err) {
  if (f == Format::Csv) return csv_unsupported("berge", err);
  auto link = normalize(ctx.p, ctx.q);
  std::optional<std::int64_t> kopt;
  if (kmax_given) kopt = ctx.kmax;
  auto answer = u2_is_one_2bridge(link, kopt);
  if (f == Format::Json) {
    out << dump_pretty(berge_report_json(link.p, link.q, answer.witnesses));
    return 0;
  }
  out << link_str(link) << ": witness search with k <= " << (kopt ? *kopt : link.p) << "\n";
  for (const auto& w : answer.witnesses) out << "  " << witness_text(w) << "\n";
  out << "realizable: " << (answer.u2_is_one ? "yes" : "no") << " ("
      << answer.witnesses.size() << (answer.witnesses.size() == 1 ? " witness" : " witnesses")
      << ")\n";
  return 0;
}

int cmd_dtable(const Ctx& ctx, Format f, std::ostream& out) {
  auto link = normalize(ctx.p, ctx.q);
  CorrectionTable t;
  if (ctx.raw)
    t = {link.p, link.q, false, d_lens_raw(link.p, link.q)};
  else
    t = d_lens(link);
  switch (f) {
    case Format::Json:
      out << dump_pretty(table_json(t));
      break;
    case Format::Csv:
      out << "i,numerator,denominator\n";
      for (std::size_t i = 0; i < t.d.size(); ++i)
        out << i << "," << numerator(t.d[i]) << "," << denominator(t.d[i]) << "\n";
      break;
    case Format::Text:
      out << "L(" << t.p << "," << t.q << ") d-invariants, "
          << (t.labeled ? "c1 labeling" : "recursion labeling") << "\n";
      for (std::size_t i = 0; i < t.d.size(); ++i)
        out << i << ": " << to_string(t.d[i]) << "\n";
      break;
  }
  return 0;
}

int cmd_match(const Ctx& ctx, Format f, std::ostream& out, std::ostream& err) {
  if (f == Format::Csv) return csv_unsupported("match", err);
  auto link = normalize(ctx.p, ctx.q);
  auto report = matching_exists(d_lens(link));
  if (f == Format::Json) {
    out << dump_pretty(matching_json(report));
    return 0;
  }
  out << "matching for " << link_str(link) << ": "
      << (report.feasible ? "feasible" : "infeasible") << "\n";
  out << "scanned " << report.diagnostics.size() << " (epsilon, u) pairs\n";
  out << "feasible pairs: " << report.feasible_pairs.size() << "\n";
  for (const auto& [eps, u] : report.feasible_pairs)
    out << "  epsilon=" << sign_str(eps) << " u=" << u << "\n";
  std::vector<const MatchingDiagnostic*> near;
  for (const auto& d : report.diagnostics)
    if (d.first_failure == FailureKind::Negative) near.push_back(&d);
  out << "parity-passing pairs with a negative entry: " << near.size() << "\n";
  for (const auto* d : near) {
    out << "  epsilon=" << sign_str(d->epsilon) << " u=" << d->u
        << ": first failure Negative at i=" << *d->failure_index << "\n";
    out << "    I = " << seq_text(d->I) << "\n";
  }
  return 0;
}

int cmd_transfer(const Ctx& ctx, Format f, std::ostream& out, std::ostream& err) {
  if (f == Format::Csv) return csv_unsupported("transfer", err);
  auto assumption = ctx.assume == "neg-to-pos" ? TransferAssumption::NegToPos
                                               : TransferAssumption::Amphicheiral;
  auto link = normalize(ctx.p, ctx.q);
  auto rep = transfer_obstruction(link, assumption);
  auto tangle = normalize(link.q == 0 ? 1 : link.q, link.p);
  std::int64_t tangle_upper = u2_classify(tangle).upper + 1;
  std::optional<std::int64_t> exact;
  if (rep.conclusion == TransferConclusion::U2AtLeastTwo && tangle_upper == 2) exact = 2;
  if (f == Format::Json) {
    out << dump_pretty(transfer_json(rep, tangle_upper, exact));
    return 0;
  }
  std::size_t persistent = 0;
  for (const auto& e : rep.certificate)
    if (e.status != PersistentFailure::NotPersistent) ++persistent;
  out << link_str(link) << " under assumption " << to_string(assumption) << "\n";
  out << "persistent failures: " << persistent << "/" << rep.certificate.size()
      << " (epsilon, u) pairs\n";
  out << "conclusion: " << to_string(rep.conclusion) << "\n";
  out << "tangle bound: u2 <= u2(" << link_str(tangle) << ") + 1 = " << tangle_upper << "\n";
  if (exact)
    out << "combined: u2 = " << *exact << "\n";
  else if (rep.conclusion == TransferConclusion::U2AtLeastTwo)
    out << "combined: u2 in [2, " << tangle_upper << "]\n";
  else
    out << "combined: u2 <= " << tangle_upper << "\n";
  return 0;
}

int cmd_composite(const Ctx& ctx, Format f, std::ostream& out, std::ostream& err) {
  if (f == Format::Csv) return csv_unsupported("composite", err);
  auto l1 = normalize(ctx.p, ctx.q);
  auto l2 = normalize(ctx.r, ctx.s);
  auto v = composite_u2_one(l1, l2, ctx.mirror);
  if (f == Format::Json) {
    out << dump_pretty(composite_json(v));
    return 0;
  }
  if (v.u2_is_one)
    out << "u2 = 1 (Case " << (v.kind == CompositeCase::CaseA ? "A" : "B") << ")\n";
  else
    out << "u2 != 1 (no case matched)\n";
  if (v.case_a)
    out << "  case A: r = q and s = p^{+-1} (mod q), "
        << (v.case_a->swapped ? "summands swapped" : "ordering as given") << "\n";
  if (v.case_b)
    out << "  case B: v=" << v.case_b->v << " epsilon=" << sign_str(v.case_b->epsilon)
        << " a=" << v.case_b->a << " b=" << v.case_b->b << ", "
        << (v.case_b->swapped ? "summands swapped" : "ordering as given") << "\n";
  return 0;
}

int cmd_bound(const Ctx& ctx, Format f, std::ostream& out, std::ostream& err) {
  if (f == Format::Csv) return csv_unsupported("bound", err);
  auto link = normalize(ctx.p, ctx.q);
  auto cf = cf_expand(link);
  auto ub = u2_upper_bound(link);
  if (f == Format::Json) {
    Json j{{"p", link.p}, {"q", link.q}, {"expansion", cf.terms}, {"upper", ub}};
    out << dump_pretty(j);
    return 0;
  }
  out << link_str(link) << ": expansion [";
  for (std::size_t i = 0; i < cf.terms.size(); ++i)
    out << (i ? ", " : "") << cf.terms[i];
  out << "]\n";
  out << "u2 <= " << ub << "\n";
  return 0;
}

int cmd_enumerate(const Ctx& ctx, Format f, std::ostream& out, std::ostream& err) {
  if (ctx.max_p < 1) throw InvalidParameterError("--max-p must be positive");
  std::map<std::pair<std::int64_t, std::int64_t>, Json> cached;
  if (!ctx.cache.empty()) {
    std::ifstream in(ctx.cache);
    if (!in && std::filesystem::exists(ctx.cache))
      throw IoError("cannot read cache file " + ctx.cache);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      Json j = Json::parse(line, nullptr, false);
      bool ok = !j.is_discarded();
      U2Classification parsed;
      if (ok) {
        try {
          parsed = classification_from_json(j);
        } catch (const std::exception&) {
          ok = false;
        }
      }
      if (!ok) {
        err << "warning: " << ctx.cache << ":" << lineno << ": skipping corrupt cache line\n";
        continue;
      }
      cached[{parsed.link.p, parsed.link.q}] = classification_json(parsed);
    }
  }

  if (f == Format::Csv) out << "p,q,lower,upper,exact\n";
  std::vector<Json> fresh;
  for (std::int64_t p = 2; p <= ctx.max_p; ++p) {
    if (ctx.knots_only && p % 2 == 0) continue;
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      if (q > mod_inverse(q, p)) continue;  // one representative per unoriented class
      Json rec;
      auto it = cached.find({p, q});
      if (it != cached.end()) {
        rec = it->second;
      } else {
        rec = classification_json(u2_classify({p, q}));
        fresh.push_back(rec);
      }
      auto cls = classification_from_json(rec);
      switch (f) {
        case Format::Text:
          out << link_str(cls.link) << ": " << u2_phrase(cls) << "\n";
          break;
        case Format::Json:
          out << dump_line(rec) << "\n";
          break;
        case Format::Csv:
          out << cls.link.p << "," << cls.link.q << "," << cls.lower << "," << cls.upper << ","
              << (cls.exact ? std::to_string(*cls.exact) : "") << "\n";
          break;
      }
    }
  }

  if (!ctx.cache.empty() && !fresh.empty()) {
    std::ofstream append(ctx.cache, std::ios::app);
    if (!append) throw IoError("cannot open cache file " + ctx.cache + " for append");
    for (const auto& j : fresh) append << dump_line(j) << "\n";
    append.flush();
    if (!append) throw IoError("failed writing cache file " + ctx.cache);
  }
  return 0;
}

int cmd_catalog(Format f, std::ostream& out) {
  bool all_ok = true;
  std::size_t n_ok = 0;
  Json entries = Json::array();
  if (f == Format::Csv) out << "name,p,q,expected_u2,computed_exact,verified\n";
  for (const auto& e : knot_catalog()) {
    auto cls = u2_classify(e.link);
    bool value_ok = cls.exact.has_value() && *cls.exact == e.expected_u2;
    bool witness_ok = true;
    if (e.expected_witness) {
      witness_ok = false;
      for (const auto& w : u2_is_one_2bridge(e.link).witnesses) {
        if (w.family != e.expected_witness->family || w.k != e.expected_witness->k) continue;
        const auto* pd = std::get_if<FamilyEpsDParams>(&w.params);
        if (pd && pd->d == e.expected_witness->d) {
          witness_ok = true;
          break;
        }
      }
    }
    bool ok = value_ok && witness_ok;
    all_ok = all_ok && ok;
    if (ok) ++n_ok;
    switch (f) {
      case Format::Text: {
        out << e.name << " [S(" << e.raw_p << "," << e.raw_q << ") -> " << link_str(e.link)
            << "]: expected u2 = " << e.expected_u2 << ", computed " << u2_phrase(cls);
        if (e.expected_witness)
          out << ", witness family " << to_string(e.expected_witness->family)
              << " k=" << e.expected_witness->k << " d=" << e.expected_witness->d
              << (witness_ok ? " found" : " MISSING");
        out << (ok ? ": ok" : ": MISMATCH") << "\n";
        break;
      }
      case Format::Json: {
        Json j{{"name", e.name},       {"raw_p", e.raw_p},
               {"raw_q", e.raw_q},     {"p", e.link.p},
               {"q", e.link.q},        {"expected_u2", e.expected_u2},
               {"witness_verified", witness_ok}, {"verified", ok}};
        j["computed_exact"] = cls.exact ? Json(*cls.exact) : Json(nullptr);
        entries.push_back(j);
        break;
      }
      case Format::Csv:
        out << e.name << "," << e.link.p << "," << e.link.q << "," << e.expected_u2 << ","
            << (cls.exact ? std::to_string(*cls.exact) : "") << ","
            << (ok ? "true" : "false") << "\n";
        break;
    }
  }
  if (f == Format::Json) {
    out << dump_pretty(Json{{"all_verified", all_ok}, {"entries", entries}});
  } else if (f == Format::Text) {
    out << "catalog: " << n_ok << "/" << knot_catalog().size() << " verified\n";
  }
  return all_ok ? 0 : 3;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Ctx ctx;
  CLI::App app{"H(2)-unknotting numbers of 2-bridge links and lens-space d-invariants"};
  app.name("h2u");
  app.require_subcommand(1);

  auto add_format = [&ctx](CLI::App* sub) {
    sub->add_option("--format", ctx.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_pq = [&ctx](CLI::App* sub) {
    sub->add_option("p", ctx.p, "determinant p of S(p,q)")->required();
    sub->add_option("q", ctx.q, "q of S(p,q)")->required();
  };

  auto* c_u2 = app.add_subcommand("u2", "classify the H(2)-unknotting number of S(p,q)");
  add_pq(c_u2);
  add_format(c_u2);

  auto* c_berge = app.add_subcommand("berge", "lens-space realization witnesses for S(p,q)");
  add_pq(c_berge);
  c_berge->add_option("--kmax", ctx.kmax, "largest k to search (default p)");
  add_format(c_berge);

  auto* c_dtable = app.add_subcommand("dtable", "d-invariant table of L(p,q)");
  add_pq(c_dtable);
  c_dtable->add_flag("--raw", ctx.raw, "recursion labeling instead of the c1 labeling");
  add_format(c_dtable);

  auto* c_match = app.add_subcommand("match", "even positive matching scan for S(p,q)");
  add_pq(c_match);
  add_format(c_match);

  auto* c_transfer =
      app.add_subcommand("transfer", "matching obstruction under a symmetry assumption");
  add_pq(c_transfer);
  c_transfer->add_option("--assume", ctx.assume, "symmetry assumption")
      ->required()
      ->check(CLI::IsMember({"neg-to-pos", "amphicheiral"}));
  add_format(c_transfer);

  auto* c_comp = app.add_subcommand("composite", "decide u2 = 1 for S(p,q) # S(r,s)");
  add_pq(c_comp);
  c_comp->add_option("r", ctx.r, "determinant r of S(r,s)")->required();
  c_comp->add_option("s", ctx.s, "s of S(r,s)")->required();
  c_comp->add_flag("--mirror", ctx.mirror, "match patterns up to mirror images");
  add_format(c_comp);

  auto* c_bound = app.add_subcommand("bound", "suffix upper bound for u2 of S(p,q)");
  add_pq(c_bound);
  add_format(c_bound);

  auto* c_enum = app.add_subcommand("enumerate", "classify all S(p,q) with p <= N");
  c_enum->add_option("--max-p", ctx.max_p, "largest determinant")->required();
  c_enum->add_flag("--knots-only", ctx.knots_only, "odd determinants only");
  c_enum->add_option("--cache", ctx.cache, "JSON-lines cache file");
  add_format(c_enum);

  auto* c_cat = app.add_subcommand("catalog", "verify the embedded knot fixtures");
  add_format(c_cat);

  auto* c_self = app.add_subcommand("selftest", "run the embedded regression suite");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 1;
  }

  Format f = ctx.format == "json" ? Format::Json
             : ctx.format == "csv" ? Format::Csv
                                   : Format::Text;

  try {
    if (*c_u2) return cmd_u2(ctx, f, out, err);
    if (*c_berge) return cmd_berge(ctx, f, c_berge->count("--kmax") > 0, out, err);
    if (*c_dtable) return cmd_dtable(ctx, f, out);
    if (*c_match) return cmd_match(ctx, f, out, err);
    if (*c_transfer) return cmd_transfer(ctx, f, out, err);
    if (*c_comp) return cmd_composite(ctx, f, out, err);
    if (*c_bound) return cmd_bound(ctx, f, out, err);
    if (*c_enum) return cmd_enumerate(ctx, f, out, err);
    if (*c_cat) return cmd_catalog(f, out);
    if (*c_self) {
      int fails = run_selftest(out);
      if (fails) {
        err << fails << " selftest check(s) failed\n";
        return 3;
      }
      return 0;
    }
  } catch (const SymmetryFailureError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no subcommand given\n";
  return 1;
}

}  // namespace h2u::cli
