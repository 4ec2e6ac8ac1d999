#include "ltpair/cli.hpp"

#include "ltpair/arith.hpp"
#include "ltpair/class_numbers.hpp"
#include "ltpair/constants.hpp"
#include "ltpair/curves.hpp"
#include "ltpair/gekeler.hpp"
#include "ltpair/local.hpp"
#include "ltpair/model_sim.hpp"
#include "ltpair/parallel.hpp"
#include "ltpair/prime_stats.hpp"
#include "ltpair/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ltpair::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::string frac(const Rational& q) { return to_fraction_string(q); }

// Doubles are written as decimal strings with a stated digit count.
std::string dec(double x, int digits = 17) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

// Parses an integer occupying all of s; `offset` locates s within the flag value.
std::int64_t parse_int(const std::string& s, std::size_t offset, const std::string& whole) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::logic_error&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size())
    throw InvalidArgument("bad integer at position " + std::to_string(offset + pos) + " in '" + whole + "'");
  return v;
}

curves::Curve parse_curve(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw InvalidArgument("curve must be 'a,b', got '" + s + "'");
  const std::int64_t a = parse_int(s.substr(0, comma), 0, s);
  const std::int64_t b = parse_int(s.substr(comma + 1), comma + 1, s);
  return curves::Curve(a, b);
}

std::optional<std::filesystem::path> default_cache() {
  if (const char* dir = std::getenv("LTPAIR_CACHE_DIR"); dir && *dir)
    return std::filesystem::path(dir) / "class_numbers.csv";
  return std::nullopt;
}

Json report_json(const verify::VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"status", verify::status_name(c.status)},
                      {"kind", c.kind},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"tolerance", c.tolerance},
                      {"elapsed", dec(c.elapsed, 4)}});
  Json env = Json::object();
  for (const auto& [k, v] : r.environment) env[k] = v;
  return {{"suite", r.suite}, {"status", r.passed() ? "pass" : "fail"}, {"environment", env}, {"checks", checks}};
}

struct Common {
  unsigned workers = default_workers();
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for prime counts with two prescribed Frobenius traces", "ltpair"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--workers", common.workers, "worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  // local-factor
  auto* lf = app.add_subcommand("local-factor", "S(t1,t2;l^k), its normalization and the limit factor c_l");
  struct {
    std::int64_t t1 = 0, t2 = 0;
    std::uint64_t ell = 0;
    unsigned k = 1;
    std::string method = "direct";
  } lfo;
  lf->add_option("--t1", lfo.t1)->required();
  lf->add_option("--t2", lfo.t2)->required();
  lf->add_option("--ell", lfo.ell)->required()->check(CLI::PositiveNumber);
  lf->add_option("--k", lfo.k)->check(CLI::Range(1u, 40u));
  lf->add_option("--method", lfo.method)->check(CLI::IsMember({"direct", "closed", "both"}));
  lf->callback([&] {
    action = [&]() -> int {
      if (!arith::is_prime(lfo.ell)) throw InvalidArgument("--ell: " + std::to_string(lfo.ell) + " is not prime");
      matcount::PrimePower pp(lfo.ell, lfo.k);
      local::DirectOptions dopt;
      dopt.workers = common.workers;
      Json j;
      j["ell"] = lfo.ell;
      j["k"] = lfo.k;
      j["t1"] = lfo.t1;
      j["t2"] = lfo.t2;
      const Rational scale = Rational(arith::ipow_big(lfo.ell, 5 * lfo.k - 5));
      std::optional<Rational> direct, closed;
      std::string closed_provenance;
      if (lfo.method != "closed") direct = local::s_normalized(lfo.t1, lfo.t2, pp, dopt);
      if (lfo.method != "direct") {
        if (std::llabs(lfo.t1) == std::llabs(lfo.t2)) {
          closed = local::s_closed_same(lfo.t1, lfo.ell, lfo.k);
          closed_provenance = std::string(local::provenance_name(local::Provenance::ClosedFormTheorem));
        } else if (auto cv = local::s_closed_distinct(lfo.t1, lfo.t2, lfo.ell, lfo.k)) {
          closed = cv->value;
          closed_provenance = std::string(local::provenance_name(cv->provenance));
        } else {
          throw InvalidArgument("no closed form covers (t1, t2, ell, k); use --method direct");
        }
      }
      const Rational s_norm = direct ? *direct : *closed;
      const Rational S = s_norm * scale;
      j["S"] = numerator_of(S).str();
      j["s_normalized"] = frac(s_norm);
      j["method"] = lfo.method;
      if (closed) j["closed_provenance"] = closed_provenance;
      bool agree = true;
      if (direct && closed) {
        agree = *direct == *closed;
        j["S_closed"] = numerator_of(*closed * scale).str();
        j["agree"] = agree;
      }
      local::LimitOptions lopt;
      lopt.direct = dopt;
      auto f = local::local_limit(lfo.t1, lfo.t2, lfo.ell, lopt);
      j["limit"] = frac(f.limit);
      j["stabilized_at"] = f.stabilized_at ? Json(*f.stabilized_at) : Json(nullptr);
      j["c_ell"] = frac(f.c_ell);
      j["provenance"] = std::string(local::provenance_name(f.provenance));
      out << j.dump(2) << "\n";
      return agree ? kOk : kCheckFailed;
    };
  });

  // constant
  auto* co = app.add_subcommand("constant", "Truncated Euler products for the pair constant and relatives");
  struct {
    std::int64_t t1 = 0, t2 = 0;
    std::uint64_t lmax = 10'000;
    unsigned digits = 30;
    std::string kind = "pair";
    bool trace = false;
  } coo;
  co->add_option("--t1", coo.t1);
  co->add_option("--t2", coo.t2);
  co->add_option("--lmax", coo.lmax)->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1'000'000'000}));
  co->add_option("--digits", coo.digits)->check(CLI::Range(10u, 1000u));
  co->add_option("--kind", coo.kind, "pair, same-trace, universal or single")
      ->check(CLI::IsMember({"pair", "same-trace", "universal", "single"}));
  co->add_flag("--trace", coo.trace, "list every Euler factor");
  co->callback([&] {
    action = [&]() -> int {
      constants::ProductOptions po;
      po.digits = coo.digits;
      po.workers = common.workers;
      po.trace = coo.trace;
      constants::EulerProductEstimate e;
      std::optional<Rational> ref;
      if (coo.kind == "pair") {
        e = constants::pair_constant(coo.t1, coo.t2, coo.lmax, po);
        ref = constants::known_value(coo.t1, coo.t2);
      } else if (coo.kind == "same-trace") {
        e = constants::same_trace_constant(coo.t1, coo.lmax, po);
        ref = constants::known_value(coo.t1, coo.t1);
      } else if (coo.kind == "universal") {
        e = constants::universal_product(coo.lmax, po);
      } else {
        e = constants::single_curve_constant(coo.t1, coo.lmax, po);
      }
      Json j;
      j["kind"] = coo.kind;
      j["t1"] = coo.t1;
      j["t2"] = coo.kind == "pair" ? coo.t2 : coo.t1;
      j["lmax"] = coo.lmax;
      j["truncation_prime"] = e.truncation_prime;
      j["digits"] = e.digits;
      j["value"] = to_decimal_string(e.value, e.digits);
      j["tail_conservative"] = dec(e.tail_conservative, 6);
      j["tail_empirical"] = dec(e.tail_empirical, 6);
      if (ref) {
        j["reference"] = frac(*ref);
        j["reference_decimal"] = to_decimal_string(to_float(*ref, e.digits), e.digits);
      }
      if (coo.trace) {
        Json rows = Json::array();
        for (auto& f : e.factor_trace) rows.push_back({{"ell", f.ell}, {"factor", frac(f.factor)}, {"provenance", f.provenance}});
        j["factors"] = rows;
      }
      out << j.dump(2) << "\n";
      return kOk;
    };
  });

  // class-number
  auto* cn = app.add_subcommand("class-number", "Class numbers of an imaginary quadratic discriminant");
  std::int64_t cn_d = 0;
  cn->add_option("--d", cn_d, "negative discriminant, D = 0 or 1 mod 4")->required();
  cn->callback([&] {
    action = [&]() -> int {
      auto cd = classnum::hurwitz_kronecker(cn_d);
      Json j;
      j["D"] = cn_d;
      j["D0"] = cd.split.D0;
      j["f"] = cd.split.f;
      j["h"] = cd.h;
      j["w"] = cd.w;
      j["hurwitz_kronecker"] = cd.hurwitz_kronecker;
      j["weighted"] = frac(cd.weighted);
      out << j.dump(2) << "\n";
      return kOk;
    };
  });

  // gekeler
  auto* ge = app.add_subcommand("gekeler", "Both sides of the class-number product formula");
  struct {
    std::int64_t t = 0;
    std::uint64_t p = 0, lmax = 100'000;
  } geo;
  ge->add_option("--t", geo.t)->required();
  ge->add_option("--p", geo.p)->required();
  ge->add_option("--lmax", geo.lmax)->check(CLI::PositiveNumber);
  ge->callback([&] {
    action = [&]() -> int {
      if (!arith::is_prime(geo.p)) throw InvalidArgument("--p: " + std::to_string(geo.p) + " is not prime");
      auto r = gekeler::product_check(geo.t, geo.p, geo.lmax);
      Json j;
      j["t"] = geo.t;
      j["p"] = geo.p;
      j["lhs"] = frac(r.lhs);
      j["rhs_decimal"] = dec(static_cast<double>(r.rhs), 15);
      j["rel_error"] = dec(static_cast<double>(r.rel_error), 6);
      j["lmax"] = r.lmax;
      out << j.dump(2) << "\n";
      return kOk;
    };
  });

  // average
  auto* av = app.add_subcommand("average", "Prime sums of class-number products, or with --ell the f_l average");
  struct {
    std::int64_t t1 = 0, t2 = 0;
    std::uint64_t x = 100'000;
    std::vector<std::uint64_t> checkpoints = prime_stats::kDefaultCheckpoints;
    std::optional<std::string> cache, csv;
    std::optional<std::uint64_t> ell;
  } avo;
  av->add_option("--t1", avo.t1);
  av->add_option("--t2", avo.t2);
  av->add_option("--x", avo.x)->check(CLI::PositiveNumber);
  av->add_option("--checkpoints", avo.checkpoints)->delimiter(',');
  av->add_option("--cache", avo.cache, "class-number cache CSV (default $LTPAIR_CACHE_DIR/class_numbers.csv)");
  av->add_option("--csv", avo.csv, "write the checkpoint table here");
  av->add_option("--ell", avo.ell, "average f_l(t1,p) f_l(t2,p) instead");
  av->callback([&] {
    action = [&]() -> int {
      Json j;
      if (avo.ell) {
        if (!arith::is_prime(*avo.ell)) throw InvalidArgument("--ell: " + std::to_string(*avo.ell) + " is not prime");
        auto r = prime_stats::average_f_product(avo.t1, avo.t2, *avo.ell, avo.x);
        j["t1"] = avo.t1;
        j["t2"] = avo.t2;
        j["ell"] = r.ell;
        j["x"] = r.x;
        j["prime_count"] = r.prime_count;
        j["value"] = dec(r.value, 15);
        j["reference_constant"] = frac(r.reference);
        j["relative_deviation"] = dec(r.relative_deviation, 6);
        out << j.dump(2) << "\n";
        return kOk;
      }
      prime_stats::ClassSumOptions o;
      o.workers = common.workers;
      o.cache_path = avo.cache ? std::optional<std::filesystem::path>(*avo.cache) : default_cache();
      auto s = prime_stats::class_sum(avo.t1, avo.t2, avo.x, avo.checkpoints, o);
      if (avo.csv) {
        std::ofstream f(*avo.csv);
        if (!f) throw Error("cannot write " + *avo.csv);
        f << "x,loglog_x,partial_sum\n";
        for (auto& cp : s.checkpoints)
          f << cp.x << "," << dec(cp.loglog_x, 15) << "," << to_decimal_string(cp.partial_sum, 30) << "\n";
      }
      j["t1"] = avo.t1;
      j["t2"] = avo.t2;
      j["x"] = avo.x;
      j["terms"] = s.terms;
      Json cps = Json::array();
      for (auto& cp : s.checkpoints)
        cps.push_back({{"x", cp.x}, {"loglog_x", dec(cp.loglog_x, 15)}, {"partial_sum", to_decimal_string(cp.partial_sum, 30)}});
      j["checkpoints"] = cps;
      auto ref = constants::pair_constant(avo.t1, avo.t2, 10'000, {});
      const double refv = static_cast<double>(ref.value);
      j["reference_constant"] = to_decimal_string(ref.value, 12);
      if (s.checkpoints.size() >= 3 && s.terms > 0) {
        auto fit = prime_stats::slope_fit(s);
        j["c_hat"] = dec(fit.c_hat, 12);
        j["intercept"] = dec(fit.intercept, 12);
        j["residual"] = dec(fit.residual, 6);
        j["ratio"] = dec(fit.c_hat / refv, 6);
      } else {
        j["c_hat"] = nullptr;
        j["ratio"] = nullptr;
      }
      j["cache"] = {{"hits", s.cache_hits}, {"misses", s.cache_misses}, {"mismatches", s.cache_mismatches}};
      out << j.dump(2) << "\n";
      return kOk;
    };
  });

  // curves
  auto* cu = app.add_subcommand("curves", "Count primes where two curves have prescribed traces");
  struct {
    std::string e1, e2;
    std::int64_t t1 = 0, t2 = 0;
    std::uint64_t x = 100'000;
    bool list = false, prediction = false;
  } cuo;
  cu->add_option("--e1", cuo.e1, "a,b for y^2 = x^3 + a x + b")->required();
  cu->add_option("--e2", cuo.e2)->required();
  cu->add_option("--t1", cuo.t1)->required();
  cu->add_option("--t2", cuo.t2)->required();
  cu->add_option("--x", cuo.x)->check(CLI::PositiveNumber);
  cu->add_flag("--list-primes", cuo.list);
  cu->add_flag("--prediction", cuo.prediction, "attach the generic-image heuristic");
  cu->callback([&] {
    action = [&]() -> int {
      curves::PairCountOptions o;
      o.list_primes = cuo.list;
      o.prediction = cuo.prediction;
      o.workers = common.workers;
      auto e1 = parse_curve(cuo.e1);
      auto e2 = parse_curve(cuo.e2);
      auto r = curves::pair_count(e1, e2, cuo.t1, cuo.t2, cuo.x, o);
      Json j;
      j["e1"] = {e1.a(), e1.b()};
      j["e2"] = {e2.a(), e2.b()};
      j["t1"] = cuo.t1;
      j["t2"] = cuo.t2;
      j["count"] = r.count;
      j["x"] = r.x;
      if (r.prediction) {
        j["prediction"] = dec(*r.prediction, 8);
        j["caveat"] = r.caveat;
      }
      if (cuo.list) j["matched_primes"] = r.primes;
      out << j.dump(2) << "\n";
      return kOk;
    };
  });

  // simulate
  auto* si = app.add_subcommand("simulate", "Sample the probabilistic model");
  model_sim::ModelConfig cfg;
  std::optional<std::string> si_csv;
  si->add_option("--m", cfg.m);
  si->add_option("--n", cfg.n_max);
  si->add_option("--seed", cfg.seed);
  si->add_option("--t1", cfg.t1);
  si->add_option("--t2", cfg.t2);
  si->add_option("--csv", si_csv, "write cumulative hits at powers of ten here");
  si->callback([&] {
    action = [&]() -> int {
      cfg.workers = common.workers;
      auto run = model_sim::sample_run(cfg);
      auto g = model_sim::growth_check(run, cfg);
      Json j;
      j["m"] = cfg.m;
      j["n"] = cfg.n_max;
      j["seed"] = cfg.seed;
      j["t1"] = cfg.t1;
      j["t2"] = cfg.t2;
      j["samples"] = run.samples.size();
      j["hits"] = g.hits;
      j["predicted"] = dec(g.predicted, 8);
      j["expected"] = dec(g.expected, 8);
      j["ratio"] = dec(g.ratio, 6);
      auto table = model_sim::class_density_table(cfg.m);
      Json classes = Json::array();
      for (std::uint64_t r1 = 0; r1 < cfg.m; ++r1)
        for (std::uint64_t r2 = 0; r2 < cfg.m; ++r2)
          classes.push_back({{"r1", r1},
                             {"r2", r2},
                             {"count", run.class_counts[r1 * cfg.m + r2]},
                             {"density", frac(table[r1 * cfg.m + r2])}});
      j["classes"] = classes;
      if (si_csv) {
        std::ofstream f(*si_csv);
        if (!f) throw Error("cannot write " + *si_csv);
        f << "n,hits\n";
        std::uint64_t hits = 0, next = 10;
        for (auto& s : run.samples) {
          while (s.p > next) {
            f << next << "," << hits << "\n";
            next *= 10;
          }
          hits += s.u1 == cfg.t1 && s.u2 == cfg.t2;
        }
        for (; next <= cfg.n_max; next *= 10) f << next << "," << hits << "\n";
        if (next / 10 != cfg.n_max) f << cfg.n_max << "," << hits << "\n";
      }
      out << j.dump(2) << "\n";
      return kOk;
    };
  });

  // verify
  auto* ve = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites;
  verify::VerifyOptions vopt;
  ve->add_option("--suite", suites, "suite name (repeatable; default all)")->check(CLI::IsMember(verify::suite_names()));
  ve->add_flag("--full", vopt.full, "larger grids (traces up to 100)");
  ve->add_option("--seed", vopt.seed);
  ve->add_option("--digits", vopt.digits)->check(CLI::Range(10u, 1000u));
  ve->callback([&] {
    action = [&]() -> int {
      vopt.workers = common.workers;
      if (suites.empty()) suites = verify::suite_names();
      Json reports = Json::array();
      bool ok = true;
      for (const auto& s : suites) {
        auto r = verify::run_suite(s, vopt);
        for (auto& c : r.checks)
          if (c.status == verify::Status::Fail) err << "FAIL " << c.id << ": " << c.lhs << " vs " << c.rhs << "\n";
        ok = ok && r.passed();
        reports.push_back(report_json(r));
      }
      Json j;
      j["status"] = ok ? "pass" : "fail";
      j["suites"] = reports;
      out << j.dump(2) << "\n";
      return ok ? kOk : kCheckFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    return action();
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace ltpair::cli
