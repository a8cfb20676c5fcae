#include "hyplab/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyplab/arith.hpp"
#include "hyplab/brun.hpp"
#include "hyplab/errors.hpp"
#include "hyplab/legset.hpp"
#include "hyplab/moment.hpp"
#include "hyplab/report.hpp"
#include "hyplab/sector.hpp"
#include "hyplab/sieve.hpp"
#include "hyplab/stats.hpp"

namespace hyplab {

namespace {

u64 parse_count_token(const std::string& tok) {
  const auto caret = tok.find('^');
  try {
    if (caret == std::string::npos) {
      size_t used = 0;
      const unsigned long long v = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      return v;
    }
    const u64 base = parse_count_token(tok.substr(0, caret));
    const u64 exp = parse_count_token(tok.substr(caret + 1));
    u64 v = 1;
    for (u64 i = 0; i < exp; ++i) {
      const auto next = checked_mul(v, base);
      if (!next) throw std::invalid_argument(tok);
      v = *next;
    }
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad count token: " + tok);
  }
}

std::vector<u64> parse_checkpoints(const std::string& spec) {
  std::vector<u64> out;
  std::string tok;
  for (char c : spec + ",") {
    if (c != ',') {
      tok += c;
      continue;
    }
    if (tok.empty()) continue;
    out.push_back(parse_count_token(tok));
    tok.clear();
  }
  if (out.empty()) throw std::invalid_argument("empty checkpoint list");
  return out;
}

std::string join_counts(const std::vector<u64>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

void emit(const Report& rep, const std::string& out, const std::string& format) {
  const std::string payload = format == "json" ? to_json(rep) : to_csv(rep);
  if (out.empty() || out == "-") {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot open output path: " + out);
  f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!f) throw std::runtime_error("failed writing artifact: " + out);
}

// Squarefree moduli up to d_max whose prime factors all sit below both
// factor_max and z; these are the moduli the remainder bound speaks about.
std::vector<u64> admissible_moduli(u64 d_max, u64 factor_max, double z) {
  std::vector<u64> out;
  for (u64 d = 1; d <= d_max; ++d) {
    u64 rest = d;
    bool ok = true;
    for (u64 p = 2; p * p <= rest && ok; ++p) {
      if (rest % p) continue;
      rest /= p;
      if (rest % p == 0 || p >= factor_max || static_cast<double>(p) >= z) ok = false;
    }
    if (rest > 1 && (rest >= factor_max || static_cast<double>(rest) >= z)) ok = false;
    if (ok) out.push_back(d);
  }
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"experiments on products ab with a^2 + b^2 prime"};
  app.require_subcommand(1);
  app.fallthrough(false);

  int workers = 1;
  std::string out = "-";
  std::string format = "csv";

  struct Common {
    void attach(CLI::App* sub, int& workers, std::string& out, std::string& format) {
      sub->add_option("--workers", workers, "worker threads (results never depend on this)")
          ->check(CLI::Range(1, 64));
      sub->add_option("--out", out, "artifact path, - for stdout");
      sub->add_option("--format", format, "artifact format")
          ->check(CLI::IsMember({"csv", "json"}));
    }
  } common;

  std::function<Report()> action;

  // legs: list one family's members
  {
    auto* sub = app.add_subcommand("legs", "list members of a leg family");
    auto kind = std::make_shared<std::string>("product");
    auto limit = std::make_shared<u64>(0);
    sub->add_option("--kind", *kind, "odd | even | product")
        ->check(CLI::IsMember({"odd", "even", "product"}));
    sub->add_option("--limit", *limit, "upper bound for members")->required();
    common.attach(sub, workers, out, format);
    sub->callback([&action, kind, limit, &workers] {
      action = [kind, limit, &workers] {
        const auto table =
            enumerate_legs(leg_kind_from_string(*kind), *limit, nullptr, workers,
                           Witnesses::kOff);
        Report rep;
        rep.params = {{"command", std::string("legs")},
                      {"kind", *kind},
                      {"limit", *limit}};
        rep.table.columns = {"n"};
        for (u64 n : table.members()) rep.table.row({n});
        rep.json_scalar_rows = true;
        return rep;
      };
    });
  }

  // density: counts, ratios and the delta exponent across checkpoints
  {
    auto* sub = app.add_subcommand("density", "family density across checkpoints");
    auto kind = std::make_shared<std::string>("product");
    auto limit = std::make_shared<u64>(0);
    auto checkpoints = std::make_shared<std::string>();
    sub->add_option("--kind", *kind, "odd | even | product")
        ->check(CLI::IsMember({"odd", "even", "product"}));
    auto* limit_opt = sub->add_option("--limit", *limit, "largest checkpoint");
    sub->add_option("--checkpoints", *checkpoints, "comma list; 10^k allowed");
    common.attach(sub, workers, out, format);
    sub->callback([&action, kind, limit, checkpoints, limit_opt, &workers] {
      const bool has_limit = limit_opt->count() > 0;
      action = [kind, limit, checkpoints, has_limit, &workers] {
        std::vector<u64> points;
        if (!checkpoints->empty()) {
          points = parse_checkpoints(*checkpoints);
          if (has_limit && points.back() > *limit)
            throw std::invalid_argument("checkpoints exceed --limit");
        } else if (has_limit) {
          points = {*limit};
        } else {
          throw std::invalid_argument("density needs --limit or --checkpoints");
        }
        const auto series = density_series(leg_kind_from_string(*kind), points, workers);
        Report rep;
        rep.params = {{"command", std::string("density")},
                      {"kind", *kind},
                      {"checkpoints", join_counts(points)}};
        rep.table.columns = {"N", "count", "ratio", "delta"};
        for (const auto& p : series) rep.table.row({p.n, p.count, p.ratio, p.delta});
        return rep;
      };
    });
  }

  // hr: omega histogram against the classical majorant
  {
    auto* sub = app.add_subcommand("hr", "omega histogram vs majorant");
    auto limit = std::make_shared<u64>(0);
    auto c0 = std::make_shared<double>(1.0);
    sub->add_option("--limit", *limit)->required();
    sub->add_option("--c0", *c0, "majorant shift constant, > 0");
    common.attach(sub, workers, out, format);
    sub->callback([&action, limit, c0, &workers] {
      action = [limit, c0, &workers] {
        const auto hist = omega_histogram(*limit, workers);
        const auto ratios = hr_normalized_ratios(hist, *c0);
        Report rep;
        rep.params = {{"command", std::string("hr")}, {"limit", *limit}, {"c0", *c0}};
        rep.table.columns = {"i", "count", "ratio"};
        for (size_t i = 1; i < hist.counts.size(); ++i)
          rep.table.row({static_cast<u64>(i), hist.counts[i], ratios[i]});
        return rep;
      };
    });
  }

  // mertens: prime-power reciprocal sum against log log
  {
    auto* sub = app.add_subcommand("mertens", "prime-power reciprocal sum vs log log");
    auto limit = std::make_shared<u64>(0);
    sub->add_option("--limit", *limit)->required();
    common.attach(sub, workers, out, format);
    sub->callback([&action, limit] {
      action = [limit] {
        const auto r = prime_power_reciprocal_sum(*limit);
        Report rep;
        rep.params = {{"command", std::string("mertens")}, {"limit", *limit}};
        rep.table.columns = {"N", "sum", "loglog", "gap"};
        rep.table.row({*limit, r.sum, r.sum - r.gap, r.gap});
        return rep;
      };
    });
  }

  // exceptional: discard-class sizes and the exceedance exponent
  {
    auto* sub = app.add_subcommand("exceptional", "omega/smoothness discard classes");
    auto limit = std::make_shared<u64>(0);
    auto alpha = std::make_shared<double>(constants().alpha_star);
    sub->add_option("--limit", *limit)->required();
    sub->add_option("--alpha", *alpha, "omega cap multiplier, in (1, 2); default 1/log 2");
    common.attach(sub, workers, out, format);
    sub->callback([&action, limit, alpha, &workers] {
      action = [limit, alpha, &workers] {
        const auto e = exceptional_sets(*limit, *alpha, workers);
        const auto x = exceedance_exponent(*alpha);
        Report rep;
        rep.params = {{"command", std::string("exceptional")},
                      {"limit", *limit},
                      {"alpha", *alpha}};
        rep.table.columns = {"N",       "alpha",   "omega_cap", "smooth_threshold",
                             "e1_size", "e2_size", "exponent"};
        rep.table.row({*limit, *alpha, e.omega_cap, e.smooth_threshold, e.e1_size,
                       e.e2_size, x.value});
        return rep;
      };
    });
  }

  // brun-check: remainder and local-density hypotheses on sampled instances
  {
    auto* sub = app.add_subcommand("brun-check", "remainder/local density checks");
    auto seed = std::make_shared<u64>(1);
    auto instances = std::make_shared<int>(20);
    auto xs = std::make_shared<std::string>("10^3,10^4,10^5");
    auto d_max = std::make_shared<u64>(1000);
    auto factor_max = std::make_shared<u64>(50);
    auto local_max = std::make_shared<u64>(1000);
    auto zeta = std::make_shared<double>(1000.0);
    auto ab_max = std::make_shared<u64>(50);
    sub->add_option("--seed", *seed);
    sub->add_option("--instances", *instances)->check(CLI::Range(1, 10000));
    sub->add_option("--x-checkpoints", *xs, "sequence lengths; 10^k allowed");
    sub->add_option("--d-max", *d_max, "largest modulus checked");
    sub->add_option("--factor-max", *factor_max, "moduli keep prime factors below this");
    sub->add_option("--local-prime-max", *local_max, "local densities for primes below this");
    sub->add_option("--z", *zeta, "sifting cutoff carried by the instances");
    sub->add_option("--ab-max", *ab_max, "coefficient range for sampling");
    common.attach(sub, workers, out, format);
    sub->callback([&action, seed, instances, xs, d_max, factor_max, local_max, zeta,
                   ab_max] {
      action = [seed, instances, xs, d_max, factor_max, local_max, zeta, ab_max] {
        const auto checkpoints = parse_checkpoints(*xs);
        for (size_t i = 1; i < checkpoints.size(); ++i)
          if (checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("x checkpoints must be strictly ascending");
        const auto moduli = admissible_moduli(*d_max, *factor_max, *zeta);
        const auto sampled = sample_admissible_instances(
            *instances, *seed, checkpoints.back(), *zeta, *ab_max);
        const auto local_primes = primes_up_to(*local_max > 0 ? *local_max - 1 : 0);

        Report rep;
        rep.params = {{"command", std::string("brun-check")},
                      {"seed", *seed},
                      {"instances", static_cast<u64>(*instances)},
                      {"x_checkpoints", join_counts(checkpoints)},
                      {"d_max", *d_max},
                      {"factor_max", *factor_max},
                      {"local_prime_max", *local_max},
                      {"z", *zeta},
                      {"ab_max", *ab_max}};
        rep.table.columns = {"instance",     "a",
                             "b0",           "d_checked",
                             "remainder_violations", "max_remainder_ratio",
                             "local_checked", "local_violations"};
        for (size_t i = 0; i < sampled.size(); ++i) {
          const DensityFunction g{sampled[i].a, sampled[i].b0};
          u64 d_checked = 0, r_viol = 0;
          double max_ratio = 0.0;
          for (u64 x : checkpoints) {
            const auto inst = SieveInstance::make(sampled[i].a, sampled[i].b0, x, *zeta);
            for (u64 d : moduli) {
              const Rational r = remainder_term(inst, d);
              const Rational bound = g_eval(g, d) * Rational(static_cast<i128>(d));
              ++d_checked;
              if (bound < r.abs()) ++r_viol;
              const double ratio = r.abs().to_double() / bound.to_double();
              if (ratio > max_ratio) max_ratio = ratio;
            }
          }
          u64 local_checked = 0, l_viol = 0;
          for (u64 p : local_primes) {
            const u64 count = local_solution_count(sampled[i], p);
            const Rational expected = g.at_prime(p) * Rational(static_cast<i128>(p));
            ++local_checked;
            if (Rational(static_cast<i128>(count)) != expected) ++l_viol;
          }
          rep.table.row({static_cast<u64>(i + 1), sampled[i].a, sampled[i].b0, d_checked,
                         r_viol, max_ratio, local_checked, l_viol});
        }
        return rep;
      };
    });
  }

  // sector: one angular window count
  {
    auto* sub = app.add_subcommand("sector", "lattice pairs with prime norm in a window");
    auto x = std::make_shared<u64>(0);
    auto beta = std::make_shared<double>(0.0);
    auto gamma = std::make_shared<double>(0.0);
    sub->add_option("--x", *x, "norm bound")->required();
    sub->add_option("--beta", *beta, "window start, radians");
    sub->add_option("--gamma", *gamma, "window width, radians")->required();
    common.attach(sub, workers, out, format);
    sub->callback([&action, x, beta, gamma, &workers] {
      action = [x, beta, gamma, &workers] {
        const SectorQuery q{*x, *beta, *gamma};
        const u64 count = sector_count(q, workers);
        Report rep;
        rep.params = {{"command", std::string("sector")},
                      {"x", *x},
                      {"beta", *beta},
                      {"gamma", *gamma}};
        rep.table.columns = {"x", "beta", "gamma", "count", "hl_ratio", "gamma_in_range"};
        Cell ratio{};  // null when the normalisation is undefined
        if (*gamma > 0.0 && *x >= 2)
          ratio = static_cast<double>(count) * std::log(static_cast<double>(*x)) /
                  (*gamma * static_cast<double>(*x));
        rep.table.row({*x, *beta, *gamma, count, ratio, hl_gamma_in_range(q)});
        return rep;
      };
    });
  }

  // dyadic: the sector plan that certifies a product-family lower bound
  {
    auto* sub = app.add_subcommand("dyadic", "dyadic sector plan with certified counts");
    auto limit = std::make_shared<u64>(0);
    sub->add_option("--limit", *limit, "product bound n")->required();
    common.attach(sub, workers, out, format);
    sub->callback([&action, limit, &workers] {
      action = [limit, &workers] {
        const auto plan = dyadic_lower_bound(*limit, workers);
        Report rep;
        rep.params = {{"command", std::string("dyadic")}, {"limit", *limit}};
        rep.table.columns = {"i", "beta", "gamma", "x", "count", "running_total"};
        u64 running = 0;
        for (const auto& s : plan.sectors) {
          running += s.count;
          rep.table.row({static_cast<u64>(s.index), s.beta, s.gamma, s.x, s.count,
                         running});
        }
        return rep;
      };
    });
  }

  // moment: pair-set construction, second moment, Cauchy-Schwarz check
  {
    auto* sub = app.add_subcommand("moment", "filtered pair sets and second moment");
    auto limit = std::make_shared<u64>(0);
    auto epsilon = std::make_shared<double>(0.1);
    sub->add_option("--limit", *limit)->required();
    sub->add_option("--epsilon", *epsilon, "omega threshold slack, > 0");
    common.attach(sub, workers, out, format);
    sub->callback([&action, limit, epsilon, &workers] {
      action = [limit, epsilon, &workers] {
        const auto cfg = LConfig::make(*limit, *epsilon);
        const auto r = build_l_sets(cfg, workers);
        const auto cauchy = cauchy_bound_check(r, workers);
        Report rep;
        rep.params = {{"command", std::string("moment")},
                      {"limit", *limit},
                      {"epsilon", *epsilon}};
        rep.table.columns = {"N",  "epsilon",   "t",            "omega_bound",
                             "smooth_threshold", "l0",           "l1",
                             "l2", "l3",        "discarded",    "kept",
                             "distinct_products", "s_n",        "diagonal",
                             "off_diagonal",     "cauchy_lower", "c_of_n",
                             "cauchy_pass",      "trend_ratio"};
        rep.table.row({cfg.n, cfg.epsilon, cfg.t, cfg.omega_bound, cfg.smooth_threshold,
                       r.l0, r.l1, r.l2, r.l3, r.discarded, r.kept, r.moment.distinct,
                       r.moment.s_n, r.moment.diagonal, r.moment.off_diagonal,
                       r.cauchy_lower, cauchy.c_of_n, cauchy.pass, r.trend_ratio});
        return rep;
      };
    });
  }

  // conjecture: the restricted-window pair count
  {
    auto* sub = app.add_subcommand("conjecture", "pairs with omega near the typical split");
    auto limit = std::make_shared<u64>(0);
    auto kappa = std::make_shared<double>(0.5);
    sub->add_option("--limit", *limit)->required();
    sub->add_option("--kappa", *kappa, "window half-width multiplier, > 0");
    common.attach(sub, workers, out, format);
    sub->callback([&action, limit, kappa, &workers] {
      action = [limit, kappa, &workers] {
        const auto window = restricted_window(*limit, *kappa);
        const u64 count = restricted_first_moment(*limit, *kappa, workers);
        const u64 l0 = multiplicity_map(*limit, nullptr, workers).total;
        Report rep;
        rep.params = {{"command", std::string("conjecture")},
                      {"limit", *limit},
                      {"kappa", *kappa}};
        rep.table.columns = {"N", "kappa", "window_lo", "window_hi", "count", "l0"};
        rep.table.row({*limit, *kappa, window.lo, window.hi, count, l0});
        return rep;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the error message
    return code == 0 ? 0 : 2;
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    const Report rep = action();
    emit(rep, out, format);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::fprintf(stderr, "# done in %lld ms\n", static_cast<long long>(ms));
    return 0;
  } catch (const capacity_error& e) {
    std::fprintf(stderr, "capacity: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage: %s\n", e.what());
    return 2;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "usage: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace hyplab
