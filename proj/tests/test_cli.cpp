#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hyplab/cli.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

int run(std::initializer_list<std::string> args) {
  std::vector<std::string> hold{"hyplab"};
  hold.insert(hold.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(hold.size());
  for (const auto& s : hold) argv.push_back(s.c_str());
  return hyplab::run_cli(static_cast<int>(argv.size()), argv.data());
}

// A scratch artifact path, removed on destruction.
struct Artifact {
  fs::path path;
  explicit Artifact(const std::string& name) : path(fs::temp_directory_path() / name) {
    std::error_code ec;
    fs::remove(path, ec);
  }
  ~Artifact() {
    std::error_code ec;
    fs::remove(path, ec);
  }
  std::string str() const { return path.string(); }
  std::string slurp() const {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  json parse() const { return json::parse(slurp()); }
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("legs artifacts: plain member array in json, one column in csv") {
  Artifact a("hyplab_test_legs.json");
  REQUIRE(run({"legs", "--kind", "odd", "--limit", "35", "--format", "json", "--out",
               a.str()}) == 0);
  const json j = a.parse();
  CHECK(j["results"] == json::array({3, 5, 9, 11, 15, 19, 21, 25, 29, 35}));
  CHECK(j["params"]["command"] == "legs");
  CHECK(j["params"]["kind"] == "odd");
  CHECK(j["params"]["limit"] == 35);
  CHECK(j["params"].size() == 3);  // no workers/out/format echo
  CHECK(j["timing_ms"].is_null());

  Artifact c("hyplab_test_legs.csv");
  REQUIRE(run({"legs", "--limit", "10", "--out", c.str()}) == 0);
  CHECK(c.slurp() == "n\n2\n4\n6\n10\n");
}

TEST_CASE("sector artifact carries the count and window diagnostics") {
  Artifact a("hyplab_test_sector.json");
  REQUIRE(run({"sector", "--x", "100", "--beta", "0", "--gamma", "1.5707963267948966",
               "--format", "json", "--out", a.str()}) == 0);
  const json j = a.parse();
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["count"] == 23);
  CHECK(j["results"][0]["x"] == 100);
  CHECK(j["results"][0]["gamma_in_range"] == true);
  CHECK(j["results"][0]["hl_ratio"].is_number());
  // degenerate window: zero count and a null ratio
  Artifact b("hyplab_test_sector0.json");
  REQUIRE(run({"sector", "--x", "100", "--gamma", "0", "--format", "json", "--out",
               b.str()}) == 0);
  CHECK(b.parse()["results"][0]["count"] == 0);
  CHECK(b.parse()["results"][0]["hl_ratio"].is_null());
}

TEST_CASE("density csv across checkpoint tokens") {
  Artifact a("hyplab_test_density.csv");
  REQUIRE(run({"density", "--limit", "100000", "--checkpoints", "10^3,10^4,10^5", "--out",
               a.str()}) == 0);
  const auto rows = lines(a.slurp());
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "N,count,ratio,delta");
  CHECK(rows[1].rfind("1000,243,0.243,", 0) == 0);
  CHECK(rows[2].rfind("10000,2324,0.2324,", 0) == 0);
  CHECK(rows[3].rfind("100000,22228,0.22228,", 0) == 0);

  CHECK(run({"density", "--checkpoints", "10,100", "--limit", "50"}) == 2);  // exceeds limit
  CHECK(run({"density"}) == 2);  // neither limit nor checkpoints
  CHECK(run({"density", "--checkpoints", "10^20,10^21", "--out", "ignored.csv"}) == 2);
}

TEST_CASE("mertens, moment and conjecture artifacts have the uniform shape") {
  Artifact m("hyplab_test_mertens.json");
  REQUIRE(run({"mertens", "--limit", "100", "--format", "json", "--out", m.str()}) == 0);
  const json jm = m.parse();
  REQUIRE(jm.contains("params"));
  REQUIRE(jm.contains("results"));
  REQUIRE(jm.contains("timing_ms"));
  CHECK(jm["timing_ms"].is_null());
  CHECK(jm["results"][0]["N"] == 100);
  CHECK(jm["results"][0]["sum"].get<double>() == doctest::Approx(2.508094191474671));
  CHECK(jm["results"][0]["gap"].get<double>() == doctest::Approx(0.9809145656667699));

  Artifact mo("hyplab_test_moment.json");
  REQUIRE(run({"moment", "--limit", "100", "--format", "json", "--out", mo.str()}) == 0);
  const json jo = mo.parse();
  const auto& row = jo["results"][0];
  CHECK(row["l0"] == 98);
  CHECK(row["l1"] == 90);
  CHECK(row["l2"] == 29);
  CHECK(row["l3"] == 29);
  CHECK(row["kept"] == 4);
  CHECK(row["s_n"] == 8);
  CHECK(row["distinct_products"] == 2);
  CHECK(row["c_of_n"] == 26);
  CHECK(row["cauchy_pass"] == true);

  Artifact co("hyplab_test_conjecture.json");
  REQUIRE(run({"conjecture", "--limit", "100", "--kappa", "0.5", "--format", "json",
               "--out", co.str()}) == 0);
  const json jc = co.parse();
  const auto& crow = jc["results"][0];
  CHECK(crow["count"] == 34);
  CHECK(crow["l0"] == 98);
  CHECK(crow["window_lo"].get<double>() == doctest::Approx(0.33803742344591037));
  CHECK(crow["window_hi"].get<double>() == doctest::Approx(1.8652170492538116));
}

TEST_CASE("hr, exceptional and dyadic artifacts") {
  Artifact h("hyplab_test_hr.json");
  REQUIRE(run({"hr", "--limit", "100", "--format", "json", "--out", h.str()}) == 0);
  const json jh = h.parse();
  REQUIRE(jh["results"].size() == 3);
  CHECK(jh["results"][0]["i"] == 1);
  CHECK(jh["results"][0]["count"] == 35);
  CHECK(jh["results"][0]["ratio"].get<double>() == doctest::Approx(1.611809565095832));

  Artifact e("hyplab_test_exceptional.json");
  REQUIRE(run({"exceptional", "--limit", "100", "--format", "json", "--out", e.str()}) == 0);
  const json je = e.parse();
  const auto& erow = je["results"][0];
  CHECK(erow["omega_cap"] == 2);
  CHECK(erow["e1_size"] == 8);
  CHECK(erow["e2_size"] == 72);
  CHECK(erow["exponent"].get<double>() == doctest::Approx(0.08607133205593431));

  Artifact d("hyplab_test_dyadic.json");
  REQUIRE(run({"dyadic", "--limit", "10000", "--format", "json", "--out", d.str()}) == 0);
  const json jd = d.parse();
  REQUIRE(jd["results"].size() == 1);
  CHECK(jd["results"][0]["i"] == 1);
  CHECK(jd["results"][0]["x"] == 5000);
  CHECK(jd["results"][0]["count"] == 330);
  CHECK(jd["results"][0]["running_total"] == 330);
}

TEST_CASE("remainder and local-density checks run clean on sampled instances") {
  Artifact a("hyplab_test_brun.csv");
  REQUIRE(run({"brun-check", "--instances", "2", "--x-checkpoints", "10^2", "--d-max",
               "50", "--local-prime-max", "100", "--z", "100", "--out", a.str()}) == 0);
  const auto rows = lines(a.slurp());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] ==
        "instance,a,b0,d_checked,remainder_violations,max_remainder_ratio,local_checked,"
        "local_violations");
  for (size_t i = 1; i < rows.size(); ++i) {
    std::vector<std::string> f;
    std::string cur;
    for (char ch : rows[i] + ",") {
      if (ch == ',') {
        f.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    REQUIRE(f.size() == 8);
    CHECK(f[4] == "0");              // remainder violations
    CHECK(f[6] == "25");             // primes below 100
    CHECK(f[7] == "0");              // local violations
  }
}

TEST_CASE("exit codes separate usage, capacity and success") {
  CHECK(run({"nonsense"}) == 2);
  CHECK(run({"legs"}) == 2);                                   // missing --limit
  CHECK(run({"legs", "--limit", "10", "--format", "xml"}) == 2);
  CHECK(run({"legs", "--limit", "2000000000"}) == 3);          // capacity
  CHECK(run({"legs", "--limit", "0"}) == 2);                   // rejected downstream
  CHECK(run({"moment", "--limit", "100", "--epsilon", "0"}) == 2);
  CHECK(run({"moment", "--limit", "20000000"}) == 3);
  CHECK(run({"sector", "--x", "100", "--gamma", "2.0"}) == 2);
  CHECK(run({"legs", "--limit", "10", "--workers", "0"}) == 2);
  CHECK(run({"legs", "--limit", "10", "--out", "/nonexistent_dir_zz/x.csv"}) == 2);
  CHECK(run({"--help"}) == 0);
  CHECK(run({"legs", "--help"}) == 0);
}

TEST_CASE("artifacts are byte-stable across repeats and worker counts") {
  Artifact a("hyplab_test_stable_a.json");
  Artifact b("hyplab_test_stable_b.json");
  REQUIRE(run({"density", "--checkpoints", "10^3,10^4", "--format", "json", "--out",
               a.str()}) == 0);
  REQUIRE(run({"density", "--checkpoints", "10^3,10^4", "--format", "json", "--out",
               b.str(), "--workers", "4"}) == 0);
  CHECK(a.slurp() == b.slurp());

  Artifact c("hyplab_test_stable_c.json");
  Artifact d("hyplab_test_stable_d.json");
  REQUIRE(run({"moment", "--limit", "2000", "--format", "json", "--out", c.str(),
               "--workers", "1"}) == 0);
  REQUIRE(run({"moment", "--limit", "2000", "--format", "json", "--out", d.str(),
               "--workers", "4"}) == 0);
  CHECK(c.slurp() == d.slurp());
  // the artifact never names the worker count
  CHECK(c.slurp().find("workers") == std::string::npos);
}
