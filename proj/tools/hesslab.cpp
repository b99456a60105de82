// hesslab: orbit tables, decomposition tables, fiber polynomials, point
// counts and the Springer matching map, plus the verification harness.
#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hesslab/hesslab.hpp"
#include "hesslab/io.hpp"

using namespace hesslab;

namespace {

struct RunConfig {
  std::string command;
  int n = 2;
  int m = 1;
  std::int64_t q = 3;
  std::uint64_t seed = 0x48455353;  // fixed default for reproducibility
  int trials = 5;
  int threads = 0;  // 0: HESSLAB_THREADS or hardware
  std::string format = "text";
  bool tilde = false;
  std::uint64_t budget = 0;  // 0: library defaults

  int resolved_threads() const {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("HESSLAB_THREADS")) {
      int t = std::atoi(env);
      if (t > 0) return t;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
  }

  OracleBudget oracle_budget() const {
    OracleBudget b;
    if (budget > 0) {
      b.flag_work = budget;
      b.projective_points = budget;
    }
    return b;
  }

  // thread count is an execution detail, not configuration: outputs must be
  // byte-identical regardless of it, so it is not echoed
  json to_json() const {
    return json{{"n", n},           {"m", m},         {"q", q},      {"seed", seed},
                {"trials", trials}, {"format", format}, {"tilde", tilde}, {"budget", budget}};
  }
};

void emit(const RunConfig& cfg, const json& results, const std::string& csv,
          const std::string& text) {
  if (cfg.format == "json") {
    json out{{"command", cfg.command}, {"config", cfg.to_json()}, {"results", results}};
    std::cout << out.dump(2) << std::endl;
  } else if (cfg.format == "csv") {
    std::cout << csv;
  } else {
    std::cout << text;
  }
}

int cmd_orbits(const RunConfig& cfg) {
  auto rows = orbits_n3(cfg.n);
  json jrows = json::array();
  std::ostringstream csv, text;
  csv << "partition,dim,parity,gaps,systems\n";
  text << "K-orbits of order <= 3, N = " << 2 * cfg.n + 1 << "\n";
  for (const OrbitDescriptor& d : rows) {
    auto systems = local_systems(d.partition);
    json jd = d;
    json js = json::array();
    for (const auto& s : systems) js.push_back(to_string(s.kind));
    jd["systems"] = js;
    jrows.push_back(jd);
    csv << d.partition.to_string() << ',' << d.dim << ',' << to_string(d.parity) << ','
        << (d.gaps ? 1 : 0) << ',' << systems.size() << "\n";
    text << "  " << d.partition.to_string() << "  dim " << d.dim << "  " << to_string(d.parity)
         << (d.gaps ? "  gaps" : "") << "  systems:";
    for (const auto& s : systems) text << ' ' << to_string(s.kind);
    text << "\n";
  }
  emit(cfg, jrows, csv.str(), text.str());
  return 0;
}

int cmd_decompose(const RunConfig& cfg) {
  const int N = 2 * cfg.n + 1;
  DecompositionTable t =
      cfg.tilde ? decompose_Xtilde_minus(N, cfg.m) : decompose_X(N, cfg.m);
  Int oracle;
  if (cfg.tilde)
    oracle = primitive_middle_betti(CIProfile(N, std::vector<int>(cfg.m + 1, 2))) -
             decompose_X(N, cfg.m).total_dim;
  else
    oracle = primitive_middle_betti(CIProfile(N - 1, std::vector<int>(cfg.m, 2)));
  bool match = oracle == t.total_dim;

  json jt = t;
  jt["oracle"] = oracle.str();
  jt["match"] = match;
  std::ostringstream csv, text;
  csv << "family,i,j,dim\n";
  for (const MonoLabel& l : t.summands)
    csv << to_string(l.family) << ',' << l.i << ',' << l.j << ',' << l.dim << "\n";
  text << t.source << " for N = " << N << ":\n";
  for (const MonoLabel& l : t.summands) text << "  " << l.to_string() << "  dim " << l.dim << "\n";
  text << "total " << t.total_dim << ", cohomology oracle " << oracle << " => "
       << (match ? "match" : "MISMATCH") << "\n";
  emit(cfg, jt, csv.str(), text.str());
  return match ? 0 : 1;
}

int cmd_catalog(const RunConfig& cfg) {
  const int N = 2 * cfg.n + 1;
  auto cat = catalog(N);
  auto ids = identifications(N);
  json j{{"labels", cat}, {"identifications", ids}};
  std::ostringstream csv, text;
  csv << "family,i,j,dim\n";
  for (const MonoLabel& l : cat)
    csv << to_string(l.family) << ',' << l.i << ',' << l.j << ',' << l.dim << "\n";
  text << "catalog for N = " << N << " (" << cat.size() << " local systems)\n";
  for (const MonoLabel& l : cat) text << "  " << l.to_string() << "  dim " << l.dim << "\n";
  text << "identifications:\n";
  for (const Identification& id : ids)
    text << "  " << id.lhs.to_string() << " = " << id.rhs.to_string() << "  dim " << id.lhs.dim
         << "\n";
  emit(cfg, j, csv.str(), text.str());
  return 0;
}

int cmd_springer(const RunConfig& cfg) {
  SpringerReport rep = consistency_suite(cfg.n);
  json j = rep;
  std::ostringstream csv, text;
  csv << "family,i,j,orbit,system,status\n";
  for (const FourierImage& m : rep.map)
    csv << to_string(m.source.family) << ',' << m.source.i << ',' << m.source.j << ','
        << (m.status == FourierStatus::Unknown ? "?" : m.orbit.to_string()) << ','
        << (m.status == FourierStatus::Unknown ? "?" : to_string(m.system.kind)) << ','
        << to_string(m.status) << "\n";
  text << "Springer matching map, n = " << cfg.n << "\n";
  for (const FourierImage& m : rep.map) {
    text << "  " << m.source.to_string() << " -> ";
    if (m.status == FourierStatus::Unknown)
      text << "(unknown orbit in the order-3 cone)";
    else
      text << "(" << m.orbit.to_string() << ", " << to_string(m.system.kind) << ")";
    text << "  [" << to_string(m.status) << "]\n";
  }
  text << "checks:\n";
  for (const CheckResult& ch : rep.checks)
    text << "  " << ch.name << ": " << (ch.pass ? "pass" : "FAIL") << " (" << ch.lhs << " vs "
         << ch.rhs << ")\n";
  emit(cfg, j, csv.str(), text.str());
  return rep.all_pass() ? 0 : 1;
}

int cmd_fiber(const RunConfig& cfg, const std::string& flavor_name,
              const std::string& partition_csv) {
  Flavor fl = flavor_name == "O" ? Flavor::O : Flavor::E;
  std::vector<int> parts;
  std::stringstream ss(partition_csv);
  for (std::string tok; std::getline(ss, tok, ',');) parts.push_back(std::stoi(tok));
  Partition p(parts);
  const int N = p.n_total();
  PoincarePolynomial poly = fiber_poincare(fl, cfg.m, N, p);
  json j{{"flavor", to_string(fl)}, {"m", cfg.m}, {"N", N},
         {"partition", p},          {"poincare", poly}};
  std::ostringstream csv, text;
  csv << "degree,coefficient\n";
  for (int d = 0; d <= poly.degree(); ++d) csv << d << ',' << poly.coeff(d) << "\n";
  text << "fiber of the " << to_string(fl) << "-family, step " << cfg.m << ", over "
       << p.to_string() << ": " << poly.to_string() << "\n";
  std::string oracle_line;
  if (cfg.q <= 5 && N <= 9 && cfg.m <= 3) {
    try {
      NilpotentRep rep = nilpotent_representative(p, cfg.q);
      Int brute = brute_fiber_count(fl, cfg.m, rep, cfg.oracle_budget());
      bool match = poly.evaluate(cfg.q) == brute;
      j["oracle"] = {{"q", cfg.q}, {"count", brute.str()}, {"match", match}};
      text << "oracle at q=" << cfg.q << ": " << brute << " => "
           << (match ? "match" : "MISMATCH") << "\n";
      if (!match) {
        emit(cfg, j, csv.str(), text.str());
        return 1;
      }
    } catch (const BudgetExceeded&) {
      j["oracle"] = "skipped";
      text << "oracle skipped (budget)\n";
    }
  }
  emit(cfg, j, csv.str(), text.str());
  return 0;
}

int cmd_count(const RunConfig& cfg, const std::string& what, const std::string& branch_csv,
              bool doubled, bool infinity) {
  const int N = 2 * cfg.n + 1;
  json j;
  std::ostringstream csv, text;
  if (what == "quadrics") {
    std::mt19937_64 rng(cfg.seed);
    json samples = json::array();
    csv << "a,count\n";
    for (int t = 0; t < cfg.trials; ++t) {
      RegularTuple tup = random_regular_tuple(cfg.q, N, rng);
      Int cnt = count_quadric_intersection(N, cfg.m, tup, doubled, cfg.oracle_budget());
      json sample{{"a", tup.a}, {"count", cnt.str()}};
      samples.push_back(sample);
      std::ostringstream astr;
      for (std::size_t i = 0; i < tup.a.size(); ++i) astr << (i ? " " : "") << tup.a[i];
      csv << astr.str() << ',' << cnt << "\n";
      text << "a = (";
      for (std::size_t i = 0; i < tup.a.size(); ++i) text << (i ? "," : "") << tup.a[i];
      text << "): " << (doubled ? "#Xtilde" : "#X") << "_" << cfg.m << " = " << cnt << "\n";
    }
    j = json{{"N", N}, {"m", cfg.m}, {"q", cfg.q}, {"doubled", doubled}, {"samples", samples}};
  } else if (what == "curve") {
    std::vector<std::int64_t> branch;
    std::stringstream ss(branch_csv);
    for (std::string tok; std::getline(ss, tok, ',');) branch.push_back(std::stoll(tok));
    Int cnt = count_hyperelliptic(branch, infinity, cfg.q);
    j = json{{"branch", branch}, {"infinity", infinity}, {"q", cfg.q}, {"count", cnt.str()}};
    csv << "q,count\n" << cfg.q << ',' << cnt << "\n";
    text << "hyperelliptic count over F_" << cfg.q << ": " << cnt << "\n";
  } else {
    throw CLI::ValidationError("count", "unknown counting target");
  }
  emit(cfg, j, csv.str(), text.str());
  return 0;
}

// ---- verify: the acceptance criteria at configurable scale ----

struct VerifyItem {
  std::string name;
  std::function<std::string()> run;  // empty string = pass, "skip:..." = skipped
};

int run_verify(const RunConfig& cfg, std::vector<VerifyItem> items) {
  const int threads = std::min<int>(cfg.resolved_threads(), static_cast<int>(items.size()));
  std::vector<std::string> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        results[i] = items[i].run();
      } catch (const BudgetExceeded& e) {
        results[i] = std::string("skip: ") + e.what();
      } catch (const std::exception& e) {
        results[i] = std::string("error: ") + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  json jitems = json::array();
  std::ostringstream text;
  int failures = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string status = results[i].empty()               ? "pass"
                         : results[i].rfind("skip:", 0) == 0 ? "skipped"
                                                             : "fail";
    if (status == "fail") ++failures;
    jitems.push_back(json{{"name", items[i].name},
                          {"status", status},
                          {"detail", results[i]}});
    text << "  " << items[i].name << ": " << status;
    if (!results[i].empty()) text << "  (" << results[i] << ")";
    text << "\n";
  }
  text << (failures == 0 ? "all checks passed\n" : "FAILURES PRESENT\n");
  emit(cfg, jitems, text.str(), text.str());
  return failures == 0 ? 0 : 1;
}

std::vector<VerifyItem> verify_dims_items(int n_max) {
  std::vector<VerifyItem> items;
  items.push_back({"decomposition_totals", [n_max]() -> std::string {
    for (int N = 3; N <= 2 * n_max + 1; N += 2)
      for (int m = 1; m <= N - 1; ++m) {
        if (decompose_X(N, m).total_dim !=
            primitive_middle_betti(CIProfile(N - 1, std::vector<int>(m, 2))))
          return "X totals at N=" + std::to_string(N) + " m=" + std::to_string(m);
        if (decompose_X(N, m).total_dim + decompose_Xtilde_minus(N, m).total_dim !=
            primitive_middle_betti(CIProfile(N, std::vector<int>(m + 1, 2))))
          return "Xtilde totals at N=" + std::to_string(N) + " m=" + std::to_string(m);
      }
    return "";
  }});
  items.push_back({"wedge_telescoping", [n_max]() -> std::string {
    for (int g = 0; g <= n_max; ++g)
      for (int r = 0; r <= 2 * g; ++r) {
        Int sum = 0;
        for (int j = std::min(r, 2 * g - r); j >= 0; j -= 2) sum += sp_fundamental_dim(g, j);
        if (sum != binomial(2 * g, r)) return "telescoping at g=" + std::to_string(g);
      }
    return "";
  }});
  items.push_back({"catalog_cardinality", [n_max]() -> std::string {
    for (int n = 1; n <= n_max; ++n) {
      if (catalog(2 * n + 1).size() != static_cast<std::size_t>(n) * (n + 1) + 1)
        return "catalog at n=" + std::to_string(n);
      identifications(2 * n + 1);
    }
    return "";
  }});
  items.push_back({"family_dimension_parity", [n_max]() -> std::string {
    for (int n = 1; n <= std::min(n_max, 10); ++n)
      for (int m = 1; 2 * m <= 2 * n; ++m) {
        long e = family_dimension(Flavor::E, m, 2 * n + 1);
        long o = family_dimension(Flavor::O, m, 2 * n + 1);
        if (e % 2 != 0 || o % 2 != 1 ||
            e != static_cast<long>(m) * (4 * n - 3 * m + 5) - 2 * n - 2)
          return "family dims at n=" + std::to_string(n) + " m=" + std::to_string(m);
      }
    return "";
  }});
  items.push_back({"orbit_parity_rule", [n_max]() -> std::string {
    for (int N = 3; N <= 2 * n_max + 1; N += 2)
      for (const Partition& p : partitions_of(N, 3)) {
        Parity want = orbit_dimension(p) % 2 == 0 ? Parity::Even : Parity::Odd;
        if (orbit_parity(p) != want) return "parity at " + p.to_string();
      }
    return "";
  }});
  return items;
}

std::vector<VerifyItem> verify_pavings_items(int n_max, std::int64_t q, const OracleBudget& b) {
  std::vector<VerifyItem> items;
  items.push_back({"ogr_fiber_identity", []() -> std::string {
    for (int m = 1; m <= 6; ++m)
      for (int i = 0; i <= m - 1; ++i) {
        int N = 4 * m + 1, e2 = 2 * m - 1 - 2 * i;
        Partition p = Partition::from_exponents(i, e2, N - 3 * i - 2 * e2);
        if (fiber_poincare(Flavor::E, m, N, p) !=
            ogr_count(m - 1 - i, 2 * m - 1 - 2 * i, Witt::Split))
          return "identity at m=" + std::to_string(m) + " i=" + std::to_string(i);
      }
    return "";
  }});
  for (int N = 3; N <= std::min(2 * n_max + 1, 9); N += 2)
    for (int m = 1; m <= 3 && 2 * m <= N - 1; ++m)
      for (Flavor fl : {Flavor::E, Flavor::O}) {
        std::string name = std::string("fibers_") + to_string(fl) + "_m" + std::to_string(m) +
                           "_N" + std::to_string(N);
        items.push_back({name, [fl, m, N, q, b]() -> std::string {
          Partition img = image_partition(fl, m, N);
          for (const Partition& p : partitions_of(N, 3)) {
            if (!dominance_leq(p, img)) continue;
            NilpotentRep rep = nilpotent_representative(p, q);
            if (fiber_poincare(fl, m, N, p).evaluate(q) != brute_fiber_count(fl, m, rep, b))
              return "mismatch over " + p.to_string();
          }
          return "";
        }});
      }
  return items;
}

std::vector<VerifyItem> verify_counts_items(int n_max, std::uint64_t seed, int trials,
                                            const OracleBudget& b) {
  std::vector<VerifyItem> items;
  for (int N = 3; N <= std::min(2 * n_max + 1, 9); N += 2)
    items.push_back({"configuration_N" + std::to_string(N),
                     [N, seed, trials]() -> std::string {
      std::mt19937_64 rng(seed + N);
      RationalField qf;
      for (int m = 1; m <= N - 2; ++m) {
        for (std::int64_t p : {11LL, 101LL})
          for (int t = 0; t < trials; ++t)
            if (!configuration_check(m, random_regular_tuple(p, N, rng)))
              return "F" + std::to_string(p) + " m=" + std::to_string(m);
        std::uniform_int_distribution<int> d(-40, 40);
        for (int t = 0; t < trials; ++t) {
          std::vector<Rat> a;
          while (static_cast<int>(a.size()) < N) {
            Rat v(d(rng));
            if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
          }
          if (!configuration_check(qf, m, a)) return "Q m=" + std::to_string(m);
        }
      }
      return "";
    }});
  for (int N = 3; N <= std::min(2 * n_max + 1, 7); N += 2)
    items.push_back({"double_cover_N" + std::to_string(N),
                     [N, seed, trials, b]() -> std::string {
      for (std::int64_t q : {5LL, 7LL, 11LL}) {
        if (q < N) continue;
        for (int m = 1; m <= N - 1; ++m)
          for (int t = 0; t < trials; ++t) {
            std::mt19937_64 rng(seed + 1000 * N + 100 * q + 10 * m + t);
            if (!double_cover_consistency(N, m, random_regular_tuple(q, N, rng), b))
              return "q=" + std::to_string(q) + " m=" + std::to_string(m);
          }
      }
      return "";
    }});
  items.push_back({"weil_band", [seed, b]() -> std::string {
    for (int N : {5, 7}) {
      int m = N - 2;
      Int twog = decompose_X(N, m).total_dim;
      for (std::int64_t q : {7LL, 11LL, 13LL})
        for (int t = 0; t < 3; ++t) {
          std::mt19937_64 rng(seed + 77 * N + 7 * q + t);
          RegularTuple tup = random_regular_tuple(q, N, rng);
          Int cnt = count_quadric_intersection(N, m, tup, false, b);
          Int dev = cnt - (q + 1);
          if (dev < 0) dev = -dev;
          Int sq = 1;
          while (sq * sq < q) ++sq;
          if (dev > twog * sq) return "band at N=" + std::to_string(N) + " q=" + std::to_string(q);
        }
    }
    return "";
  }});
  return items;
}

std::vector<VerifyItem> verify_springer_items(int n_max) {
  std::vector<VerifyItem> items;
  for (int n = 1; n <= n_max; ++n)
    items.push_back({"springer_n" + std::to_string(n), [n]() -> std::string {
      SpringerReport rep = consistency_suite(n);
      for (const CheckResult& c : rep.checks)
        if (!c.pass)
          return c.name + " (" + std::to_string(c.lhs) + " vs " + std::to_string(c.rhs) + ")";
      return "";
    }});
  return items;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hesslab: exact nilpotent-orbit, Hessenberg-paving and monodromy calculator"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string flavor = "E", partition_csv, branch_csv, what = "quadrics";
  bool json_flag = false, doubled = false, infinity = false;
  int n_max = 8;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format: json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_flag("--json", json_flag, "shorthand for --format json");
    sub->add_option("--seed", cfg.seed, "PRNG seed (recorded for replay)");
    sub->add_option("--threads", cfg.threads, "worker threads (default HESSLAB_THREADS)");
    sub->add_option("--budget", cfg.budget, "oracle work budget override");
  };

  CLI::App* orbits = app.add_subcommand("orbits", "list the order-<=3 orbits for given n");
  orbits->add_option("--n", cfg.n, "rank n (N = 2n+1)")->required()->check(CLI::PositiveNumber);
  add_common(orbits);

  CLI::App* dec = app.add_subcommand("decompose", "primitive-cohomology decomposition tables");
  dec->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  dec->add_option("--m", cfg.m, "number of quadrics")->required();
  dec->add_flag("--tilde", cfg.tilde, "decompose the double-cover anti-invariants");
  add_common(dec);

  CLI::App* cat = app.add_subcommand("catalog", "the local-system catalog and identifications");
  cat->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  add_common(cat);

  CLI::App* spr = app.add_subcommand("springer", "matching map and consistency checks");
  spr->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
  add_common(spr);

  CLI::App* fib = app.add_subcommand("fiber", "Poincare polynomial of a Hessenberg fiber");
  fib->add_option("--flavor", flavor)->check(CLI::IsMember({"E", "O"}));
  fib->add_option("--m", cfg.m, "step parameter")->required();
  fib->add_option("--partition", partition_csv, "orbit partition, e.g. 3,2,1,1")->required();
  fib->add_option("--q", cfg.q, "prime for the oracle cross-check");
  add_common(fib);

  CLI::App* cnt = app.add_subcommand("count", "finite-field point-count experiments");
  cnt->add_option("what", what, "quadrics|curve")->check(CLI::IsMember({"quadrics", "curve"}));
  cnt->add_option("--n", cfg.n);
  cnt->add_option("--m", cfg.m);
  cnt->add_option("--q", cfg.q, "odd prime");
  cnt->add_option("--trials", cfg.trials);
  cnt->add_option("--branch", branch_csv, "branch points, e.g. 0,1,2");
  cnt->add_flag("--doubled", doubled, "count the double cover");
  cnt->add_flag("--infinity", infinity, "mark infinity as a branch point");
  add_common(cnt);

  CLI::App* ver = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  ver->add_option("suite", suite, "dims|pavings|counts|springer|all")
      ->check(CLI::IsMember({"dims", "pavings", "counts", "springer", "all"}));
  ver->add_option("--n-max", n_max, "largest rank to sweep");
  ver->add_option("--q", cfg.q, "prime for paving oracles");
  ver->add_option("--trials", cfg.trials);
  add_common(ver);

  CLI11_PARSE(app, argc, argv);
  if (json_flag) cfg.format = "json";

  try {
    if (orbits->parsed()) {
      cfg.command = "orbits";
      return cmd_orbits(cfg);
    }
    if (dec->parsed()) {
      cfg.command = "decompose";
      return cmd_decompose(cfg);
    }
    if (cat->parsed()) {
      cfg.command = "catalog";
      return cmd_catalog(cfg);
    }
    if (spr->parsed()) {
      cfg.command = "springer";
      return cmd_springer(cfg);
    }
    if (fib->parsed()) {
      cfg.command = "fiber";
      return cmd_fiber(cfg, flavor, partition_csv);
    }
    if (cnt->parsed()) {
      cfg.command = "count";
      return cmd_count(cfg, what, branch_csv, doubled, infinity);
    }
    if (ver->parsed()) {
      cfg.command = "verify";
      OracleBudget b = cfg.oracle_budget();
      if (cfg.budget == 0) b.projective_points = 30'000'000;
      std::vector<VerifyItem> items;
      auto extend = [&](std::vector<VerifyItem> more) {
        for (auto& it : more) items.push_back(std::move(it));
      };
      if (suite == "dims" || suite == "all") extend(verify_dims_items(n_max));
      if (suite == "pavings" || suite == "all") extend(verify_pavings_items(n_max, cfg.q, b));
      if (suite == "counts" || suite == "all")
        extend(verify_counts_items(n_max, cfg.seed, cfg.trials, b));
      if (suite == "springer" || suite == "all") extend(verify_springer_items(n_max));
      return run_verify(cfg, std::move(items));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
