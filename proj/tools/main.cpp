// Command-line front end: counting, seed tables, family dumps, verification
// suites, single compositions, growth rates, and plot-ready ratio data.
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclecomb/bounds.hpp"
#include "cyclecomb/compose.hpp"
#include "cyclecomb/dyck.hpp"
#include "cyclecomb/seeds.hpp"
#include "cyclecomb/verify.hpp"

using namespace cyclecomb;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

int default_threads() {
  if (const char* env = std::getenv("CYCLECOMB_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct CommonOptions {
  std::string pattern = "all";
  int min_n = 2;
  int max_n = 13;
  int max_k = 4;
  int threads = default_threads();
  std::string format = "text";
  std::uint64_t node_budget = 2'000'000'000;
  std::string fixtures;

  EnumLimits limits() const { return {threads, node_budget}; }
  std::vector<Pattern> patterns() const {
    if (pattern == "all")
      return {kAllPatterns.begin(), kAllPatterns.end()};
    return {pattern_from_string(pattern)};
  }
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_pattern = true) {
  if (with_pattern)
    cmd->add_option("--pattern,-p", opt.pattern,
                    "pattern tag (123, 132, 213, 231, 312, 321) or 'all'");
  cmd->add_option("--threads,-t", opt.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format,-f", opt.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--node-budget", opt.node_budget,
                  "abort enumerations beyond this many search nodes");
  cmd->add_option("--fixtures", opt.fixtures,
                  "directory with manifest.json naming b-files");
}

json perm_to_json(const Permutation& p) {
  json a = json::array();
  for (std::uint8_t v : p.values()) a.push_back(int(v));
  return a;
}

json report_to_json(const Report& r) {
  json details = json::array();
  for (const auto& c : r.checks)
    details.push_back(
        {{"name", c.name}, {"passed", c.passed}, {"details", c.details}});
  return {{"name", r.name}, {"passed", r.passed()}, {"details", details}};
}

void print_report(const Report& r, const std::string& format) {
  if (format == "json") {
    std::cout << report_to_json(r).dump(2) << '\n';
    return;
  }
  for (const auto& c : r.checks) {
    std::cout << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.details.empty()) std::cout << "  [" << c.details << "]";
    std::cout << '\n';
  }
  std::cout << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " ("
            << r.checks.size() << " checks)\n";
}

int cmd_count(const CommonOptions& opt, bool brute_check) {
  CountTable table;
  if (!opt.fixtures.empty()) load_fixture_dir(table, opt.fixtures);
  const auto patterns = opt.patterns();
  for (Pattern sigma : patterns)
    for (int n = opt.min_n; n <= opt.max_n; ++n) {
      count_cyclic(n, sigma, table, opt.limits());
      if (brute_check && n <= 9) {
        const auto slow = brute_force_count(n, sigma);
        if (slow != table.require(sigma, n))
          throw CountMismatch("brute-force disagreement at c_" +
                              std::to_string(n) + "(" +
                              std::string(to_string(sigma)) + ")");
      }
    }

  if (opt.format == "csv") {
    CountTable out;
    for (Pattern sigma : patterns)
      for (int n = opt.min_n; n <= opt.max_n; ++n)
        out.insert(sigma, n, table.require(sigma, n),
                   table.entries().at({sigma, n}).provenance);
    write_counts_csv(std::cout, out);
  } else if (opt.format == "json") {
    json rows = json::array();
    for (Pattern sigma : patterns)
      for (int n = opt.min_n; n <= opt.max_n; ++n)
        rows.push_back(
            {{"pattern", to_string(sigma)},
             {"n", n},
             {"count", table.require(sigma, n)},
             {"provenance",
              to_string(table.entries().at({sigma, n}).provenance)}});
    std::cout << rows.dump(2) << '\n';
  } else {
    std::cout << "n";
    for (Pattern sigma : patterns) std::cout << '\t' << to_string(sigma);
    std::cout << '\n';
    for (int n = opt.min_n; n <= opt.max_n; ++n) {
      std::cout << n;
      for (Pattern sigma : patterns)
        std::cout << '\t' << table.require(sigma, n);
      std::cout << '\n';
    }
  }
  return kExitOk;
}

int cmd_ak(const CommonOptions& opt) {
  for (Pattern sigma : opt.patterns()) {
    const auto rows = ak_table(sigma, opt.max_k, opt.limits());
    if (opt.format == "json") {
      json out = json::array();
      for (const auto& r : rows) {
        json row = {{"pattern", to_string(sigma)},
                    {"k", r.k},
                    {"overlap", r.overlap},
                    {"a_k", r.a_k}};
        row["a_prime"] = r.a_prime ? json(*r.a_prime) : json(nullptr);
        out.push_back(row);
      }
      std::cout << out.dump(2) << '\n';
    } else if (opt.format == "csv") {
      write_ak_csv(std::cout, sigma, rows);
    } else {
      std::cout << "pattern " << to_string(sigma)
                << ": k, a_prime, overlap, a_k\n";
      for (const auto& r : rows) {
        std::cout << r.k << ", ";
        if (r.a_prime) std::cout << *r.a_prime;
        else std::cout << "-";
        std::cout << ", " << r.overlap << ", " << r.a_k << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_xsets(const CommonOptions& opt, int k, int n) {
  const Pattern sigma = pattern_from_string(opt.pattern);
  SeedTables tables(sigma, opt.limits());
  const auto fam = tables.family(k, n);
  if (opt.format == "json") {
    json members = json::array();
    for (const auto& p : fam) members.push_back(perm_to_json(p));
    std::cout << json{{"pattern", to_string(sigma)},
                      {"k", k},
                      {"n", n},
                      {"members", members}}
                     .dump(2)
              << '\n';
  } else {
    for (const auto& p : fam) std::cout << p.str() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const CommonOptions& opt, const std::string& suite) {
  CountTable table;
  if (!opt.fixtures.empty()) load_fixture_dir(table, opt.fixtures);
  VerifyOptions vo{opt.max_n, opt.max_k, opt.min_n, opt.limits()};
  const Report report = run_verify_suite(suite, vo, table);
  print_report(report, opt.format);
  return report.passed() ? kExitOk : kExitVerification;
}

int cmd_compose(const CommonOptions& opt, const std::string& op_name,
                const std::string& alpha_text, const std::string& beta_text,
                bool show_cycle) {
  const OpKind op = op_from_string(op_name);
  const Permutation alpha = Permutation::parse(alpha_text);
  const Permutation beta = Permutation::parse(beta_text);
  const Permutation result = compose(op, alpha, beta);
  const bool closed = op != OpKind::odot321 || odot321_closure_ok(alpha, beta);
  if (!closed)
    std::cerr << "advisory: closure not guaranteed; the result may lie "
                 "outside the cyclic 321-avoiders\n";
  if (opt.format == "json") {
    json out = {{"op", op_name}, {"result", perm_to_json(result)}};
    if (show_cycle && is_cyclic(result)) out["cycle"] = to_cycle(result).str();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << result.str() << '\n';
    if (show_cycle && is_cyclic(result))
      std::cout << to_cycle(result).str() << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const CommonOptions& opt, const std::string& pi_text,
                  int k) {
  const Permutation pi = Permutation::parse(pi_text);
  std::pair<Permutation, Permutation> parts{Permutation::identity(1),
                                            Permutation::identity(1)};
  if (k >= 0) {
    parts = unstar312(pi, k);
  } else {
    auto s = split312(pi);
    parts = {std::move(s.left), std::move(s.right)};
  }
  if (opt.format == "json")
    std::cout << json{{"left", perm_to_json(parts.first)},
                      {"right", perm_to_json(parts.second)}}
                     .dump(2)
              << '\n';
  else
    std::cout << parts.first.str() << " | " << parts.second.str() << '\n';
  return kExitOk;
}

int cmd_growth(const CommonOptions& opt, const std::string& preset_name,
               const std::string& coeff_text, const std::string& pattern_text,
               double tol) {
  std::vector<std::pair<std::string, GrowthResult>> rows;
  std::vector<int> degrees;
  auto run = [&](const Recurrence& rec) {
    rows.emplace_back(rec.label, growth_rate(rec, tol));
    degrees.push_back(rec.degree());
  };
  if (!coeff_text.empty()) {
    Recurrence custom;
    custom.pattern = pattern_from_string(pattern_text);
    std::string token;
    std::istringstream is(coeff_text);
    while (std::getline(is, token, ','))
      custom.coeffs.push_back(std::stoll(token));
    custom.min_n = custom.degree() + 1;
    custom.label = "custom";
    custom.validate();
    run(custom);
  } else if (preset_name == "all") {
    for (const auto& name : preset_names()) run(preset(name));
  } else {
    run(preset(preset_name));
  }

  if (opt.format == "csv") {
    write_growth_csv(std::cout, rows, degrees);
  } else if (opt.format == "json") {
    json out = json::array();
    for (std::size_t i = 0; i < rows.size(); ++i)
      out.push_back({{"preset", rows[i].first},
                     {"degree", degrees[i]},
                     {"root", rows[i].second.root},
                     {"residual", rows[i].second.residual}});
    std::cout << out.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i)
      std::cout << rows[i].first << ": root "
                << format_ratio(rows[i].second.root) << " (degree "
                << degrees[i] << ", residual " << rows[i].second.residual
                << ")\n";
  }
  return kExitOk;
}

int cmd_ratios(const CommonOptions& opt, const std::string& num_text,
               const std::string& den_text) {
  const Pattern num = pattern_from_string(num_text);
  const Pattern den = pattern_from_string(den_text);
  CountTable table;
  if (!opt.fixtures.empty()) load_fixture_dir(table, opt.fixtures);
  for (Pattern sigma : {num, den})
    for (int n = opt.min_n; n <= opt.max_n; ++n)
      if (!table.lookup(sigma, n)) {
        if (n > 16)
          throw MissingCount("counts beyond n=16 need fixtures (c_" +
                             std::to_string(n) + ")");
        count_cyclic(n, sigma, table, opt.limits());
      }
  const auto points = ratio_series(num, den, table, opt.min_n, opt.max_n);
  if (opt.format == "json") {
    json out = json::array();
    for (const auto& pt : points)
      out.push_back({{"num", num_text},
                     {"den", den_text},
                     {"n", pt.n},
                     {"ratio", pt.value}});
    std::cout << out.dump(2) << '\n';
  } else if (opt.format == "csv") {
    write_ratios_csv(std::cout, num, den, points);
  } else {
    for (const auto& pt : points)
      std::cout << pt.n << '\t' << format_ratio(pt.value) << '\n';
  }
  return kExitOk;
}

int cmd_dyck(const std::string& action, const std::string& perm_text,
             const std::string& path_text, int index) {
  if (action == "encode") {
    std::cout << to_dyck(Permutation::parse(perm_text)).str() << '\n';
  } else if (action == "decode") {
    std::cout << from_dyck(DyckPath::parse(path_text)).str() << '\n';
  } else if (action == "insert") {
    std::cout << insert_ud(DyckPath::parse(path_text), index).str() << '\n';
  } else if (action == "augment-left") {
    std::cout << augment_left(Permutation::parse(perm_text)).str() << '\n';
  } else if (action == "augment-right") {
    std::cout << augment_right(Permutation::parse(perm_text)).str() << '\n';
  } else {
    throw ParseError("unknown dyck action: " + action);
  }
  return kExitOk;
}

int cmd_bench(const CommonOptions& opt) {
  std::cout << "pattern,n,count,millis,threads\n";
  for (Pattern sigma : opt.patterns())
    for (int n = opt.min_n; n <= opt.max_n; ++n) {
      const auto start = std::chrono::steady_clock::now();
      const auto count = count_cyclic_avoiders(n, sigma, opt.limits());
      const auto elapsed =
          std::chrono::duration_cast<std::chrono::milliseconds>(
              std::chrono::steady_clock::now() - start)
              .count();
      std::cout << to_string(sigma) << ',' << n << ',' << count << ','
                << elapsed << ',' << opt.threads << '\n';
    }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclecomb: composition structures on cyclic pattern-avoiding "
               "permutations"};
  app.require_subcommand(1);

  CommonOptions opt;

  auto* count = app.add_subcommand("count", "enumerate c_n(sigma)");
  add_common(count, opt);
  count->add_option("--max-n", opt.max_n, "largest n")->required();
  count->add_option("--min-n", opt.min_n, "smallest n");
  bool brute_check = false;
  count->add_flag("--brute-check", brute_check,
                  "cross-check n <= 9 against the factorial oracle");

  auto* ak = app.add_subcommand("ak", "seed-set count table");
  add_common(ak, opt);
  ak->add_option("--max-k", opt.max_k, "largest k")->required();

  auto* xsets = app.add_subcommand("xsets", "dump one family X_{k,n}");
  add_common(xsets, opt);
  int xk = 1, xn = 4;
  xsets->add_option("--k", xk, "family index")->required();
  xsets->add_option("--n", xn, "target length")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, opt, false);
  std::string suite;
  int verify_max_n = 9, verify_max_k = 4, verify_min_n = 4;
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_option("--max-n", verify_max_n, "exhaustiveness bound");
  verify->add_option("--max-k", verify_max_k, "seed depth bound");
  verify->add_option("--min-n", verify_min_n,
                     "first n for the empirical-status checks");

  auto* compose_cmd = app.add_subcommand("compose", "apply one operation");
  add_common(compose_cmd, opt, false);
  std::string op_name, alpha_text, beta_text;
  bool show_cycle = false;
  compose_cmd
      ->add_option("--op", op_name, "star312, odot321, star123 or cstar132")
      ->required();
  compose_cmd->add_option("--alpha", alpha_text, "left operand")->required();
  compose_cmd->add_option("--beta", beta_text, "right operand")->required();
  compose_cmd->add_flag("--cycle", show_cycle,
                        "also print the result in cycle notation");

  auto* decompose =
      app.add_subcommand("decompose", "split a 312-avoiding cycle");
  add_common(decompose, opt, false);
  std::string pi_text;
  int cut_k = -1;
  decompose->add_option("--pi", pi_text, "permutation to split")->required();
  decompose->add_option("--k", cut_k,
                        "cut prefix length (omit to split at the value 2)");

  auto* growth = app.add_subcommand("growth", "characteristic growth rate");
  add_common(growth, opt, false);
  std::string preset_name = "all", coeff_text, pattern_text = "312";
  double tol = 1e-10;
  growth->add_option("--preset", preset_name, "preset name or 'all'");
  growth->add_option("--coeffs", coeff_text,
                     "comma-separated signed coefficients a_1..a_d");
  growth->add_option("--coeff-pattern", pattern_text,
                     "pattern tag for --coeffs");
  growth->add_option("--tol", tol, "bisection bracket width");

  auto* ratios = app.add_subcommand("ratios", "c_n(num)/c_n(den) series");
  add_common(ratios, opt, false);
  std::string num_text, den_text;
  int ratio_min_n = 6, ratio_max_n = 13;
  ratios->add_option("--num", num_text, "numerator pattern")->required();
  ratios->add_option("--den", den_text, "denominator pattern")->required();
  ratios->add_option("--min-n", ratio_min_n, "first n");
  ratios->add_option("--max-n", ratio_max_n, "last n");

  auto* dyck = app.add_subcommand("dyck", "Dyck-path encoding utilities");
  add_common(dyck, opt, false);
  std::string action, perm_text, path_text;
  int index = 0;
  dyck->add_option("--action", action,
                   "encode, decode, insert, augment-left or augment-right")
      ->required();
  dyck->add_option("--perm", perm_text, "one-line permutation");
  dyck->add_option("--path", path_text, "path over {u, d}");
  dyck->add_option("--index", index, "steps before the spliced ud");

  auto* bench = app.add_subcommand("bench", "time the cyclic counts");
  add_common(bench, opt);
  bench->add_option("--max-n", opt.max_n, "largest n")->required();
  bench->add_option("--min-n", opt.min_n, "smallest n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(count)) return cmd_count(opt, brute_check);
    if (app.got_subcommand(ak)) return cmd_ak(opt);
    if (app.got_subcommand(xsets)) return cmd_xsets(opt, xk, xn);
    if (app.got_subcommand(verify)) {
      CommonOptions vopt = opt;
      vopt.max_n = verify_max_n;
      vopt.max_k = verify_max_k;
      vopt.min_n = verify_min_n;
      return cmd_verify(vopt, suite);
    }
    if (app.got_subcommand(compose_cmd))
      return cmd_compose(opt, op_name, alpha_text, beta_text, show_cycle);
    if (app.got_subcommand(decompose)) return cmd_decompose(opt, pi_text, cut_k);
    if (app.got_subcommand(growth))
      return cmd_growth(opt, preset_name, coeff_text, pattern_text, tol);
    if (app.got_subcommand(ratios)) {
      CommonOptions ropt = opt;
      ropt.min_n = ratio_min_n;
      ropt.max_n = ratio_max_n;
      return cmd_ratios(ropt, num_text, den_text);
    }
    if (app.got_subcommand(dyck))
      return cmd_dyck(action, perm_text, path_text, index);
    if (app.got_subcommand(bench)) return cmd_bench(opt);
    return kExitUsage;
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition failed (" << to_string(e.which)
              << "): " << e.what() << '\n';
    return kExitUsage;
  } catch (const LimitExceeded& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "bad argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MissingCount& e) {
    std::cerr << "missing counts (supply fixtures): " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownPreset& e) {
    std::cerr << "bad argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
