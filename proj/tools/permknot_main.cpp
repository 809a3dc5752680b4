#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permknot/diagram.hpp"
#include "permknot/permutation.hpp"
#include "permknot/recursions.hpp"
#include "permknot/series.hpp"
#include "permknot/statistics.hpp"

namespace {

using nlohmann::json;
using namespace permknot;

// Exit codes shared with the test harness: 0 success, 1 unexpected internal
// error, 2 parse/usage error, 3 bound exceeded, 4 I/O failure, 5 decider
// disagreement (the three methods are provably equivalent, so this is
// unreachable in a correct build).
constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;
constexpr int kExitIo = 4;
constexpr int kExitViolation = 5;

constexpr int kMaxEnumerate = 10;
constexpr int kDefaultVerifyMax = 8;
constexpr int kDefaultVerifyCap = 10;

const char* verdict(bool b) { return b ? "true" : "false"; }

int run_stats(const std::string& text, bool as_json) {
  const Permutation w = parse_permutation(text);
  const StatSummary s = stats(w);
  if (as_json) {
    json out{{"permutation", w.entries()},
             {"length", s.length},
             {"reflection_length", s.reflection_length},
             {"total_displacement", s.total_displacement},
             {"depth", s.depth},
             {"shallow", s.shallow}};
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  std::cout << "permutation=" << to_string(w) << '\n'
            << "length=" << s.length << '\n'
            << "reflection_length=" << s.reflection_length << '\n'
            << "total_displacement=" << s.total_displacement << '\n'
            << "depth=" << s.depth << '\n'
            << "shallow=" << verdict(s.shallow) << '\n';
  return kExitOk;
}

int run_check(const std::string& text, const std::string& method, bool as_json) {
  const Permutation w = parse_permutation(text);
  const bool want_all = method == "all";
  json out;
  bool first = true;
  bool agree = true;
  bool verdict_any = false;
  const auto report = [&](const char* name, bool value) {
    if (as_json) {
      out[name] = value;
    } else {
      std::cout << name << '=' << verdict(value) << '\n';
    }
    if (first) {
      verdict_any = value;
      first = false;
    } else if (value != verdict_any) {
      agree = false;
    }
  };
  if (want_all || method == "definition") report("definition", is_shallow(w));
  if (want_all || method == "hm") report("hm", is_shallow_hm(w));
  if (want_all || method == "cm") report("cm", is_unlinked_cm(w));
  if (want_all) {
    if (as_json) {
      out["agreement"] = agree;
    } else {
      std::cout << "agreement=" << verdict(agree) << '\n';
    }
  }
  if (as_json) std::cout << out.dump() << '\n';
  if (!agree) {
    std::cerr << "error: deciders disagree on " << to_string(w) << '\n';
    return kExitViolation;
  }
  return kExitOk;
}

int run_enumerate(int n, bool shallow_only) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > kMaxEnumerate) {
    throw std::domain_error("enumeration is limited to n <= " + std::to_string(kMaxEnumerate));
  }
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::string line;
  do {
    const Permutation w(Permutation::unchecked, v);
    if (shallow_only && !is_shallow(w)) continue;
    line.clear();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) line += ',';
      line += std::to_string(v[i]);
    }
    line += '\n';
    std::cout << line;
  } while (std::next_permutation(v.begin(), v.end()));
  return kExitOk;
}

int run_count(int n, const std::string& method) {
  BigInt count;
  if (method == "series") {
    if (n < 0) throw std::invalid_argument("series index must be nonnegative");
    count = series_coefficients(n)[n];
  } else {
    const CountMethod m = method == "exhaustive" ? CountMethod::Exhaustive : CountMethod::Generator;
    count = count_shallow(n, m);
  }
  std::cout << "n=" << n << '\n' << "method=" << method << '\n' << "count=" << count << '\n';
  return kExitOk;
}

int run_series(int order) {
  const IntSeries s = series_coefficients(order);
  for (int k = 0; k <= s.order(); ++k) std::cout << s[k] << '\n';
  return kExitOk;
}

int run_diagram(const std::string& text, const std::string& format, const std::string& out_path) {
  const Permutation w = parse_permutation(text);
  const Diagram d = build_diagram(w);
  const FigureFormat f = format == "tikz" ? FigureFormat::Tikz : FigureFormat::Svg;
  const std::string body = export_figure(d, f);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open " << out_path << " for writing\n";
    return kExitIo;
  }
  out << body;
  out.flush();
  if (!out) {
    std::cerr << "error: write to " << out_path << " failed\n";
    return kExitIo;
  }

  std::cout << "components=" << d.component_count << '\n';
  for (int a = 0; a < d.component_count; ++a) {
    for (int b = a + 1; b < d.component_count; ++b) {
      std::cout << "linking[" << a << ',' << b << "]=" << linking_number(d, a, b) << '\n';
    }
  }
  return kExitOk;
}

int run_verify(int max_n, int cap) {
  if (max_n < 1) throw std::invalid_argument("verification needs max-n >= 1");
  if (cap < 1) throw std::invalid_argument("verification needs cap >= 1");
  if (max_n > cap) {
    std::cerr << "error: max-n " << max_n << " exceeds cap " << cap
              << " (raise --cap explicitly to go further)\n";
    return kExitBound;
  }

  const auto start = std::chrono::steady_clock::now();
  for (int n = 1; n <= max_n; ++n) {
    UnlinkCache cache;
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::uint64_t count = 0;
    do {
      const Permutation w(Permutation::unchecked, v);
      const bool by_def = is_shallow(w);
      const bool by_hm = is_shallow_hm(w);
      const bool by_cm = is_unlinked_cm(w, cache);
      if (by_def != by_hm || by_def != by_cm) {
        std::cout << "counterexample=" << to_string(w) << " definition=" << verdict(by_def)
                  << " hm=" << verdict(by_hm) << " cm=" << verdict(by_cm) << '\n';
        std::cerr << "error: deciders disagree on " << to_string(w) << '\n';
        return kExitViolation;
      }
      if (by_def) ++count;
    } while (std::next_permutation(v.begin(), v.end()));
    std::cout << "n=" << n << " count=" << count << '\n';
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::cout << "counterexamples=0\n" << "elapsed_ms=" << elapsed.count() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation statistics, shallowness deciders, knot diagrams, and shallow counting"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string method = "all";
  std::string count_method;
  std::string format = "svg";
  std::string out_path;
  bool as_json = false;
  bool shallow_only = false;
  int n = 0;
  int order = 0;
  int max_n = kDefaultVerifyMax;
  int cap = kDefaultVerifyCap;

  CLI::App* c_stats = app.add_subcommand("stats", "Print distance statistics of a permutation");
  c_stats->add_option("perm", perm_text, "one-line permutation, e.g. 7563421 or 7,5,6,3,4,2,1")
      ->required();
  c_stats->add_flag("--json", as_json, "emit a single JSON object instead of key=value lines");

  CLI::App* c_check = app.add_subcommand("check", "Decide shallowness by one or all methods");
  c_check->add_option("perm", perm_text, "one-line permutation")->required();
  c_check->add_option("--method", method, "decision method")
      ->check(CLI::IsMember({"definition", "hm", "cm", "all"}))
      ->capture_default_str();
  c_check->add_flag("--json", as_json, "emit a single JSON object instead of key=value lines");

  CLI::App* c_enum = app.add_subcommand("enumerate", "List S_n in lexicographic order");
  c_enum->add_option("n", n, "symmetric group degree (1..10)")->required();
  c_enum->add_flag("--shallow-only", shallow_only, "keep only shallow permutations");

  CLI::App* c_count = app.add_subcommand("count", "Count shallow permutations of S_n");
  c_count->add_option("n", n, "symmetric group degree")->required();
  c_count->add_option("--method", count_method, "exhaustive (n <= 10), generator (n <= 13), or series")
      ->check(CLI::IsMember({"exhaustive", "generator", "series"}))
      ->required();

  CLI::App* c_series = app.add_subcommand("series", "Print counting-series coefficients a_0..a_N");
  c_series->add_option("--order", order, "truncation order N")
      ->check(CLI::NonNegativeNumber)
      ->required();

  CLI::App* c_diagram = app.add_subcommand("diagram", "Export the knot diagram of a permutation");
  c_diagram->add_option("perm", perm_text, "one-line permutation")->required();
  c_diagram->add_option("--format", format, "figure format")
      ->check(CLI::IsMember({"svg", "tikz"}))
      ->capture_default_str();
  c_diagram->add_option("--out", out_path, "output file path")->required();

  CLI::App* c_verify = app.add_subcommand("verify", "Check the three deciders agree on all of S_n");
  c_verify->add_option("--max-n", max_n, "verify S_1 through S_max_n")->capture_default_str();
  c_verify->add_option("--cap", cap, "refuse max-n beyond this bound")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_stats->parsed()) return run_stats(perm_text, as_json);
    if (c_check->parsed()) return run_check(perm_text, method, as_json);
    if (c_enum->parsed()) return run_enumerate(n, shallow_only);
    if (c_count->parsed()) return run_count(n, count_method);
    if (c_series->parsed()) return run_series(order);
    if (c_diagram->parsed()) return run_diagram(perm_text, format, out_path);
    if (c_verify->parsed()) return run_verify(max_n, cap);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
