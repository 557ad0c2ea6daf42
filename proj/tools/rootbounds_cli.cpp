// Command-line front end: bound reports, shape enumeration, property
// verification and bound-tightness benchmarking.
//
// Exit codes: 0 success, 1 verification violation, 2 usage or input error.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "rootbounds/bounds.hpp"
#include "rootbounds/companion.hpp"
#include "rootbounds/json_io.hpp"
#include "rootbounds/oracle.hpp"
#include "rootbounds/theorems.hpp"

namespace {

using namespace rootbounds;
using nlohmann::json;

std::vector<double> parse_coeff_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  std::size_t position = 1;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      throw Error("bad coefficient at position " + std::to_string(position) + ": '" + item +
                  "'");
    }
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
    if (pos != item.size()) {
      throw Error("bad coefficient at position " + std::to_string(position) + ": '" + item +
                  "'");
    }
    out.push_back(v);
    ++position;
  }
  if (out.empty()) throw Error("empty coefficient list");
  return out;
}

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int d = lo; d <= hi; ++d) out.push_back(d);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  }
  if (out.empty()) throw Error("empty degree list");
  return out;
}

Polynomial load_polynomial(const std::string& coeffs, const std::string& file,
                           bool descending) {
  if (coeffs.empty() == file.empty()) {
    throw Error("exactly one of --coeffs and --file must be given");
  }
  if (!coeffs.empty()) {
    std::vector<double> tail = parse_coeff_list(coeffs);
    if (descending) std::reverse(tail.begin(), tail.end());
    return Polynomial(std::move(tail));
  }
  std::ifstream in(file);
  if (!in) throw Error("cannot open " + file);
  json j;
  in >> j;
  return io::polynomial_from_json(j);
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string csv_field(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void render_bound_table(const Polynomial& p, const BoundReport& r) {
  std::cout << "degree " << r.degree;
  if (r.zero_root_multiplicity > 0) {
    std::cout << "  (zero roots stripped: " << r.zero_root_multiplicity << ")";
  }
  std::cout << "\n";
  if (r.all_roots_zero) {
    std::cout << "every root is zero; bounds [0, 0]\n";
    return;
  }
  std::printf("%-14s %12s  %s\n", "family", "value", "params");
  std::printf("%-14s %12s\n", "cauchy", fmt6(r.cauchy).c_str());
  if (r.frobenius) std::printf("%-14s %12s\n", "frobenius", fmt6(*r.frobenius).c_str());
  if (r.best_fiedler) {
    std::printf("%-14s %12s  b=%d\n", "fiedler", fmt6(r.best_fiedler->first).c_str(),
                r.best_fiedler->second);
  }
  if (r.partition) {
    std::printf("%-14s %12s  t=%d\n", "partition", fmt6(r.partition->first).c_str(),
                r.partition->second.part_count());
  }
  if (r.best_sparse) {
    std::printf("%-14s %12s  m=%d\n", "sparse", fmt6(r.best_sparse->first).c_str(),
                r.best_sparse->second.m);
  }
  if (r.w) std::printf("%-14s %12s\n", "w", fmt6(*r.w).c_str());
  for (const auto& [b, v] : r.x) {
    std::printf("%-14s %12s\n", ("x_" + std::to_string(b)).c_str(), fmt6(v).c_str());
  }
  if (r.lower_reversal) {
    std::printf("%-14s %12s\n", "lower_reversal", fmt6(*r.lower_reversal).c_str());
  }
  if (r.lower_inverse) {
    std::printf("%-14s %12s\n", "lower_inverse", fmt6(*r.lower_inverse).c_str());
  }
  std::printf("best upper     %12s  via %s\n", fmt6(r.best_upper).c_str(),
              r.best_upper_source.c_str());
  if (r.best_lower) {
    std::printf("best lower     %12s  via %s\n", fmt6(*r.best_lower).c_str(),
                r.best_lower_source.c_str());
  }
  const Polynomial q = r.zero_root_multiplicity > 0 ? strip_zero_roots(p).reduced : p;
  if (q.degree() >= 3 && q.constant_term() != 0.0) {
    std::cout << "improvements fired:";
    bool any = false;
    if (w_improves(q)) {
      std::cout << " w";
      any = true;
    }
    for (int b = 1; b <= q.degree() - 2; ++b) {
      if (x_improves(q, b)) {
        std::cout << " x_" << b;
        any = true;
      }
    }
    if (!any) std::cout << " none";
    std::cout << "\n";
  }
}

int cmd_bound(const std::string& coeffs, const std::string& file, bool descending,
              const std::string& format) {
  const Polynomial p = load_polynomial(coeffs, file, descending);
  const BoundReport r = bound_report(p);
  if (format == "json") {
    std::cout << io::to_json(r).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "family,value\n";
    if (!r.all_roots_zero) {
      for (const auto& [tag, v] : r.upper_bounds()) std::cout << tag << "," << csv_field(v) << "\n";
      for (const auto& [tag, v] : r.lower_bounds()) {
        std::cout << "lower_" << tag << "," << csv_field(v) << "\n";
      }
    }
    std::cout << "best_upper," << csv_field(r.best_upper) << "\n";
    if (r.best_lower) std::cout << "best_lower," << csv_field(*r.best_lower) << "\n";
  } else {
    render_bound_table(p, r);
  }
  return 0;
}

int cmd_enumerate(int n, bool dedup, const std::string& format) {
  long long raw = count_shapes(n);
  long long kept = 0;
  long long fiedler_count = 0;
  json shapes = json::array();
  for_each_shape(n, [&](const ShapeSpec& s) {
    if (dedup && shape_precedes(flip_shape(s), s)) return;
    ++kept;
    const bool fied = is_fiedler(s);
    if (fied) ++fiedler_count;
    if (format == "json") {
      json item = io::to_json(s);
      item["fiedler"] = fied;
      shapes.push_back(std::move(item));
    } else if (format == "csv") {
      std::ostringstream os;
      for (std::size_t i = 0; i < s.pos.size(); ++i) os << (i ? " " : "") << s.pos[i];
      std::cout << n << "," << s.m << "," << os.str() << "," << (fied ? 1 : 0) << "\n";
    }
  });
  if (format == "json") {
    json out{{"n", n},         {"dedup", dedup},           {"raw_count", raw},
             {"count", kept},  {"fiedler", fiedler_count}, {"shapes", shapes}};
    std::cout << out.dump(2) << "\n";
  } else if (format == "table") {
    std::cout << "degree " << n << ": " << raw << " shapes";
    if (dedup) std::cout << ", " << kept << " up to flip";
    std::cout << ", " << fiedler_count << " Fiedler\n";
  }
  return 0;
}

int cmd_verify(const theorems::CorpusConfig& config, const std::string& theorem,
               const std::string& format) {
  std::vector<theorems::PropertyResult> results;
  if (!theorem.empty()) {
    results.push_back(theorems::run_property(theorem, config));
  } else {
    results = theorems::run_all(config);
  }
  bool ok = true;
  if (format == "json") {
    for (const auto& r : results) std::cout << io::to_json(r).dump() << "\n";
  } else {
    std::printf("%-12s %8s %10s %14s  %s\n", "theorem", "trials", "violations",
                "near_boundary", "status");
    for (const auto& r : results) {
      std::printf("%-12s %8ld %10zu %14ld  %s\n", r.theorem_id.c_str(), r.trials,
                  r.violations.size(), r.near_boundary,
                  r.pass() ? (r.vacuous() ? "pass (vacuous)" : "pass") : "FAIL");
    }
  }
  for (const auto& r : results) ok = ok && r.pass();
  return ok ? 0 : 1;
}

int cmd_bench(const std::string& file, bool examples, const theorems::CorpusConfig& config,
              int samples) {
  std::vector<Polynomial> corpus;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error("cannot open " + file);
    json j;
    in >> j;
    for (const auto& item : j) corpus.push_back(io::polynomial_from_json(item));
  } else if (examples) {
    corpus = theorems::example_corpus();
  } else {
    SplitMix64 rng(config.seed);
    for (int d : config.degrees) {
      for (int s = 0; s < samples; ++s) {
        corpus.push_back(theorems::sample_polynomial(d, config.dist, config.range, s % 3, rng));
      }
    }
  }

  std::cout << "id,degree,cauchy,frobenius,fiedler,partition,sparse,w,best_x,"
               "lower_reversal,lower_inverse,best_upper,best_lower,"
               "oracle_max,oracle_min_nonzero,upper_tightness,lower_tightness\n";
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Polynomial& p = corpus[i];
    const BoundReport r = bound_report(p);
    auto opt = [&](const std::optional<double>& v) { return v ? csv_field(*v) : ""; };
    std::optional<double> best_x;
    for (const auto& [b, v] : r.x) {
      if (!best_x || v < *best_x) best_x = v;
    }
    const double omax = oracle::max_root_modulus(p);
    const auto omin = oracle::min_nonzero_root_modulus(p);
    std::cout << i << "," << r.degree << "," << csv_field(r.cauchy) << ","
              << opt(r.frobenius) << ","
              << (r.best_fiedler ? csv_field(r.best_fiedler->first) : "") << ","
              << (r.partition ? csv_field(r.partition->first) : "") << ","
              << (r.best_sparse ? csv_field(r.best_sparse->first) : "") << "," << opt(r.w)
              << "," << opt(best_x) << "," << opt(r.lower_reversal) << ","
              << opt(r.lower_inverse) << "," << csv_field(r.best_upper) << ","
              << opt(r.best_lower) << "," << csv_field(omax) << ","
              << (omin ? csv_field(*omin) : "") << ","
              << (omax > 0 ? csv_field(r.best_upper / omax) : "") << ","
              << (omin && r.best_lower && *r.best_lower > 0 ? csv_field(*omin / *r.best_lower)
                                                            : "")
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds on polynomial root moduli from companion-matrix norms"};
  app.require_subcommand(1);

  std::string coeffs, file, format = "table", theorem, degrees_text = "3..7";
  bool descending = false, dedup = false, examples = false;
  int n = 0, samples = 200;
  theorems::CorpusConfig config;

  auto* bound = app.add_subcommand("bound", "report every bound family for one polynomial");
  bound->add_option("--coeffs", coeffs, "ascending tail a_0,a_1,... (monic lead implied)");
  bound->add_option("--file", file, "polynomial JSON file");
  bound->add_flag("--descending", descending, "read --coeffs highest degree first");
  bound->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

  auto* enumerate = app.add_subcommand("enumerate", "count or list companion shapes");
  enumerate->add_option("-n,--degree", n, "polynomial degree")->required();
  enumerate->add_flag("--dedup", dedup, "one representative per antidiagonal-flip class");
  enumerate->add_option("--format", format)->check(CLI::IsMember({"table", "json", "csv"}));

  auto* verify = app.add_subcommand("verify", "run the structural property suite");
  verify->add_option("--seed", config.seed);
  verify->add_option("--degrees", degrees_text, "range like 3..7 or list like 3,5,7");
  verify->add_option("--samples", config.samples_per_degree, "polynomials per degree");
  verify->add_option("--theorem", theorem, "run a single registered property");
  verify->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* bench = app.add_subcommand("bench", "CSV of bound tightness against root oracles");
  bench->add_option("--file", file, "JSON array of polynomials");
  bench->add_flag("--examples", examples, "use the built-in worked examples");
  bench->add_option("--seed", config.seed);
  bench->add_option("--degrees", degrees_text);
  bench->add_option("--samples", samples, "polynomials per degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (bound->parsed()) return cmd_bound(coeffs, file, descending, format);
    if (enumerate->parsed()) return cmd_enumerate(n, dedup, format);
    config.degrees = parse_degrees(degrees_text);
    if (verify->parsed()) return cmd_verify(config, theorem, format);
    return cmd_bench(file, examples, config, samples);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
