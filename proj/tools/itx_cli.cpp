// Command-line front end: set-family transforms, disjoint/subset counting,
// weighted simple path and cycle counting, path reconstruction, and a small
// benchmark reporter.
//
// Exit codes: 0 success, 2 usage error (bad flags), 1 data error (unreadable
// or malformed input, out-of-range query, oracle mismatch).

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "itx/itx.hpp"

namespace {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  return in;
}

std::vector<itx::SubsetMask> load_family_lines(const std::string& path) {
  std::ifstream in = open_input(path);
  try {
    return itx::parse_family_lines(in);
  } catch (const std::exception& e) {
    throw DataError(path + ": " + e.what());
  }
}

itx::WeightedDigraph load_digraph(const std::string& path) {
  std::ifstream in = open_input(path);
  try {
    return itx::parse_digraph(in);
  } catch (const std::exception& e) {
    throw DataError(path + ": " + e.what());
  }
}

// Non-blank content lines of a values file, with line numbers ('#' comments
// stripped).
std::vector<std::pair<int, std::string>> load_value_lines(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    out.emplace_back(lineno, line.substr(b, e - b + 1));
  }
  return out;
}

struct ItransOptions {
  std::string sets_path;
  std::string targets_path;
  std::string values_path;
  std::string dump_path;
  int ground = -1;  // -1: infer
  std::string ring = "bigint";
  std::uint64_t prime = 0;
  bool oracle = false;
  bool stats = false;
};

int infer_ground(const itx::SetFamily& f, const itx::SetFamily& g, int requested) {
  int needed = std::max(itx::min_ground_size(f), itx::min_ground_size(g));
  if (requested < 0) return needed;
  if (requested < needed)
    throw DataError("--n " + std::to_string(requested) +
                    " is smaller than the largest element requires (" + std::to_string(needed) +
                    ")");
  return requested;
}

template <itx::Ring R>
void run_itrans_over(const R& ring, const ItransOptions& opt,
                     const std::function<typename R::value_type(const std::string&)>& parse_value,
                     const std::function<std::string(const typename R::value_type&)>& show) {
  using V = typename R::value_type;
  std::vector<itx::SubsetMask> set_lines = load_family_lines(opt.sets_path);
  itx::SetFamily family{std::vector<itx::SubsetMask>(set_lines)};
  itx::SetFamily targets;
  {
    std::vector<itx::SubsetMask> t = load_family_lines(opt.targets_path);
    targets = itx::SetFamily(std::move(t));
  }
  const int n = infer_ground(family, targets, opt.ground);

  std::vector<V> values(family.size(), ring.one());
  if (!opt.values_path.empty()) {
    auto lines = load_value_lines(opt.values_path);
    if (lines.size() != set_lines.size())
      throw DataError(opt.values_path + ": expected " + std::to_string(set_lines.size()) +
                      " values, got " + std::to_string(lines.size()));
    for (std::size_t i = 0; i < set_lines.size(); ++i) {
      try {
        values[*family.find(set_lines[i])] = parse_value(lines[i].second);
      } catch (const std::exception& e) {
        throw DataError(opt.values_path + ": line " + std::to_string(lines[i].first) + ": " +
                        e.what());
      }
    }
  }

  if (!opt.dump_path.empty() || opt.stats) {
    auto [circuit, table] = itx::build_intersection_circuit(family, targets, n);
    if (!opt.dump_path.empty()) {
      std::ofstream out(opt.dump_path);
      if (!out) throw DataError("cannot open file for writing: " + opt.dump_path);
      circuit.dump(out);
    }
    if (opt.stats) {
      itx::CircuitStats s = circuit.stats();
      std::cout << "# gates=" << s.gates << " adds=" << s.adds << " muls=" << s.muls
                << " consts=" << s.consts << " inputs=" << s.inputs << '\n';
    }
  }

  auto table = itx::intersection_transform(family, std::span<const V>(values), targets, n, ring);
  for (int j = 0; j <= table.ground && !table.values.empty(); ++j)
    for (std::size_t t = 0; t < table.targets.size(); ++t)
      std::cout << j << '\t' << itx::format_set(table.targets.mask(t)) << '\t'
                << show(table.at(j, t)) << '\n';

  if (opt.oracle) {
    auto brute =
        itx::brute_intersection_transform(family, std::span<const V>(values), targets, n, ring);
    bool ok = brute.values.size() == table.values.size();
    for (std::size_t i = 0; ok && i < brute.values.size(); ++i)
      ok = ring.equals(brute.values[i], table.values[i]);
    std::cout << (ok ? "MATCH" : "MISMATCH") << '\n';
    if (!ok) throw DataError("oracle mismatch in itrans");
  }
}

void run_itrans(const ItransOptions& opt) {
  if (opt.ring == "bigint") {
    itx::BigIntRing ring;
    run_itrans_over<itx::BigIntRing>(
        ring, opt, [](const std::string& s) { return itx::BigInt(s); },
        [](const itx::BigInt& v) { return v.str(); });
  } else if (opt.ring == "poly") {
    itx::PolynomialRing ring;
    run_itrans_over<itx::PolynomialRing>(
        ring, opt, [](const std::string& s) { return itx::WeightPolynomial::parse(s); },
        [](const itx::WeightPolynomial& v) { return v.to_string(); });
  } else if (opt.ring == "modp") {
    if (opt.prime == 0) throw DataError("--ring modp requires --prime");
    itx::ModPrimeRing ring(opt.prime);
    run_itrans_over<itx::ModPrimeRing>(
        ring, opt,
        [&ring](const std::string& s) {
          itx::BigInt v(s);
          itx::BigInt r = v % ring.p;
          if (r < 0) r += ring.p;
          return r.convert_to<std::uint64_t>();
        },
        [](std::uint64_t v) { return std::to_string(v); });
  } else {
    throw DataError("unknown ring: " + opt.ring);
  }
}

struct PairCountOptions {
  std::string sets_path;
  std::string targets_path;
  int ground = -1;
  bool oracle = false;
  bool subsets = false;  // false: disjoint counting
};

void run_pair_count(const PairCountOptions& opt) {
  itx::SetFamily family{load_family_lines(opt.sets_path)};
  itx::SetFamily targets{load_family_lines(opt.targets_path)};
  const int n = infer_ground(family, targets, opt.ground);
  itx::IndexedFunction<itx::BigInt> counts = opt.subsets
                                                 ? itx::count_subsets_of(family, targets, n)
                                                 : itx::count_disjoint(family, targets, n);
  for (std::size_t t = 0; t < counts.domain.size(); ++t)
    std::cout << itx::format_set(counts.domain.mask(t)) << '\t' << counts.values[t].str() << '\n';
  if (opt.oracle) {
    bool ok = true;
    for (std::size_t t = 0; ok && t < counts.domain.size(); ++t) {
      const itx::SubsetMask y = counts.domain.mask(t);
      itx::BigInt expect = 0;
      for (itx::SubsetMask x : family) {
        const bool hit = opt.subsets ? (x & y) == x : (x & y) == 0;
        if (hit) ++expect;
      }
      ok = expect == counts.values[t];
    }
    std::cout << (ok ? "MATCH" : "MISMATCH") << '\n';
    if (!ok) throw DataError("oracle mismatch");
  }
}

struct PathOptions {
  std::string graph_path;
  int s = 0;
  int t = 0;
  int len = 0;
  long long weight = 0;
  bool oracle = false;
};

void run_count_paths(const PathOptions& opt) {
  itx::WeightedDigraph d = load_digraph(opt.graph_path);
  itx::PathCount fast = itx::count_paths_by_weight(d, opt.s, opt.t, opt.len);
  std::cout << fast.to_string() << '\n';
  if (opt.oracle) {
    itx::PathCount brute = itx::brute_count_paths(d, opt.s, opt.t, opt.len);
    const bool ok = fast == brute;
    std::cout << (ok ? "MATCH" : "MISMATCH") << '\n';
    if (!ok) throw DataError("oracle mismatch in count-paths");
  }
}

void run_count_cycles(const PathOptions& opt) {
  itx::WeightedDigraph d = load_digraph(opt.graph_path);
  itx::WeightPolynomial fast = itx::count_cycles_by_weight(d, opt.len);
  std::cout << fast.to_string() << '\n';
  if (opt.oracle) {
    itx::WeightPolynomial brute = itx::brute_count_cycles(d, opt.len);
    const bool ok = fast == brute;
    std::cout << (ok ? "MATCH" : "MISMATCH") << '\n';
    if (!ok) throw DataError("oracle mismatch in count-cycles");
  }
}

void run_find_path(const PathOptions& opt) {
  itx::WeightedDigraph d = load_digraph(opt.graph_path);
  auto path = itx::reconstruct_path(d, opt.s, opt.t, opt.len, opt.weight);
  if (!path) {
    std::cout << "none\n";
    return;
  }
  for (std::size_t i = 0; i < path->size(); ++i)
    std::cout << (*path)[i] << (i + 1 == path->size() ? '\n' : ' ');
}

struct BenchOptions {
  int n = 0;
  int len = 0;
};

void run_bench(const BenchOptions& opt) {
  itx::EntropyBound bound = itx::entropy_bound(opt.n, opt.len);
  const int kp = opt.len / 2 + 1;
  const int kq = (opt.len + 1) / 2 + 1;
  itx::SetFamily family = itx::all_k_subsets(opt.n, kq);
  itx::SetFamily targets = itx::all_k_subsets(opt.n, kp);
  const auto start = std::chrono::steady_clock::now();
  auto [circuit, table] = itx::build_intersection_circuit(family, targets, opt.n);
  const auto stop = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
  itx::CircuitStats s = circuit.stats();
  std::cout << "n=" << opt.n << " len=" << opt.len << " support_cap=" << bound.supports_up_to
            << " measured_sets=" << bound.measured.str() << " predicted_sets=" << bound.predicted
            << " gates=" << s.gates << " adds=" << s.adds << " muls=" << s.muls
            << " consts=" << s.consts << " inputs=" << s.inputs << " build_ms=" << ms << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subset-lattice intersection transforms and weighted path counting"};
  app.require_subcommand(1);

  ItransOptions itrans_opt;
  CLI::App* itrans = app.add_subcommand(
      "itrans", "Full intersection-indexed table of a set function at target sets");
  itrans->add_option("--sets", itrans_opt.sets_path, "family file for F")->required();
  itrans->add_option("--targets", itrans_opt.targets_path, "family file for G")->required();
  itrans->add_option("--values", itrans_opt.values_path,
                     "per-set values aligned with the --sets file (default: all 1)");
  itrans->add_option("--n", itrans_opt.ground, "ground set size (default: inferred)");
  itrans->add_option("--ring", itrans_opt.ring, "bigint | poly | modp")
      ->check(CLI::IsMember({"bigint", "poly", "modp"}));
  itrans->add_option("--prime", itrans_opt.prime, "modulus for --ring modp");
  itrans->add_flag("--oracle", itrans_opt.oracle, "cross-check against brute force");
  itrans->add_option("--dump-circuit", itrans_opt.dump_path, "write the circuit text form here");
  itrans->add_flag("--stats", itrans_opt.stats, "print circuit gate counts");

  PairCountOptions disjoint_opt;
  CLI::App* disjoint =
      app.add_subcommand("disjoint", "Count members of F disjoint from each target");
  disjoint->add_option("--sets", disjoint_opt.sets_path, "family file for F")->required();
  disjoint->add_option("--targets", disjoint_opt.targets_path, "family file for G")->required();
  disjoint->add_option("--n", disjoint_opt.ground, "ground set size (default: inferred)");
  disjoint->add_flag("--oracle", disjoint_opt.oracle, "cross-check against brute force");

  PairCountOptions subsets_opt;
  subsets_opt.subsets = true;
  CLI::App* subsets =
      app.add_subcommand("subsets", "Count members of F contained in each target");
  subsets->add_option("--sets", subsets_opt.sets_path, "family file for F")->required();
  subsets->add_option("--targets", subsets_opt.targets_path, "family file for G")->required();
  subsets->add_option("--n", subsets_opt.ground, "ground set size (default: inferred)");
  subsets->add_flag("--oracle", subsets_opt.oracle, "cross-check against brute force");

  PathOptions paths_opt;
  CLI::App* count_paths = app.add_subcommand(
      "count-paths", "Count simple paths of a given length by total weight");
  count_paths->add_option("--graph", paths_opt.graph_path, "graph file")->required();
  count_paths->add_option("--s", paths_opt.s, "source vertex")->required();
  count_paths->add_option("--t", paths_opt.t, "target vertex")->required();
  count_paths->add_option("--len", paths_opt.len, "path length (edge count)")->required();
  count_paths->add_flag("--oracle", paths_opt.oracle, "cross-check against brute force");

  PathOptions cycles_opt;
  CLI::App* count_cycles =
      app.add_subcommand("count-cycles", "Count simple cycles of a given length by total weight");
  count_cycles->add_option("--graph", cycles_opt.graph_path, "graph file")->required();
  count_cycles->add_option("--len", cycles_opt.len, "cycle length (edge count)")->required();
  count_cycles->add_flag("--oracle", cycles_opt.oracle, "cross-check against brute force");

  PathOptions find_opt;
  CLI::App* find_path = app.add_subcommand(
      "find-path", "Reconstruct one simple path with exact length and total weight");
  find_path->add_option("--graph", find_opt.graph_path, "graph file")->required();
  find_path->add_option("--s", find_opt.s, "source vertex")->required();
  find_path->add_option("--t", find_opt.t, "target vertex")->required();
  find_path->add_option("--len", find_opt.len, "path length (edge count)")->required();
  find_path->add_option("--weight", find_opt.weight, "exact total weight")->required();

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand(
      "bench", "Report workspace size bounds and circuit build cost for one (n, len)");
  bench->add_option("--n", bench_opt.n, "vertex / ground set count")->required();
  bench->add_option("--len", bench_opt.len, "path length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (itrans->parsed()) run_itrans(itrans_opt);
    if (disjoint->parsed()) run_pair_count(disjoint_opt);
    if (subsets->parsed()) run_pair_count(subsets_opt);
    if (count_paths->parsed()) run_count_paths(paths_opt);
    if (count_cycles->parsed()) run_count_cycles(cycles_opt);
    if (find_path->parsed()) run_find_path(find_opt);
    if (bench->parsed()) run_bench(bench_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
