// amf: counting, interval listing, and property verification for
// antimonotonic functions (antichains of subsets of a finite set).
//
// Exit codes: 0 success / PASS, 1 verification or cross-check failure,
// 2 bad flags or unparsable input.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "amf/enumeration.hpp"
#include "amf/lattice.hpp"

using json = nlohmann::json;
using namespace amf;

namespace {

constexpr const char* kSchemaVersion = "1";

// Known |AMT(n)| values; everything the recursions can reach is covered.
const std::map<int, const char*> kDedekind = {
    {0, "2"},       {1, "3"},       {2, "6"},          {3, "20"},
    {4, "168"},     {5, "7581"},    {6, "7828354"},    {7, "2414682040998"},
    {8, "56130437228687557907788"},
};

int default_jobs(int fallback) {
  if (const char* env = std::getenv("AMT_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return fallback;
}

int hardware_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n ? static_cast<int>(n) : 1;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

json base_report(const std::string& command, const std::string& method, int jobs,
                 double wall_time) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"method", method},
              {"jobs", jobs},
              {"wall_time_s", wall_time}};
}

// Ground set implied by the elements mentioned in the bound strings.
GroundSet infer_ground(const std::string& a, const std::string& b, int n_flag) {
  if (n_flag >= 0) return GroundSet::prefix(n_flag);
  int max_elem = 0;
  for (const std::string* s : {&a, &b})
    for (std::size_t i = 0; i < s->size(); ++i)
      if (std::isdigit(static_cast<unsigned char>((*s)[i]))) {
        int v = 0;
        while (i < s->size() && std::isdigit(static_cast<unsigned char>((*s)[i])))
          v = v * 10 + ((*s)[i++] - '0');
        max_elem = std::max(max_elem, v);
      }
  return GroundSet::prefix(max_elem);
}

BigCount count_by_method(const std::string& method, int n, int n1, const EnumOptions& opts) {
  if (method == "oracle") {
    if (n > 5) throw CLI::ValidationError("--method oracle requires --n <= 5");
    return static_cast<BigCount>(oracle_enumerate(GroundSet::prefix(n)).size());
  }
  if (method == "span") return dedekind_span_expansion(n, opts);
  if (method == "one-element") {
    if (n < 1) throw CLI::ValidationError("--method one-element requires --n >= 1");
    return dedekind_one_element(n, opts);
  }
  // split
  if (n1 < 1 || n1 >= n) throw CLI::ValidationError("--method split requires 1 <= --n1 < --n");
  return dedekind_interval_recursion(n, n1, opts);
}

int run_count(int n, const std::string& method, int n1, int jobs, bool cross_check, bool as_json) {
  Timer timer;
  EnumStats stats;
  EnumOptions opts;
  opts.jobs = jobs;
  opts.stats = &stats;
  BigCount value = count_by_method(method, n, n1, opts);
  std::optional<bool> verdict;
  std::string alt_method;
  if (cross_check) {
    alt_method = n <= 5 ? "oracle" : (method == "span" ? "one-element" : "span");
    if (alt_method == method) alt_method = "one-element";
    BigCount alt = count_by_method(alt_method, n, n1, opts);
    verdict = (alt == value);
  }
  json report = base_report("count", method, jobs, timer.seconds());
  report["n"] = n;
  report["result"] = value.str();
  report["recursive_calls"] = stats.calls.load();
  if (verdict) {
    report["verdicts"] = json::array({json{{"check", "cross-check vs " + alt_method},
                                           {"pass", *verdict},
                                           {"witness", *verdict ? "" : value.str()}}});
  }
  if (as_json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << value.str() << "\n";
    if (verdict) std::cout << "cross-check (" << alt_method << "): " << (*verdict ? "OK" : "FAIL") << "\n";
  }
  return verdict && !*verdict ? 1 : 0;
}

int run_list(const std::string& lower_text, const std::string& upper_text, int n_flag,
             bool count_only, const std::string& fmt, int jobs) {
  Timer timer;
  GroundSet ground = infer_ground(lower_text, upper_text, n_flag);
  AntiChain lower = parse(lower_text, ground);
  AntiChain upper = parse(upper_text, ground);
  BigCount count;
  std::vector<AntiChain> members;
  if (count_only) {
    EnumOptions opts;
    opts.jobs = jobs;
    count = count_interval(lower, upper, opts);
  } else if (jobs > 1) {
    std::mutex guard;
    EnumOptions opts;
    opts.jobs = jobs;
    count = list_interval(
        lower, upper,
        [&](const AntiChain& a) {
          std::lock_guard<std::mutex> hold(guard);
          members.push_back(a);
        },
        opts);
  } else {
    members = interval_members(lower, upper);
    count = static_cast<BigCount>(members.size());
  }
  if (fmt == "json") {
    json report = base_report("list", "interval-recursion", jobs, timer.seconds());
    report["lower"] = format(lower);
    report["upper"] = format(upper);
    report["count"] = count.str();
    if (!count_only) {
      json out = json::array();
      for (const AntiChain& a : members) out.push_back(format(a));
      report["members"] = std::move(out);
    }
    std::cout << report.dump(2) << "\n";
  } else {
    for (const AntiChain& a : members) std::cout << format(a) << "\n";
    std::cout << (count_only ? count.str() : "count: " + count.str()) << "\n";
  }
  return 0;
}

// ---- verify checks; each returns PASS/FAIL plus a replayable witness ----

struct Verdict {
  bool pass = true;
  std::string witness;
  std::vector<std::string> details;

  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
};

// Elements of Upsilon_N (span exactly N), from the oracle.
std::vector<AntiChain> oracle_upsilon(GroundSet ground) {
  std::vector<AntiChain> out;
  for (AntiChain& a : oracle_enumerate(ground))
    if (span(a) == ground.mask()) out.push_back(std::move(a));
  return out;
}

// Common element-level partition check: every element of `universe` must
// land in exactly one of `cells`.
void check_exact_cover(const std::vector<AntiChain>& universe, const std::vector<Interval>& cells,
                       const std::string& label, Verdict& v) {
  for (const AntiChain& a : universe) {
    int hits = 0;
    for (const Interval& cell : cells)
      if (!cell.is_empty() && cell.contains(a)) ++hits;
    if (hits != 1) v.fail(label + ": " + format(a) + " covered " + std::to_string(hits) + " times");
  }
}

Verdict verify_partition_general(int n, const std::string& sigma_text, int samples) {
  Verdict v;
  GroundSet ground = GroundSet::prefix(n);
  std::vector<AntiChain> upsilon_members_oracle = oracle_upsilon(ground);
  std::vector<AntiChain> sigmas;
  if (!sigma_text.empty()) {
    sigmas.push_back(parse(sigma_text, ground));
  } else {
    // Coordinate systems: antichains covering the ground set.
    std::vector<AntiChain> all = oracle_upsilon(ground);
    if (n <= 3 || static_cast<int>(all.size()) <= samples) {
      sigmas = std::move(all);
    } else {
      std::mt19937 rng(2026);
      std::sample(all.begin(), all.end(), std::back_inserter(sigmas), samples, rng);
    }
  }
  std::size_t empty_cells = 0;
  for (const AntiChain& sigma : sigmas) {
    std::vector<Interval> cells;
    coordinate_cells(ground, ground.mask(), sigma,
                     [&](const CellFamily&, const Interval& cell) { cells.push_back(cell); });
    for (const Interval& cell : cells) {
      // Remark: an empty flag must agree with true interval emptiness.
      bool really_empty = !leq(cell.lower(), cell.upper());
      if (cell.is_empty() != really_empty)
        v.fail("sigma " + format(sigma) + ": cell " + format(cell) + " empty flag wrong");
      if (cell.is_empty()) ++empty_cells;
    }
    check_exact_cover(upsilon_members_oracle, cells, "sigma " + format(sigma), v);
    if (!v.pass) break;
  }
  v.details.push_back("coordinate systems checked: " + std::to_string(sigmas.size()));
  v.details.push_back("empty cells flagged: " + std::to_string(empty_cells));
  return v;
}

Verdict verify_partition_orthogonal(int n, const std::string& blocks_text) {
  Verdict v;
  GroundSet ground = GroundSet::prefix(n);
  std::vector<Mask> blocks;
  if (!blocks_text.empty()) {
    blocks = parse_blocks(blocks_text, ground);
  } else {
    for (int e = 1; e <= n; ++e) blocks.push_back(mask_of_element(e));
  }
  std::vector<Interval> cells;
  orthogonal_cells(ground, blocks,
                   [&](const CellFamily&, const Interval& cell) { cells.push_back(cell); });
  BigCount sizes = 0;
  for (const Interval& cell : cells) {
    if (cell.is_empty()) v.fail("empty cell in orthogonal decomposition: " + format(cell));
    sizes += count_interval(cell.lower(), cell.upper());
  }
  if (n <= 5) {
    std::vector<AntiChain> universe = oracle_upsilon(ground);
    check_exact_cover(universe, cells, "orthogonal", v);
    if (sizes != static_cast<BigCount>(universe.size()))
      v.fail("cell sizes sum " + sizes.str() + " != |Upsilon| " + std::to_string(universe.size()));
  }
  v.details.push_back("cells: " + std::to_string(cells.size()));
  v.details.push_back("sizes sum: " + sizes.str());
  return v;
}

// The disjoint-union property needs sigma's blocks pairwise disjoint: with
// overlapping blocks [{∅}, {{1,2},{1,3}}] under sigma = {{1,2},{1,3}} puts
// {{1},{2}} into two distinct cells.
bool disjoint_blocks(const AntiChain& sigma) {
  Mask seen = 0;
  for (Mask s : sigma.sets()) {
    if (s & seen) return false;
    seen |= s;
  }
  return true;
}

Verdict verify_interval_decomposition(int n, const std::string& lower_text,
                                      const std::string& upper_text,
                                      const std::string& sigma_text) {
  Verdict v;
  GroundSet ground = GroundSet::prefix(n);
  std::vector<AntiChain> all = oracle_enumerate(ground);
  auto check_one = [&](const AntiChain& lower, const AntiChain& upper, const AntiChain& sigma) {
    std::vector<Interval> cells;
    decompose_interval(lower, upper, sigma,
                       [&](const Interval& cell) { cells.push_back(cell); });
    // Overlapping sigma blocks can produce the same cell from different
    // kappa families; the disjoint union is over distinct intervals.
    std::sort(cells.begin(), cells.end(), [](const Interval& a, const Interval& b) {
      return format(a) < format(b);
    });
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    std::vector<AntiChain> members;
    for (const AntiChain& a : all)
      if (leq(lower, a) && leq(a, upper)) members.push_back(a);
    check_exact_cover(members, cells,
                      "[" + format(lower) + " .. " + format(upper) + "] sigma " + format(sigma),
                      v);
  };
  std::size_t triples = 0;
  if (!lower_text.empty() || !upper_text.empty()) {
    AntiChain lower = parse(lower_text, ground);
    AntiChain upper = parse(upper_text, ground);
    for (const AntiChain& sigma : all) {
      if (sigma.is_empty() || !leq(sigma, upper) || span(sigma) != span(upper) ||
          !disjoint_blocks(sigma))
        continue;
      check_one(lower, upper, sigma);
      ++triples;
    }
  } else {
    for (const AntiChain& lower : all) {
      if (lower.is_empty()) continue;
      for (const AntiChain& upper : all) {
        if (!leq(lower, upper)) continue;
        for (const AntiChain& sigma : all) {
          if (sigma.is_empty() || !leq(sigma, upper) || span(sigma) != span(upper) ||
              !disjoint_blocks(sigma))
            continue;
          check_one(lower, upper, sigma);
          ++triples;
          if (!v.pass) return v;
        }
      }
    }
  }
  v.details.push_back("(lower, upper, sigma) triples checked: " + std::to_string(triples));
  return v;
}

Verdict verify_rank(int n) {
  Verdict v;
  std::size_t checked = 0;
  for (const AntiChain& a : oracle_enumerate(GroundSet::prefix(n))) {
    BigCount direct = rank(a);
    BigCount downset = static_cast<BigCount>(to_monotone(a).size());
    BigCount ie = rank_inclusion_exclusion(a);
    if (direct != downset || ie != downset)
      v.fail(format(a) + ": rank " + direct.str() + ", inclusion-exclusion " + ie.str() +
             ", down-set size " + downset.str());
    ++checked;
  }
  v.details.push_back("elements checked: " + std::to_string(checked));
  return v;
}

Verdict verify_distance(int n) {
  Verdict v;
  std::vector<AntiChain> all = oracle_enumerate(GroundSet::prefix(n));
  std::vector<std::set<Mask>> downsets;
  for (const AntiChain& a : all) {
    MonotoneFamily down = to_monotone(a);
    downsets.emplace_back(down.sets().begin(), down.sets().end());
  }
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      std::size_t sym_diff = 0;
      for (Mask s : downsets[i]) sym_diff += !downsets[j].count(s);
      for (Mask s : downsets[j]) sym_diff += !downsets[i].count(s);
      if (distance(all[i], all[j]) != static_cast<BigCount>(sym_diff))
        v.fail(format(all[i]) + " vs " + format(all[j]));
      ++pairs;
    }
  v.details.push_back("pairs checked: " + std::to_string(pairs));
  return v;
}

Verdict verify_recursions(int n, int jobs) {
  Verdict v;
  EnumOptions opts;
  opts.jobs = jobs;
  auto expected = kDedekind.find(n);
  if (expected == kDedekind.end()) {
    v.fail("no reference value for n = " + std::to_string(n));
    return v;
  }
  BigCount want(expected->second);
  auto check = [&](const std::string& label, const BigCount& got) {
    v.details.push_back(label + " = " + got.str());
    if (got != want) v.fail(label + " returned " + got.str() + ", expected " + want.str());
  };
  check("span-expansion", dedekind_span_expansion(n, opts));
  if (n >= 1) check("one-element", dedekind_one_element(n, opts));
  for (int n1 = 1; n1 < n; ++n1)
    check("interval-recursion(n1=" + std::to_string(n1) + ")",
          dedekind_interval_recursion(n, n1, opts));
  return v;
}

Verdict verify_young(int rows, int cols) {
  Verdict v;
  PartitionReport young = young_partition(rows, cols);
  if (!young.pass) v.fail(young.message);
  v.details.push_back("nonempty diagrams covered once: " + std::to_string(young.covered));
  YoungLattice lattice(rows, cols);
  PartitionReport axioms = check_lattice_axioms(lattice);
  if (!axioms.pass) v.fail(axioms.message);
  PartitionReport generic =
      generic_partition_check(lattice, lattice.index_of(vs(std::min(2, rows))),
                              lattice.index_of(hs(std::min(2, cols))));
  if (!generic.pass) v.fail(generic.message);
  v.details.push_back("generic partition cells: " + std::to_string(generic.cells));
  return v;
}

int run_verify(const std::string& check, int n, const std::string& sigma,
               const std::string& blocks, const std::string& lower, const std::string& upper,
               int rows, int cols, int samples, int jobs, bool as_json) {
  Timer timer;
  Verdict v;
  if (check == "partition-general") {
    v = verify_partition_general(n < 0 ? 3 : n, sigma, samples);
  } else if (check == "partition-orthogonal") {
    v = verify_partition_orthogonal(n < 0 ? 4 : n, blocks);
  } else if (check == "interval-decomposition") {
    v = verify_interval_decomposition(n < 0 ? 3 : n, lower, upper, sigma);
  } else if (check == "rank") {
    v = verify_rank(n < 0 ? 4 : n);
  } else if (check == "distance") {
    v = verify_distance(n < 0 ? 3 : n);
  } else if (check == "recursions") {
    v = verify_recursions(n < 0 ? 5 : n, jobs);
  } else if (check == "young") {
    v = verify_young(rows, cols);
  } else {
    throw CLI::ValidationError("unknown --check " + check);
  }
  if (as_json) {
    json report = base_report("verify", check, jobs, timer.seconds());
    report["verdicts"] =
        json::array({json{{"check", check}, {"pass", v.pass}, {"witness", v.witness}}});
    report["details"] = v.details;
    std::cout << report.dump(2) << "\n";
  } else {
    for (const std::string& d : v.details) std::cout << d << "\n";
    std::cout << (v.pass ? "PASS" : "FAIL: " + v.witness) << "\n";
  }
  return v.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval algebra of antimonotonic functions"};
  app.require_subcommand(1);

  // count
  int count_n = 0, count_n1 = 0, count_jobs = default_jobs(hardware_jobs());
  std::string count_method = "span";
  bool cross_check = false, count_json = false;
  CLI::App* count = app.add_subcommand("count", "Count |AMT(n)| by a chosen method");
  count->add_option("--n", count_n, "Ground set size")->required();
  count->add_option("--method", count_method, "oracle | span | split | one-element")
      ->check(CLI::IsMember({"oracle", "span", "split", "one-element"}));
  count->add_option("--n1", count_n1, "Split point for --method split");
  count->add_option("--jobs", count_jobs, "Worker threads");
  count->add_flag("--cross-check", cross_check, "Recompute by a second method and compare");
  count->add_flag("--json", count_json, "Emit a JSON run report");

  // list
  std::string list_lower, list_upper, list_format = "text";
  int list_n = -1, list_jobs = default_jobs(1);
  bool count_only = false;
  CLI::App* list = app.add_subcommand("list", "List the interval [lower, upper]");
  list->add_option("--lower", list_lower, "Lower bound, e.g. \"{{1},{2}}\"")->required();
  list->add_option("--upper", list_upper, "Upper bound, e.g. \"{{1,2}}\"")->required();
  list->add_option("--n", list_n, "Ground set size (default: inferred from the bounds)");
  list->add_option("--format", list_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  list->add_flag("--count-only", count_only, "Print the count without the members");
  list->add_option("--jobs", list_jobs, "Worker threads (order unspecified when > 1)");

  // verify
  std::string check, sigma_text, blocks_text, ver_lower, ver_upper;
  int ver_n = -1, rows = 4, cols = 4, samples = 100, ver_jobs = default_jobs(1);
  bool ver_json = false;
  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  verify
      ->add_option("--check", check,
                   "partition-general | partition-orthogonal | interval-decomposition | rank | "
                   "distance | recursions | young")
      ->required()
      ->check(CLI::IsMember({"partition-general", "partition-orthogonal",
                             "interval-decomposition", "rank", "distance", "recursions",
                             "young"}));
  verify->add_option("--n", ver_n, "Ground set size (check-specific default)");
  verify->add_option("--sigma", sigma_text, "Coordinate antichain, e.g. \"{{1,2},{2,3}}\"");
  verify->add_option("--blocks", blocks_text, "Partition blocks, e.g. \"1,2|3,4\"");
  verify->add_option("--lower", ver_lower, "Interval lower bound (interval-decomposition)");
  verify->add_option("--upper", ver_upper, "Interval upper bound (interval-decomposition)");
  verify->add_option("--rows", rows, "Young box height");
  verify->add_option("--cols", cols, "Young box width");
  verify->add_option("--samples", samples, "Sampled coordinate systems for n > 3");
  verify->add_option("--jobs", ver_jobs, "Worker threads");
  verify->add_flag("--json", ver_json, "Emit a JSON run report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (count->parsed())
      return run_count(count_n, count_method, count_n1, count_jobs, cross_check, count_json);
    if (list->parsed())
      return run_list(list_lower, list_upper, list_n, count_only, list_format, list_jobs);
    return run_verify(check, ver_n, sigma_text, blocks_text, ver_lower, ver_upper, rows, cols,
                      samples, ver_jobs, ver_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
