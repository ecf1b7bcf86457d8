// doubling-lab: command-line front end for the small-doubling toolkit.
//
// Exit codes: 0 success, 1 usage or input parse error, 2 theorem-level
// violation, 3 resource cap or order undecidability.

#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "doubling/errors.hpp"
#include "doubling/freiman.hpp"
#include "doubling/group.hpp"
#include "doubling/io.hpp"
#include "doubling/oracle.hpp"
#include "doubling/product_set.hpp"
#include "doubling/structure.hpp"

namespace {

using namespace doubling;

constexpr unsigned long long kNoSkipLimit =
    std::numeric_limits<unsigned long long>::max();

int env_default_jobs() {
  const char* env = std::getenv("DOUBLING_LAB_JOBS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1 || v > 4096) return 1;
  return static_cast<int>(v);
}

GroupDescriptor descriptor_for(const std::string& name, int dim, int magnus_cap) {
  if (name == "integers") return GroupDescriptor::integers();
  if (name == "zlex") return GroupDescriptor::zlex(dim);
  if (name == "heisenberg") return GroupDescriptor::heisenberg();
  if (name == "bs12") return GroupDescriptor::bs12();
  if (name == "free2") return GroupDescriptor::free2(magnus_cap);
  throw ParseError("unknown group: " + name, 0);
}

KRange parse_k_range(const std::string& text) {
  auto parse_one = [&](const std::string& part) -> std::size_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("k range must look like '3' or '3..5', got '" + text + "'", 0);
    unsigned long v = std::stoul(part);
    if (v < 1 || v > 64)
      throw ParseError("k must be between 1 and 64, got '" + part + "'", 0);
    return static_cast<std::size_t>(v);
  };
  KRange range;
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    range.lo = range.hi = parse_one(text);
  } else {
    range.lo = parse_one(text.substr(0, dots));
    range.hi = parse_one(text.substr(dots + 2));
  }
  if (range.lo > range.hi)
    throw ParseError("k range is empty: '" + text + "'", 0);
  return range;
}

std::string join_elements(const std::vector<GroupElement>& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_element(elems[i]);
  }
  return out;
}

void print_violations_table(const CorpusReport& report) {
  for (const auto& v : report.violations) {
    std::cout << "violation[" << v.check << "]: " << v.detail;
    if (!v.elements.empty()) std::cout << "  S = { " << join_elements(v.elements) << " }";
    std::cout << '\n';
  }
}

void print_report_table(const CorpusReport& report) {
  std::cout << "group: " << kind_name(report.group.kind);
  if (report.group.kind == GroupKind::zlex) std::cout << " dim " << report.group.dim;
  if (report.group.kind == GroupKind::free2)
    std::cout << " cap " << report.group.magnus_degree_cap;
  std::cout << "  radius: " << report.radius << "  k: " << report.k_lo << ".."
            << report.k_hi << '\n';
  std::cout << "ball: " << report.ball_count << " elements\n";
  std::cout << "subsets checked: " << report.subsets_checked
            << "  skipped (order undecided): " << report.skipped_undecided << '\n';
  std::cout << "classes:";
  for (std::size_t i = 0; i < report.class_counts.size(); ++i) {
    std::cout << ' ' << doubling_class_name(static_cast<DoublingClass>(i)) << '='
              << report.class_counts[i];
  }
  std::cout << '\n';
  std::cout << "recovered witnesses: " << report.recovered << '\n';
  std::cout << "sharp (|S^2| = 3k-2, non-abelian): " << report.sharp_witnesses.size()
            << '\n';
  std::cout << "violations: " << report.violations.size() << '\n';
  print_violations_table(report);
  std::cout << "elapsed: " << report.elapsed_seconds << "s\n";
}

struct AnalyzeConfig {
  std::string input;
  std::string format = "table";
};

int run_analyze(const AnalyzeConfig& cfg) {
  OrderedSet s = load_set_file(cfg.input);
  DoublingReport dr = doubling_report(s);
  AbelianCheckResult abelian = abelian_generation_check(s);

  bool in_recovery_range = s.size() >= 3 && dr.doubling <= 3 * s.size() - 4;
  bool two_iso = false;
  bool rank_ok = false;
  RecoveryResult recovery;
  if (in_recovery_range) {
    recovery = recover_structure(s);
    two_iso = two_isomorphism_check(s, recovery.witness);
    rank_ok = rank_bound_check(s, recovery.witness);
  }

  if (cfg.format == "json") {
    Json out;
    out["group"] = group_to_json(s.group.descriptor());
    out["k"] = s.size();
    out["duplicates_dropped"] = s.duplicates_dropped;
    out["doubling"] = dr.doubling;
    out["slack"] = dr.slack;
    out["class"] = doubling_class_name(dr.doubling_class);
    out["abelian"] = abelian.abelian;
    if (in_recovery_range) {
      out["witness"] = witness_to_json(recovery.witness);
      out["two_isomorphism"] = two_iso;
      out["rank_bound"] = rank_ok;
      out["derivation"] = record_to_json(recovery.record);
    } else {
      out["witness"] = nullptr;
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "group: " << kind_name(s.group.descriptor().kind) << '\n';
    std::cout << "k: " << s.size() << "  duplicates dropped: " << s.duplicates_dropped
              << '\n';
    std::cout << "|S^2|: " << dr.doubling << "  slack over 2k-1: " << dr.slack
              << "  class: " << doubling_class_name(dr.doubling_class) << '\n';
    std::cout << "abelian span: " << (abelian.abelian ? "yes" : "no") << '\n';
    if (in_recovery_range) {
      const ProgressionWitness& w = recovery.witness;
      std::cout << "witness: y = " << format_element(w.base)
                << "  x = " << format_element(w.step) << "  exponents = [";
      for (std::size_t i = 0; i < w.exponents.size(); ++i) {
        if (i > 0) std::cout << ", ";
        std::cout << w.exponents[i];
      }
      std::cout << "]  N = " << w.bound << '\n';
      std::cout << "two-isomorphism with exponent set: " << (two_iso ? "pass" : "FAIL")
                << '\n';
      std::cout << "single-generator reconstruction: " << (rank_ok ? "pass" : "FAIL")
                << '\n';
      std::cout << "derivation:\n";
      for (const auto& step : recovery.record.steps) {
        std::cout << "  " << step.lhs_label << " = " << step.rhs_label << "  ["
                  << justification_name(step.tag) << ']'
                  << (step.holds ? "" : "  VIOLATED") << '\n';
      }
    } else {
      std::cout << "witness: none (|S^2| above 3k-4 or k < 3)\n";
    }
  }
  if (in_recovery_range && (!two_iso || !rank_ok)) return 2;
  return 0;
}

struct SweepConfig {
  std::string group;
  int dim = 2;
  int radius = 1;
  std::string k_text = "3";
  int jobs = 1;
  unsigned long long subset_cap = kDefaultSubsetCap;
  std::size_t ball_cap = kDefaultBallCap;
  int magnus_cap = kDefaultMagnusCap;
  unsigned long long sample = 0;
  unsigned long long seed = 0;
  unsigned long long max_skips = kNoSkipLimit;
  bool stream = false;
  std::string format = "table";
};

int run_verify(const SweepConfig& cfg) {
  BallSpec spec{descriptor_for(cfg.group, cfg.dim, cfg.magnus_cap), cfg.radius};
  KRange range = parse_k_range(cfg.k_text);
  VerifyOptions opts;
  opts.jobs = cfg.jobs;
  opts.subset_cap = cfg.subset_cap;
  opts.ball_cap = cfg.ball_cap;
  opts.sample = cfg.sample;
  opts.seed = cfg.seed;

  unsigned long long total_violations = 0;
  unsigned long long total_skips = 0;
  if (cfg.stream) {
    for (std::size_t k = range.lo; k <= range.hi; ++k) {
      CorpusReport report = verify_corpus(spec, KRange{k, k}, opts);
      std::cout << report_to_json(report).dump() << '\n';
      total_violations += report.violations.size();
      total_skips += report.skipped_undecided;
    }
  } else {
    CorpusReport report = verify_corpus(spec, range, opts);
    if (cfg.format == "json") {
      std::cout << report_to_json(report).dump(2) << '\n';
    } else if (cfg.format == "csv") {
      std::cout << report_to_csv(report);
    } else {
      print_report_table(report);
    }
    total_violations = report.violations.size();
    total_skips = report.skipped_undecided;
  }
  if (total_violations > 0) return 2;
  if (total_skips > cfg.max_skips) return 3;
  return 0;
}

int run_sharp(const SweepConfig& cfg) {
  BallSpec spec{descriptor_for(cfg.group, cfg.dim, cfg.magnus_cap), cfg.radius};
  KRange range = parse_k_range(cfg.k_text);
  if (range.lo != range.hi)
    throw ParseError("sharp takes a single k, got '" + cfg.k_text + "'", 0);
  VerifyOptions opts;
  opts.subset_cap = cfg.subset_cap;
  opts.ball_cap = cfg.ball_cap;

  std::vector<OrderedSet> witnesses = find_sharp_witnesses(spec, range.lo, opts);
  if (cfg.format == "json") {
    Json out;
    out["group"] = group_to_json(spec.group);
    out["radius"] = spec.radius;
    out["k"] = range.lo;
    out["witnesses"] = Json::array();
    for (const auto& s : witnesses) {
      Json one = Json::array();
      for (const auto& a : s.elements) one.push_back(element_to_json(a));
      out["witnesses"].push_back(std::move(one));
    }
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << witnesses.size() << " sharp sets (|S^2| = 3k-2, non-abelian) at k = "
              << range.lo << '\n';
    for (const auto& s : witnesses)
      std::cout << "  { " << join_elements(s.elements) << " }\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for small product-set doubling in bi-ordered groups"};
  app.require_subcommand(1);

  const std::vector<std::string> group_names = {"integers", "zlex", "heisenberg",
                                                "bs12", "free2"};

  AnalyzeConfig analyze_cfg;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "classify one explicit set and derive its progression witness");
  analyze->add_option("--input", analyze_cfg.input, "JSON file holding the set")
      ->required();
  analyze->add_option("--format", analyze_cfg.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));

  SweepConfig verify_cfg;
  verify_cfg.jobs = env_default_jobs();
  CLI::App* verify = app.add_subcommand(
      "verify", "sweep every k-subset of a ball and check the doubling theorems");
  verify->add_option("--group", verify_cfg.group, "group to sweep")
      ->required()
      ->check(CLI::IsMember(group_names));
  verify->add_option("--dim", verify_cfg.dim, "dimension for zlex")
      ->check(CLI::Range(1, 16));
  verify->add_option("--radius", verify_cfg.radius, "generating ball radius")
      ->check(CLI::Range(1, 64));
  verify->add_option("--k", verify_cfg.k_text, "subset size or inclusive range A..B");
  verify->add_option("--jobs", verify_cfg.jobs, "worker threads")
      ->check(CLI::Range(1, 4096));
  verify->add_option("--subset-cap", verify_cfg.subset_cap,
                     "refuse sweeps planning more subsets than this");
  verify->add_option("--ball-cap", verify_cfg.ball_cap,
                     "refuse balls larger than this");
  verify->add_option("--magnus-cap", verify_cfg.magnus_cap,
                     "series truncation degree for free2")
      ->check(CLI::Range(2, 64));
  CLI::Option* sample_opt = verify->add_option(
      "--sample", verify_cfg.sample, "check this many sampled subsets per k instead");
  CLI::Option* seed_opt =
      verify->add_option("--seed", verify_cfg.seed, "sampling seed");
  sample_opt->needs(seed_opt);
  verify->add_option("--max-skips", verify_cfg.max_skips,
                     "exit 3 when more subsets than this were order-undecided");
  verify->add_flag("--stream", verify_cfg.stream,
                   "emit one compact JSON report line per k");
  verify->add_option("--format", verify_cfg.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));

  SweepConfig sharp_cfg;
  CLI::App* sharp = app.add_subcommand(
      "sharp", "list non-abelian sets meeting |S^2| = 3k-2 exactly");
  sharp->add_option("--group", sharp_cfg.group, "group to sweep")
      ->required()
      ->check(CLI::IsMember(group_names));
  sharp->add_option("--dim", sharp_cfg.dim, "dimension for zlex")
      ->check(CLI::Range(1, 16));
  sharp->add_option("--radius", sharp_cfg.radius, "generating ball radius")
      ->check(CLI::Range(1, 64));
  sharp->add_option("--k", sharp_cfg.k_text, "subset size");
  sharp->add_option("--magnus-cap", sharp_cfg.magnus_cap,
                    "series truncation degree for free2")
      ->check(CLI::Range(2, 64));
  sharp->add_option("--subset-cap", sharp_cfg.subset_cap,
                    "refuse sweeps planning more subsets than this");
  sharp->add_option("--ball-cap", sharp_cfg.ball_cap, "refuse balls larger than this");
  sharp->add_option("--format", sharp_cfg.format, "output format")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(analyze_cfg);
    if (app.got_subcommand(verify)) return run_verify(verify_cfg);
    if (app.got_subcommand(sharp)) return run_sharp(sharp_cfg);
  } catch (const doubling::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const doubling::OrderUndecidedError& e) {
    std::cerr << "error: " << e.what()
              << " (raise --magnus-cap to decide more comparisons)\n";
    return 3;
  } catch (const doubling::ResourceCapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const doubling::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
