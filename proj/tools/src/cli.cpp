#include "permdiag_cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "permdiag/bijection.hpp"
#include "permdiag/characterization.hpp"
#include "permdiag/diagram.hpp"
#include "permdiag/dyck.hpp"
#include "permdiag/enumeration.hpp"
#include "permdiag/error.hpp"
#include "permdiag/identities.hpp"
#include "permdiag/pattern.hpp"
#include "permdiag/shifted.hpp"
#include "permdiag_cli/io.hpp"

namespace permdiag::cli {

namespace {

using io::json;

struct Context {
  std::ostream& out;
  bool as_json = false;
  int cap = kDefaultEnumerationCap;

  void emit(const json& j) const { out << j.dump(2) << '\n'; }
};

[[noreturn]] void usage(const std::string& message) { throw Error(ErrorCode::BadArgs, message); }

std::vector<Permutation> parse_patterns(const std::vector<std::string>& texts) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(Permutation::parse(t));
  return out;
}

std::string format_cells(std::span<const Cell> cells) {
  std::ostringstream out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ' ';
    out << '(' << cells[i].row << ',' << cells[i].col << ')';
  }
  return out.str();
}

std::string format_sequence(std::span<const int> values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << values[i];
  }
  out << ')';
  return out.str();
}

// ---- map -------------------------------------------------------------------

struct MapArgs {
  std::string perm;
  std::string path;
  std::string partition;
  int n = 0;
  int s = 2;
  std::string to;
  CLI::Option* perm_opt = nullptr;
  CLI::Option* path_opt = nullptr;
  CLI::Option* partition_opt = nullptr;
  CLI::Option* n_opt = nullptr;
};

// Ordered key/value output shared by the text and JSON renderings.
class Record {
 public:
  void add(const std::string& key, const std::string& text, json value) {
    fields_.emplace_back(key, text);
    json_[key] = std::move(value);
  }
  void add(const std::string& key, const Permutation& p) { add(key, p.to_string(), io::encode(p)); }
  void add(const std::string& key, const Partition& lambda) { add(key, lambda.to_string(), io::encode(lambda)); }
  void add(const std::string& key, const DyckPath& path) { add(key, path.to_string(), io::encode(path)); }

  void print(const Context& ctx, bool bare) const {
    if (ctx.as_json) {
      ctx.emit(json_);
      return;
    }
    for (const auto& [key, text] : fields_) {
      if (!bare) {
        ctx.out << key << ": " << text << '\n';
      } else if (key != "input") {
        ctx.out << text << '\n';
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
  json json_ = json::object();
};

int map_permutation(const Context& ctx, const MapArgs& args) {
  const auto p = Permutation::parse(args.perm);
  Record rec;
  rec.add("input", p);
  const std::string& to = args.to;
  if (to.empty()) {
    if (avoids(p, pattern_321())) {
      const auto sigma = phi(p);
      rec.add("phi", sigma);
      rec.add("partition", require_dominant_partition(sigma));
      rec.add("path", psi_bjs(p));
    } else if (avoids(p, pattern_132())) {
      rec.add("phi_inverse", phi_inverse(p));
      rec.add("partition", require_dominant_partition(p));
      rec.add("path", psi_k(p));
    } else {
      throw Error(ErrorCode::Not132Avoiding, p.to_string() + " avoids neither 321 nor 132");
    }
  } else if (to == "phi") {
    rec.add("phi", phi(p));
  } else if (to == "phi-inverse") {
    rec.add("phi_inverse", phi_inverse(p));
  } else if (to == "psi-bjs") {
    rec.add("path", psi_bjs(p));
  } else if (to == "psi-k") {
    rec.add("path", psi_k(p));
  } else if (to == "partition") {
    rec.add("partition", require_dominant_partition(p));
  } else {
    usage("--to " + to + " does not apply to a permutation");
  }
  rec.print(ctx, !to.empty());
  return kExitOk;
}

int map_path(const Context& ctx, const MapArgs& args) {
  const auto path = DyckPath::parse(args.path);
  Record rec;
  rec.add("input", path.to_string(), path.to_string());
  const std::string& to = args.to;
  if (to.empty() || to == "partition") rec.add("partition", path_partition(path));
  if (to.empty() || to == "psi-k-inverse") rec.add("psi_k_inverse", psi_k_inverse(path));
  if (to.empty() || to == "psi-bjs-inverse") rec.add("psi_bjs_inverse", psi_bjs_inverse(path));
  if (!to.empty() && to != "partition" && to != "psi-k-inverse" && to != "psi-bjs-inverse") {
    usage("--to " + to + " does not apply to a path");
  }
  rec.print(ctx, !to.empty());
  return kExitOk;
}

int map_partition(const Context& ctx, const MapArgs& args) {
  if (args.n_opt->count() == 0) usage("--partition needs --n");
  const auto lambda = Partition::parse(args.partition);
  const int n = args.n;
  Record rec;
  rec.add("input", lambda);
  const std::string& to = args.to;
  if (to.empty()) {
    rec.add("path", partition_path(lambda, n));
    rec.add("permutation", permutation_from_partition(lambda, n));
  } else if (to == "path") {
    rec.add("path", partition_path(lambda, n));
  } else if (to == "permutation") {
    rec.add("permutation", permutation_from_partition(lambda, n));
  } else if (to == "mu") {
    rec.add("mu", mu_map(lambda, n, args.s));
  } else if (to == "mu-inverse") {
    rec.add("mu_inverse", mu_map_inverse(lambda, n, args.s));
  } else {
    usage("--to " + to + " does not apply to a partition");
  }
  rec.print(ctx, !to.empty());
  return kExitOk;
}

int run_map(const Context& ctx, const MapArgs& args) {
  const auto given = args.perm_opt->count() + args.path_opt->count() + args.partition_opt->count();
  if (given != 1) usage("map needs exactly one of --perm, --path, --partition");
  if (args.perm_opt->count()) return map_permutation(ctx, args);
  if (args.path_opt->count()) return map_path(ctx, args);
  return map_partition(ctx, args);
}

// ---- diagram ---------------------------------------------------------------

struct DiagramArgs {
  std::string perm;
  bool ranks = false;
  bool profile = false;
};

int run_diagram(const Context& ctx, const DiagramArgs& args) {
  const auto p = Permutation::parse(args.perm);
  const auto ranked = rank_diagram(p);
  const auto dominance = dominant_partition(p);
  const auto* lambda = std::get_if<Partition>(&dominance);
  if (args.profile && lambda == nullptr) throw Error(ErrorCode::Not132Avoiding, p.to_string() + " contains 132");

  if (ctx.as_json) {
    json j{{"perm", io::encode(p)}, {"diagram", io::encode(ranked)}, {"rank_sum", count_132_by_rank(p)}};
    if (lambda != nullptr) {
      j["partition"] = io::encode(*lambda);
    } else {
      const Cell w = std::get<NotDominant>(dominance).witness;
      j["witness"] = {w.row, w.col};
    }
    if (args.profile) {
      j["abh"] = io::encode(abh_profile(p));
      j["shifted"] = io::encode(shifted_profile(p));
    }
    ctx.emit(j);
    return kExitOk;
  }

  ctx.out << render_ascii(p, args.ranks);
  if (lambda != nullptr) {
    ctx.out << "partition: " << lambda->to_string() << '\n';
  } else {
    const Cell w = std::get<NotDominant>(dominance).witness;
    ctx.out << "not dominant: witness (" << w.row << ',' << w.col << ")\n";
  }
  if (args.ranks) {
    ctx.out << "essential: " << format_cells(ranked.essential()) << '\n';
    ctx.out << "rank sum: " << count_132_by_rank(p) << '\n';
  }
  if (args.profile) {
    const auto abh = abh_profile(p);
    const auto shifted = shifted_profile(p);
    ctx.out << "a: " << format_sequence(abh.a) << '\n';
    ctx.out << "a_bar: " << format_sequence(abh.a_bar) << '\n';
    ctx.out << "b: " << format_sequence(abh.b) << '\n';
    ctx.out << "h: " << format_sequence(abh.h) << '\n';
    for (const auto& [s, l] : shifted.l_values) ctx.out << "l_" << s << ": " << l << '\n';
    ctx.out << "L: " << shifted.L.to_string() << '\n';
  }
  return kExitOk;
}

// ---- count / check ---------------------------------------------------------

int run_count(const Context& ctx, const std::string& perm, const std::string& pattern) {
  const auto p = Permutation::parse(perm);
  const auto tau = Permutation::parse(pattern);
  const auto count = occurrences(p, tau);
  if (ctx.as_json) {
    ctx.emit({{"perm", io::encode(p)}, {"pattern", io::encode(tau)}, {"occurrences", count}});
  } else {
    ctx.out << count << '\n';
  }
  return kExitOk;
}

struct CheckArgs {
  std::string perm;
  std::string pattern;
  std::string kind;
  int k = 0;
  int s = 0;
  std::string via;
  CLI::Option* pattern_opt = nullptr;
  CLI::Option* kind_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* s_opt = nullptr;
};

int run_check(const Context& ctx, const CheckArgs& args) {
  const auto p = Permutation::parse(args.perm);
  const bool by_pattern = args.pattern_opt->count() > 0;
  if (by_pattern == (args.kind_opt->count() > 0)) usage("check needs exactly one of --pattern, --kind");

  Permutation tau = p;
  std::string via = args.via;
  bool result = false;
  if (by_pattern) {
    if (via.empty()) via = "bruteforce";
    if (via != "bruteforce") usage("--pattern is checked by brute force only; use --kind for diagram criteria");
    tau = Permutation::parse(args.pattern);
    result = avoids(p, tau);
  } else {
    if (args.k_opt->count() == 0) usage("--kind needs --k");
    if (via.empty()) via = "diagram";
    const int k = args.k;
    if (args.kind == "shifted") {
      if (args.s_opt->count() == 0) usage("--kind shifted needs --s");
      tau = shifted_pattern(args.s, k);
      result = via == "diagram" ? avoids_shifted_by_diagram(p, args.s, k) : avoids(p, tau);
    } else {
      const auto kind = args.kind == "decreasing"  ? AvoidanceKind::Decreasing
                        : args.kind == "increasing" ? AvoidanceKind::Increasing
                                                    : AvoidanceKind::TwoOneThree;
      tau = pattern_for(kind, k);
      result = via == "diagram" ? diagram_avoidance_check(p, k, kind) : avoids(p, tau);
    }
  }
  if (ctx.as_json) {
    ctx.emit({{"perm", io::encode(p)}, {"pattern", io::encode(tau)}, {"via", via}, {"avoids", result}});
  } else {
    ctx.out << (result ? "avoids " : "contains ") << tau.to_string() << '\n';
  }
  return kExitOk;
}

// ---- table -----------------------------------------------------------------

struct TableArgs {
  int n = 0;
  int k = 0;
  std::string stat;
  std::string partition_stat;
  std::string closed_form;
  std::vector<std::string> avoid{"1 3 2"};
  CLI::Option* k_opt = nullptr;
};

std::pair<int, int> closed_form_range(const std::string& name, int n) {
  if (name == "narayana") return {1, n};
  if (name == "ballot") return {0, n};
  return {0, n / 2};
}

int run_closed_form(const Context& ctx, const TableArgs& args) {
  const std::string& name = args.closed_form;
  if (name == "catalan" || args.k_opt->count() > 0) {
    std::vector<int> call{args.n};
    if (name != "catalan") call.push_back(args.k);
    const auto value = closed_form(name, call).str();
    if (ctx.as_json) {
      json j{{"name", name}, {"n", args.n}, {"value", value}};
      if (name != "catalan") j["k"] = args.k;
      ctx.emit(j);
    } else {
      ctx.out << value << '\n';
    }
    return kExitOk;
  }
  const auto [lo, hi] = closed_form_range(name, args.n);
  json values = json::object();
  for (int k = lo; k <= hi; ++k) {
    const std::vector<int> call{args.n, k};
    const auto value = closed_form(name, call).str();
    if (ctx.as_json) {
      values[std::to_string(k)] = value;
    } else {
      ctx.out << k << ' ' << value << '\n';
    }
  }
  if (ctx.as_json) ctx.emit({{"name", name}, {"n", args.n}, {"values", values}});
  return kExitOk;
}

void print_table(const Context& ctx, const StatisticTable& table, json header) {
  if (ctx.as_json) {
    header["table"] = io::encode(table);
    ctx.emit(header);
    return;
  }
  for (const auto& [value, count] : table.counts()) ctx.out << value << ' ' << count << '\n';
  ctx.out << "total " << table.total() << '\n';
}

int run_table(const Context& ctx, const TableArgs& args) {
  const int modes = !args.stat.empty() + !args.partition_stat.empty() + !args.closed_form.empty();
  if (modes != 1) usage("table needs exactly one of --stat, --partition-stat, --closed-form");
  if (!args.closed_form.empty()) return run_closed_form(ctx, args);
  if (!args.partition_stat.empty()) {
    const auto stat = parse_partition_statistic(args.partition_stat);
    print_table(ctx, partition_distribution(args.n, stat), {{"n", args.n}, {"partition_statistic", to_string(stat)}});
    return kExitOk;
  }
  const auto stat = parse_statistic(args.stat);
  const auto patterns = parse_patterns(args.avoid);
  json avoid = json::array();
  for (const auto& tau : patterns) avoid.push_back(io::encode(tau));
  print_table(ctx, distribution(args.n, patterns, stat, ctx.cap),
              {{"n", args.n}, {"statistic", to_string(stat)}, {"avoid", avoid}});
  return kExitOk;
}

// ---- generate --------------------------------------------------------------

int run_generate(const Context& ctx, int n, const std::vector<std::string>& avoid, bool young) {
  if (young) {
    if (n < 1) usage("--n must be at least 1");
    json list = json::array();
    std::size_t count = 0;
    for_each_staircase_partition(n, [&](const Partition& lambda) {
      ++count;
      if (ctx.as_json) {
        list.push_back(io::encode(lambda));
      } else {
        ctx.out << lambda.to_string() << '\n';
      }
    });
    if (ctx.as_json) ctx.emit({{"n", n}, {"partitions", list}, {"count", count}});
    return kExitOk;
  }
  const auto patterns = parse_patterns(avoid);
  json list = json::array();
  std::size_t count = 0;
  for_each_avoider(
      n, patterns,
      [&](const Permutation& p) {
        ++count;
        if (ctx.as_json) {
          list.push_back(io::encode(p));
        } else {
          ctx.out << p.to_string() << '\n';
        }
      },
      ctx.cap);
  if (ctx.as_json) {
    json names = json::array();
    for (const auto& tau : patterns) names.push_back(io::encode(tau));
    ctx.emit({{"n", n}, {"avoid", names}, {"permutations", list}, {"count", count}});
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const Context& ctx, int n_max) {
  IdentityReport report;
  if (ctx.as_json) {
    report = verify_identities(n_max, ctx.cap);
    json results = json::array();
    for (const auto& r : report.results) results.push_back(io::encode(r));
    ctx.emit({{"n_max", n_max}, {"results", results}, {"failures", report.failures()}});
  } else {
    report = verify_identities(n_max, ctx.cap, [&](const IdentityResult& r) { ctx.out << format_line(r) << '\n'; });
    ctx.out << "SUMMARY lines=" << report.results.size() << " failures=" << report.failures() << '\n';
  }
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::optional<int> enumeration_cap_from_env() {
  const char* raw = std::getenv("PERMDIAG_NMAX");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  const std::string_view text(raw);
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 1) return std::nullopt;
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rothe diagrams, Dyck paths and pattern avoidance for 132-avoiding permutations", "permdiag"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto setup = [&](CLI::App* sub) {
    sub->fallthrough();
    return sub;
  };

  MapArgs map_args;
  auto* map = setup(app.add_subcommand("map", "Phi, Phi^-1, the two Dyck path maps, path <-> partition, mu"));
  map_args.perm_opt = map->add_option("--perm", map_args.perm, "Permutation, e.g. \"1 4 7 2 3\"");
  map_args.path_opt = map->add_option("--path", map_args.path, "Dyck path over U/D");
  map_args.partition_opt = map->add_option("--partition", map_args.partition, "Partition, e.g. \"[3,1]\"");
  map_args.n_opt = map->add_option("--n", map_args.n, "Staircase size for --partition");
  map->add_option("--s", map_args.s, "Shift for --to mu / mu-inverse")->capture_default_str();
  map->add_option("--to", map_args.to, "Target (default: everything that applies)")
      ->check(CLI::IsMember({"phi", "phi-inverse", "psi-bjs", "psi-k", "partition", "psi-k-inverse",
                             "psi-bjs-inverse", "path", "permutation", "mu", "mu-inverse"}));

  DiagramArgs diagram_args;
  auto* diagram = setup(app.add_subcommand("diagram", "Render the Rothe diagram"));
  diagram->add_option("--perm", diagram_args.perm, "Permutation")->required();
  diagram->add_flag("--ranks", diagram_args.ranks, "Show cell ranks and the essential set");
  diagram->add_flag("--profile", diagram_args.profile, "Show a, b, h and l_s (132-avoiders)");

  std::string count_perm;
  std::string count_pattern;
  auto* count = setup(app.add_subcommand("count", "Count pattern occurrences"));
  count->add_option("--perm", count_perm, "Permutation")->required();
  count->add_option("--pattern", count_pattern, "Pattern, e.g. \"1 3 2\"")->required();

  CheckArgs check_args;
  auto* check = setup(app.add_subcommand("check", "Decide avoidance by brute force or by a diagram criterion"));
  check->add_option("--perm", check_args.perm, "Permutation")->required();
  check_args.pattern_opt = check->add_option("--pattern", check_args.pattern, "Arbitrary pattern (brute force)");
  check_args.kind_opt = check->add_option("--kind", check_args.kind, "Pattern family")
                            ->check(CLI::IsMember({"decreasing", "increasing", "two-one-three", "shifted"}));
  check_args.k_opt = check->add_option("--k", check_args.k, "Pattern length");
  check_args.s_opt = check->add_option("--s", check_args.s, "Shift for --kind shifted");
  check->add_option("--via", check_args.via, "diagram or bruteforce")
      ->check(CLI::IsMember({"diagram", "bruteforce"}));

  TableArgs table_args;
  auto* table = setup(app.add_subcommand("table", "Statistic distributions and closed forms"));
  table->add_option("--n", table_args.n, "Size")->required();
  table_args.k_opt = table->add_option("--k", table_args.k, "Second argument of a closed form");
  table->add_option("--stat", table_args.stat, "des, exc, returns, durfee_rank, rtl_maxima, fixed_shift");
  table->add_option("--partition-stat", table_args.partition_stat, "corners, diagonal_corners, durfee_rank over Y_n");
  table->add_option("--closed-form", table_args.closed_form, "catalan, narayana, ballot, rank_count, q_triangle")
      ->check(CLI::IsMember({"catalan", "narayana", "ballot", "rank_count", "q_triangle"}));
  table->add_option("--avoid", table_args.avoid, "Avoided patterns (default 1 3 2)")->capture_default_str();

  int generate_n = 0;
  bool generate_young = false;
  std::vector<std::string> generate_avoid{"1 3 2"};
  auto* generate = setup(app.add_subcommand("generate", "List avoiders or the partitions of Y_n"));
  generate->add_option("--n", generate_n, "Size")->required();
  generate->add_option("--avoid", generate_avoid, "Avoided patterns (default 1 3 2)")->capture_default_str();
  generate->add_flag("--young", generate_young, "List Y_n instead");

  int verify_n_max = 7;
  auto* verify = setup(app.add_subcommand("verify", "Check every identity against enumeration"));
  verify->add_option("--n-max", verify_n_max, "Largest n")->capture_default_str();

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto cap = enumeration_cap_from_env();
  if (!cap) {
    err << "permdiag: PERMDIAG_NMAX must be a positive integer\n";
    return kExitUsage;
  }
  const Context ctx{out, format == "json", *cap};

  try {
    if (map->parsed()) return run_map(ctx, map_args);
    if (diagram->parsed()) return run_diagram(ctx, diagram_args);
    if (count->parsed()) return run_count(ctx, count_perm, count_pattern);
    if (check->parsed()) return run_check(ctx, check_args);
    if (table->parsed()) return run_table(ctx, table_args);
    if (generate->parsed()) return run_generate(ctx, generate_n, generate_avoid, generate_young);
    if (verify->parsed()) return run_verify(ctx, verify_n_max);
  } catch (const Error& e) {
    err << "permdiag: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace permdiag::cli
