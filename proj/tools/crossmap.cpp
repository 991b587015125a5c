// crossmap: command-line front end for the partition bijection, the
// crossing detectors and the exhaustive identity checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 budget or overflow, 4 network.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "crossmap/arcs.hpp"
#include "crossmap/bijection.hpp"
#include "crossmap/counting.hpp"
#include "crossmap/crossing.hpp"
#include "crossmap/diagram.hpp"
#include "crossmap/error.hpp"
#include "crossmap/oeis.hpp"
#include "crossmap/partition.hpp"
#include "crossmap/serialize.hpp"

namespace {

using namespace crossmap;
using nlohmann::json;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3, kNetwork = 4 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfBudget:
    case ErrorCode::Overflow:
    case ErrorCode::TooLarge:
    case ErrorCode::TooManyArcs:
      return kBudget;
    case ErrorCode::NetworkError:
      return kNetwork;
    default:
      return kUsage;
  }
}

std::string arcs_json(const std::vector<Arc>& arcs) { return json(arcs).dump(); }

struct Settings {
  int n = 0;
  int k = 0;
  int n_max = 0;
  int k_max = 3;
  int parts = 1;
  int budget = kDefaultBudget;
  int limit = -1;
  int witnesses = 0;
  int unit = 24;
  bool partial = false;
  bool reverse = false;
  bool as_json = false;
  bool fetch = false;
  std::string family;
  std::string kind = "crossing";
  std::string input;
  std::string out;
  std::string id;
  std::string format = "csv";
  std::string pi_color = RenderOptions{}.pi_color;
  std::string pi_hat_color = RenderOptions{}.pi_hat_color;
};

CountOptions count_options(const Settings& s) { return CountOptions{s.parts, s.budget}; }

int cmd_enumerate(const Settings& s) {
  PartitionStream stream(whole_range(s.n, s.partial));
  long emitted = 0;
  while ((s.limit < 0 || emitted < s.limit) && stream.next()) {
    std::cout << to_text(stream.current()) << '\n';
    ++emitted;
  }
  return kOk;
}

int cmd_count(const Settings& s) {
  const auto options = count_options(s);
  const auto family = parse_family(s.family);
  std::uint64_t value = 0;
  switch (family) {
    case Family::C: value = count_C(s.k, s.n, options); break;
    case Family::E: value = count_E(s.k, s.n, options); break;
    case Family::PartialE: value = count_partial_E(s.k, s.n, options); break;
    case Family::Bell: value = bell(s.n); break;
  }
  std::cout << value << '\n';
  return kOk;
}

int cmd_verify_identity(const Settings& s) {
  bool all_ok = true;
  json reports = json::array();
  for (int n = 0; n <= s.n_max; ++n) {
    auto report = verify_identity(s.k, n, count_options(s));
#ifdef CROSSMAP_FAULT_INJECTION
    report.lhs += 1;
    report.holds = report.lhs == report.rhs;
#endif
    const bool ok = report.holds && report.routes_agree();
    all_ok = all_ok && ok;
    if (s.as_json) {
      reports.push_back(report);
    } else {
      std::cout << "k=" << report.k << " n=" << report.n << " lhs=" << report.lhs << " rhs=" << report.rhs
                << " direct=" << report.rhs_direct << ' ' << (ok ? "OK" : "FAIL") << '\n';
    }
  }
  if (s.as_json) std::cout << reports.dump(2) << '\n';
  return all_ok ? kOk : kVerifyFailed;
}

int cmd_map(const Settings& s) {
  const auto source = parse_partition(s.input);
  const auto image = s.reverse ? reverse(source) : forward(source);
  std::cout << to_text(image) << '\n';
  if (s.witnesses <= 0) return kOk;

  // Source side is enhanced for forward and classical for reverse.
  const auto source_mode = s.reverse ? ArcMode::classical : ArcMode::enhanced;
  const auto image_mode = s.reverse ? ArcMode::enhanced : ArcMode::classical;
  const auto source_arcs = arcs_of(source, source_mode);
  const auto image_arcs = arcs_of(image, image_mode);
  bool ok = true;
  for (auto kind : {Pattern::crossing, Pattern::nesting}) {
    const auto found = list_k_witnesses(source_arcs, s.witnesses, kind, source_mode);
    const auto image_count = count_k_witnesses(image_arcs, s.witnesses, kind, image_mode);
    std::cout << to_string(kind) << " k=" << s.witnesses << ": " << found.size() << " -> " << image_count << '\n';
    ok = ok && found.size() == image_count;
    for (const auto& w : found) {
      const auto mapped = s.reverse ? witness_reverse(w) : witness_forward(w);
      const bool valid = is_valid(mapped) && std::all_of(mapped.arcs.begin(), mapped.arcs.end(), [&](const Arc& a) {
                           return std::binary_search(image_arcs.begin(), image_arcs.end(), a);
                         });
      ok = ok && valid;
      std::cout << "  " << arcs_json(w.arcs) << " -> " << arcs_json(mapped.arcs) << (valid ? "" : "  INVALID")
                << '\n';
    }
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_render(const Settings& s) {
  const auto p = parse_partition(s.input);
  const auto svg = render_overlay(p, RenderOptions{s.pi_color, s.pi_hat_color, s.unit});
  if (s.out.empty()) {
    std::cout << svg;
    return kOk;
  }
  std::ofstream file(s.out, std::ios::binary | std::ios::trunc);
  if (!file || !(file << svg)) {
    std::cerr << "crossmap: cannot write " << s.out << '\n';
    return kUsage;
  }
  std::cerr << "wrote " << s.out << '\n';
  return kOk;
}

int cmd_oeis_check(const Settings& s) {
  const auto binding = oeis::binding_for(s.id);
  if (!binding) fail(ErrorCode::UnknownId, s.id + " is not tracked by any computed family");
  const auto ref = s.fetch ? oeis::fetch_bfile(s.id, std::max(s.n_max + 1, 1)) : oeis::bundled(s.id);

  SequenceTable table;
  const auto options = count_options(s);
  for (int n = 0; n <= s.n_max; ++n) {
    std::uint64_t value = 0;
    switch (binding->family) {
      case Family::C: value = count_C(*binding->k, n, options); break;
      case Family::E: value = count_E(*binding->k, n, options); break;
      case Family::PartialE: value = count_partial_E(*binding->k, n, options); break;
      case Family::Bell: value = bell(n); break;
    }
    table.add(binding->family, binding->k, n, value);
  }
  const auto diff = oeis::compare(table, ref, binding->family, binding->k);
  if (s.as_json) {
    std::cout << json(diff).dump(2) << '\n';
  } else if (diff.ok()) {
    std::cout << "OK (" << diff.compared << " terms compared)\n";
  } else {
    for (const auto& m : diff.mismatches) {
      std::cout << "MISMATCH n=" << m.n << " computed=" << m.computed << " expected=" << m.expected << '\n';
    }
    std::cout << "FAIL (" << diff.mismatches.size() << " of " << diff.compared << " terms differ)\n";
  }
  return diff.ok() ? kOk : kVerifyFailed;
}

int cmd_bell_check(const Settings& s) {
  bool all_ok = true;
  json reports = json::array();
  for (int n = 0; n <= s.n_max; ++n) {
    const auto report = verify_eigensequence(n, count_options(s));
    all_ok = all_ok && report.holds();
    if (s.as_json) {
      reports.push_back(report);
    } else {
      std::cout << "n=" << n << " B(n+1)=" << report.lhs << " sum=" << report.rhs << " enumerated=" << report.enumerated
                << " bijection=" << report.distinct_images << ' ' << (report.holds() ? "OK" : "FAIL") << '\n';
    }
  }
  if (s.as_json) std::cout << reports.dump(2) << '\n';
  return all_ok ? kOk : kVerifyFailed;
}

int cmd_table(const Settings& s) {
  const auto table = sequence_table(s.k, s.n_max, count_options(s));
  if (s.format == "json") {
    std::cout << json(table).dump(2) << '\n';
  } else {
    std::cout << to_csv(table);
  }
  return kOk;
}

int cmd_distribution(const Settings& s) {
  const auto table = distribution_table(s.n, s.k_max, parse_pattern(s.kind), count_options(s));
  if (s.as_json) {
    std::cout << json(table).dump(2) << '\n';
  } else {
    std::cout << "max " << s.kind << "  partial-enhanced([" << s.n << "])  full-classical([" << s.n + 1 << "])\n";
    for (std::size_t k = 0; k < table.partial_enhanced.size(); ++k) {
      const bool last = k + 1 == table.partial_enhanced.size();
      std::cout << (last ? ">" + std::to_string(s.k_max) : std::to_string(k)) << "  " << table.partial_enhanced[k]
                << "  " << table.full_classical[k] << '\n';
    }
    std::cout << (table.matches() ? "OK" : "FAIL") << '\n';
  }
  return table.matches() ? kOk : kVerifyFailed;
}

int run(int argc, char** argv) {
  CLI::App app{"Partitions of subsets of [n] vs partitions of [n+1]: crossings, nestings and counts"};
  app.require_subcommand(1);
  Settings s;

  auto add_parallel = [&](CLI::App* cmd) {
    cmd->add_option("--parts", s.parts, "Enumeration sub-ranges counted in parallel")->check(CLI::Range(1, 256));
    cmd->add_option("--max-n", s.budget, "Enumeration budget (largest ground set)")->check(CLI::Range(0, kMaxEnumerationSize));
  };

  auto* enumerate = app.add_subcommand("enumerate", "List partitions in lexicographic label order");
  enumerate->add_option("--n", s.n, "Ground set size")->required()->check(CLI::Range(0, kMaxEnumerationSize));
  enumerate->add_flag("--partial", s.partial, "Partitions of all subsets of [n]");
  enumerate->add_option("--limit", s.limit, "Stop after this many lines")->check(CLI::NonNegativeNumber);

  auto* count = app.add_subcommand("count", "Count partitions avoiding k-crossings");
  count->add_option("--k", s.k, "Crossing size")->required();
  count->add_option("--n", s.n, "Ground set size")->required();
  count->add_option("--family", s.family, "C (classical), E (enhanced), partial-E or Bell")
      ->required()
      ->check(CLI::IsMember({"C", "E", "partial-E", "Bell"}));
  add_parallel(count);

  auto* identity = app.add_subcommand("verify-identity", "Check C_k(n+1) = sum binom(n,i) E_k(i) for n = 0..n-max");
  identity->add_option("--k", s.k, "Crossing size")->required();
  identity->add_option("--n-max", s.n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
  identity->add_flag("--json", s.as_json, "Emit JSON reports");
  add_parallel(identity);

  auto* map = app.add_subcommand("map", "Apply the bijection (or its inverse) to one partition");
  map->add_option("--input", s.input, "Partition text, e.g. 9:1,4,7,9/2,5/3/6")->required();
  map->add_flag("--reverse", s.reverse, "Map a partition of [n+1] back to [n]");
  map->add_option("--witnesses", s.witnesses, "Also list k-witnesses and their images")->check(CLI::Range(1, kMaxK));

  auto* render = app.add_subcommand("render", "Draw the overlay arc diagram as SVG");
  render->add_option("--input", s.input, "Partition text")->required();
  render->add_option("--out", s.out, "Output file (default stdout)");
  render->add_option("--pi-color", s.pi_color, "Colour of the source diagram");
  render->add_option("--pi-hat-color", s.pi_hat_color, "Colour of the image diagram");
  render->add_option("--unit", s.unit, "Pixels per grid unit")->check(CLI::Range(4, 200));

  auto* oeis_check = app.add_subcommand("oeis-check", "Compare computed counts with an OEIS sequence");
  oeis_check->add_option("--id", s.id, "One of A000108 A001006 A108304 A108307 A000110")->required();
  oeis_check->add_flag("--fetch", s.fetch, "Download the b-file instead of using the bundled snapshot");
  oeis_check->add_option("--n-max", s.n_max = 9, "Largest n compared")->check(CLI::NonNegativeNumber);
  oeis_check->add_flag("--json", s.as_json, "Emit the diff as JSON");
  add_parallel(oeis_check);

  auto* bell_check = app.add_subcommand("bell-check", "Check B_{n+1} = sum binom(n,i) B_i three ways");
  bell_check->add_option("--n-max", s.n_max, "Largest n")->required()->check(CLI::Range(0, 12));
  bell_check->add_flag("--json", s.as_json, "Emit JSON reports");
  add_parallel(bell_check);

  auto* table = app.add_subcommand("table", "Tabulate C_k, E_k, partial-E_k and Bell numbers");
  table->add_option("--k", s.k, "Crossing size")->required();
  table->add_option("--n-max", s.n_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", s.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_parallel(table);

  auto* distribution = app.add_subcommand("distribution", "Compare max-pattern distributions across the bijection");
  distribution->add_option("--n", s.n, "Ground set size of the source side")->required()->check(CLI::NonNegativeNumber);
  distribution->add_option("--k-max", s.k_max, "Largest k tabulated separately")->check(CLI::NonNegativeNumber);
  distribution->add_option("--kind", s.kind, "crossing or nesting")->check(CLI::IsMember({"crossing", "nesting"}));
  distribution->add_flag("--json", s.as_json, "Emit JSON");
  add_parallel(distribution);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(s);
    if (*count) return cmd_count(s);
    if (*identity) return cmd_verify_identity(s);
    if (*map) return cmd_map(s);
    if (*render) return cmd_render(s);
    if (*oeis_check) return cmd_oeis_check(s);
    if (*bell_check) return cmd_bell_check(s);
    if (*table) return cmd_table(s);
    if (*distribution) return cmd_distribution(s);
  } catch (const Error& e) {
    std::cerr << "crossmap: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
