#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "permcycle/bounds.hpp"
#include "permcycle/cycle_graph.hpp"
#include "permcycle/descents.hpp"
#include "permcycle/diameter_sort.hpp"
#include "permcycle/oracle.hpp"
#include "permcycle/permutation.hpp"
#include "permcycle/rearrangement.hpp"
#include "permcycle/verify.hpp"

namespace {

using nlohmann::json;
using namespace permcycle;

// --threads when given, else PERMCYCLE_THREADS, else auto.
int resolve_threads(int flag_value) {
  if (flag_value >= 0) return flag_value;
  if (const char* env = std::getenv("PERMCYCLE_THREADS")) {
    return std::atoi(env);
  }
  return 0;
}

json clans_to_json(const std::vector<ClanInterval>& clans) {
  json arr = json::array();
  for (const auto& c : clans) arr.push_back({{"begin", c.begin}, {"end", c.end}});
  return arr;
}

int cmd_encode(const std::string& text, bool fixed, const std::string& format) {
  const Perm pi = parse_one_line(text);
  const CycleGraphEncoding enc = encode(pi);
  if (format == "json") {
    json out{{"n", enc.n},
             {"permutation", format_one_line(pi)},
             {"encoding", format_cycles(enc.alt_cycles, 0, fixed)},
             {"cycles", enc.alt_cycles.cycles},
             {"even", is_even(enc.perm)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << format_cycles(enc.alt_cycles, 0, fixed) << "\n";
  }
  return 0;
}

int cmd_bounds(const std::string& text, const std::string& format) {
  const Perm pi = parse_one_line(text);
  const BoundReport r = bound_report(pi);
  if (format == "json") {
    json out{{"ptb", r.ptb},     {"dm_lb", r.dm_lb}, {"cs_lb", r.cs_lb}, {"new_lb", r.new_lb},
             {"bid_lb", r.bid_lb}, {"td_lb", r.td_lb}, {"td_ub", r.td_ub}, {"pexc", r.pexc},
             {"strips", r.strips}, {"clans", clans_to_json(r.clans)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "ptb\t" << r.ptb << "\ndm_lb\t" << r.dm_lb << "\ncs_lb\t" << r.cs_lb
              << "\nnew_lb\t" << r.new_lb << "\nbid_lb\t" << r.bid_lb << "\ntd_lb\t" << r.td_lb
              << "\ntd_ub\t" << r.td_ub << "\npexc\t" << r.pexc << "\n";
  }
  return 0;
}

int cmd_exact(const std::string& text, const std::string& family, const std::string& dump,
              const std::string& load, Oracle& oracle, const std::string& format) {
  const Perm pi = parse_one_line(text);
  const FamilyTag tag = parse_family(family);
  if (!load.empty()) {
    std::ifstream in(load, std::ios::binary);
    if (!in) throw std::invalid_argument("exact: cannot open " + load);
    DistanceTable table = load_table(in);
    if (table.n != pi.size() || table.family != tag) {
      throw std::invalid_argument("exact: loaded table does not match request");
    }
    oracle.put(std::move(table));
  }
  const DistanceTable& table = oracle.table(pi.size(), tag);
  const int d = table.dist[rank(pi)];
  if (!dump.empty()) {
    std::ofstream out(dump, std::ios::binary);
    if (!out) throw std::invalid_argument("exact: cannot open " + dump);
    dump_table(table, out);
  }
  if (format == "json") {
    json out{{"family", family}, {"n", pi.size()}, {"permutation", format_one_line(pi)},
             {"distance", d},    {"diameter", table.diameter}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << d << "\n";
  }
  return 0;
}

int cmd_table1(int max_n, Oracle& oracle, const std::string& format) {
  const auto rows = table1(max_n, oracle);
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"factorial", r.n_factorial},
                     {"tight_dm", r.tight_dm},
                     {"tight_cs", r.tight_cs},
                     {"tight_new", r.tight_new}});
    }
    std::cout << json{{"table1", arr}}.dump() << "\n";
  } else {
    std::cout << to_tsv(rows);
  }
  return 0;
}

int cmd_table2(int max_n, Oracle& oracle, const std::string& format) {
  const auto rows = table2(max_n, oracle);
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"factorial", r.n_factorial},
                     {"delta", r.delta}});
    }
    std::cout << json{{"table2", arr}}.dump() << "\n";
  } else {
    std::cout << to_tsv(rows);
  }
  return 0;
}

int cmd_diameter(int max_n, Oracle& oracle, const std::string& format) {
  const auto report = verify_diameter_family(max_n, &oracle);
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : report.rows) {
      json r{{"n", row.n},
             {"permutation", format_one_line(row.pi)},
             {"bound", row.bound},
             {"floor_3n_4", row.floor_3n_4},
             {"ok", row.ok}};
      if (row.bfs) r["bfs"] = *row.bfs;
      arr.push_back(std::move(r));
    }
    std::cout << json{{"diameter", arr}, {"all_ok", report.all_ok}}.dump() << "\n";
  } else {
    for (const auto& row : report.rows) {
      std::cout << row.n << '\t' << format_one_line(row.pi) << '\t' << row.bound << '\t'
                << row.floor_3n_4 << '\t';
      if (row.bfs) {
        std::cout << *row.bfs;
      } else {
        std::cout << '-';
      }
      std::cout << '\t' << (row.ok ? "ok" : "FAIL") << "\n";
    }
  }
  return 0;
}

int cmd_sort2(const std::string& text, bool trace, const std::string& format) {
  const Perm pi = parse_one_line(text);
  const SortingSequence seq = sort_two_permutation(TwoPermutation(pi));
  if (format == "json") {
    json ops = json::array();
    for (const auto& op : seq.ops) ops.push_back(op.to_string());
    json out{{"start", format_one_line(seq.start)}, {"ops", ops}, {"length", seq.ops.size()}};
    if (trace) {
      json steps = json::array();
      Perm cur = seq.start;
      for (const auto& op : seq.ops) {
        cur = cur * realise(op);
        steps.push_back(format_one_line(cur));
      }
      out["intermediates"] = std::move(steps);
    }
    std::cout << out.dump() << "\n";
  } else {
    for (std::size_t i = 0; i < seq.ops.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << seq.ops[i].to_string();
    }
    std::cout << "\n";
    if (trace) {
      Perm cur = seq.start;
      for (const auto& op : seq.ops) {
        cur = cur * realise(op);
        std::cout << format_one_line(cur) << "\n";
      }
    }
  }
  return 0;
}

int cmd_toric(const std::string& text, const std::string& format) {
  const Perm pi = parse_one_line(text);
  const auto cls = toric_class(pi);
  if (format == "json") {
    json arr = json::array();
    for (const auto& sigma : cls) arr.push_back(format_one_line(sigma));
    std::cout << json{{"size", cls.size()}, {"members", arr}}.dump() << "\n";
  } else {
    for (const auto& sigma : cls) std::cout << format_one_line(sigma) << "\n";
  }
  return 0;
}

int cmd_verify(const VerifyOptions& opts) {
  const auto results = run_acceptance(opts);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.id << " " << r.name << ": " << r.detail
              << "\n";
    all = all && r.pass;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permcycle: cycle-graph encodings, rearrangement distance bounds, and exact"
               " Cayley-graph searches over S_n"};
  app.require_subcommand(1);

  std::string perm_text, family = "ptd", format = "tsv", dump_file, load_file, cli_path;
  int max_n = 8, cap = kDefaultBfsCap, threads = -1;
  bool fixed = false, trace = false, long_tables = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"tsv", "json"}));
  };
  auto add_compute = [&](CLI::App* cmd) {
    cmd->add_option("--cap-override", cap, "raise the search cap (hard limit 12)");
    cmd->add_option("--threads", threads, "worker threads (0 = auto)")
        ->check(CLI::Range(0, 1024));
  };

  auto* c_encode = app.add_subcommand("encode", "cycle-graph encoding of a permutation");
  c_encode->add_option("permutation", perm_text, "one-line notation, e.g. \"4 1 6 2 5 7 3\"")
      ->required();
  c_encode->add_flag("--fixed", fixed, "include fixed points in the cycle notation");
  add_format(c_encode);

  auto* c_bounds = app.add_subcommand("bounds", "distance bounds from cycle statistics");
  c_bounds->add_option("permutation", perm_text)->required();
  add_format(c_bounds);

  auto* c_exact = app.add_subcommand("exact", "exact distance by breadth-first search");
  c_exact->add_option("permutation", perm_text)->required();
  c_exact->add_option("--family", family, "generator family")
      ->check(CLI::IsMember({"bid", "td", "exc", "ptd", "pexc"}));
  c_exact->add_option("--dump", dump_file, "write the distance table to a binary file");
  c_exact->add_option("--load", load_file, "reuse a previously dumped distance table");
  add_compute(c_exact);
  add_format(c_exact);

  auto* c_table1 = app.add_subcommand("table1", "tight counts of the three distance bounds");
  c_table1->add_option("--max-n", max_n, "largest n");
  add_compute(c_table1);
  add_format(c_table1);

  auto* c_table2 = app.add_subcommand("table2", "histogram of distance minus encoding bound");
  c_table2->add_option("--max-n", max_n, "largest n");
  add_compute(c_table2);
  add_format(c_table2);

  auto* c_diameter = app.add_subcommand("diameter", "extremal-family check per n");
  c_diameter->add_option("--max-n", max_n, "largest n");
  add_compute(c_diameter);
  add_format(c_diameter);

  auto* c_sort2 = app.add_subcommand("sort2", "optimal prefix transposition sort of a"
                                              " 2-permutation");
  c_sort2->add_option("permutation", perm_text)->required();
  c_sort2->add_flag("--trace", trace, "print intermediate permutations");
  add_format(c_sort2);

  auto* c_toric = app.add_subcommand("toric", "members of the toric equivalence class");
  c_toric->add_option("permutation", perm_text)->required();
  add_format(c_toric);

  auto* c_verify = app.add_subcommand("verify", "run the full property suite");
  c_verify->add_option("--max-n", max_n, "table check depth");
  c_verify->add_flag("--long", long_tables, "extend the table checks to n = 9, 10");
  c_verify->add_option("--cli", cli_path, "binary to exercise for the determinism check");
  add_compute(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Oracle oracle;
  oracle.options.cap = std::min(cap, kHardBfsCap);
  oracle.options.threads = resolve_threads(threads);
  oracle.options.notes = &std::cerr;

  try {
    if (c_encode->parsed()) return cmd_encode(perm_text, fixed, format);
    if (c_bounds->parsed()) return cmd_bounds(perm_text, format);
    if (c_exact->parsed()) return cmd_exact(perm_text, family, dump_file, load_file, oracle, format);
    if (c_table1->parsed()) return cmd_table1(max_n, oracle, format);
    if (c_table2->parsed()) return cmd_table2(max_n, oracle, format);
    if (c_diameter->parsed()) return cmd_diameter(max_n, oracle, format);
    if (c_sort2->parsed()) return cmd_sort2(perm_text, trace, format);
    if (c_toric->parsed()) return cmd_toric(perm_text, format);
    if (c_verify->parsed()) {
      VerifyOptions vopts;
      vopts.table_max_n = max_n;
      vopts.long_tables = long_tables;
      vopts.threads = oracle.options.threads;
      vopts.cli_path = cli_path;
      return cmd_verify(vopts);
    }
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
