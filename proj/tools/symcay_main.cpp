// Command-line front end: builds catalog entries, verifies their expected
// properties, and runs graph queries on JSON artifacts.
//
// Exit codes: 0 pass, 1 verification failure (or negative iso verdict),
// 2 invalid parameters, 3 resource bound exceeded, 4 I/O failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symcay/catalog.hpp"
#include "symcay/json_io.hpp"
#include "symcay/notation.hpp"
#include "symcay/script.hpp"

namespace {

using namespace symcay;

Params parse_params(const std::vector<std::string>& kvs) {
  Params pr;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw hypothesis_error("--param expects key=value, got '" + kv + "'");
    try {
      std::size_t used = 0;
      long long v = std::stoll(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
      pr[kv.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw hypothesis_error("parameter '" + kv.substr(0, eq) + "' needs an integer value");
    }
  }
  return pr;
}

std::string params_text(const Params& pr) {
  std::string out;
  for (const auto& [k, v] : pr) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return out;
}

int cmd_build(const std::string& name, const std::vector<std::string>& kvs,
              const std::string& out) {
  CatalogEntry e = build(name, parse_params(kvs));
  ordered_json j = graph_to_json(e.graph);
  if (out.empty()) {
    std::fputs(dump_json(j).c_str(), stdout);
  } else {
    write_text_file(out, dump_json(j));
    std::string tag = e.name;
    if (!e.params.empty()) tag += " " + params_text(e.params);
    std::printf("%s: %d vertices, %zu edges -> %s\n", tag.c_str(), e.graph.n(),
                e.graph.edge_count(), out.c_str());
  }
  return 0;
}

int cmd_verify(const std::string& name, const std::vector<std::string>& kvs, bool full,
               const std::string& out) {
  auto t0 = std::chrono::steady_clock::now();
  CatalogEntry e = build(name, parse_params(kvs));
  VerifyReport rep = verify(e, full ? "full" : "structural");
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::fputs(report_text(rep).c_str(), stdout);
  if (!out.empty()) write_text_file(out, dump_json(report_to_json(rep)));
  std::fprintf(stderr, "elapsed %lld ms\n", static_cast<long long>(ms));
  return rep.all_pass ? 0 : 1;
}

int cmd_aut(const std::string& file) {
  Graph g = read_graph(file);
  PermGroup aut = automorphism_group(g);
  std::printf("|Aut| = %llu\n", static_cast<unsigned long long>(aut.order()));
  std::printf("generators:\n");
  for (const auto& p : aut.generators()) std::printf("  %s\n", print_permutation(p).c_str());
  return 0;
}

int cmd_iso(const std::string& file1, const std::string& file2) {
  Graph g1 = read_graph(file1);
  Graph g2 = read_graph(file2);
  auto map = are_isomorphic(g1, g2);
  if (!map) {
    std::printf("not isomorphic\n");
    return 1;
  }
  std::printf("isomorphic\n%s\n", print_permutation(Permutation(*map)).c_str());
  return 0;
}

int cmd_classify(const std::string& file) {
  Graph g = read_graph(file);
  std::fputs(dump_json(transitivity_to_json(classify(g))).c_str(), stdout);
  return 0;
}

int cmd_census(const std::string& family, const std::string& range,
               const std::vector<std::string>& kvs, bool full) {
  auto colon = range.find(':');
  auto eq = range.find('=');
  if (eq == std::string::npos || colon == std::string::npos || colon < eq)
    throw hypothesis_error("--range expects key=lo:hi, got '" + range + "'");
  std::string key = range.substr(0, eq);
  long long lo = 0, hi = 0;
  try {
    lo = std::stoll(range.substr(eq + 1, colon - eq - 1));
    hi = std::stoll(range.substr(colon + 1));
  } catch (const std::logic_error&) {
    throw hypothesis_error("--range bounds must be integers");
  }
  if (lo > hi) throw hypothesis_error("--range is empty");
  Params fixed = parse_params(kvs);
  bool any_fail = false;
  for (long long v = lo; v <= hi; ++v) {
    Params pr = fixed;
    pr[key] = v;
    std::string tag = family + " " + params_text(pr);
    try {
      CatalogEntry e = build(family, pr);
      VerifyReport rep = verify(e, full ? "full" : "structural");
      int fails = 0;
      for (const auto& it : rep.items) fails += it.pass ? 0 : 1;
      if (rep.all_pass) {
        std::printf("%s: pass (%zu claims)\n", tag.c_str(), rep.items.size());
      } else {
        std::printf("%s: FAIL (%d of %zu claims)\n", tag.c_str(), fails, rep.items.size());
        any_fail = true;
      }
    } catch (const bound_error& ex) {
      std::printf("%s: skipped (bound: %s)\n", tag.c_str(), ex.what());
    } catch (const hypothesis_error& ex) {
      std::printf("%s: skipped (hypothesis: %s)\n", tag.c_str(), ex.what());
    }
  }
  return any_fail ? 1 : 0;
}

int cmd_script(const std::string& file) {
  ScriptResult res = run_script(parse_script(read_text_file(file)));
  std::fputs(res.summary.c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for tetravalent edge-transitive graph constructions"};
  app.require_subcommand(1);

  std::uint64_t max_group_order = symcay::limits().max_group_order;
  std::uint64_t max_coset_index = symcay::limits().max_coset_index;
  int max_aut_vertices = symcay::limits().max_aut_vertices;
  app.add_option("--max-group-order", max_group_order,
                 "element enumeration bound (env SYMCAY_MAX_GROUP_ORDER)");
  app.add_option("--max-aut-vertices", max_aut_vertices,
                 "automorphism search vertex bound (env SYMCAY_MAX_AUT_VERTICES)");
  app.add_option("--max-coset-index", max_coset_index,
                 "coset enumeration bound (env SYMCAY_MAX_COSET_INDEX)");

  std::string name, out, range, file1, file2;
  std::vector<std::string> kvs;
  bool full = false;

  auto* b = app.add_subcommand("build", "build an entry and write its graph as JSON");
  b->add_option("name", name, "catalog entry")->required();
  b->add_option("--param", kvs, "parameter override key=value");
  b->add_option("--out", out, "output file (stdout when omitted)");

  auto* v = app.add_subcommand("verify", "build an entry and check its expected properties");
  v->add_option("name", name, "catalog entry")->required();
  v->add_option("--param", kvs, "parameter override key=value");
  v->add_flag("--full", full, "also run automorphism-level checks");
  v->add_option("--out", out, "write the JSON report here");

  auto* a = app.add_subcommand("aut", "automorphism group of a graph JSON file");
  a->add_option("file", file1, "graph JSON")->required();

  auto* i = app.add_subcommand("iso", "isomorphism test between two graph JSON files");
  i->add_option("file1", file1, "graph JSON")->required();
  i->add_option("file2", file2, "graph JSON")->required();

  auto* c = app.add_subcommand("classify", "transitivity report under the full automorphism group");
  c->add_option("file", file1, "graph JSON")->required();

  auto* n = app.add_subcommand("census", "verify a family over a parameter range");
  n->add_option("family", name, "catalog entry")->required();
  n->add_option("--range", range, "key=lo:hi sweep")->required();
  n->add_option("--param", kvs, "fixed parameter key=value");
  n->add_flag("--full", full, "full verification level");

  auto* s = app.add_subcommand("script", "run `name = expr` bindings from a file");
  s->add_option("file", file1, "script file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  symcay::limits().max_group_order = max_group_order;
  symcay::limits().max_coset_index = max_coset_index;
  symcay::limits().max_aut_vertices = max_aut_vertices;

  try {
    if (b->parsed()) return cmd_build(name, kvs, out);
    if (v->parsed()) return cmd_verify(name, kvs, full, out);
    if (a->parsed()) return cmd_aut(file1);
    if (i->parsed()) return cmd_iso(file1, file2);
    if (c->parsed()) return cmd_classify(file1);
    if (n->parsed()) return cmd_census(name, range, kvs, full);
    return cmd_script(file1);
  } catch (const symcay::io_error& ex) {
    std::fprintf(stderr, "io error: %s\n", ex.what());
    return 4;
  } catch (const symcay::bound_error& ex) {
    std::fprintf(stderr, "bound exceeded: %s\n", ex.what());
    return 3;
  } catch (const symcay::hypothesis_error& ex) {
    std::fprintf(stderr, "invalid: %s\n", ex.what());
    return 2;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
}
