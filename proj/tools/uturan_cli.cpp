// Command-line front end. Everything goes through the shared-library C API;
// this file only parses arguments, reads files and prints one JSON document
// per invocation.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uturan.h"

namespace {

using nlohmann::json;

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

struct Emitted {
  int exit_code = 0;
};

// One schema-versioned document on stdout; the status string mirrors the
// exit code (0 sat/accept/pass, 1 unsat/reject/fail, 2 error, 3 timeout).
Emitted emit(const std::string& command, const std::string& status,
             int exit_code, const Timer& timer, const std::string& payload_key,
             const json& payload, const std::string& error = "") {
  json doc{{"schema", 1},
           {"command", command},
           {"status", status},
           {"elapsed_ms", timer.ms()}};
  if (!payload_key.empty()) doc[payload_key] = payload;
  if (!error.empty()) doc["error"] = error;
  std::cout << doc.dump(2) << std::endl;
  return {exit_code};
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  ut_string_free(s);
  return out;
}

json parse_payload(const std::string& s) {
  return s.empty() ? json(nullptr) : json::parse(s);
}

struct GraphHandle {
  ut_graph* g = nullptr;
  ~GraphHandle() { ut_graph_free(g); }
};

struct ReducedHandle {
  ut_reduced* a = nullptr;
  ~ReducedHandle() { ut_reduced_free(a); }
};

bool read_file(const std::string& path, std::string& out, std::string& err) {
  std::ifstream in(path);
  if (!in) {
    err = "cannot open file '" + path + "'";
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// A graph argument is a catalog reference ("name:wheel:6") or a JSON file.
ut_status load_graph(const std::string& spec, GraphHandle& handle,
                     std::string& err) {
  char* cerr = nullptr;
  ut_status st;
  if (spec.rfind("name:", 0) == 0) {
    st = ut_graph_from_name(spec.c_str(), &handle.g, &cerr);
  } else {
    std::string text;
    if (!read_file(spec, text, err)) return UT_EINVAL;
    st = ut_graph_from_json(text.c_str(), &handle.g, &cerr);
  }
  if (st != UT_OK) err = take_string(cerr);
  return st;
}

std::string status_word(ut_status st, const std::string& err,
                        const char* ok_word, const char* no_word) {
  switch (st) {
    case UT_OK: return ok_word;
    case UT_NO: return no_word;
    case UT_ELIMIT:
      return err.find("timeout") != std::string::npos ? "timeout" : "error";
    default: return "error";
  }
}

int default_threads() {
  if (const char* env = std::getenv("TURAN_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certificate toolkit for uniform Turan densities of small "
               "3-uniform hypergraphs"};
  app.require_subcommand(1);

  ut_solve_options opts;
  ut_solve_options_init(&opts);
  opts.threads = default_threads();

  std::string graph_spec, property, certificate_path, out_path;
  std::string reduced_path, target_spec, sizes_arg;
  uint64_t seed = 0;
  int n_arg = 0, samples = 100, index_count = 6, class_size = 4;
  double d_arg = 0.25, mu_arg = 0.05, edge_prob = 0.5;
  bool all_orderings = false;
  std::string catalog_name;

  auto add_guards = [&](CLI::App* cmd) {
    cmd->add_option("--max-vertices", opts.max_vertices,
                    "solver vertex guard (default 10)");
    cmd->add_option("--timeout-ms", opts.timeout_ms,
                    "solver time budget in ms (default 60000)");
    cmd->add_option("--threads", opts.threads,
                    "worker cap (default TURAN_THREADS or 1)");
  };

  auto* cat = app.add_subcommand("catalog", "print a named graph as JSON");
  cat->add_option("name", catalog_name, "catalog name, e.g. wheel:6");

  auto* check = app.add_subcommand("check", "decide a palette property");
  check->add_option("--property", property,
                    "vanishing|clubs|spades|spades-star|five-color")
      ->required();
  check->add_option("--graph", graph_spec, "graph JSON file or name:...")
      ->required();
  add_guards(check);

  auto* verify = app.add_subcommand("verify", "check a certificate");
  verify->add_option("--graph", graph_spec)->required();
  verify->add_option("--certificate", certificate_path)->required();

  auto* classify = app.add_subcommand("classify",
                                      "memberships and density bounds");
  classify->add_option("--graph", graph_spec)->required();
  add_guards(classify);

  auto* construct = app.add_subcommand("construct", "build a graph");
  construct->require_subcommand(1);
  auto* c_random = construct->add_subcommand(
      "random", "seeded quarter-density pair-coloring construction");
  c_random->add_option("--n", n_arg)->required();
  c_random->add_option("--seed", seed)->required();
  c_random->add_option("--out", out_path, "also write the graph JSON here");
  auto* c_reduced = construct->add_subcommand(
      "reduced", "seeded random reduced 3-graph");
  c_reduced->add_option("--indices", index_count);
  c_reduced->add_option("--class-size", class_size);
  c_reduced->add_option("--edge-prob", edge_prob);
  c_reduced->add_option("--seed", seed)->required();
  c_reduced->add_option("--out", out_path);

  auto* audit = app.add_subcommand("audit", "density audit of a graph");
  audit->add_option("--graph", graph_spec)->required();
  audit->add_option("--d", d_arg);
  audit->add_option("--mu", mu_arg);
  audit->add_option("--sizes", sizes_arg, "comma-separated subset sizes")
      ->required();
  audit->add_option("--samples", samples);
  audit->add_option("--seed", seed);

  auto* embed = app.add_subcommand("embed",
                                   "embed a 3-graph into a reduced 3-graph");
  embed->add_option("--reduced", reduced_path)->required();
  embed->add_option("--target", target_spec)->required();
  embed->add_flag("--all-orderings", all_orderings,
                  "try every injection, not just order-respecting ones");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Timer timer;
  std::string err;

  if (cat->parsed()) {
    if (catalog_name.empty()) {
      char* names = nullptr;
      ut_catalog_names(&names);
      return emit("catalog", "pass", 0, timer, "names",
                  parse_payload(take_string(names)))
          .exit_code;
    }
    GraphHandle g;
    char* cerr = nullptr;
    if (ut_graph_from_name(catalog_name.c_str(), &g.g, &cerr) != UT_OK)
      return emit("catalog", "error", 2, timer, "", {}, take_string(cerr))
          .exit_code;
    char* out = nullptr;
    ut_graph_to_json(g.g, &out);
    return emit("catalog", "pass", 0, timer, "graph",
                parse_payload(take_string(out)))
        .exit_code;
  }

  if (check->parsed()) {
    GraphHandle g;
    if (load_graph(graph_spec, g, err) != UT_OK)
      return emit("check", "error", 2, timer, "", {}, err).exit_code;
    char* result = nullptr;
    char* cerr = nullptr;
    ut_status st = ut_solve(g.g, property.c_str(), &opts, &result, &cerr);
    err = take_string(cerr);
    if (st == UT_EINVAL)
      return emit("check", "error", 2, timer, "", {}, err).exit_code;
    std::string word = status_word(st, err, "sat", "unsat");
    return emit("check", word, st, timer, "certificate",
                parse_payload(take_string(result)), err)
        .exit_code;
  }

  if (verify->parsed()) {
    GraphHandle g;
    if (load_graph(graph_spec, g, err) != UT_OK)
      return emit("verify", "error", 2, timer, "", {}, err).exit_code;
    std::string cert_text;
    if (!read_file(certificate_path, cert_text, err))
      return emit("verify", "error", 2, timer, "", {}, err).exit_code;
    char* result = nullptr;
    char* cerr = nullptr;
    ut_status st = ut_verify(g.g, cert_text.c_str(), &result, &cerr);
    err = take_string(cerr);
    if (st != UT_OK && st != UT_NO)
      return emit("verify", "error", static_cast<int>(st), timer, "", {}, err)
          .exit_code;
    return emit("verify", st == UT_OK ? "accept" : "reject", st, timer,
                "result", parse_payload(take_string(result)))
        .exit_code;
  }

  if (classify->parsed()) {
    GraphHandle g;
    if (load_graph(graph_spec, g, err) != UT_OK)
      return emit("classify", "error", 2, timer, "", {}, err).exit_code;
    char* report = nullptr;
    char* cerr = nullptr;
    ut_status st = ut_classify(g.g, &opts, &report, &cerr);
    err = take_string(cerr);
    if (st != UT_OK)
      return emit("classify", status_word(st, err, "pass", "fail"),
                  static_cast<int>(st), timer, "", {}, err)
          .exit_code;
    return emit("classify", "pass", 0, timer, "report",
                parse_payload(take_string(report)))
        .exit_code;
  }

  if (construct->parsed()) {
    char* cerr = nullptr;
    json payload;
    std::string key;
    ut_status st = UT_OK;
    if (c_random->parsed()) {
      GraphHandle g;
      st = ut_construct_random(n_arg, seed, &g.g, &cerr);
      if (st == UT_OK) {
        char* out = nullptr;
        ut_graph_to_json(g.g, &out);
        payload = parse_payload(take_string(out));
        key = "graph";
      }
    } else {
      ReducedHandle a;
      st = ut_reduced_random(index_count, class_size, edge_prob, seed, &a.a,
                             &cerr);
      if (st == UT_OK) {
        char* out = nullptr;
        ut_reduced_to_json(a.a, &out);
        payload = parse_payload(take_string(out));
        key = "reduced";
      }
    }
    err = take_string(cerr);
    if (st != UT_OK)
      return emit("construct", "error", static_cast<int>(st), timer, "", {},
                  err)
          .exit_code;
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      if (!out)
        return emit("construct", "error", 2, timer, "", {},
                    "cannot write '" + out_path + "'")
            .exit_code;
      out << payload.dump(2) << "\n";
    }
    return emit("construct", "pass", 0, timer, key, payload).exit_code;
  }

  if (audit->parsed()) {
    GraphHandle g;
    if (load_graph(graph_spec, g, err) != UT_OK)
      return emit("audit", "error", 2, timer, "", {}, err).exit_code;
    std::vector<int> sizes;
    std::stringstream ss(sizes_arg);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        sizes.push_back(std::stoi(part));
      } catch (const std::logic_error&) {
        return emit("audit", "error", 2, timer, "", {},
                    "bad --sizes entry '" + part + "'")
            .exit_code;
      }
    }
    char* result = nullptr;
    char* cerr = nullptr;
    ut_status st = ut_density_audit(g.g, d_arg, mu_arg, sizes.data(),
                                    static_cast<int>(sizes.size()), samples,
                                    seed, &result, &cerr);
    err = take_string(cerr);
    if (st != UT_OK && st != UT_NO)
      return emit("audit", "error", static_cast<int>(st), timer, "", {}, err)
          .exit_code;
    return emit("audit", st == UT_OK ? "pass" : "fail", st, timer, "audit",
                parse_payload(take_string(result)))
        .exit_code;
  }

  if (embed->parsed()) {
    std::string reduced_text;
    if (!read_file(reduced_path, reduced_text, err))
      return emit("embed", "error", 2, timer, "", {}, err).exit_code;
    ReducedHandle a;
    char* cerr = nullptr;
    if (ut_reduced_from_json(reduced_text.c_str(), &a.a, &cerr) != UT_OK)
      return emit("embed", "error", 2, timer, "", {}, take_string(cerr))
          .exit_code;
    GraphHandle g;
    if (load_graph(target_spec, g, err) != UT_OK)
      return emit("embed", "error", 2, timer, "", {}, err).exit_code;
    char* result = nullptr;
    ut_status st = ut_embed(a.a, g.g, all_orderings ? 1 : 0, &result, &cerr);
    err = take_string(cerr);
    if (st != UT_OK && st != UT_NO)
      return emit("embed", status_word(st, err, "sat", "unsat"),
                  static_cast<int>(st), timer, "", {}, err)
          .exit_code;
    return emit("embed", st == UT_OK ? "sat" : "unsat", st, timer, "witness",
                parse_payload(take_string(result)))
        .exit_code;
  }

  return 2;
}
