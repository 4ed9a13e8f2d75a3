#include "uturan.h"

#include <cstring>
#include <string>

#include "turan/classify.hpp"
#include "turan/construction.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/json_io.hpp"
#include "turan/palette.hpp"
#include "turan/reduced.hpp"

struct ut_graph {
  turan::ThreeGraph g;
};

struct ut_reduced {
  turan::ReducedThreeGraph a;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** slot, const std::string& s) {
  if (slot) *slot = dup_string(s);
}

// Maps the library's exceptions onto status codes; fn returns the status for
// the non-throwing path.
template <typename Fn>
ut_status guarded(char** err, Fn&& fn) {
  if (err) *err = nullptr;
  try {
    return fn();
  } catch (const turan::GuardExceeded& e) {
    set_out(err, e.what());
    return UT_ELIMIT;
  } catch (const turan::InvalidInput& e) {
    set_out(err, e.what());
    return UT_EINVAL;
  } catch (const std::exception& e) {
    set_out(err, e.what());
    return UT_EINVAL;
  }
}

turan::SolveOptions to_options(const ut_solve_options* opt) {
  turan::SolveOptions o;
  if (opt) {
    o.max_vertices = opt->max_vertices;
    o.timeout = std::chrono::milliseconds(opt->timeout_ms);
    o.threads = opt->threads;
  }
  return o;
}

}  // namespace

extern "C" {

const char* ut_version(void) { return "1.0.0"; }

void ut_string_free(char* s) { delete[] s; }
void ut_graph_free(ut_graph* g) { delete g; }
void ut_reduced_free(ut_reduced* a) { delete a; }

ut_status ut_graph_from_json(const char* json, ut_graph** out, char** err) {
  return guarded(err, [&]() {
    if (!json || !out) throw turan::InvalidInput("null argument");
    auto g = turan::graph_from_json(turan::parse_json(json));
    *out = new ut_graph{std::move(g)};
    return UT_OK;
  });
}

ut_status ut_graph_from_name(const char* name, ut_graph** out, char** err) {
  return guarded(err, [&]() {
    if (!name || !out) throw turan::InvalidInput("null argument");
    *out = new ut_graph{turan::catalog_spec(name)};
    return UT_OK;
  });
}

ut_status ut_graph_to_json(const ut_graph* g, char** json_out) {
  return guarded(nullptr, [&]() {
    if (!g || !json_out) return UT_EINVAL;
    set_out(json_out, turan::graph_to_json(g->g).dump());
    return UT_OK;
  });
}

int ut_graph_vertex_count(const ut_graph* g) {
  return g ? g->g.vertex_count() : -1;
}

int ut_graph_edge_count(const ut_graph* g) { return g ? g->g.edge_count() : -1; }

ut_status ut_catalog_names(char** json_out) {
  return guarded(nullptr, [&]() {
    if (!json_out) return UT_EINVAL;
    set_out(json_out, nlohmann::json(turan::catalog_names()).dump());
    return UT_OK;
  });
}

void ut_solve_options_init(ut_solve_options* opt) {
  if (!opt) return;
  opt->max_vertices = 10;
  opt->timeout_ms = 60000;
  opt->threads = 1;
}

ut_status ut_solve(const ut_graph* g, const char* property,
                   const ut_solve_options* opt, char** result_json, char** err) {
  return guarded(err, [&]() {
    if (!g || !property) throw turan::InvalidInput("null argument");
    auto kind = turan::kind_from_string(property);
    if (!kind)
      throw turan::InvalidInput(std::string("unknown property '") + property +
                                "'");
    auto r = turan::solve(g->g, *kind, to_options(opt));
    switch (r.status) {
      case turan::SolveStatus::Sat:
        set_out(result_json, turan::certificate_to_json(*r.certificate).dump());
        return UT_OK;
      case turan::SolveStatus::Unsat:
        set_out(result_json, "null");
        return UT_NO;
      case turan::SolveStatus::Timeout:
        set_out(err, "solver timeout");
        return UT_ELIMIT;
    }
    return UT_EINVAL;
  });
}

ut_status ut_verify(const ut_graph* g, const char* certificate_json,
                    char** result_json, char** err) {
  return guarded(err, [&]() {
    if (!g || !certificate_json) throw turan::InvalidInput("null argument");
    auto cert =
        turan::certificate_from_json(turan::parse_json(certificate_json));
    auto r = turan::verify(g->g, cert);
    set_out(result_json, turan::verify_result_to_json(r).dump());
    return r.accepted ? UT_OK : UT_NO;
  });
}

ut_status ut_classify(const ut_graph* g, const ut_solve_options* opt,
                      char** report_json, char** err) {
  return guarded(err, [&]() {
    if (!g) throw turan::InvalidInput("null argument");
    auto report = turan::classify(g->g, to_options(opt));
    set_out(report_json, turan::report_to_json(report).dump());
    return UT_OK;
  });
}

ut_status ut_d_star(char** json_out) {
  return guarded(nullptr, [&]() {
    if (!json_out) return UT_EINVAL;
    set_out(json_out, turan::dstar_to_json(turan::d_star()).dump());
    return UT_OK;
  });
}

ut_status ut_construct_random(int n, uint64_t seed, ut_graph** out, char** err) {
  return guarded(err, [&]() {
    if (!out) throw turan::InvalidInput("null argument");
    *out = new ut_graph{turan::random_construction(n, seed)};
    return UT_OK;
  });
}

ut_status ut_inherited_certificate(int n, uint64_t seed, const int* subset,
                                   int subset_len, char** cert_json,
                                   char** err) {
  return guarded(err, [&]() {
    if (subset_len > 0 && !subset) throw turan::InvalidInput("null subset");
    std::vector<int> s(subset, subset + subset_len);
    turan::PairColoringSource source(n, seed);
    auto cert = turan::inherited_certificate(source, s);
    set_out(cert_json, turan::certificate_to_json(cert).dump());
    return UT_OK;
  });
}

ut_status ut_density_audit(const ut_graph* g, double d, double mu,
                           const int* sizes, int n_sizes, int samples,
                           uint64_t seed, char** audit_json, char** err) {
  return guarded(err, [&]() {
    if (!g || (n_sizes > 0 && !sizes)) throw turan::InvalidInput("null argument");
    turan::DensityAuditOptions opt;
    opt.d = d;
    opt.mu = mu;
    opt.sizes.assign(sizes, sizes + n_sizes);
    opt.samples = samples;
    opt.seed = seed;
    auto audit = turan::density_audit(g->g, opt);
    set_out(audit_json, turan::audit_to_json(audit).dump());
    return audit.pass ? UT_OK : UT_NO;
  });
}

ut_status ut_reduced_from_json(const char* json, ut_reduced** out, char** err) {
  return guarded(err, [&]() {
    if (!json || !out) throw turan::InvalidInput("null argument");
    auto a = turan::reduced_from_json(turan::parse_json(json));
    *out = new ut_reduced{std::move(a)};
    return UT_OK;
  });
}

ut_status ut_reduced_random(int index_count, int class_size, double edge_prob,
                            uint64_t seed, ut_reduced** out, char** err) {
  return guarded(err, [&]() {
    if (!out) throw turan::InvalidInput("null argument");
    *out = new ut_reduced{
        turan::random_reduced(index_count, class_size, edge_prob, seed)};
    return UT_OK;
  });
}

ut_status ut_reduced_to_json(const ut_reduced* a, char** json_out) {
  return guarded(nullptr, [&]() {
    if (!a || !json_out) return UT_EINVAL;
    set_out(json_out, turan::reduced_to_json(a->a).dump());
    return UT_OK;
  });
}

ut_status ut_embed(const ut_reduced* a, const ut_graph* f, int all_orderings,
                   char** result_json, char** err) {
  return guarded(err, [&]() {
    if (!a || !f) throw turan::InvalidInput("null argument");
    auto witness = turan::embeds(a->a, f->g, all_orderings != 0);
    if (!witness) {
      set_out(result_json, "null");
      return UT_NO;
    }
    if (!turan::check_embedding(a->a, f->g, *witness))
      throw std::runtime_error("embeds returned an invalid witness");
    set_out(result_json, turan::witness_to_json(*witness).dump());
    return UT_OK;
  });
}

}  // extern "C"
