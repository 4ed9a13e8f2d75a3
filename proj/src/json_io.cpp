#include "turan/json_io.hpp"

#include <sstream>

#include "turan/errors.hpp"

namespace turan {

using nlohmann::json;

namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

json graph_to_json(const ThreeGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e[0], e[1], e[2]});
  return json{{"n", g.vertex_count()}, {"edges", edges}};
}

ThreeGraph graph_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("graph must be a JSON object");
  int n = as_int(member(j, "n"), "n");
  const json& edges = member(j, "edges");
  if (!edges.is_array()) throw InvalidInput("edges must be an array");
  std::vector<Triple> out;
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 3)
      throw InvalidInput("each edge must be an array of 3 vertices");
    out.push_back({as_int(e[0], "edge vertex"), as_int(e[1], "edge vertex"),
                   as_int(e[2], "edge vertex")});
  }
  return ThreeGraph(n, std::move(out));
}

json certificate_to_json(const PaletteCertificate& c) {
  json coloring = json::array();
  for (const auto& [pair, color] : c.coloring)
    coloring.push_back({{"pair", {pair[0], pair[1]}}, {"color", to_string(color)}});
  json j{{"kind", to_string(c.kind)},
         {"ordering", c.ordering},
         {"istar", nullptr},
         {"coloring", coloring}};
  if (c.istar) j["istar"] = *c.istar;
  return j;
}

PaletteCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("certificate must be a JSON object");
  PaletteCertificate c;
  const json& kind = member(j, "kind");
  if (!kind.is_string()) throw InvalidInput("certificate kind must be a string");
  auto k = kind_from_string(kind.get<std::string>());
  if (!k) throw InvalidInput("unknown certificate kind '" +
                             kind.get<std::string>() + "'");
  c.kind = *k;
  const json& ordering = member(j, "ordering");
  if (!ordering.is_array()) throw InvalidInput("ordering must be an array");
  for (const auto& v : ordering) c.ordering.push_back(as_int(v, "ordering entry"));
  if (j.contains("istar") && !j["istar"].is_null())
    c.istar = as_int(j["istar"], "istar");
  const json& coloring = member(j, "coloring");
  if (!coloring.is_array()) throw InvalidInput("coloring must be an array");
  for (const auto& entry : coloring) {
    const json& pair = member(entry, "pair");
    if (!pair.is_array() || pair.size() != 2)
      throw InvalidInput("coloring pair must be an array of 2 vertices");
    int a = as_int(pair[0], "pair vertex"), b = as_int(pair[1], "pair vertex");
    if (a == b) throw InvalidInput("coloring pair has equal endpoints");
    const json& color = member(entry, "color");
    if (!color.is_string()) throw InvalidInput("color must be a string");
    auto col = color_from_string(color.get<std::string>());
    if (!col)
      throw InvalidInput("unknown color '" + color.get<std::string>() + "'");
    c.coloring.emplace_back(Pair{std::min(a, b), std::max(a, b)}, *col);
  }
  std::sort(c.coloring.begin(), c.coloring.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (size_t i = 1; i < c.coloring.size(); ++i)
    if (c.coloring[i - 1].first == c.coloring[i].first)
      throw InvalidInput("coloring lists a pair twice");
  return c;
}

json verify_result_to_json(const VerifyResult& r) {
  json j{{"accepted", r.accepted}};
  if (!r.accepted) {
    j["reason"] = r.reason;
    if (r.violating_edge) {
      const auto& e = *r.violating_edge;
      j["violating_edge"] = {e[0], e[1], e[2]};
      j["found"] = r.found_pattern;
      j["expected"] = r.expected_patterns;
    }
  }
  return j;
}

json dstar_to_json(const DStar& d) {
  return json{{"value", d.value}, {"residual", d.residual}};
}

json report_to_json(const ClassificationReport& r) {
  json memberships = json::object();
  for (const auto& [kind, kr] : r.memberships) {
    json entry;
    switch (kr.membership) {
      case Membership::Sat: entry["status"] = "sat"; break;
      case Membership::Unsat: entry["status"] = "unsat"; break;
      case Membership::Skipped: entry["status"] = "skipped"; break;
    }
    entry["certificate"] =
        kr.certificate ? certificate_to_json(*kr.certificate) : json(nullptr);
    if (!kr.note.empty()) entry["note"] = kr.note;
    memberships[to_string(kind)] = entry;
  }
  json j{{"memberships", memberships},
         {"lower_bound", r.lower_bound},
         {"upper_bound", r.upper_bound},
         {"lower_bound_expr", r.lower_bound_expr},
         {"upper_bound_expr", r.upper_bound_expr},
         {"exact", r.exact ? json(*r.exact) : json(nullptr)},
         {"rationale", r.rationale}};
  return j;
}

json audit_to_json(const DensityAudit& a) {
  json per_size = json::array();
  for (const auto& s : a.per_size)
    per_size.push_back({{"size", s.size},
                        {"exact", s.exact},
                        {"tested", s.tested},
                        {"worst_deficit", s.worst_deficit}});
  return json{{"d", a.d},
              {"mu", a.mu},
              {"samples", a.samples},
              {"worst_deficit", a.worst_deficit},
              {"pass", a.pass},
              {"per_size", per_size}};
}

namespace {

std::string key_of(const Pair& p) {
  std::ostringstream os;
  os << p[0] << "," << p[1];
  return os.str();
}

std::string key_of(const Triple& t) {
  std::ostringstream os;
  os << t[0] << "," << t[1] << "," << t[2];
  return os.str();
}

std::vector<int> parse_key(const std::string& key, size_t want) {
  std::vector<int> out;
  std::istringstream is(key);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(part, &pos));
      if (pos != part.size()) throw std::invalid_argument(part);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad index key '" + key + "'");
    }
  }
  if (out.size() != want)
    throw InvalidInput("index key '" + key + "' must have " +
                       std::to_string(want) + " parts");
  return out;
}

}  // namespace

json reduced_to_json(const ReducedThreeGraph& a) {
  json sizes = json::object();
  for (const auto& [pair, size] : a.class_sizes()) sizes[key_of(pair)] = size;
  json constituents = json::object();
  for (const auto& [triple, edges] : a.constituents()) {
    json arr = json::array();
    for (const auto& e : edges) arr.push_back({e[0], e[1], e[2]});
    constituents[key_of(triple)] = arr;
  }
  return json{{"indices", a.indices()},
              {"class_sizes", sizes},
              {"constituents", constituents}};
}

ReducedThreeGraph reduced_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("reduced graph must be a JSON object");
  std::vector<int> indices;
  for (const auto& v : member(j, "indices"))
    indices.push_back(as_int(v, "index"));
  std::map<Pair, int> sizes;
  for (const auto& [key, value] : member(j, "class_sizes").items()) {
    auto p = parse_key(key, 2);
    sizes[{p[0], p[1]}] = as_int(value, "class size");
  }
  std::map<Triple, std::vector<std::array<int, 3>>> constituents;
  if (j.contains("constituents")) {
    for (const auto& [key, value] : j["constituents"].items()) {
      auto t = parse_key(key, 3);
      std::vector<std::array<int, 3>> edges;
      for (const auto& e : value) {
        if (!e.is_array() || e.size() != 3)
          throw InvalidInput("constituent edge must be [left,right,top]");
        edges.push_back({as_int(e[0], "left"), as_int(e[1], "right"),
                         as_int(e[2], "top")});
      }
      constituents[{t[0], t[1], t[2]}] = std::move(edges);
    }
  }
  return ReducedThreeGraph(std::move(indices), std::move(sizes),
                           std::move(constituents));
}

json witness_to_json(const EmbeddingWitness& w) {
  json psi = json::array();
  for (const auto& [pair, vertex] : w.psi)
    psi.push_back({{"pair", {pair[0], pair[1]}}, {"vertex", vertex}});
  return json{{"phi", w.phi}, {"psi", psi}};
}

EmbeddingWitness witness_from_json(const json& j) {
  EmbeddingWitness w;
  for (const auto& v : member(j, "phi")) w.phi.push_back(as_int(v, "phi entry"));
  for (const auto& entry : member(j, "psi")) {
    const json& pair = member(entry, "pair");
    w.psi.emplace_back(Pair{as_int(pair[0], "pair vertex"),
                            as_int(pair[1], "pair vertex")},
                       as_int(member(entry, "vertex"), "vertex"));
  }
  return w;
}

}  // namespace turan
