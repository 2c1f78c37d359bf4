#include "gkm/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace gkm {

namespace {

using json = nlohmann::json;

std::string dart_name(const GkmGraph& g, int d) {
  int e = g.edge_of_dart(d);
  return "e" + std::to_string(e) + (d == g.canonical_dart(e) ? "+" : "-");
}

json label_to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

IntVec label_from_json(const json& a, const std::string& where) {
  if (!a.is_array()) throw ParseError("expected label array at " + where);
  IntVec v;
  for (const auto& x : a) {
    if (x.is_number_integer())
      v.emplace_back(static_cast<long>(x.get<long long>()));
    else if (x.is_string())
      v.emplace_back(x.get<std::string>());
    else
      throw ParseError("bad label entry at " + where);
  }
  return v;
}

json graph_to_json(const GkmGraph& g) {
  json doc;
  doc["rank"] = g.rank;
  doc["valence"] = g.valence;
  doc["signed"] = g.is_signed;
  doc["vertices"] = g.vertex_names;
  json edges = json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    int d = g.canonical_dart(e);
    json je;
    je["ends"] = {g.vertex_names[g.dart_origin[d]], g.vertex_names[g.head(d)]};
    je["label"] = label_to_json(g.label[d]);
    edges.push_back(je);
  }
  doc["edges"] = edges;
  if (g.has_connection()) {
    json conn;
    for (int d = 0; d < g.num_darts(); ++d) {
      json maps;
      int v = g.dart_origin[d];
      for (std::size_t j = 0; j < g.star[v].size(); ++j)
        maps[dart_name(g, g.star[v][j])] = dart_name(g, g.conn[d][j]);
      conn[dart_name(g, d)] = maps;
    }
    doc["connection"] = conn;
  }
  return doc;
}

int dart_from_name(const GkmGraph& g, const std::vector<int>& edge_map, const std::string& name,
                   const std::string& where) {
  if (name.size() < 3 || name[0] != 'e' || (name.back() != '+' && name.back() != '-'))
    throw ParseError("bad dart name '" + name + "' at " + where);
  int fe;
  try {
    fe = std::stoi(name.substr(1, name.size() - 2));
  } catch (...) {
    throw ParseError("bad dart name '" + name + "' at " + where);
  }
  if (fe < 0 || fe >= static_cast<int>(edge_map.size()))
    throw ParseError("dart name '" + name + "' references unknown edge at " + where);
  // orientation relative to the file's ends[0] is fixed up by the caller
  int d = g.canonical_dart(edge_map[fe]);
  return name.back() == '+' ? d : g.dart_opp[d];
}

}  // namespace

std::string to_interchange(const GkmGraph& g) { return graph_to_json(g).dump(2) + "\n"; }

std::string to_interchange(const TGraph& t) {
  json doc = graph_to_json(t.base);
  json beta;
  for (int d = 0; d < t.base.num_darts(); ++d)
    beta[dart_name(t.base, d)] = label_to_json(t.beta[d]);
  doc["beta"] = beta;
  return doc.dump(2) + "\n";
}

GkmGraph graph_from_interchange(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
  for (const char* field : {"rank", "valence", "signed", "vertices", "edges"})
    if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");

  int rank = doc["rank"].get<int>();
  bool is_signed = doc["signed"].get<bool>();
  std::vector<std::string> vertices = doc["vertices"].get<std::vector<std::string>>();

  std::vector<EdgeSpec> specs;
  int ei = 0;
  for (const auto& je : doc["edges"]) {
    std::string where = "edge " + std::to_string(ei);
    if (!je.contains("ends") || !je["ends"].is_array() || je["ends"].size() != 2)
      throw ParseError("malformed ends at " + where);
    if (!je.contains("label")) throw ParseError("missing label at " + where);
    EdgeSpec s;
    s.u = je["ends"][0].get<std::string>();
    s.v = je["ends"][1].get<std::string>();
    s.label = label_from_json(je["label"], where);
    if (static_cast<int>(s.label.size()) != rank)
      throw ParseError("label rank mismatch at " + where + " (" + s.u + "-" + s.v + ")");
    specs.push_back(std::move(s));
    ++ei;
  }
  GkmGraph g = make_graph(rank, is_signed, vertices, specs);

  // reconcile file edge indices with canonical internal indices
  std::vector<int> edge_map(specs.size(), -1);
  std::vector<bool> used(g.num_edges(), false);
  std::map<std::string, int> vindex;
  for (int i = 0; i < g.num_vertices(); ++i) vindex[g.vertex_names[i]] = i;
  for (std::size_t fe = 0; fe < specs.size(); ++fe) {
    int u = vindex.at(specs[fe].u), v = vindex.at(specs[fe].v);
    IntVec lab = specs[fe].label;
    if (u > v) {
      std::swap(u, v);
      if (is_signed) lab = negate(lab);
    }
    if (!is_signed) lab = normalized_sign_rep(lab);
    for (int e = 0; e < g.num_edges(); ++e) {
      int d = g.canonical_dart(e);
      if (!used[e] && g.dart_origin[d] == u && g.head(d) == v && g.label[d] == lab) {
        edge_map[fe] = e;
        used[e] = true;
        break;
      }
    }
    if (edge_map[fe] < 0) throw ParseError("internal edge reconciliation failed");
  }
  // orientation of the file "+" dart relative to the canonical dart
  std::vector<bool> flipped(specs.size(), false);
  for (std::size_t fe = 0; fe < specs.size(); ++fe)
    flipped[fe] = vindex.at(specs[fe].u) > vindex.at(specs[fe].v);

  if (doc.contains("connection")) {
    auto resolve = [&](const std::string& name, const std::string& where) {
      int d = dart_from_name(g, edge_map, name, where);
      int fe = std::stoi(name.substr(1, name.size() - 2));
      return flipped[fe] ? g.dart_opp[d] : d;
    };
    g.conn.assign(g.num_darts(), {});
    for (const auto& [dname, maps] : doc["connection"].items()) {
      int d = resolve(dname, "connection");
      int v = g.dart_origin[d];
      g.conn[d].assign(g.star[v].size(), -1);
      for (const auto& [src_name, img_name] : maps.items()) {
        int src = resolve(src_name, "connection[" + dname + "]");
        int img = resolve(img_name, "connection[" + dname + "]");
        if (g.dart_origin[src] != v)
          throw ParseError("connection[" + dname + "]: source dart not at origin");
        g.conn[d][g.star_index(v, src)] = img;
      }
      for (int x : g.conn[d])
        if (x < 0) throw ParseError("connection[" + dname + "]: incomplete map");
    }
  } else {
    g.conn = unique_compatible_connection(g);
  }
  return g;
}

TGraph tgraph_from_interchange(const std::string& text) {
  json doc = json::parse(text);
  if (!doc.contains("beta")) throw ParseError("missing field 'beta'");
  TGraph t;
  t.base = graph_from_interchange(text);
  t.beta.assign(t.base.num_darts(), {});
  // beta documents are always emitted canonically, so the dart names can be
  // resolved against the recanonicalized graph directly
  GkmGraph& g = t.base;
  for (const auto& [dname, lab] : doc["beta"].items()) {
    if (dname.size() < 3 || dname[0] != 'e') throw ParseError("bad beta key '" + dname + "'");
    int fe = std::stoi(dname.substr(1, dname.size() - 2));
    if (fe < 0 || fe >= g.num_edges()) throw ParseError("bad beta key '" + dname + "'");
    int d = g.canonical_dart(fe);
    if (dname.back() == '-') d = g.dart_opp[d];
    t.beta[d] = label_from_json(lab, "beta[" + dname + "]");
  }
  for (int d = 0; d < g.num_darts(); ++d)
    if (t.beta[d].empty()) throw ParseError("beta missing dart " + dart_name(g, d));
  return t;
}

}  // namespace gkm
