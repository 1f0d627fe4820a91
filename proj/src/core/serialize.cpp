#include "serialize.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "error.hpp"

namespace tropitev {

using nlohmann::json;

namespace {

json linform_json(const LinForm& f) {
  json terms = json::object();
  for (const auto& [p, c] : f.terms()) terms[to_string(p)] = to_string(c);
  return {{"terms", terms}, {"constant", to_string(f.constant())}, {"text", f.str()}};
}

LinForm linform_parse(const json& j) {
  LinForm f(parse_rational(j.at("constant").get<std::string>()));
  for (const auto& [k, v] : j.at("terms").items()) f.add_term(parse_param(k), parse_rational(v.get<std::string>()));
  return f;
}

json graph_json(const MetricGraph& g) {
  json vs = json::array(), es = json::array(), ls = json::array();
  for (const Vertex& v : g.vertices()) vs.push_back({{"genus", v.genus}});
  for (const Edge& e : g.edges()) es.push_back({{"u", e.u}, {"v", e.v}, {"length", linform_json(e.length)}});
  for (const Leg& l : g.legs())
    ls.push_back({{"vertex", l.vertex}, {"mark", l.mark ? json(*l.mark) : json(nullptr)}});
  return {{"vertices", vs}, {"edges", es}, {"legs", ls}};
}

MetricGraph graph_parse(const json& j) {
  MetricGraph g;
  for (const auto& v : j.at("vertices")) g.add_vertex(v.at("genus").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at("u").get<int>(), e.at("v").get<int>(), linform_parse(e.at("length")));
  for (const auto& l : j.at("legs")) {
    std::optional<int> mark;
    if (l.contains("mark") && !l.at("mark").is_null()) mark = l.at("mark").get<int>();
    g.add_leg(l.at("vertex").get<int>(), mark);
  }
  return g;
}

json cover_json(const TropicalCover& c) {
  json es = json::array(), ls = json::array();
  for (std::size_t i = 0; i < c.edge_map.size(); ++i)
    es.push_back({{"src_edge", i}, {"tgt_edge", c.edge_map[i].edge}, {"expansion", c.edge_map[i].expansion}});
  for (std::size_t i = 0; i < c.leg_map.size(); ++i)
    ls.push_back({{"src_leg", i}, {"tgt_leg", c.leg_map[i].leg}, {"expansion", c.leg_map[i].expansion}});
  return {{"source", graph_json(c.source)},
          {"target", graph_json(c.target)},
          {"vertex_map", c.vertex_map},
          {"edges", es},
          {"legs", ls}};
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

}  // namespace

std::string linform_to_json(const LinForm& f) { return linform_json(f).dump(); }

LinForm linform_from_json(const std::string& text) {
  return guarded([&] { return linform_parse(json::parse(text)); });
}

std::string graph_to_json(const MetricGraph& g) { return graph_json(g).dump(2); }

MetricGraph graph_from_json(const std::string& text) {
  return guarded([&] { return graph_parse(json::parse(text)); });
}

std::string cover_to_json(const TropicalCover& c) { return cover_json(c).dump(2); }

std::string solution_to_json(const Solution& s) {
  json j = cover_json(s.cover);
  j["index"] = {{"genus", s.index.genus}, {"word", s.index.word}, {"j", s.index.j}, {"label", s.index.label()}};
  return j.dump(2);
}

TropicalCover cover_from_json(const std::string& text) {
  return guarded([&] {
    json j = json::parse(text);
    TropicalCover c;
    c.source = graph_parse(j.at("source"));
    c.target = graph_parse(j.at("target"));
    c.vertex_map = j.at("vertex_map").get<std::vector<int>>();
    c.edge_map.resize(static_cast<std::size_t>(c.source.edge_count()));
    c.leg_map.resize(static_cast<std::size_t>(c.source.leg_count()));
    if (c.vertex_map.size() != static_cast<std::size_t>(c.source.vertex_count()))
      fail(ErrorCode::Parse, "vertex_map has the wrong size");
    std::vector<char> seen_e(c.edge_map.size(), 0), seen_l(c.leg_map.size(), 0);
    for (const auto& e : j.at("edges")) {
      std::size_t i = e.at("src_edge").get<std::size_t>();
      if (i >= c.edge_map.size() || seen_e[i]) fail(ErrorCode::Parse, "bad src_edge " + std::to_string(i));
      seen_e[i] = 1;
      c.edge_map[i] = {e.at("tgt_edge").get<int>(), e.at("expansion").get<int>()};
    }
    for (const auto& l : j.at("legs")) {
      std::size_t i = l.at("src_leg").get<std::size_t>();
      if (i >= c.leg_map.size() || seen_l[i]) fail(ErrorCode::Parse, "bad src_leg " + std::to_string(i));
      seen_l[i] = 1;
      c.leg_map[i] = {l.at("tgt_leg").get<int>(), l.at("expansion").get<int>()};
    }
    if (std::find(seen_e.begin(), seen_e.end(), 0) != seen_e.end()) fail(ErrorCode::Parse, "edge map incomplete");
    if (std::find(seen_l.begin(), seen_l.end(), 0) != seen_l.end()) fail(ErrorCode::Parse, "leg map incomplete");
    return c;
  });
}

std::string cover_to_dot(const TropicalCover& c, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=TB;\n  node [shape=circle, width=0.3, fixedsize=true, fontsize=10];\n"
      << "  edge [dir=none, fontsize=9];\n";
  auto part = [&](const MetricGraph& g, const char* prefix, const char* label, bool with_exp) {
    out << "  subgraph cluster_" << prefix << " {\n    label=\"" << label << "\";\n";
    for (int v = 0; v < g.vertex_count(); ++v)
      out << "    " << prefix << v << " [label=\"" << g.vertex(v).genus << "\"];\n";
    for (int e = 0; e < g.edge_count(); ++e) {
      std::string lab = g.edge(e).length.str();
      if (with_exp && c.edge_map[static_cast<std::size_t>(e)].expansion > 1)
        lab += " [" + std::to_string(c.edge_map[static_cast<std::size_t>(e)].expansion) + "]";
      out << "    " << prefix << g.edge(e).u << " -> " << prefix << g.edge(e).v << " [label=\"" << lab << "\"];\n";
    }
    for (int l = 0; l < g.leg_count(); ++l) {
      const Leg& leg = g.leg(l);
      std::string lab = leg.mark ? std::to_string(*leg.mark) : "·";
      if (with_exp && c.leg_map[static_cast<std::size_t>(l)].expansion > 1)
        lab += " [" + std::to_string(c.leg_map[static_cast<std::size_t>(l)].expansion) + "]";
      out << "    " << prefix << "leg" << l << " [shape=plaintext, label=\"" << lab << "\"];\n";
      out << "    " << prefix << leg.vertex << " -> " << prefix << "leg" << l << ";\n";
    }
    out << "  }\n";
  };
  part(c.source, "s", "source", true);
  part(c.target, "t", "target", false);
  for (std::size_t v = 0; v < c.vertex_map.size(); ++v)
    out << "  s" << v << " -> t" << c.vertex_map[v] << " [style=dashed, dir=forward, color=gray];\n";
  out << "}\n";
  return out.str();
}

}  // namespace tropitev
