#include "gassoc/quiver_io.hpp"

#include <fstream>

#include "gassoc/errors.hpp"

namespace gassoc {

Quiver quiver_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("quiver: expected a JSON object");
    if (!j.contains("vertices") || !j.at("vertices").is_array()) throw ParseError("quiver: missing \"vertices\" array");
    std::vector<Vertex> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(v.get<Vertex>());

    std::vector<Arrow> arrows;
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        if (!e.contains("from") || !e.contains("to")) throw ParseError("quiver: edge needs \"from\" and \"to\"");
        const Arrow a{e.at("from").get<Vertex>(), e.at("to").get<Vertex>()};
        arrows.push_back(a);
        edges.emplace_back(a.source, a.target);
      }
    }
    Quiver q(TreeGraph(vertices, edges), arrows);
    if (j.contains("dynkin")) {
      const std::string declared = j.at("dynkin").get<std::string>();
      const std::string actual = classify(q.graph()).name();
      if (dynkin_graph(declared).name() != actual)
        throw ParseError("quiver: declared type " + declared + " but graph is " + actual);
    }
    return q;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("quiver: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("quiver: ") + e.what());
  }
}

nlohmann::json quiver_to_json(const Quiver& q) {
  nlohmann::json j;
  j["vertices"] = q.graph().vertices();
  j["edges"] = nlohmann::json::array();
  for (const auto& a : q.arrows()) j["edges"].push_back({{"from", a.source}, {"to", a.target}});
  return j;
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open quiver file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("quiver file " + path + ": " + e.what());
  }
  return quiver_from_json(j);
}

nlohmann::json representation_to_json(const Representation& m) {
  nlohmann::json j;
  j["quiver"] = quiver_to_json(m.quiver());
  j["dims"] = nlohmann::json::object();
  const auto& g = m.quiver().graph();
  for (std::size_t p = 0; p < g.size(); ++p) j["dims"][std::to_string(g.vertex_at(p))] = m.dims()[p];
  j["maps"] = nlohmann::json::array();
  for (std::size_t k = 0; k < m.maps().size(); ++k) {
    const auto& a = m.quiver().arrows()[k];
    nlohmann::json rows = nlohmann::json::array();
    const Matrix& x = m.map(k);
    for (std::size_t r = 0; r < x.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < x.cols(); ++c) {
        const Rational& v = x(r, c);
        row.push_back(v.get_num().get_str() + "/" + v.get_den().get_str());
      }
      rows.push_back(row);
    }
    j["maps"].push_back({{"from", a.source}, {"to", a.target}, {"matrix", rows}});
  }
  return j;
}

}  // namespace gassoc
