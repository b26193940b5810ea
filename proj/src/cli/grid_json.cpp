#include "json.hpp"

#include "mbqc/cli.hpp"

namespace mbqc::cli {

using nlohmann::json;

namespace {

json coord(Coord c) { return json::array({c.row, c.col}); }

Coord coord_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("coordinate must be [row, col]");
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

std::string grid_to_json(const MbqcGrid& g, int indent) {
  json cells = json::array();
  for (const auto& [at, cell] : g.cells) {
    json c = {{"row", at.row}, {"col", at.col}, {"basis", basis_name(cell.m.basis)}};
    if (cell.m.basis == Basis::Theta) c["angle"] = cell.m.angle;
    if (cell.component != -1) c["component"] = cell.component;
    if (cell.round != 0) c["round"] = cell.round;
    cells.push_back(std::move(c));
  }
  json channels = json::array();
  for (const auto& ch : g.channels) {
    json list = json::array();
    for (Coord c : ch) list.push_back(coord(c));
    channels.push_back(std::move(list));
  }
  json links = json::array();
  for (const auto& [a, b] : g.links) links.push_back(json::array({coord(a), coord(b)}));

  json doc = {{"format", "mbqc-grid"}, {"version", 1},          {"width", g.width},
              {"depth", g.depth()},    {"num_qubits", g.num_qubits}, {"rounds", g.rounds},
              {"cells", std::move(cells)}, {"channels", std::move(channels)}, {"links", std::move(links)}};
  return doc.dump(indent) + "\n";
}

MbqcGrid grid_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
  try {
    if (doc.value("format", "") != "mbqc-grid") throw FormatError("not an mbqc-grid document");
    if (doc.value("version", 0) != 1) throw FormatError("unsupported grid version");
    MbqcGrid g;
    g.width = doc.at("width").get<int>();
    g.num_qubits = doc.at("num_qubits").get<int>();
    g.rounds = doc.at("rounds").get<int>();
    if (g.width < 1 || g.rounds < 1 || g.num_qubits < 0) throw FormatError("bad header values");
    for (const auto& c : doc.at("cells")) {
      const Coord at{c.at("row").get<int>(), c.at("col").get<int>()};
      if (g.occupied(at)) throw FormatError("cell listed twice");
      Measurement m;
      try {
        m.basis = basis_from_name(c.at("basis").get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
      }
      if (m.basis == Basis::Z) throw FormatError("Z cells are implicit");
      if (m.basis == Basis::Theta) m.angle = c.at("angle").get<double>();
      g.set(at, m, c.value("component", -1), c.value("round", 0));
    }
    for (const auto& ch : doc.at("channels")) {
      g.channels.emplace_back();
      for (const auto& c : ch) g.channels.back().push_back(coord_from(c));
    }
    for (const auto& l : doc.at("links")) {
      if (!l.is_array() || l.size() != 2) throw FormatError("link must be a pair");
      g.links.push_back({coord_from(l[0]), coord_from(l[1])});
    }
    if (doc.at("depth").get<int>() != g.depth()) throw FormatError("depth field disagrees with cells");
    return g;
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

}  // namespace mbqc::cli
