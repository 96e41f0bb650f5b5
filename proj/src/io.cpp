#include "sturm/io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "sturm/error.hpp"

namespace sturm {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) throw ValidationError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<Dart> circuit(const CellComplex2& c, const json& j, const std::string& what) {
  if (!j.is_array()) throw ValidationError(what + " must be an array");
  std::vector<Dart> out;
  for (const json& d : j) {
    if (!d.is_array() || d.size() != 2) throw ValidationError(what + ": entries must be [edgeId, sign]");
    std::string sign = str(d[1], "sign");
    bool fwd;
    if (sign == "+") fwd = true;
    else if (sign == "-" || sign == "−") fwd = false;
    else throw ValidationError(what + ": bad sign '" + sign + "'");
    out.push_back({c.edge_index(str(d[0], "edge id")), fwd});
  }
  return out;
}

std::vector<int> ids(const json& j, const std::function<int(const std::string&)>& look, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& x : j) out.push_back(look(str(x, what)));
  return out;
}

json walk(const CellComplex2& c, const std::vector<Dart>& w) {
  json a = json::array();
  for (const Dart& d : w) a.push_back({c.edges[d.edge].id, d.forward ? "+" : "-"});
  return a;
}

}  // namespace

ComplexFile parse_complex(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  ComplexFile out;
  CellComplex2& c = out.complex;
  std::string kind = str(field(j, "kind"), "kind");
  if (kind == "sphere") c.kind = Kind::sphere;
  else if (kind == "disk") c.kind = Kind::disk;
  else throw ValidationError("kind must be \"sphere\" or \"disk\"");
  for (const json& v : field(j, "vertices")) c.vertices.push_back(str(v, "vertex id"));
  for (const json& e : field(j, "edges")) {
    Edge ed;
    ed.id = str(field(e, "id"), "edge id");
    c.edges.push_back(ed);
  }
  // Resolve endpoints after ids so error messages name the edge.
  {
    size_t k = 0;
    for (const json& e : field(j, "edges")) {
      c.edges[k].tail = c.vertex_index(str(field(e, "tail"), "tail"));
      c.edges[k].head = c.vertex_index(str(field(e, "head"), "head"));
      ++k;
    }
  }
  for (const json& f : field(j, "faces")) {
    Face face;
    face.id = str(field(f, "id"), "face id");
    face.boundary = circuit(c, field(f, "boundary"), "face '" + face.id + "'");
    c.faces.push_back(std::move(face));
  }
  if (j.contains("outer")) c.outer = circuit(c, j.at("outer"), "outer");
  check_complex(c);
  if (j.contains("template")) {
    const json& t = j.at("template");
    ThreeCellTemplate tm;
    tm.sphere = c;
    tm.north = c.vertex_index(str(field(t, "north"), "north"));
    tm.south = c.vertex_index(str(field(t, "south"), "south"));
    auto edge = [&](const std::string& s) { return c.edge_index(s); };
    auto face = [&](const std::string& s) { return c.face_index(s); };
    tm.we = ids(field(t, "meridianWE"), edge, "meridianWE");
    tm.ew = ids(field(t, "meridianEW"), edge, "meridianEW");
    tm.west = ids(field(t, "west"), face, "west");
    tm.east = ids(field(t, "east"), face, "east");
    if (t.contains("center")) tm.center = str(t.at("center"), "center");
    out.tmpl = std::move(tm);
  }
  return out;
}

ComplexFile load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str());
}

std::string complex_to_json(const CellComplex2& c, const ThreeCellTemplate* t) {
  json j;
  j["kind"] = c.kind == Kind::sphere ? "sphere" : "disk";
  j["vertices"] = c.vertices;
  j["edges"] = json::array();
  for (const Edge& e : c.edges) j["edges"].push_back({{"id", e.id}, {"tail", c.vertices[e.tail]}, {"head", c.vertices[e.head]}});
  j["faces"] = json::array();
  for (const Face& f : c.faces) j["faces"].push_back({{"id", f.id}, {"boundary", walk(c, f.boundary)}});
  if (c.kind == Kind::disk) j["outer"] = walk(c, c.outer);
  if (t) {
    auto names = [&](const std::vector<int>& xs, bool edges) {
      json a = json::array();
      for (int x : xs) a.push_back(edges ? c.edges[x].id : c.faces[x].id);
      return a;
    };
    j["template"] = {{"north", c.vertices[t->north]}, {"south", c.vertices[t->south]},
                     {"meridianWE", names(t->we, true)}, {"meridianEW", names(t->ew, true)},
                     {"west", names(t->west, false)},    {"east", names(t->east, false)},
                     {"center", t->center}};
  }
  return j.dump(2) + "\n";
}

}  // namespace sturm
