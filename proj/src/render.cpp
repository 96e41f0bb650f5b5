#include "sturm/render.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "sturm/error.hpp"
#include "sturm/meander.hpp"

namespace sturm {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

std::string render_meander_svg(const Permutation& p, const RenderOptions& opt) {
  if (opt.width < 2 * opt.margin + 10 || opt.height < 2 * opt.margin + 10)
    throw ValidationError("canvas too small");
  const int n = p.size();
  const MeanderDiagram d = build_meander(p);
  const std::vector<int> morse = morse_along_h1(p);
  std::set<Arc> bad;
  for (const auto& [a, b] : d.conflicts) bad.insert(a), bad.insert(b);
  const double y = opt.height / 2.0;
  const double dx = n > 1 ? (opt.width - 2.0 * opt.margin) / (n - 1) : 0.0;
  auto x = [&](int slot) { return opt.margin + (slot - 1) * dx; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\"" << opt.height
     << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << num(x(1) - opt.margin / 2.0) << "\" y1=\"" << num(y) << "\" x2=\""
     << num(x(n) + opt.margin / 2.0) << "\" y2=\"" << num(y) << "\" stroke=\"gray\" stroke-width=\"1\"/>\n";
  auto arcs = [&](const std::vector<Arc>& list, bool upper) {
    for (const Arc& a : list) {
      const double r = (x(a.b) - x(a.a)) / 2.0;
      const bool conflict = bad.count(a) > 0;
      os << "<path d=\"M " << num(x(a.a)) << ' ' << num(y) << " A " << num(r) << ' ' << num(r) << " 0 0 "
         << (upper ? 1 : 0) << ' ' << num(x(a.b)) << ' ' << num(y) << "\" fill=\"none\" stroke=\""
         << (conflict ? "red" : "black") << "\" stroke-width=\"" << num(opt.stroke) << "\""
         << (conflict ? " class=\"conflict\"" : "") << "/>\n";
    }
  };
  arcs(d.upper, true);
  arcs(d.lower, false);
  for (int s = 1; s <= n; ++s) {
    const int label = p.at(s);
    os << "<circle cx=\"" << num(x(s)) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"black\"/>\n";
    std::string text;
    if (opt.labels != LabelMode::morse) text += std::to_string(label);
    if (opt.labels == LabelMode::both) text += ":";
    if (opt.labels != LabelMode::labels) text += std::to_string(morse[label]);
    os << "<text x=\"" << num(x(s)) << "\" y=\"" << num(y + 16) << "\" font-size=\"10\" text-anchor=\"middle\">"
       << text << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_complex_dot(const CellComplex2& c, const ThreeCellTemplate* t) {
  std::set<int> we, ew;
  if (t) {
    we.insert(t->we.begin(), t->we.end());
    ew.insert(t->ew.begin(), t->ew.end());
  }
  std::ostringstream os;
  os << "digraph complex {\n";
  for (int v = 0; v < c.num_vertices(); ++v) {
    os << "  \"" << escape(c.vertices[v]) << "\"";
    if (t && (v == t->north || v == t->south)) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (const Edge& e : c.edges) {
    os << "  \"" << escape(c.vertices[e.tail]) << "\" -> \"" << escape(c.vertices[e.head]) << "\" [label=\""
       << escape(e.id) << "\"";
    int idx = static_cast<int>(&e - c.edges.data());
    if (we.count(idx)) os << ", color=red, penwidth=2";
    if (ew.count(idx)) os << ", color=blue, penwidth=2";
    os << "];\n";
  }
  if (t) {
    auto list = [&](const char* tag, const std::vector<int>& fs) {
      os << "  // " << tag << ":";
      for (int f : fs) os << ' ' << c.faces[f].id;
      os << "\n";
    };
    list("west", t->west);
    list("east", t->east);
  }
  os << "}\n";
  return os.str();
}

}  // namespace sturm
