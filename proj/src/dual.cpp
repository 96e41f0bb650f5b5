#include "sturm/dual.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "sturm/error.hpp"

namespace sturm {

DualComplex dualize(const ThreeCellTemplate& t) {
  TemplateValidation tv = validate_template(t);
  if (!tv.anchors) throw ValidationError("cannot dualize: " + tv.violations.front());
  const CellComplex2& c = t.sphere;
  DualComplex d;
  d.sphere = sphere_dual(c);
  d.north_face = t.north;
  d.south_face = t.south;
  d.w0_minus = tv.anchors->ne;
  d.w1_minus = tv.anchors->nw;
  d.w0_plus = tv.anchors->se;
  d.w1_plus = tv.anchors->sw;
  d.delta = pole_distance(t);
  d.we_star = t.we;
  d.ew_star = t.ew;
  d.west_vertices = t.west;
  d.east_vertices = t.east;
  std::vector<int> side(c.num_faces(), 0);
  for (int f : t.west) side[f] = 1;
  for (int f : t.east) side[f] = 2;
  std::set<int> merid(t.we.begin(), t.we.end());
  merid.insert(t.ew.begin(), t.ew.end());
  std::set<int> merid_vertices;
  for (int e : merid) merid_vertices.insert({c.edges[e].tail, c.edges[e].head});
  for (int e = 0; e < c.num_edges(); ++e) {
    if (merid.count(e)) continue;
    int a = side[c.plus_face[e]], b = side[c.minus_face[e]];
    if (a != b) continue;
    (a == 1 ? d.west_edges : d.east_edges).push_back(e);
  }
  std::vector<int> vside(c.num_vertices(), 0);
  for (int f = 0; f < c.num_faces(); ++f)
    for (const Dart& x : c.faces[f].boundary) vside[c.start(x)] |= side[f];
  for (int v = 0; v < c.num_vertices(); ++v) {
    if (v == t.north || v == t.south) continue;
    if (merid_vertices.count(v)) d.meridian_faces.push_back(v);
    else if (vside[v] == 1) d.west_faces.push_back(v);
    else if (vside[v] == 2) d.east_faces.push_back(v);
  }
  for (int e : t.we)
    if (d.sphere.edges[e].tail == d.w1_plus && d.sphere.edges[e].head == d.w0_minus) d.we_bridges.push_back(e);
  for (int e : t.ew)
    if (d.sphere.edges[e].tail == d.w1_minus && d.sphere.edges[e].head == d.w0_plus) d.ew_bridges.push_back(e);
  return d;
}

bool DualReport::all_pass() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const auto& kv) { return kv.second; });
}

std::vector<std::string> DualReport::failed() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : clauses)
    if (!v) out.push_back(k);
  return out;
}

namespace {

bool core_ok(const CellComplex2& s, const std::vector<int>& vs, const std::vector<int>& es, size_t faces,
             int source, int sink) {
  std::set<int> vset(vs.begin(), vs.end());
  if (vset.empty() || !vset.count(source) || !vset.count(sink)) return false;
  std::map<int, int> indeg, outdeg;
  std::map<int, std::vector<int>> out, und;
  for (int e : es) {
    int a = s.edges[e].tail, b = s.edges[e].head;
    if (!vset.count(a) || !vset.count(b)) return false;
    ++outdeg[a];
    ++indeg[b];
    out[a].push_back(b);
    und[a].push_back(b);
    und[b].push_back(a);
  }
  for (int v : vset) {
    if ((indeg[v] == 0) != (v == source)) return false;
    if ((outdeg[v] == 0) != (v == sink)) return false;
  }
  std::set<int> seen{source};
  std::deque<int> q{source};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : und[v])
      if (seen.insert(w).second) q.push_back(w);
  }
  if (seen.size() != vset.size()) return false;
  // Kahn order detects cycles.
  std::map<int, int> deg = indeg;
  std::deque<int> k{source};
  size_t visited = 0;
  while (!k.empty()) {
    int v = k.front();
    k.pop_front();
    ++visited;
    for (int w : out[v])
      if (--deg[w] == 0) k.push_back(w);
  }
  if (visited != vset.size()) return false;
  return static_cast<long>(vset.size()) - static_cast<long>(es.size()) + static_cast<long>(faces) == 1;
}

// Polar circle as dual edges in their own direction; empty if the darts disagree with `forward`.
std::vector<int> directed_circle(const CellComplex2& s, int face, bool forward) {
  const auto& b = s.faces[face].boundary;
  std::vector<int> out;
  for (const Dart& x : b) {
    if (x.forward != forward) return {};
    out.push_back(x.edge);
  }
  if (!forward) std::reverse(out.begin(), out.end());
  return out;
}

struct Segment {
  bool ok = false;
  int length = -1;
  int before = -1, after = -1;  // circle edges entering the start, leaving the end
};

Segment polar_segment(const CellComplex2& s, const std::vector<int>& circle, const std::set<int>& core_v,
                      const std::set<int>& core_e, int from, int to) {
  Segment sg;
  const size_t L = circle.size();
  if (L == 0) return sg;
  size_t start = L;
  for (size_t i = 0; i < L; ++i)
    if (s.edges[circle[i]].tail == from) start = i;
  if (start == L) return sg;
  sg.before = circle[(start + L - 1) % L];
  int v = from;
  size_t k = 0;
  while (v != to) {
    int e = circle[(start + k) % L];
    if (!core_e.count(e) || ++k >= L) return sg;
    v = s.edges[e].head;
  }
  sg.length = static_cast<int>(k);
  sg.after = circle[(start + k) % L];
  size_t on_circle = 0;
  for (int e : circle)
    if (core_v.count(s.edges[e].tail)) ++on_circle;
  sg.ok = on_circle == k + 1;
  return sg;
}

}  // namespace

DualReport check_dual_cores(const DualComplex& d) {
  const CellComplex2& s = d.sphere;
  DualReport r;
  r.delta = d.delta;
  r.eta_west = static_cast<int>(d.west_vertices.size());
  r.eta_east = static_cast<int>(d.east_vertices.size());
  auto& c = r.clauses;

  c["polar faces"] = d.north_face >= 0 && d.south_face >= 0 && d.north_face != d.south_face;
  c["western core bipolar"] = core_ok(s, d.west_vertices, d.west_edges, d.west_faces.size(), d.w0_minus, d.w1_minus);
  c["eastern core bipolar"] = core_ok(s, d.east_vertices, d.east_edges, d.east_faces.size(), d.w0_plus, d.w1_plus);
  {
    std::vector<int> vcount(s.num_vertices(), 0), ecount(s.num_edges(), 0), fcount(s.num_faces(), 0);
    for (const auto* xs : {&d.west_vertices, &d.east_vertices})
      for (int x : *xs) ++vcount[x];
    for (const auto* xs : {&d.west_edges, &d.east_edges, &d.we_star, &d.ew_star})
      for (int x : *xs) ++ecount[x];
    for (const auto* xs : {&d.west_faces, &d.east_faces, &d.meridian_faces})
      for (int x : *xs) ++fcount[x];
    ++fcount[d.north_face];
    ++fcount[d.south_face];
    auto ones = [](const std::vector<int>& v) { return std::all_of(v.begin(), v.end(), [](int x) { return x == 1; }); };
    c["decomposition"] = ones(vcount) && ones(ecount) && ones(fcount);
  }

  const auto ncircle = directed_circle(s, d.north_face, false);
  const auto scircle = directed_circle(s, d.south_face, true);
  r.north_circle = static_cast<int>(s.faces[d.north_face].boundary.size());
  r.south_circle = static_cast<int>(s.faces[d.south_face].boundary.size());
  c["polar circle orientation"] = !ncircle.empty() && !scircle.empty();
  const std::set<int> wv(d.west_vertices.begin(), d.west_vertices.end()), we(d.west_edges.begin(), d.west_edges.end());
  const std::set<int> ev(d.east_vertices.begin(), d.east_vertices.end()), ee(d.east_edges.begin(), d.east_edges.end());
  Segment sn = polar_segment(s, ncircle, wv, we, d.w0_minus, d.w1_minus);
  Segment ss = polar_segment(s, scircle, ev, ee, d.w0_plus, d.w1_plus);
  r.north_segment = sn.length;
  r.south_segment = ss.length;
  c["polar segments"] = sn.ok && ss.ok;

  // Pre-dual of a dual edge runs from its right face to its left face.
  auto predual_path = [&](const std::vector<int>& es, std::set<int>& inner) {
    int v = d.north_face;
    for (int e : es) {
      if (right_face(s, e) != v) return false;
      v = left_face(s, e);
      if (v != d.south_face && !inner.insert(v).second) return false;
    }
    return v == d.south_face;
  };
  std::set<int> inner_we, inner_ew;
  bool p1 = predual_path(d.we_star, inner_we), p2 = predual_path(d.ew_star, inner_ew);
  bool disjoint = std::none_of(inner_we.begin(), inner_we.end(), [&](int v) { return inner_ew.count(v); });
  c["meridian paths"] = p1 && p2 && disjoint;
  c["bridges"] = !d.we_bridges.empty() && !d.ew_bridges.empty();

  {
    std::set<int> nedges(ncircle.begin(), ncircle.end());
    bool share = std::any_of(scircle.begin(), scircle.end(), [&](int e) { return nedges.count(e); });
    c["shared polar edge iff delta 1"] = share == (d.delta == 1);
  }
  c["singleton cores"] = ((d.w0_minus == d.w1_minus) == (d.west_vertices.size() == 1)) &&
                                ((d.w0_plus == d.w1_plus) == (d.east_vertices.size() == 1));
  c["directed cycle"] = sn.ok && ss.ok && c["bridges"];
  auto in = [](const std::vector<int>& xs, int x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); };
  c["segment neighbors"] = sn.ok && ss.ok && in(d.we_star, sn.before) && in(d.ew_star, sn.after) &&
                                 in(d.ew_star, ss.before) && in(d.we_star, ss.after);
  c["segment bounds"] = sn.ok && ss.ok && sn.length <= r.north_circle - 2 && ss.length <= r.south_circle - 2;
  return r;
}

}  // namespace sturm
