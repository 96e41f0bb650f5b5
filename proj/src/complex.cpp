#include "sturm/complex.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "sturm/error.hpp"
#include "sturm/meander.hpp"
#include "sturm/szs.hpp"

namespace sturm {

namespace {

template <class T>
int find_id(const std::vector<T>& xs, const std::string& id, const char* what) {
  for (size_t i = 0; i < xs.size(); ++i) {
    if constexpr (std::is_same_v<T, std::string>) {
      if (xs[i] == id) return static_cast<int>(i);
    } else {
      if (xs[i].id == id) return static_cast<int>(i);
    }
  }
  throw ValidationError(std::string("unknown ") + what + " '" + id + "'");
}

Dart rev(Dart d) { return {d.edge, !d.forward}; }

int dart_index(Dart d) { return 2 * d.edge + (d.forward ? 0 : 1); }

// All circuits including the exterior one for disks (outer walk reversed).
std::vector<std::vector<Dart>> closed_circuits(const CellComplex2& c) {
  std::vector<std::vector<Dart>> out;
  for (const Face& f : c.faces) out.push_back(f.boundary);
  if (c.kind == Kind::disk && !c.outer.empty()) {
    std::vector<Dart> ext;
    for (auto it = c.outer.rbegin(); it != c.outer.rend(); ++it) ext.push_back(rev(*it));
    out.push_back(ext);
  }
  return out;
}

std::string cell_name(const CellComplex2& c, int face) { return c.faces[face].id; }

}  // namespace

int CellComplex2::vertex_index(const std::string& id) const { return find_id(vertices, id, "vertex"); }
int CellComplex2::edge_index(const std::string& id) const { return find_id(edges, id, "edge"); }
int CellComplex2::face_index(const std::string& id) const { return find_id(faces, id, "face"); }

void check_complex(CellComplex2& c) {
  const int V = c.num_vertices(), E = c.num_edges();
  if (V == 0) throw ValidationError("complex has no vertices");
  {
    std::set<std::string> ids;
    for (const auto& v : c.vertices)
      if (!ids.insert(v).second) throw ValidationError("duplicate vertex id '" + v + "'");
    ids.clear();
    for (const auto& e : c.edges)
      if (!ids.insert(e.id).second) throw ValidationError("duplicate edge id '" + e.id + "'");
    ids.clear();
    for (const auto& f : c.faces)
      if (!ids.insert(f.id).second) throw ValidationError("duplicate face id '" + f.id + "'");
  }
  for (const Edge& e : c.edges) {
    if (e.tail < 0 || e.tail >= V || e.head < 0 || e.head >= V)
      throw ValidationError("edge '" + e.id + "' has a dangling endpoint");
    if (e.tail == e.head) throw ValidationError("edge '" + e.id + "' is a loop (non-regular)");
  }
  auto check_walk = [&](const std::vector<Dart>& w, const std::string& what, bool simple) {
    for (const Dart& d : w)
      if (d.edge < 0 || d.edge >= E) throw ValidationError(what + ": dangling edge reference");
    for (size_t i = 0; i < w.size(); ++i)
      if (c.end(w[i]) != c.start(w[(i + 1) % w.size()]))
        throw ValidationError(what + ": boundary is not a closed walk");
    if (!simple) return;
    if (w.size() < 2) throw ValidationError(what + ": boundary shorter than two edges");
    std::set<int> vs, es;
    for (const Dart& d : w) {
      if (!vs.insert(c.start(d)).second) throw ValidationError(what + ": non-regular, repeated vertex");
      if (!es.insert(d.edge).second) throw ValidationError(what + ": non-regular, repeated edge");
    }
  };
  for (const Face& f : c.faces) check_walk(f.boundary, "face '" + f.id + "'", true);
  if (c.kind == Kind::disk) check_walk(c.outer, "outer boundary", false);
  if (c.kind == Kind::sphere && !c.outer.empty()) throw ValidationError("sphere with an outer boundary");

  c.plus_face.assign(E, -1);
  c.minus_face.assign(E, -1);
  std::vector<int> used(2 * E, 0);
  const auto circuits = closed_circuits(c);
  for (size_t k = 0; k < circuits.size(); ++k)
    for (const Dart& d : circuits[k]) {
      if (used[dart_index(d)]++) throw ValidationError("inconsistent rotation system: edge '" + c.edges[d.edge].id + "' traversed twice in the same direction");
      if (k < c.faces.size()) (d.forward ? c.plus_face : c.minus_face)[d.edge] = static_cast<int>(k);
    }
  if (E > 0)
    for (int e = 0; e < E; ++e)
      if (!used[2 * e] || !used[2 * e + 1])
        throw ValidationError(c.kind == Kind::sphere ? "edge '" + c.edges[e].id + "' is not in exactly two face circuits"
                                                     : "edge '" + c.edges[e].id + "' is missing from the face/outer circuits");

  // Vertex rotations must be single cycles.
  if (E > 0) {
    std::vector<int> pos_circuit(2 * E), pos_index(2 * E);
    for (size_t k = 0; k < circuits.size(); ++k)
      for (size_t i = 0; i < circuits[k].size(); ++i) {
        pos_circuit[dart_index(circuits[k][i])] = static_cast<int>(k);
        pos_index[dart_index(circuits[k][i])] = static_cast<int>(i);
      }
    auto ccw_next = [&](Dart d) {
      const auto& cir = circuits[pos_circuit[dart_index(d)]];
      int i = pos_index[dart_index(d)];
      Dart prev = cir[(i + cir.size() - 1) % cir.size()];
      return rev(prev);
    };
    std::vector<int> degree(V, 0);
    for (const Edge& e : c.edges) ++degree[e.tail], ++degree[e.head];
    std::vector<char> seen(2 * E, 0);
    for (int v = 0; v < V; ++v) {
      if (degree[v] == 0) throw ValidationError("isolated vertex '" + c.vertices[v] + "'");
      Dart d0{-1, true};
      for (int e = 0; e < E && d0.edge < 0; ++e) {
        if (c.edges[e].tail == v) d0 = {e, true};
        else if (c.edges[e].head == v) d0 = {e, false};
      }
      int len = 0;
      Dart d = d0;
      do {
        if (seen[dart_index(d)]++) throw ValidationError("inconsistent rotation system at vertex '" + c.vertices[v] + "'");
        ++len;
        d = ccw_next(d);
      } while (!(d == d0) && len <= 2 * E);
      if (len != degree[v]) throw ValidationError("inconsistent rotation system: vertex '" + c.vertices[v] + "' is pinched");
    }
  }

  // Connectivity.
  {
    auto adj = vertex_adjacency(c);
    std::vector<char> seen(V, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int w : adj[v])
        if (!seen[w]) seen[w] = 1, ++cnt, q.push_back(w);
    }
    if (cnt != V) throw ValidationError("1-skeleton is disconnected");
  }

  const int chi = V - E + c.num_faces();
  const int want = c.kind == Kind::sphere ? 2 : 1;
  if (chi != want)
    throw ValidationError("Euler characteristic " + std::to_string(chi) + " != " + std::to_string(want));
}

int left_face(const CellComplex2& c, int e, Chirality ch) {
  return ch == Chirality::standard ? c.plus_face[e] : c.minus_face[e];
}

int right_face(const CellComplex2& c, int e, Chirality ch) {
  return ch == Chirality::standard ? c.minus_face[e] : c.plus_face[e];
}

std::vector<std::vector<int>> vertex_adjacency(const CellComplex2& c) {
  std::vector<std::vector<int>> adj(c.num_vertices());
  for (const Edge& e : c.edges) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  return adj;
}

int pole_distance(const CellComplex2& c, int a, int b) {
  auto adj = vertex_adjacency(c);
  std::vector<int> dist(c.num_vertices(), -1);
  std::deque<int> q{a};
  dist[a] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : adj[v])
      if (dist[w] < 0) dist[w] = dist[v] + 1, q.push_back(w);
  }
  return dist[b];
}

int pole_distance(const ThreeCellTemplate& t) { return pole_distance(t.sphere, t.north, t.south); }

std::optional<BipolarOrientation> bipolar_poles(const CellComplex2& c) {
  const int V = c.num_vertices();
  std::vector<int> indeg(V, 0), outdeg(V, 0);
  std::vector<std::vector<int>> out(V);
  for (const Edge& e : c.edges) {
    ++indeg[e.head];
    ++outdeg[e.tail];
    out[e.tail].push_back(e.head);
  }
  BipolarOrientation b;
  for (int v = 0; v < V; ++v) {
    if (indeg[v] == 0) {
      if (b.north >= 0) return std::nullopt;
      b.north = v;
    }
    if (outdeg[v] == 0) {
      if (b.south >= 0) return std::nullopt;
      b.south = v;
    }
  }
  if (b.north < 0 || b.south < 0) return std::nullopt;
  std::deque<int> q;
  std::vector<int> deg = indeg;
  for (int v = 0; v < V; ++v)
    if (deg[v] == 0) q.push_back(v);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    ++seen;
    for (int w : out[v])
      if (--deg[w] == 0) q.push_back(w);
  }
  if (seen != V) return std::nullopt;
  return b;
}

CellComplex2 reorient(const CellComplex2& c, const std::vector<bool>& flip) {
  CellComplex2 r = c;
  for (int e = 0; e < r.num_edges(); ++e)
    if (flip[e]) std::swap(r.edges[e].tail, r.edges[e].head);
  auto fix = [&](std::vector<Dart>& w) {
    for (Dart& d : w)
      if (flip[d.edge]) d.forward = !d.forward;
  };
  for (Face& f : r.faces) fix(f.boundary);
  fix(r.outer);
  for (int e = 0; e < r.num_edges(); ++e)
    if (flip[e] && !r.plus_face.empty()) std::swap(r.plus_face[e], r.minus_face[e]);
  return r;
}

CellComplex2 reverse_all(const CellComplex2& c) {
  return reorient(c, std::vector<bool>(c.num_edges(), true));
}

CellComplex2 mirror(const CellComplex2& c) {
  CellComplex2 r = c;
  auto flipwalk = [](std::vector<Dart>& w) {
    std::reverse(w.begin(), w.end());
    for (Dart& d : w) d.forward = !d.forward;
  };
  for (Face& f : r.faces) flipwalk(f.boundary);
  flipwalk(r.outer);
  if (!r.plus_face.empty()) std::swap(r.plus_face, r.minus_face);
  return r;
}

DiskBoundary disk_boundary(const CellComplex2& disk, Chirality ch) {
  auto poles = bipolar_poles(disk);
  if (!poles) throw ValidationError("disk orientation is not bipolar");
  DiskBoundary b;
  b.north = poles->north;
  b.south = poles->south;
  if (disk.outer.empty()) {
    if (disk.num_vertices() == 1) return b;
    throw ValidationError("disk without outer boundary");
  }
  const auto& w = disk.outer;
  const size_t L = w.size();
  size_t s = L;
  for (size_t i = 0; i < L; ++i)
    if (disk.start(w[i]) == b.north && w[i].forward) {
      s = i;
      break;
    }
  if (s == L) throw ValidationError("north pole is not on the outer boundary");
  std::vector<int> fwd, bwd;
  size_t i = 0;
  for (; i < L && w[(s + i) % L].forward; ++i) fwd.push_back(w[(s + i) % L].edge);
  for (; i < L && !w[(s + i) % L].forward; ++i) bwd.push_back(w[(s + i) % L].edge);
  if (i != L || disk.end(w[(s + fwd.size() - 1) % L]) != b.south)
    throw ValidationError("outer boundary is not two directed paths between the poles");
  std::reverse(bwd.begin(), bwd.end());
  if (ch == Chirality::standard) {
    b.left = fwd;
    b.right = bwd;
  } else {
    b.left = bwd;
    b.right = fwd;
  }
  return b;
}

DiskClass classify_disk(const CellComplex2& disk) {
  DiskBoundary b = disk_boundary(disk);
  std::set<int> on_boundary, boundary_edges;
  for (const Dart& d : disk.outer) {
    on_boundary.insert(disk.start(d));
    boundary_edges.insert(d.edge);
  }
  DiskClass k;
  k.eastern = k.western = true;
  for (int e = 0; e < disk.num_edges(); ++e) {
    if (boundary_edges.count(e)) continue;
    const Edge& ed = disk.edges[e];
    for (int v : {ed.tail, ed.head}) {
      if (!on_boundary.count(v) || v == b.north || v == b.south) continue;
      if (ed.tail == v) k.western = false;
      else k.eastern = false;
    }
  }
  auto in_one_face = [&](const std::vector<int>& path) {
    for (const Face& f : disk.faces) {
      bool all = std::all_of(path.begin(), path.end(), [&](int e) {
        return std::any_of(f.boundary.begin(), f.boundary.end(), [&](const Dart& d) { return d.edge == e; });
      });
      if (all) return true;
    }
    return false;
  };
  k.single_face_paths = in_one_face(b.left) && in_one_face(b.right);
  return k;
}

TemplateValidation validate_template(const ThreeCellTemplate& t, Chirality ch) {
  TemplateValidation r;
  const CellComplex2& c = t.sphere;
  auto bad = [&](std::string s) { r.violations.push_back(std::move(s)); };
  const int V = c.num_vertices(), E = c.num_edges(), F = c.num_faces();
  if (c.kind != Kind::sphere) bad("(i) template complex is not a sphere");
  if (c.plus_face.size() != static_cast<size_t>(E)) bad("(i) complex not checked");
  if (!r.violations.empty()) return r;

  auto poles = bipolar_poles(c);
  if (!poles) bad("(ii) orientation is not bipolar");
  else if (poles->north != t.north || poles->south != t.south) bad("(ii) poles do not match the orientation's source/sink");

  // Meridians.
  std::vector<int> on_meridian(V, 0);
  std::vector<int> meridian_of(E, 0);  // 1 = WE, 2 = EW
  auto check_path = [&](const std::vector<int>& path, int tag, const char* name) {
    if (path.empty()) {
      bad(std::string("(i) meridian ") + name + " is empty");
      return;
    }
    int v = t.north;
    for (int e : path) {
      if (e < 0 || e >= E) {
        bad(std::string("(i) meridian ") + name + " references a missing edge");
        return;
      }
      if (c.edges[e].tail != v) {
        bad(std::string("(i) meridian ") + name + " is not a directed path from N at edge " + c.edges[e].id);
        return;
      }
      if (meridian_of[e]) bad("(i) meridians share edge " + c.edges[e].id);
      meridian_of[e] = tag;
      v = c.edges[e].head;
      if (v != t.south) {
        if (on_meridian[v]) bad("(i) meridians meet at vertex " + c.vertices[v]);
        on_meridian[v] = tag;
      }
    }
    if (v != t.south) bad(std::string("(i) meridian ") + name + " does not end at S");
  };
  check_path(t.we, 1, "WE");
  check_path(t.ew, 2, "EW");
  if (!r.violations.empty()) return r;

  std::vector<int> side(F, 0);  // 1 = W, 2 = E
  for (int f : t.west) {
    if (f < 0 || f >= F) { bad("(i) hemisphere references a missing face"); return r; }
    side[f] |= 1;
  }
  for (int f : t.east) {
    if (f < 0 || f >= F) { bad("(i) hemisphere references a missing face"); return r; }
    side[f] |= 2;
  }
  for (int f = 0; f < F; ++f)
    if (side[f] != 1 && side[f] != 2) bad("(i) face " + c.faces[f].id + " is not in exactly one hemisphere");
  if (t.west.empty() || t.east.empty()) bad("(i) empty hemisphere");
  if (!r.violations.empty()) return r;

  for (int e = 0; e < E; ++e) {
    int L = left_face(c, e, ch), R = right_face(c, e, ch);
    if (meridian_of[e] == 1) {
      if (side[R] != 1 || side[L] != 2) bad("(i) WE edge " + c.edges[e].id + " does not have W on its right and E on its left");
    } else if (meridian_of[e] == 2) {
      if (side[L] != 1 || side[R] != 2) bad("(i) EW edge " + c.edges[e].id + " does not have W on its left and E on its right");
    } else if (side[L] != side[R]) {
      bad("(i) non-meridian edge " + c.edges[e].id + " separates the hemispheres");
    }
  }
  if (!r.violations.empty()) return r;

  // Def 1.1(iii)
  for (int e = 0; e < E; ++e) {
    if (meridian_of[e]) continue;
    const Edge& ed = c.edges[e];
    const bool west = side[left_face(c, e, ch)] == 1;
    for (int v : {ed.tail, ed.head}) {
      if (!on_meridian[v]) continue;
      bool toward = ed.head == v;
      if (west && !toward) bad("(iii) W edge " + ed.id + " points away from meridian vertex " + c.vertices[v]);
      if (!west && toward) bad("(iii) E edge " + ed.id + " points toward meridian vertex " + c.vertices[v]);
    }
  }

  // Def 1.1(iv)
  TemplateAnchors a;
  a.ne = right_face(c, t.we.front(), ch);
  a.sw = left_face(c, t.we.back(), ch);
  a.nw = left_face(c, t.ew.front(), ch);
  a.se = right_face(c, t.ew.back(), ch);
  bool we_overlap = std::any_of(t.we.begin(), t.we.end(), [&](int e) {
    return right_face(c, e, ch) == a.ne && left_face(c, e, ch) == a.sw;
  });
  bool ew_overlap = std::any_of(t.ew.begin(), t.ew.end(), [&](int e) {
    return left_face(c, e, ch) == a.nw && right_face(c, e, ch) == a.se;
  });
  if (!we_overlap) bad("(iv) NE=" + cell_name(c, a.ne) + " and SW=" + cell_name(c, a.sw) + " share no WE edge");
  if (!ew_overlap) bad("(iv) NW=" + cell_name(c, a.nw) + " and SE=" + cell_name(c, a.se) + " share no EW edge");
  r.anchors = a;
  r.ok = r.violations.empty();
  return r;
}

ThreeCellTemplate act_template(const ThreeCellTemplate& t, Trivial g) {
  ThreeCellTemplate r = t;
  auto reversed = [](std::vector<int> p) {
    std::reverse(p.begin(), p.end());
    return p;
  };
  switch (g) {
    case Trivial::id:
      break;
    case Trivial::rho:
      r.sphere = mirror(t.sphere);
      r.we = t.ew;
      r.ew = t.we;
      break;
    case Trivial::kappa:
      r.sphere = mirror(reverse_all(t.sphere));
      std::swap(r.north, r.south);
      std::swap(r.west, r.east);
      r.we = reversed(t.ew);
      r.ew = reversed(t.we);
      break;
    case Trivial::kappa_rho:
      r.sphere = reverse_all(t.sphere);
      std::swap(r.north, r.south);
      std::swap(r.west, r.east);
      r.we = reversed(t.we);
      r.ew = reversed(t.ew);
      break;
  }
  return r;
}

namespace {

// Flags (v, e, f): id = 4e + 2*(v is head) + (f is minus_face).
struct FlagSystem {
  std::vector<std::array<int, 3>> s;  // s0, s1, s2
  int n = 0;
};

FlagSystem flag_system(const CellComplex2& c) {
  FlagSystem fs;
  const int E = c.num_edges();
  fs.n = 4 * E;
  fs.s.assign(fs.n, {-1, -1, -1});
  auto face_of = [&](int e, int bit) { return bit ? c.minus_face[e] : c.plus_face[e]; };
  auto flag = [&](int v, int e, int f) {
    int vb = c.edges[e].head == v ? 1 : 0;
    int fb = c.minus_face[e] == f ? 1 : 0;
    return 4 * e + 2 * vb + fb;
  };
  for (int e = 0; e < E; ++e)
    for (int vb = 0; vb < 2; ++vb)
      for (int fb = 0; fb < 2; ++fb) {
        int id = 4 * e + 2 * vb + fb;
        int v = vb ? c.edges[e].head : c.edges[e].tail;
        int f = face_of(e, fb);
        fs.s[id][0] = 4 * e + 2 * (1 - vb) + fb;
        fs.s[id][2] = 4 * e + 2 * vb + (1 - fb);
        const auto& b = c.faces[f].boundary;
        int k = 0;
        while (b[k].edge != e) ++k;
        const Dart& nxt = b[(k + 1) % b.size()];
        const Dart& prv = b[(k + b.size() - 1) % b.size()];
        int other = (c.start(b[k]) == v) ? prv.edge : nxt.edge;
        fs.s[id][1] = flag(v, other, f);
      }
  return fs;
}

// Maps flag 0 of a to flag `target` of b; returns the flag map or empty.
std::vector<int> extend_flag_map(const FlagSystem& a, const FlagSystem& b, int target) {
  std::vector<int> m(a.n, -1), back(b.n, -1);
  m[0] = target;
  back[target] = 0;
  std::deque<int> q{0};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int i = 0; i < 3; ++i) {
      int xa = a.s[x][i], yb = b.s[m[x]][i];
      if (m[xa] < 0) {
        if (back[yb] >= 0) return {};
        m[xa] = yb;
        back[yb] = xa;
        q.push_back(xa);
      } else if (m[xa] != yb) {
        return {};
      }
    }
  }
  for (int x = 0; x < a.n; ++x)
    if (m[x] < 0) return {};
  return m;
}

std::optional<Automorphism> cell_maps(const CellComplex2& a, const CellComplex2& b, const std::vector<int>& m) {
  Automorphism au;
  au.v.assign(a.num_vertices(), -1);
  au.e.assign(a.num_edges(), -1);
  au.f.assign(a.num_faces(), -1);
  auto assign = [](std::vector<int>& arr, int x, int y) {
    if (arr[x] < 0) arr[x] = y;
    return arr[x] == y;
  };
  for (int x = 0; x < static_cast<int>(m.size()); ++x) {
    int e = x / 4, vb = (x / 2) % 2, fb = x % 2;
    int y = m[x];
    int e2 = y / 4, vb2 = (y / 2) % 2, fb2 = y % 2;
    int v = vb ? a.edges[e].head : a.edges[e].tail;
    int v2 = vb2 ? b.edges[e2].head : b.edges[e2].tail;
    int f = fb ? a.minus_face[e] : a.plus_face[e];
    int f2 = fb2 ? b.minus_face[e2] : b.plus_face[e2];
    if (!assign(au.v, v, v2) || !assign(au.e, e, e2) || !assign(au.f, f, f2)) return std::nullopt;
  }
  return au;
}

}  // namespace

std::vector<Automorphism> automorphisms(const CellComplex2& sphere) {
  FlagSystem fs = flag_system(sphere);
  std::vector<Automorphism> out;
  for (int t = 0; t < fs.n; ++t) {
    auto m = extend_flag_map(fs, fs, t);
    if (m.empty()) continue;
    if (auto au = cell_maps(sphere, sphere, m)) out.push_back(std::move(*au));
  }
  return out;
}

bool lattice_isomorphic(const CellComplex2& a, const CellComplex2& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() || a.num_faces() != b.num_faces())
    return false;
  if (a.num_edges() == 0) return true;
  FlagSystem fa = flag_system(a), fb = flag_system(b);
  for (int t = 0; t < fb.n; ++t) {
    auto m = extend_flag_map(fa, fb, t);
    if (!m.empty() && cell_maps(a, b, m)) return true;
  }
  return false;
}

CellComplex2 sphere_dual(const CellComplex2& c) {
  CellComplex2 d;
  d.kind = Kind::sphere;
  for (const Face& f : c.faces) d.vertices.push_back(f.id);
  for (int e = 0; e < c.num_edges(); ++e)
    d.edges.push_back({c.edges[e].id, left_face(c, e), right_face(c, e)});
  // Position of each dart in its face, to walk rotations.
  const int E = c.num_edges();
  std::vector<int> face_of(2 * E), idx_of(2 * E);
  for (int f = 0; f < c.num_faces(); ++f)
    for (size_t i = 0; i < c.faces[f].boundary.size(); ++i) {
      face_of[dart_index(c.faces[f].boundary[i])] = f;
      idx_of[dart_index(c.faces[f].boundary[i])] = static_cast<int>(i);
    }
  auto ccw_next = [&](Dart dd) {
    const auto& b = c.faces[face_of[dart_index(dd)]].boundary;
    int i = idx_of[dart_index(dd)];
    return rev(b[(i + b.size() - 1) % b.size()]);
  };
  for (int v = 0; v < c.num_vertices(); ++v) {
    Dart d0{-1, true};
    for (int e = 0; e < E && d0.edge < 0; ++e) {
      if (c.edges[e].tail == v) d0 = {e, true};
      else if (c.edges[e].head == v) d0 = {e, false};
    }
    Face f;
    f.id = c.vertices[v];
    Dart x = d0;
    do {
      // Going counterclockwise around v crosses x from its right to its left.
      f.boundary.push_back({x.edge, !x.forward});
      x = ccw_next(x);
    } while (!(x == d0));
    d.faces.push_back(std::move(f));
  }
  check_complex(d);
  return d;
}

namespace {

struct Step {
  int edge;
  bool forward;  // traversed tail→head in the base complex
};

using Path = std::vector<Step>;

struct Search {
  const CellComplex2& c;
  Chirality ch;
  std::vector<std::vector<std::pair<int, int>>> inc;  // vertex -> (edge, other)

  explicit Search(const CellComplex2& cc, Chirality chir) : c(cc), ch(chir), inc(cc.num_vertices()) {
    for (int e = 0; e < c.num_edges(); ++e) {
      inc[c.edges[e].tail].push_back({e, c.edges[e].head});
      inc[c.edges[e].head].push_back({e, c.edges[e].tail});
    }
  }

  int right_of(const Step& s) const { return s.forward ? right_face(c, s.edge, ch) : left_face(c, s.edge, ch); }
  int left_of(const Step& s) const { return s.forward ? left_face(c, s.edge, ch) : right_face(c, s.edge, ch); }

  bool good_we(const Path& p) const {
    int ne = right_of(p.front()), sw = left_of(p.back());
    return std::any_of(p.begin(), p.end(), [&](const Step& s) { return right_of(s) == ne && left_of(s) == sw; });
  }
  bool good_ew(const Path& p) const {
    int nw = left_of(p.front()), se = right_of(p.back());
    return std::any_of(p.begin(), p.end(), [&](const Step& s) { return left_of(s) == nw && right_of(s) == se; });
  }

  void paths(int n, int s, const std::function<void(const Path&, uint64_t)>& sink) const {
    Path cur;
    uint64_t used = 1ull << n;
    std::function<void(int)> rec = [&](int v) {
      for (auto [e, w] : inc[v]) {
        if (used >> w & 1) continue;
        cur.push_back({e, c.edges[e].tail == v});
        if (w == s) {
          sink(cur, used & ~(1ull << n));
        } else {
          used |= 1ull << w;
          rec(w);
          used &= ~(1ull << w);
        }
        cur.pop_back();
      }
    };
    rec(n);
  }
};

struct Decoration {
  int north, south;
  Path we, ew;
  std::vector<int> side;     // per face: 1 = W, 2 = E
  std::vector<int> forced;   // per edge: +1 keep base direction, -1 reverse, 0 free
};

// Flood the W side and compute forced directions; false if Def 1.1(iii) is contradictory.
bool decorate(const Search& S, Decoration& d) {
  const CellComplex2& c = S.c;
  const int E = c.num_edges(), F = c.num_faces(), V = c.num_vertices();
  std::vector<char> merid(E, 0), on_mer(V, 0);
  d.forced.assign(E, 0);
  for (const Path* p : {&d.we, &d.ew})
    for (const Step& s : *p) {
      merid[s.edge] = 1;
      d.forced[s.edge] = s.forward ? 1 : -1;
      on_mer[c.edges[s.edge].tail] = on_mer[c.edges[s.edge].head] = 1;
    }
  on_mer[d.north] = on_mer[d.south] = 0;
  d.side.assign(F, 2);
  std::deque<int> q;
  for (const Step& s : d.we) {
    int f = S.right_of(s);
    if (d.side[f] != 1) d.side[f] = 1, q.push_back(f);
  }
  std::vector<std::vector<int>> face_edges(F);
  for (int f = 0; f < F; ++f)
    for (const Dart& x : c.faces[f].boundary) face_edges[f].push_back(x.edge);
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (int e : face_edges[f]) {
      if (merid[e]) continue;
      int g = c.plus_face[e] == f ? c.minus_face[e] : c.plus_face[e];
      if (d.side[g] != 1) d.side[g] = 1, q.push_back(g);
    }
  }
  for (const Step& s : d.we)
    if (d.side[S.left_of(s)] == 1) return false;
  for (const Step& s : d.ew)
    if (d.side[S.left_of(s)] != 1 || d.side[S.right_of(s)] == 1) return false;

  for (int e = 0; e < E; ++e) {
    if (merid[e]) continue;
    const Edge& ed = c.edges[e];
    const bool west = d.side[c.plus_face[e]] == 1;
    int want = 0;  // +1 base direction, -1 reversed
    auto need = [&](int w) {
      if (want && want != w) return false;
      want = w;
      return true;
    };
    for (int v : {ed.tail, ed.head}) {
      int toward = (ed.head == v) ? 1 : -1;  // base direction points toward v
      if (v == d.north && !need(-toward)) return false;
      if (v == d.south && !need(toward)) return false;
      if (on_mer[v] && !need(west ? toward : -toward)) return false;
    }
    d.forced[e] = want;
  }
  return true;
}

// Orientation completion by backtracking; calls sink for each bipolar completion until it returns false.
class Completion {
 public:
  Completion(const CellComplex2& c, const Decoration& d) : c_(c), d_(d) {
    V_ = c.num_vertices();
    E_ = c.num_edges();
    out_.assign(V_, {});
    free_left_.assign(V_, 0);
    has_in_.assign(V_, 0);
    has_out_.assign(V_, 0);
    dir_.assign(E_, 0);
    for (int e = 0; e < E_; ++e) {
      if (d.forced[e]) {
        ok_ = ok_ && place(e, d.forced[e]);
      } else {
        free_.push_back(e);
        ++free_left_[c.edges[e].tail];
        ++free_left_[c.edges[e].head];
      }
    }
  }

  // Returns false if aborted by the sink.
  bool run(const std::function<bool(const std::vector<int>&)>& sink) {
    if (!ok_) return true;
    for (int v = 0; v < V_; ++v)
      if (dead(v)) return true;
    return rec(0, sink);
  }

 private:
  bool reaches(int from, int to) {
    std::vector<char> seen(V_, 0);
    std::vector<int> st{from};
    seen[from] = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      if (v == to) return true;
      for (int w : out_[v])
        if (!seen[w]) seen[w] = 1, st.push_back(w);
    }
    return false;
  }
  bool place(int e, int dir) {
    int u = c_.edges[e].tail, v = c_.edges[e].head;
    if (dir < 0) std::swap(u, v);
    if (reaches(v, u)) return false;
    out_[u].push_back(v);
    dir_[e] = dir;
    ++has_out_[u];
    ++has_in_[v];
    return true;
  }
  void unplace(int e) {
    int u = c_.edges[e].tail, v = c_.edges[e].head;
    if (dir_[e] < 0) std::swap(u, v);
    out_[u].pop_back();
    --has_out_[u];
    --has_in_[v];
    dir_[e] = 0;
  }
  bool dead(int v) const {
    if (free_left_[v]) return false;
    if (v != d_.north && !has_in_[v]) return true;
    if (v != d_.south && !has_out_[v]) return true;
    if (v == d_.north && has_in_[v]) return true;
    if (v == d_.south && has_out_[v]) return true;
    return false;
  }
  bool rec(size_t k, const std::function<bool(const std::vector<int>&)>& sink) {
    if (k == free_.size()) return sink(dir_);
    int e = free_[k];
    int a = c_.edges[e].tail, b = c_.edges[e].head;
    --free_left_[a];
    --free_left_[b];
    for (int dir : {1, -1}) {
      if (!place(e, dir)) continue;
      bool cont = true;
      if (!dead(a) && !dead(b)) cont = rec(k + 1, sink);
      unplace(e);
      if (!cont) {
        ++free_left_[a];
        ++free_left_[b];
        return false;
      }
    }
    ++free_left_[a];
    ++free_left_[b];
    return true;
  }

  const CellComplex2& c_;
  const Decoration& d_;
  int V_ = 0, E_ = 0;
  bool ok_ = true;
  std::vector<std::vector<int>> out_;
  std::vector<int> free_, free_left_, has_in_, has_out_, dir_;
};

ThreeCellTemplate build_template(const CellComplex2& base, const Decoration& d, const std::vector<int>& dir) {
  std::vector<bool> flip(base.num_edges());
  for (int e = 0; e < base.num_edges(); ++e) flip[e] = dir[e] < 0;
  ThreeCellTemplate t;
  t.sphere = reorient(base, flip);
  t.north = d.north;
  t.south = d.south;
  for (const Step& s : d.we) t.we.push_back(s.edge);
  for (const Step& s : d.ew) t.ew.push_back(s.edge);
  for (int f = 0; f < base.num_faces(); ++f) (d.side[f] == 1 ? t.west : t.east).push_back(f);
  return t;
}

std::vector<int> encode(const CellComplex2& base, const std::vector<int>& dir, int n, int s,
                        const std::vector<int>& side) {
  std::vector<int> k;
  k.reserve(dir.size() + 2 + side.size());
  for (int x : dir) k.push_back(x > 0);
  k.push_back(n);
  k.push_back(s);
  for (int x : side) k.push_back(x);
  (void)base;
  return k;
}

std::vector<int> template_key(const CellComplex2& base, const std::vector<Automorphism>& auts,
                              const std::vector<int>& dir, int n, int s, const std::vector<int>& side) {
  const int E = base.num_edges(), F = base.num_faces();
  std::vector<int> best;
  std::vector<int> d2(E), side2(F);
  for (const Automorphism& a : auts)
    for (int g = 0; g < 2; ++g) {
      for (int e = 0; e < E; ++e) {
        int tail = dir[e] > 0 ? base.edges[e].tail : base.edges[e].head;
        if (g) tail = (tail == base.edges[e].tail) ? base.edges[e].head : base.edges[e].tail;
        int ie = a.e[e];
        d2[ie] = (a.v[tail] == base.edges[ie].tail) ? 1 : -1;
      }
      for (int f = 0; f < F; ++f) side2[a.f[f]] = g ? 3 - side[f] : side[f];
      int n2 = a.v[g ? s : n], s2 = a.v[g ? n : s];
      auto k = encode(base, d2, n2, s2, side2);
      if (best.empty() || k < best) best = std::move(k);
    }
  return best;
}

}  // namespace

TemplateCensus enumerate_templates(const CellComplex2& sphere, const TemplateCensusOptions& opt) {
  if (sphere.kind != Kind::sphere) throw ValidationError("enumerate_templates needs a sphere complex");
  if (sphere.num_vertices() > 63) throw ValidationError("too many vertices for template enumeration");
  const auto auts = automorphisms(sphere);
  Search S(sphere, opt.chirality);
  TemplateCensus out;
  std::map<std::vector<int>, size_t> seen;
  std::set<Permutation> sigmas;
  const int V = sphere.num_vertices();
  for (int n = 0; n < V; ++n)
    for (int s = 0; s < V; ++s) {
      if (n == s) continue;
      std::vector<std::pair<Path, uint64_t>> wes, ews;
      S.paths(n, s, [&](const Path& p, uint64_t inner) {
        if (S.good_we(p)) wes.push_back({p, inner});
        if (S.good_ew(p)) ews.push_back({p, inner});
      });
      for (const auto& [pw, iw] : wes)
        for (const auto& [pe, ie] : ews) {
          if (iw & ie) continue;
          if (pw.size() == 1 && pe.size() == 1 && pw[0].edge == pe[0].edge) continue;
          Decoration d{n, s, pw, pe, {}, {}};
          if (!decorate(S, d)) continue;
          Completion comp(sphere, d);
          comp.run([&](const std::vector<int>& dir) {
            if (++out.candidates > opt.max_orientations)
              throw ResourceCap("template enumeration exceeded " + std::to_string(opt.max_orientations) + " orientations");
            auto key = template_key(sphere, auts, dir, n, s, d.side);
            if (seen.count(key)) return true;
            ThreeCellTemplate t = build_template(sphere, d, dir);
            TemplateValidation tv = validate_template(t, opt.chirality);
            if (!tv.ok) throw std::logic_error("enumerated decoration fails validation: " + tv.violations.front());
            TemplateClass tc;
            tc.sigma = sigma_of(t, opt.chirality);
            tc.tmpl = std::move(t);
            tc.key = key;
            tc.delta = pole_distance(sphere, n, s);
            tc.eta = static_cast<int>(std::min(tc.tmpl.west.size(), tc.tmpl.east.size()));
            sigmas.insert(canonical(tc.sigma));
            seen[key] = out.classes.size();
            out.classes.push_back(std::move(tc));
            return true;
          });
        }
    }
  out.sigma_classes = sigmas.size();
  return out;
}

ScanReport pole_meridian_scan(const CellComplex2& sphere, const ScanOptions& opt) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  ScanReport rep;
  const auto auts = automorphisms(sphere);
  Search S(sphere, opt.chirality);
  const int V = sphere.num_vertices();
  std::set<std::pair<int, int>> done;
  for (int n = 0; n < V && !rep.capped; ++n)
    for (int s = 0; s < V && !rep.capped; ++s) {
      if (n == s || done.count({n, s})) continue;
      for (const Automorphism& a : auts) done.insert({a.v[n], a.v[s]});
      ++rep.pole_pairs;
      std::vector<std::pair<Path, uint64_t>> wes, ews;
      S.paths(n, s, [&](const Path& p, uint64_t inner) {
        if (S.good_we(p)) wes.push_back({p, inner});
        if (S.good_ew(p)) ews.push_back({p, inner});
      });
      for (const auto& [pw, iw] : wes) {
        if (rep.capped) break;
        for (const auto& [pe, ie] : ews) {
          if (iw & ie) continue;
          if (pw.size() == 1 && pe.size() == 1 && pw[0].edge == pe[0].edge) continue;
          if (std::chrono::duration<double>(clock::now() - t0).count() > opt.budget_seconds) {
            rep.capped = true;
            break;
          }
          ++rep.meridian_pairs;
          Decoration d{n, s, pw, pe, {}, {}};
          if (!decorate(S, d)) continue;
          Completion comp(sphere, d);
          comp.run([&](const std::vector<int>& dir) {
            FeasibleConfig fc;
            fc.north = n;
            fc.south = s;
            fc.delta = pole_distance(sphere, n, s);
            fc.eta_west = static_cast<int>(std::count(d.side.begin(), d.side.end(), 1));
            fc.eta_east = sphere.num_faces() - fc.eta_west;
            fc.example = build_template(sphere, d, dir);
            rep.feasible.push_back(std::move(fc));
            return false;
          });
        }
      }
    }
  rep.seconds = std::chrono::duration<double>(clock::now() - t0).count();
  return rep;
}

}  // namespace sturm
