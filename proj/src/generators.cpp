#include "sturm/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "sturm/enumerate.hpp"
#include "sturm/error.hpp"
#include "sturm/meander.hpp"

namespace sturm {

namespace {

int add_vertex(CellComplex2& c, const std::string& id) {
  c.vertices.push_back(id);
  return c.num_vertices() - 1;
}

int add_edge(CellComplex2& c, const std::string& id, int tail, int head) {
  c.edges.push_back({id, tail, head});
  return c.num_edges() - 1;
}

// Directed path of `len` edges from a to b with fresh interior vertices.
std::vector<int> add_path(CellComplex2& c, int a, int b, int len, const std::string& prefix) {
  std::vector<int> out;
  int v = a;
  for (int i = 1; i <= len; ++i) {
    int w = i == len ? b : add_vertex(c, prefix + "v" + std::to_string(i));
    out.push_back(add_edge(c, prefix + std::to_string(i), v, w));
    v = w;
  }
  return out;
}

}  // namespace

CellComplex2 gon_disk(int m, int n) {
  if (m < 1 || n < 1) throw ValidationError("gon_disk needs m, n >= 1");
  CellComplex2 c;
  c.kind = Kind::disk;
  int N = add_vertex(c, "N"), S = add_vertex(c, "S");
  auto right = add_path(c, N, S, m, "r");
  auto left = add_path(c, N, S, n, "l");
  Face f{"f", {}};
  for (int e : left) f.boundary.push_back({e, true});
  for (auto it = right.rbegin(); it != right.rend(); ++it) f.boundary.push_back({*it, false});
  c.outer = f.boundary;
  c.faces.push_back(std::move(f));
  check_complex(c);
  return c;
}

CellComplex2 striped_disk(int k) {
  if (k < 1) throw ValidationError("striped_disk needs k >= 1");
  CellComplex2 c;
  c.kind = Kind::disk;
  int N = add_vertex(c, "N"), S = add_vertex(c, "S");
  for (int i = 0; i <= k; ++i) add_edge(c, "p" + std::to_string(i), N, S);
  for (int i = 1; i <= k; ++i) c.faces.push_back({"f" + std::to_string(i), {{i - 1, true}, {i, false}}});
  c.outer = {{0, true}, {k, false}};
  check_complex(c);
  return c;
}

CellComplex2 eye_disk(bool at_south) {
  CellComplex2 c;
  c.kind = Kind::disk;
  int N = add_vertex(c, "N"), S = add_vertex(c, "S"), x = add_vertex(c, "x");
  int l = add_edge(c, "l", N, S), r = add_edge(c, "r", N, S);
  int a = add_edge(c, "a", N, x), b1 = add_edge(c, "b1", x, S), b2 = add_edge(c, "b2", x, S);
  c.faces.push_back({"f1", {{l, true}, {b1, false}, {a, false}}});
  c.faces.push_back({"eye", {{b1, true}, {b2, false}}});
  c.faces.push_back({"f3", {{a, true}, {b2, true}, {r, false}}});
  c.outer = {{l, true}, {r, false}};
  check_complex(c);
  if (at_south) return c;
  CellComplex2 rev = reverse_all(c);
  std::swap(rev.vertices[N], rev.vertices[S]);
  return rev;
}

ThreeCellTemplate lift(const CellComplex2& west, const CellComplex2& east) {
  if (west.kind != Kind::disk || east.kind != Kind::disk) throw ValidationError("lift needs two disks");
  DiskBoundary bw = disk_boundary(west), be = disk_boundary(east);
  if (bw.right.size() != be.left.size() || bw.left.size() != be.right.size())
    throw ValidationError("lift: incompatible boundaries");
  ThreeCellTemplate t;
  CellComplex2& s = t.sphere;
  s.kind = Kind::sphere;
  s.vertices = west.vertices;
  s.edges = west.edges;
  s.faces = west.faces;
  std::set<std::string> names(west.vertices.begin(), west.vertices.end());
  for (const Edge& e : west.edges) names.insert(e.id);
  for (const Face& f : west.faces) names.insert(f.id);
  auto fresh = [&](std::string id) {
    while (names.count(id)) id += "'";
    names.insert(id);
    return id;
  };
  std::vector<int> vmap(east.num_vertices(), -1), emap(east.num_edges(), -1);
  vmap[be.north] = bw.north;
  vmap[be.south] = bw.south;
  auto glue = [&](const std::vector<int>& pe, const std::vector<int>& pw) {
    for (size_t i = 0; i < pe.size(); ++i) {
      emap[pe[i]] = pw[i];
      vmap[east.edges[pe[i]].head] = west.edges[pw[i]].head;
    }
  };
  glue(be.left, bw.right);
  glue(be.right, bw.left);
  for (int v = 0; v < east.num_vertices(); ++v)
    if (vmap[v] < 0) {
      vmap[v] = s.num_vertices();
      s.vertices.push_back(fresh(east.vertices[v]));
    }
  for (int e = 0; e < east.num_edges(); ++e)
    if (emap[e] < 0) {
      emap[e] = s.num_edges();
      s.edges.push_back({fresh(east.edges[e].id), vmap[east.edges[e].tail], vmap[east.edges[e].head]});
    }
  for (int f = 0; f < west.num_faces(); ++f) t.west.push_back(f);
  for (const Face& f : east.faces) {
    Face nf{fresh(f.id), {}};
    for (const Dart& d : f.boundary) nf.boundary.push_back({emap[d.edge], d.forward});
    t.east.push_back(s.num_faces());
    s.faces.push_back(std::move(nf));
  }
  s.outer.clear();
  check_complex(s);
  t.north = bw.north;
  t.south = bw.south;
  t.we = bw.right;
  t.ew = bw.left;
  TemplateValidation tv = validate_template(t);
  if (!tv.ok) throw ValidationError("lift does not yield a template: " + tv.violations.front());
  return t;
}

Permutation meander_from_arcs(int n, const std::vector<std::pair<int, int>>& upper,
                              const std::vector<std::pair<int, int>>& lower) {
  std::vector<int> up(n + 1, 0), lo(n + 1, 0);
  for (auto [a, b] : upper) up[a] = b, up[b] = a;
  for (auto [a, b] : lower) lo[a] = b, lo[b] = a;
  std::vector<int> seq = trace_arcs(n, up, lo);
  if (seq.empty()) throw ValidationError("arcs do not trace a single curve");
  return Permutation(seq).inverse();
}

namespace {

void nest(std::vector<std::pair<int, int>>& arcs, int start, int size) {
  for (int i = 0; i < size; ++i) arcs.push_back({start + i, start + 2 * size - 1 - i});
}

Permutation checked(Permutation p, const char* what) {
  if (!is_sturm(p).sturm) throw std::logic_error(std::string(what) + " meander is not Sturm: " + p.str());
  return p;
}

}  // namespace

Permutation ci_meander(int m) {
  if (m < 1) throw ValidationError("ci_meander needs m >= 1");
  std::vector<std::pair<int, int>> up, lo;
  nest(up, 1, m);
  nest(lo, 2, m);
  return checked(meander_from_arcs(2 * m + 1, up, lo), "Chafee-Infante");
}

Permutation simplex_meander(int m) {
  if (m < 1 || m > 10) throw ValidationError("simplex_meander needs 1 <= m <= 10");
  const int n = (1 << (m + 1)) - 1;
  std::vector<std::pair<int, int>> up, lo;
  nest(up, 1, (n - 1) / 2);
  for (int s = 1, start = 2; s <= (1 << (m - 1)); start += 2 * s, s *= 2) nest(lo, start, s);
  return checked(meander_from_arcs(n, up, lo), "simplex");
}

Permutation hypercube_meander(int m) {
  if (m < 1 || m > 8) throw ValidationError("hypercube_meander needs 1 <= m <= 8");
  int n = 1;
  for (int i = 0; i < m; ++i) n *= 3;
  std::vector<std::pair<int, int>> up, lo;
  for (int s = n / 3, start = 1; s >= 1; start += 2 * s, s /= 3) nest(up, start, s);
  for (int s = 1, start = 2; s <= n / 3; start += 2 * s, s *= 3) nest(lo, start, s);
  return checked(meander_from_arcs(n, up, lo), "hypercube");
}

CellComplex2 hosohedron(int k) {
  if (k < 2) throw ValidationError("hosohedron needs k >= 2");
  CellComplex2 c;
  int N = add_vertex(c, "N"), S = add_vertex(c, "S");
  for (int i = 0; i < k; ++i) add_edge(c, "m" + std::to_string(i), N, S);
  for (int i = 0; i < k; ++i) c.faces.push_back({"f" + std::to_string(i), {{i, true}, {(i + 1) % k, false}}});
  check_complex(c);
  return c;
}

CellComplex2 subdivide_edge(const CellComplex2& c, int edge, const std::string& vertex_id) {
  CellComplex2 r = c;
  int x = add_vertex(r, vertex_id);
  int head = r.edges[edge].head;
  r.edges[edge].head = x;
  int e2 = add_edge(r, r.edges[edge].id + "'", x, head);
  auto fix = [&](std::vector<Dart>& w) {
    std::vector<Dart> out;
    for (const Dart& d : w) {
      if (d.edge != edge) out.push_back(d);
      else if (d.forward) out.insert(out.end(), {{edge, true}, {e2, true}});
      else out.insert(out.end(), {{e2, false}, {edge, false}});
    }
    w = std::move(out);
  };
  for (Face& f : r.faces) fix(f.boundary);
  fix(r.outer);
  check_complex(r);
  return r;
}

CellComplex2 complex_433() {
  CellComplex2 c;
  int v1 = add_vertex(c, "v1"), v2 = add_vertex(c, "v2"), v3 = add_vertex(c, "v3");
  int a1 = add_edge(c, "a1", v3, v1), a2 = add_edge(c, "a2", v3, v1);
  int b1 = add_edge(c, "b1", v3, v2), b2 = add_edge(c, "b2", v3, v2);
  int e = add_edge(c, "c", v1, v2);
  c.faces.push_back({"A", {{a1, true}, {a2, false}}});
  c.faces.push_back({"B", {{b1, true}, {b2, false}}});
  c.faces.push_back({"T1", {{a2, true}, {e, true}, {b1, false}}});
  c.faces.push_back({"T2", {{b2, true}, {e, false}, {a1, false}}});
  check_complex(c);
  return c;
}

namespace {

using Vec = std::array<double, 3>;

// Convex polyhedron with triangular faces from vertex coordinates.
CellComplex2 triangulated(const std::vector<Vec>& pts) {
  const int n = static_cast<int>(pts.size());
  auto d2 = [&](int i, int j) {
    double s = 0;
    for (int k = 0; k < 3; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
    return s;
  };
  double best = 1e18;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) best = std::min(best, d2(i, j));
  CellComplex2 c;
  for (int i = 0; i < n; ++i) add_vertex(c, "v" + std::to_string(i));
  std::vector<std::vector<int>> eid(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d2(i, j) < best * 1.001) eid[i][j] = eid[j][i] = add_edge(c, "e" + std::to_string(c.num_edges()), i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (eid[i][j] < 0 || eid[j][k] < 0 || eid[i][k] < 0) continue;
        std::array<int, 3> t{i, j, k};
        Vec u, v;
        for (int q = 0; q < 3; ++q) u[q] = pts[j][q] - pts[i][q], v[q] = pts[k][q] - pts[i][q];
        Vec nrm{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
        double dot = nrm[0] * pts[i][0] + nrm[1] * pts[i][1] + nrm[2] * pts[i][2];
        if (dot < 0) std::swap(t[1], t[2]);
        Face f{"f" + std::to_string(c.num_faces()), {}};
        for (int q = 0; q < 3; ++q) {
          int a = t[q], b = t[(q + 1) % 3];
          int e = eid[a][b];
          f.boundary.push_back({e, c.edges[e].tail == a});
        }
        c.faces.push_back(std::move(f));
      }
  check_complex(c);
  return c;
}

}  // namespace

CellComplex2 tetrahedron() { return triangulated({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}); }

CellComplex2 octahedron() {
  return triangulated({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

CellComplex2 icosahedron() {
  const double p = (1 + std::sqrt(5.0)) / 2;
  std::vector<Vec> pts;
  for (double s : {1.0, -1.0})
    for (double t : {p, -p}) {
      pts.push_back({0, s, t});
      pts.push_back({s, t, 0});
      pts.push_back({t, 0, s});
    }
  return triangulated(pts);
}

CellComplex2 cube() { return sphere_dual(octahedron()); }
CellComplex2 dodecahedron() { return sphere_dual(icosahedron()); }

std::vector<NamedSphere> small_spheres() {
  std::vector<NamedSphere> out;
  auto add = [&](std::string name, CellComplex2 c) {
    int n = c.num_cells() + 1;
    out.push_back({std::move(name), n, std::move(c)});
  };
  add("hoso2", hosohedron(2));
  add("hoso3", hosohedron(3));
  add("dihedron3", sphere_dual(hosohedron(3)));
  add("hoso4", hosohedron(4));
  add("hoso3+x", subdivide_edge(hosohedron(3), 0));
  add("dihedron4", sphere_dual(hosohedron(4)));
  add("hoso5", hosohedron(5));
  add("dihedron5", sphere_dual(hosohedron(5)));
  add("hoso4+x", subdivide_edge(hosohedron(4), 0));
  add("dual(hoso4+x)", sphere_dual(subdivide_edge(hosohedron(4), 0)));
  add("c433", complex_433());
  add("dual(c433)", sphere_dual(complex_433()));
  return out;
}

ThreeCellTemplate golden_template() {
  ThreeCellTemplate t;
  CellComplex2& c = t.sphere;
  int N = add_vertex(c, "N"), S = add_vertex(c, "S");
  int e2 = add_edge(c, "e2", N, S), e6 = add_edge(c, "e6", N, S), e8 = add_edge(c, "e8", N, S);
  c.faces.push_back({"F3", {{e2, true}, {e8, false}}});
  c.faces.push_back({"F5", {{e6, true}, {e2, false}}});
  c.faces.push_back({"F7", {{e8, true}, {e6, false}}});
  check_complex(c);
  t.north = N;
  t.south = S;
  t.we = {e8};
  t.ew = {e2};
  t.west = {0};
  t.east = {1, 2};
  return t;
}

ThreeCellTemplate octahedron_tristar() {
  // Vertex order of octahedron(): +x,-x,+y,-y,+z,-z.
  const int a = 0, c = 1, b = 2, d = 3, N = 4, S = 5;
  CellComplex2 o = octahedron();
  const std::array<int, 6> rank{/*a*/ 3, /*c*/ 1, /*b*/ 4, /*d*/ 2, /*N*/ 0, /*S*/ 5};
  std::vector<bool> flip(o.num_edges());
  for (int e = 0; e < o.num_edges(); ++e) flip[e] = rank[o.edges[e].tail] > rank[o.edges[e].head];
  ThreeCellTemplate t;
  t.sphere = reorient(o, flip);
  t.north = N;
  t.south = S;
  auto edge = [&](int u, int v) {
    for (int e = 0; e < t.sphere.num_edges(); ++e)
      if (t.sphere.edges[e].tail == u && t.sphere.edges[e].head == v) return e;
    throw std::logic_error("octahedron edge missing");
  };
  const std::vector<std::set<int>> west_sets{{N, a, b}, {N, d, a}, {N, b, c}, {S, a, b}};
  for (int f = 0; f < t.sphere.num_faces(); ++f) {
    std::set<int> vs;
    for (const Dart& x : t.sphere.faces[f].boundary) vs.insert(t.sphere.start(x));
    bool w = std::find(west_sets.begin(), west_sets.end(), vs) != west_sets.end();
    (w ? t.west : t.east).push_back(f);
  }
  std::vector<int> p1{edge(N, d), edge(d, a), edge(a, S)}, p2{edge(N, c), edge(c, b), edge(b, S)};
  // WE has the western hemisphere on its right.
  bool p1_is_we = std::find(t.west.begin(), t.west.end(), right_face(t.sphere, p1[0])) != t.west.end();
  t.we = p1_is_we ? p1 : p2;
  t.ew = p1_is_we ? p2 : p1;
  return t;
}

ThreeCellTemplate nudged_template() {
  ThreeCellTemplate t;
  CellComplex2& c = t.sphere;
  int N = add_vertex(c, "N"), m = add_vertex(c, "m"), S = add_vertex(c, "S");
  int a = add_edge(c, "a", N, m), b = add_edge(c, "b", m, S), e = add_edge(c, "c", N, S);
  int w = add_edge(c, "w", N, m), x = add_edge(c, "x", m, S);
  c.faces.push_back({"W1", {{w, true}, {a, false}}});
  c.faces.push_back({"W2", {{e, true}, {b, false}, {w, false}}});
  c.faces.push_back({"E1", {{b, true}, {x, false}}});
  c.faces.push_back({"E2", {{a, true}, {x, true}, {e, false}}});
  check_complex(c);
  t.north = N;
  t.south = S;
  t.we = {a, b};
  t.ew = {e};
  t.west = {0, 1};
  t.east = {2, 3};
  return t;
}

}  // namespace sturm
