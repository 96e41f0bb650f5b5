#include "sturm/szs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sturm/error.hpp"
#include "sturm/meander.hpp"

namespace sturm {

std::string cell_label(const CellComplex2& c, const Cell& x, const std::string& center) {
  switch (x.dim) {
    case 0: return c.vertices[x.index];
    case 1: return c.edges[x.index].id;
    case 2: return c.faces[x.index].id;
    default: return center;
  }
}

FaceAnchors face_anchors(const CellComplex2& c, int face, Chirality ch) {
  const auto& b = c.faces[face].boundary;
  const size_t L = b.size();
  FaceAnchors a;
  size_t imin = L;
  int mins = 0, maxs = 0;
  for (size_t i = 0; i < L; ++i) {
    const Dart& cur = b[i];
    const Dart& prev = b[(i + L - 1) % L];
    if (cur.forward && !prev.forward) {
      ++mins;
      imin = i;
      a.min_vertex = c.start(cur);
    }
    if (!cur.forward && prev.forward) {
      ++maxs;
      a.max_vertex = c.start(cur);
    }
  }
  if (mins != 1 || maxs != 1)
    throw ValidationError("face '" + c.faces[face].id + "' boundary is not bipolar");
  std::vector<int> fwd, bwd;
  size_t i = 0;
  for (; i < L && b[(imin + i) % L].forward; ++i) fwd.push_back(b[(imin + i) % L].edge);
  for (; i < L; ++i) bwd.push_back(b[(imin + i) % L].edge);
  std::reverse(bwd.begin(), bwd.end());
  const auto& left = ch == Chirality::standard ? fwd : bwd;
  const auto& right = ch == Chirality::standard ? bwd : fwd;
  a.w0_minus = right.back();
  a.w0_plus = left.front();
  a.w1_minus = left.back();
  a.w1_plus = right.front();
  return a;
}

namespace {

class PathSearch {
 public:
  PathSearch(const CellComplex2& c, int role, Chirality ch, int north, int south)
      : c_(c), north_(north), south_(south) {
    V_ = c.num_vertices();
    E_ = c.num_edges();
    F_ = c.num_faces();
    out_.assign(V_, {});
    for (int e = 0; e < E_; ++e) out_[c.edges[e].tail].push_back(e);
    entry_faces_.assign(E_, {});
    exit_.assign(F_, -1);
    for (int f = 0; f < F_; ++f) {
      FaceAnchors a = face_anchors(c, f, ch);
      int in = role == 0 ? a.w0_minus : a.w1_minus;
      exit_[f] = role == 0 ? a.w0_plus : a.w1_plus;
      entry_faces_[in].push_back(f);
    }
    seen_.assign(V_ + E_ + F_, 0);
  }

  // Returns up to two complete paths.
  std::vector<std::vector<Cell>> run() {
    cur_.clear();
    found_.clear();
    visit({0, north_});
    return found_;
  }

 private:
  int id(const Cell& x) const { return x.dim == 0 ? x.index : x.dim == 1 ? V_ + x.index : V_ + E_ + x.index; }

  void visit(const Cell& x) {
    if (found_.size() >= 2) return;
    const int k = id(x);
    if (seen_[k]) return;
    seen_[k] = 1;
    cur_.push_back(x);
    if (static_cast<int>(cur_.size()) == V_ + E_ + F_) {
      if (x.dim == 0 && x.index == south_) found_.push_back(cur_);
    } else if (x.dim == 0) {
      for (int e : out_[x.index]) visit({1, e});
    } else if (x.dim == 1) {
      bool forced = false;
      for (int f : entry_faces_[x.index])
        if (!seen_[id({2, f})]) {
          forced = true;
          visit({2, f});
        }
      if (!forced) visit({0, c_.edges[x.index].head});
    } else {
      visit({1, exit_[x.index]});
    }
    cur_.pop_back();
    seen_[k] = 0;
  }

  const CellComplex2& c_;
  int north_, south_;
  int V_ = 0, E_ = 0, F_ = 0;
  std::vector<std::vector<int>> out_, entry_faces_;
  std::vector<int> exit_;
  std::vector<char> seen_;
  std::vector<Cell> cur_;
  std::vector<std::vector<Cell>> found_;
};

std::vector<Cell> unique_path(const CellComplex2& disk, int role, Chirality ch, int n, int s, const char* name) {
  PathSearch ps(disk, role, ch, n, s);
  auto paths = ps.run();
  if (paths.empty()) throw ValidationError(std::string("no Hamiltonian path ") + name + " (not a planar Sturm complex)");
  if (paths.size() > 1) throw std::logic_error(std::string("Hamiltonian path ") + name + " is not unique");
  return paths.front();
}

}  // namespace

HamiltonianPair zs_pair(const CellComplex2& disk, Flavor flavor, Chirality ch) {
  auto poles = bipolar_poles(disk);
  if (!poles) throw ValidationError("disk orientation is not bipolar");
  if (disk.num_vertices() == 1) return {{{0, 0}}, {{0, 0}}};
  const int r0 = flavor == Flavor::zs ? 0 : 1;
  HamiltonianPair hp;
  hp.h0 = unique_path(disk, r0, ch, poles->north, poles->south, "h0");
  hp.h1 = unique_path(disk, 1 - r0, ch, poles->north, poles->south, "h1");
  return hp;
}

SubDisk hemisphere_disk(const ThreeCellTemplate& t, bool west) {
  const CellComplex2& c = t.sphere;
  SubDisk sd;
  sd.disk.kind = Kind::disk;
  const auto& faces = west ? t.west : t.east;
  std::vector<int> vnew(c.num_vertices(), -1), enew(c.num_edges(), -1);
  std::vector<char> used(2 * c.num_edges(), 0);
  for (int f : faces)
    for (const Dart& d : c.faces[f].boundary) {
      used[2 * d.edge + (d.forward ? 0 : 1)] = 1;
      if (enew[d.edge] < 0) {
        enew[d.edge] = static_cast<int>(sd.edge_map.size());
        sd.edge_map.push_back(d.edge);
      }
      for (int v : {c.edges[d.edge].tail, c.edges[d.edge].head})
        if (vnew[v] < 0) {
          vnew[v] = static_cast<int>(sd.vertex_map.size());
          sd.vertex_map.push_back(v);
        }
    }
  for (int v : sd.vertex_map) sd.disk.vertices.push_back(c.vertices[v]);
  for (int e : sd.edge_map) sd.disk.edges.push_back({c.edges[e].id, vnew[c.edges[e].tail], vnew[c.edges[e].head]});
  for (int f : faces) {
    Face nf{c.faces[f].id, {}};
    for (const Dart& d : c.faces[f].boundary) nf.boundary.push_back({enew[d.edge], d.forward});
    sd.disk.faces.push_back(std::move(nf));
    sd.face_map.push_back(f);
  }
  // Exterior circuit: the darts of boundary edges not used by any disk face.
  std::map<int, Dart> ext_from;
  for (int e : sd.edge_map)
    for (int k = 0; k < 2; ++k)
      if (!used[2 * e + k]) {
        Dart d{enew[e], k == 0};
        int from = sd.disk.start(d);
        if (ext_from.count(from)) throw ValidationError("hemisphere is not a disk");
        ext_from[from] = d;
      }
  if (!ext_from.empty()) {
    std::vector<Dart> ext;
    int v = ext_from.begin()->first;
    do {
      auto it = ext_from.find(v);
      if (it == ext_from.end() || ext.size() > ext_from.size()) throw ValidationError("hemisphere is not a disk");
      ext.push_back(it->second);
      v = sd.disk.end(it->second);
    } while (v != ext_from.begin()->first);
    if (ext.size() != ext_from.size()) throw ValidationError("hemisphere boundary is not a single circle");
    for (auto it = ext.rbegin(); it != ext.rend(); ++it) sd.disk.outer.push_back({it->edge, !it->forward});
  }
  check_complex(sd.disk);
  return sd;
}

namespace {

std::vector<Cell> lift_cells(const SubDisk& sd, const std::vector<Cell>& h) {
  std::vector<Cell> out;
  for (const Cell& x : h) {
    const auto& m = x.dim == 0 ? sd.vertex_map : x.dim == 1 ? sd.edge_map : sd.face_map;
    out.push_back({x.dim, m[x.index]});
  }
  return out;
}

std::vector<Cell> merge(const std::vector<Cell>& hw, const std::vector<Cell>& he, const std::set<Cell>& shared,
                        int w_minus, int w_plus, const char* name) {
  std::vector<Cell> out;
  size_t i = 0, j = 0;
  bool center = false;
  auto fail = [&](const std::string& why) { throw std::logic_error(std::string("SZS merge of ") + name + ": " + why); };
  while (i < hw.size() || j < he.size()) {
    std::vector<Cell> wb, eb;
    while (i < hw.size() && !shared.count(hw[i])) wb.push_back(hw[i++]);
    while (j < he.size() && !shared.count(he[j])) eb.push_back(he[j++]);
    if (!wb.empty() && !eb.empty()) {
      if (center) fail("two gaps hold both hemispheres");
      center = true;
      if (!(wb.back() == Cell{2, w_minus})) fail("western block does not end at w-");
      if (!(eb.front() == Cell{2, w_plus})) fail("eastern block does not start at w+");
      out.insert(out.end(), wb.begin(), wb.end());
      out.push_back({3, 0});
      out.insert(out.end(), eb.begin(), eb.end());
    } else {
      out.insert(out.end(), wb.begin(), wb.end());
      out.insert(out.end(), eb.begin(), eb.end());
    }
    if (i < hw.size() || j < he.size()) {
      if (i >= hw.size() || j >= he.size() || !(hw[i] == he[j])) fail("meridian cells out of order");
      out.push_back(hw[i]);
      ++i, ++j;
    }
  }
  if (!center) fail("no passage through the 3-cell");
  return out;
}

}  // namespace

HamiltonianPair szs_pair(const ThreeCellTemplate& t, Chirality ch) {
  TemplateValidation tv = validate_template(t, ch);
  if (!tv.ok) throw ValidationError("invalid template: " + tv.violations.front());
  const TemplateAnchors& a = *tv.anchors;
  SubDisk w = hemisphere_disk(t, true), e = hemisphere_disk(t, false);
  HamiltonianPair hw = zs_pair(w.disk, Flavor::sz, ch);
  HamiltonianPair he = zs_pair(e.disk, Flavor::zs, ch);
  std::set<Cell> shared{{0, t.north}, {0, t.south}};
  for (const auto* path : {&t.we, &t.ew})
    for (int ed : *path) {
      shared.insert({1, ed});
      shared.insert({0, t.sphere.edges[ed].head});
    }
  HamiltonianPair hp;
  hp.h0 = merge(lift_cells(w, hw.h0), lift_cells(e, he.h0), shared, a.ne, a.se, "h0");
  hp.h1 = merge(lift_cells(w, hw.h1), lift_cells(e, he.h1), shared, a.nw, a.sw, "h1");
  return hp;
}

Permutation pair_permutation(const HamiltonianPair& hp) {
  std::map<Cell, int> pos;
  for (size_t k = 0; k < hp.h0.size(); ++k) pos[hp.h0[k]] = static_cast<int>(k) + 1;
  std::vector<int> img;
  for (const Cell& x : hp.h1) {
    auto it = pos.find(x);
    if (it == pos.end()) throw std::logic_error("h1 visits a cell missing from h0");
    img.push_back(it->second);
  }
  return Permutation(img);
}

namespace {

bool incident(const CellComplex2& c, const Cell& lo, const Cell& hi) {
  if (hi.dim == 3) return lo.dim == 2;
  if (lo.dim == 0 && hi.dim == 1) return c.edges[hi.index].tail == lo.index || c.edges[hi.index].head == lo.index;
  if (lo.dim == 1 && hi.dim == 2) {
    const auto& b = c.faces[hi.index].boundary;
    return std::any_of(b.begin(), b.end(), [&](const Dart& d) { return d.edge == lo.index; });
  }
  return false;
}

}  // namespace

bool pair_is_alternating(const CellComplex2& c, const HamiltonianPair& hp, bool with_center) {
  const size_t total = c.num_cells() + (with_center ? 1 : 0);
  for (const auto* h : {&hp.h0, &hp.h1}) {
    if (h->size() != total) return false;
    if (std::set<Cell>(h->begin(), h->end()).size() != total) return false;
    for (size_t k = 0; k + 1 < h->size(); ++k) {
      Cell x = (*h)[k], y = (*h)[k + 1];
      if (std::abs(x.dim - y.dim) != 1) return false;
      if (!(x.dim < y.dim ? incident(c, x, y) : incident(c, y, x))) return false;
    }
  }
  return true;
}

Permutation sigma_of(const ThreeCellTemplate& t, Chirality ch) {
  HamiltonianPair hp = szs_pair(t, ch);
  if (!pair_is_alternating(t.sphere, hp, true)) throw std::logic_error("SZS pair violates cell alternation");
  Permutation s = pair_permutation(hp);
  if (!is_sturm(s).sturm) throw std::logic_error("SZS permutation is not Sturm: " + s.str());
  TemplateReport tr = is_three_meander_template(s);
  if (!tr.is_template) throw std::logic_error("SZS permutation is not a 3-meander template: " + s.str() + " " + tr.violations.front());
  return s;
}

}  // namespace sturm
