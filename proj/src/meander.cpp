#include "sturm/meander.hpp"

#include <algorithm>

#include "sturm/error.hpp"

namespace sturm {

namespace {

int sgn(int x) { return (x > 0) - (x < 0); }

void find_conflicts(std::vector<Arc>& arcs, std::vector<std::pair<Arc, Arc>>& out) {
  std::sort(arcs.begin(), arcs.end());
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j) {
      const Arc& x = arcs[i];
      const Arc& y = arcs[j];
      if (y.a > x.b) break;
      if (x.a < y.a && y.a < x.b && x.b < y.b) out.emplace_back(x, y);
    }
}

// Labels in h_ι order: h0(j) = j, h1(j) = σ(j).
int h(const Permutation& p, int iota, int j) { return iota == 0 ? j : p.at(j); }

}  // namespace

MeanderDiagram build_meander(const Permutation& p) {
  MeanderDiagram d;
  d.n = p.size();
  const Permutation inv = p.inverse();
  d.axis_of.assign(d.n + 1, 0);
  for (int k = 1; k <= d.n; ++k) d.axis_of[k] = inv.at(k);
  for (int k = 1; k < d.n; ++k) {
    Arc arc{std::min(inv.at(k), inv.at(k + 1)), std::max(inv.at(k), inv.at(k + 1))};
    (k % 2 == 1 ? d.upper : d.lower).push_back(arc);
  }
  find_conflicts(d.upper, d.conflicts);
  find_conflicts(d.lower, d.conflicts);
  d.is_meander = d.conflicts.empty();
  return d;
}

std::vector<int> morse_along_h0(const Permutation& p) {
  const int n = p.size();
  const Permutation inv = p.inverse();
  std::vector<int> v(n + 1, 0);
  for (int j = 1; j < n; ++j) {
    int s = (j % 2 == 0) ? -1 : 1;  // (-1)^{j+1}
    v[j + 1] = v[j] + s * sgn(inv.at(j + 1) - inv.at(j));
  }
  return v;
}

std::vector<int> morse_along_h1(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(n + 1, 0);
  v[p.at(1)] = 0;
  for (int j = 1; j < n; ++j) {
    int s = (j % 2 == 0) ? -1 : 1;
    v[p.at(j + 1)] = v[p.at(j)] + s * sgn(p.at(j + 1) - p.at(j));
  }
  return v;
}

MorseVector morse_numbers(const Permutation& p) {
  if (!build_meander(p).is_meander) throw ValidationError("not-a-meander: " + p.str());
  std::vector<int> a = morse_along_h0(p);
  std::vector<int> b = morse_along_h1(p);
  if (a != b || b[p.at(p.size())] != 0) throw ValidationError("recursion-mismatch: " + p.str());
  MorseVector m;
  m.values = std::move(b);
  int top = 0;
  for (int k = 1; k <= p.size(); ++k) top = std::max(top, m.values[k]);
  m.counts.assign(top + 1, 0);
  for (int k = 1; k <= p.size(); ++k)
    if (m.values[k] >= 0) ++m.counts[m.values[k]];
  return m;
}

SturmDiagnosis is_sturm(const Permutation& p) {
  SturmDiagnosis d;
  const int n = p.size();
  d.meander = build_meander(p).is_meander;
  d.dissipative = p.at(1) == 1 && p.at(n) == n;
  std::vector<int> b = morse_along_h1(p);
  d.morse = std::all_of(b.begin() + 1, b.end(), [](int x) { return x >= 0; });
  d.anchored = b[p.at(n)] == 0 && morse_along_h0(p) == b;
  d.sturm = d.meander && d.dissipative && d.morse && d.anchored;
  return d;
}

SerpentSet polar_serpents(const Permutation& p) {
  if (!is_sturm(p).sturm) throw ValidationError("not-sturm: " + p.str());
  const int n = p.size();
  const std::vector<int> m = morse_along_h1(p);
  SerpentSet out{};
  for (int iota = 0; iota < 2; ++iota) {
    Serpent& sn = out[0][iota];
    sn.pole = Pole::north;
    sn.iota = iota;
    sn.first = 1;
    int j = 1;
    while (j <= n && m[h(p, iota, j)] <= 1) ++j;
    sn.last = j - 1;
    if (j <= n) sn.terminator = h(p, iota, j);

    Serpent& ss = out[1][iota];
    ss.pole = Pole::south;
    ss.iota = iota;
    ss.last = n;
    j = n;
    while (j >= 1 && m[h(p, iota, j)] <= 1) --j;
    ss.first = j + 1;
    if (j >= 1) ss.terminator = h(p, iota, j);

    for (Serpent* s : {&sn, &ss})
      for (int q = s->first; q <= s->last; ++q) s->members.push_back(h(p, iota, q));

    auto contains = [](const Serpent& s, int label) {
      return std::find(s.members.begin(), s.members.end(), label) != s.members.end();
    };
    if (n >= 2) {
      sn.full = contains(sn, h(p, 1 - iota, n - 1));
      ss.full = contains(ss, h(p, 1 - iota, 2));
    }
  }
  return out;
}

TemplateReport is_three_meander_template(const Permutation& p) {
  TemplateReport r;
  if (!is_sturm(p).sturm) {
    r.violations.push_back("not sturm");
    return r;
  }
  const int n = p.size();
  const std::vector<int> m = morse_along_h1(p);
  int threes = 0;
  for (int k = 1; k <= n; ++k) {
    if (m[k] == 3) {
      ++threes;
      r.center = k;
    }
    if (m[k] > 3) r.violations.push_back("(i) Morse number " + std::to_string(m[k]) + " at label " + std::to_string(k));
  }
  if (threes != 1) {
    r.violations.push_back("(i) " + std::to_string(threes) + " labels with Morse number 3");
    if (threes == 0) return r;
  }
  r.serpents = polar_serpents(p);
  const Permutation inv = p.inverse();
  auto pos = [&](int iota, int label) { return iota == 0 ? label : inv.at(label); };

  for (int iota = 0; iota < 2; ++iota) {
    const Serpent& a = r.serpents[0][iota];
    const Serpent& b = r.serpents[1][1 - iota];
    bool shared = std::any_of(a.members.begin(), a.members.end(), [&](int x) {
      return std::find(b.members.begin(), b.members.end(), x) != b.members.end();
    });
    if (!shared)
      r.violations.push_back("(ii) N-polar h" + std::to_string(iota) + "-serpent misses S-polar h" +
                             std::to_string(1 - iota) + "-serpent");
  }

  for (int iota = 0; iota < 2; ++iota) {
    const int other = 1 - iota;
    const int oc = pos(other, r.center);
    auto brackets = [&](int x, int y) {
      int px = pos(other, x), py = pos(other, y);
      return std::min(px, py) < oc && oc < std::max(px, py);
    };
    if (!brackets(h(p, iota, 1), h(p, iota, 2)))
      r.violations.push_back("(iii) N-polar arc of h" + std::to_string(iota) + " does not bracket the center");
    if (!brackets(h(p, iota, n - 1), h(p, iota, n)))
      r.violations.push_back("(iii) S-polar arc of h" + std::to_string(iota) + " does not bracket the center");
  }

  const int c0 = pos(0, r.center), c1 = pos(1, r.center);
  r.w0_minus = h(p, 0, c0 - 1);
  r.w0_plus = h(p, 0, c0 + 1);
  r.w1_minus = h(p, 1, c1 - 1);
  r.w1_plus = h(p, 1, c1 + 1);
  auto term = [&](Pole pole, int iota) { return r.serpents[pole == Pole::north ? 0 : 1][iota].terminator; };
  auto expect = [&](int w, std::optional<int> t, const char* what) {
    if (m[w] != 2) r.violations.push_back(std::string("(iv) ") + what + " has Morse number " + std::to_string(m[w]));
    if (!t || *t != w) r.violations.push_back(std::string("(iv) ") + what + " is not the serpent terminator");
  };
  expect(r.w0_minus, term(Pole::north, 1), "w0-");
  expect(r.w0_plus, term(Pole::south, 1), "w0+");
  expect(r.w1_minus, term(Pole::north, 0), "w1-");
  expect(r.w1_plus, term(Pole::south, 0), "w1+");

  r.is_template = r.violations.empty();
  return r;
}

FlipReport flip_symmetry_report(const Permutation& p) {
  if (!is_sturm(p).sturm) throw ValidationError("not-sturm: " + p.str());
  FlipReport r;
  r.n_mod_4 = p.size() % 4;
  r.flip_symmetric = act(p, Trivial::kappa) == p;
  if (r.flip_symmetric) {
    MorseVector mv = morse_numbers(p);
    for (int i = 0; i <= mv.dim(); ++i)
      if (mv.counts[i] % 2 == 1) {
        if (r.odd_index) {
          r.odd_index.reset();
          break;
        }
        r.odd_index = i;
      }
  }
  return r;
}

}  // namespace sturm
