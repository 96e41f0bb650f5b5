#include "sturm/perm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sturm/error.hpp"

namespace sturm {

Permutation::Permutation(std::vector<int> image) : img_(std::move(image)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : img_) {
    if (v < 1 || v > n) throw ValidationError("value " + std::to_string(v) + " out of 1.." + std::to_string(n));
    if (seen[v]) throw ValidationError("duplicate value " + std::to_string(v));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int j = 0; j < n; ++j) img[j] = j + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int j = 0; j < size(); ++j) inv[img_[j] - 1] = j + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& q) const {
  if (q.size() != size()) throw ValidationError("size mismatch in composition");
  std::vector<int> out(img_.size());
  for (int j = 1; j <= size(); ++j) out[j - 1] = at(q.at(j));
  return Permutation(std::move(out));
}

std::string Permutation::str() const {
  std::string s;
  for (size_t j = 0; j < img_.size(); ++j) {
    if (j) s += ' ';
    s += std::to_string(img_[j]);
  }
  return s;
}

const char* name(Trivial g) {
  switch (g) {
    case Trivial::id: return "id";
    case Trivial::kappa: return "kappa";
    case Trivial::rho: return "rho";
    case Trivial::kappa_rho: return "kappa_rho";
  }
  return "?";
}

Permutation parse_one_line(std::string_view text) {
  std::vector<int> vals;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::string_view tok = text.substr(i, j - i);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ValidationError("not an integer: '" + std::string(tok) + "'");
    vals.push_back(v);
    i = j;
  }
  if (vals.empty()) throw ValidationError("empty permutation");
  return Permutation(std::move(vals));
}

static Permutation kappa_conj(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(n);
  for (int j = 1; j <= n; ++j) out[j - 1] = n + 1 - p.at(n + 1 - j);
  return Permutation(std::move(out));
}

Permutation act(const Permutation& p, Trivial g) {
  switch (g) {
    case Trivial::id: return p;
    case Trivial::kappa: return kappa_conj(p);
    case Trivial::rho: return p.inverse();
    case Trivial::kappa_rho: return kappa_conj(p.inverse());
  }
  return p;
}

OrbitReport orbit_report(const Permutation& p) {
  OrbitReport r;
  for (Trivial g : kAllTrivial) {
    Permutation q = act(p, g);
    if (q == p) r.isotropy.push_back(g);
    r.orbit.push_back(std::move(q));
  }
  std::sort(r.orbit.begin(), r.orbit.end());
  r.orbit.erase(std::unique(r.orbit.begin(), r.orbit.end()), r.orbit.end());
  r.canonical = r.orbit.front();
  return r;
}

Permutation canonical(const Permutation& p) {
  Permutation best = p;
  for (Trivial g : {Trivial::kappa, Trivial::rho, Trivial::kappa_rho}) {
    Permutation q = act(p, g);
    if (q < best) best = std::move(q);
  }
  return best;
}

bool same_orbit(const Permutation& a, const Permutation& b) {
  return a.size() == b.size() && canonical(a) == canonical(b);
}

std::string isotropy_str(const std::vector<Trivial>& iso) {
  std::string s;
  for (Trivial g : iso) {
    if (!s.empty()) s += ',';
    s += name(g);
  }
  return s;
}

}  // namespace sturm
