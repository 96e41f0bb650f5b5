#include "sturm/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "sturm/enumerate.hpp"
#include "sturm/error.hpp"
#include "sturm/generators.hpp"
#include "sturm/meander.hpp"

namespace sturm {

namespace {

std::pair<int, std::string> hemisphere_name(const ThreeCellTemplate& t, const std::vector<int>& faces) {
  const CellComplex2& c = t.sphere;
  std::set<int> vs, es;
  std::vector<int> sizes;
  for (int f : faces) {
    sizes.push_back(static_cast<int>(c.faces[f].boundary.size()));
    for (const Dart& d : c.faces[f].boundary) {
      es.insert(d.edge);
      vs.insert(c.start(d));
    }
  }
  std::sort(sizes.rbegin(), sizes.rend());
  int cells = static_cast<int>(vs.size() + es.size() + faces.size());
  std::string s = std::to_string(cells) + ".";
  for (size_t i = 0; i < sizes.size();) {
    size_t j = i;
    while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
    if (i > 0) s += ".";
    s += std::to_string(sizes[i]);
    if (j - i > 1) s += "^" + std::to_string(j - i);
    i = j;
  }
  return {cells, s};
}

template <class F>
void parallel_for(size_t count, int jobs, F&& body) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = t; i < count; i += jobs) body(i);
    });
  for (auto& th : pool) th.join();
}

CatalogEntry entry_from(const TemplateClass& k, const std::string& complex_id) {
  CatalogEntry e;
  e.n = k.sigma.size();
  e.sigma = canonical(k.sigma);
  e.name = template_name(smaller_west(k.tmpl));
  e.isotropy = isotropy_str(orbit_report(k.sigma).isotropy);
  e.pitch = is_pitchforkable(k.sigma);
  e.complex_id = complex_id;
  e.delta = k.delta;
  e.eta = k.eta;
  return e;
}

}  // namespace

std::string template_name(const ThreeCellTemplate& t) {
  return hemisphere_name(t, t.west).second + "|" + hemisphere_name(t, t.east).second;
}

ThreeCellTemplate smaller_west(const ThreeCellTemplate& t) {
  auto w = std::make_pair(t.west.size(), hemisphere_name(t, t.west).first);
  auto e = std::make_pair(t.east.size(), hemisphere_name(t, t.east).first);
  return e < w ? act_template(t, Trivial::kappa) : t;
}

std::vector<CatalogEntry> build_ball3_catalog(int jobs) {
  const auto spheres = small_spheres();
  std::vector<std::vector<CatalogEntry>> parts(spheres.size());
  parallel_for(spheres.size(), jobs, [&](size_t i) {
    for (const TemplateClass& k : enumerate_templates(spheres[i].sphere).classes)
      parts[i].push_back(entry_from(k, spheres[i].name));
  });
  std::vector<CatalogEntry> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::tie(a.n, a.sigma) < std::tie(b.n, b.sigma);
  });
  std::map<int, int> per_n;
  for (auto& e : out) e.id = "N" + std::to_string(e.n) + "." + std::to_string(++per_n[e.n]);
  return out;
}

std::vector<CatalogEntry> build_platonic_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& [tag, c] : std::vector<std::pair<std::string, CellComplex2>>{
           {"T", tetrahedron()}, {"O", octahedron()}, {"C", cube()}}) {
    std::vector<CatalogEntry> part;
    for (const TemplateClass& k : enumerate_templates(c).classes) part.push_back(entry_from(k, tag));
    std::sort(part.begin(), part.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
      return std::tie(a.delta, a.eta, a.sigma) < std::tie(b.delta, b.eta, b.sigma);
    });
    for (size_t i = 0; i < part.size(); ++i) part[i].id = tag + "." + std::to_string(i + 1);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string catalog_text(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  os << "# id\tn\tsigma\tname\tisotropy\tpitch\tcomplex\tdelta\teta\n";
  for (const auto& e : entries)
    os << e.id << '\t' << e.n << '\t' << e.sigma.str() << '\t' << e.name << '\t' << e.isotropy << '\t'
       << (e.pitch ? 1 : 0) << '\t' << e.complex_id << '\t' << e.delta << '\t' << e.eta << '\n';
  return os.str();
}

std::vector<CatalogEntry> parse_catalog(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, '\t')) f.push_back(tok);
    if (f.size() != 9) throw ValidationError("catalog line " + std::to_string(lineno) + ": expected 9 fields");
    CatalogEntry e;
    try {
      e.id = f[0];
      e.n = std::stoi(f[1]);
      e.sigma = parse_one_line(f[2]);
      e.name = f[3];
      e.isotropy = f[4];
      e.pitch = f[5] == "1";
      e.complex_id = f[6];
      e.delta = std::stoi(f[7]);
      e.eta = std::stoi(f[8]);
    } catch (const std::logic_error&) {
      throw ValidationError("catalog line " + std::to_string(lineno) + ": bad number");
    }
    if (e.sigma.size() != e.n) throw ValidationError("catalog entry " + e.id + ": size mismatch");
    out.push_back(std::move(e));
  }
  return out;
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string checksum_hex(const std::string& text) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(text);
  return os.str();
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

std::vector<CatalogEntry> load_catalog(const std::string& path) {
  const std::string text = slurp(path);
  std::string want = slurp(path + ".fnv");
  while (!want.empty() && std::isspace(static_cast<unsigned char>(want.back()))) want.pop_back();
  if (checksum_hex(text) != want) throw ValidationError("checksum mismatch for '" + path + "'");
  return parse_catalog(text);
}

std::vector<CatalogCheck> verify_catalog(const std::vector<CatalogEntry>& entries, int jobs) {
  std::vector<CatalogCheck> out(entries.size());
  parallel_for(entries.size(), jobs, [&](size_t i) {
    const CatalogEntry& e = entries[i];
    CatalogCheck& c = out[i];
    c.id = e.id;
    if (!is_sturm(e.sigma).sturm) {
      c.failures.push_back("not Sturm");
      return;
    }
    if (!is_three_meander_template(e.sigma).is_template) c.failures.push_back("not a 3-meander template");
    if (canonical(e.sigma) != e.sigma) c.failures.push_back("not canonical");
    std::string iso = isotropy_str(orbit_report(e.sigma).isotropy);
    if (iso != e.isotropy) c.failures.push_back("isotropy " + iso + " != " + e.isotropy);
    bool pitch = is_pitchforkable(e.sigma);
    if (pitch != e.pitch) c.failures.push_back(std::string("pitch ") + (pitch ? "1" : "0") + " != " + (e.pitch ? "1" : "0"));
  });
  return out;
}

std::string fixture_dir() {
  if (const char* env = std::getenv("STURM_FIXTURES")) return env;
  return STURM_FIXTURE_DIR;
}

}  // namespace sturm
