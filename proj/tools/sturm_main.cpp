#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "sturm/catalog.hpp"
#include "sturm/dual.hpp"
#include "sturm/enumerate.hpp"
#include "sturm/error.hpp"
#include "sturm/generators.hpp"
#include "sturm/io.hpp"
#include "sturm/meander.hpp"
#include "sturm/render.hpp"
#include "sturm/szs.hpp"

using namespace sturm;

namespace {

enum ExitCode { kOk = 0, kInvalid = 1, kUsage = 2, kCap = 3 };

bool g_machine = false;

void put(const std::string& key, const std::string& value) {
  if (g_machine) std::cout << key << '=' << value << '\n';
  else std::cout << key << ": " << value << '\n';
}
void put(const std::string& key, long long value) { put(key, std::to_string(value)); }
void put_bool(const std::string& key, bool value) { put(key, value ? (g_machine ? "1" : "yes") : (g_machine ? "0" : "no")); }

std::string join(const std::vector<int>& xs, int from = 0) {
  std::string s;
  for (size_t i = from; i < xs.size(); ++i) s += (s.empty() ? "" : " ") + std::to_string(xs[i]);
  return s;
}

std::string path_str(const CellComplex2& c, const std::vector<Cell>& h, const std::string& center) {
  std::string s;
  for (const Cell& x : h) s += (s.empty() ? "" : " ") + cell_label(c, x, center);
  return s;
}

void write_to(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

std::vector<int> parse_params(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--params", "expected comma-separated integers, got '" + text + "'");
    }
  }
  return out;
}

void report_diagnosis(const Permutation& p) {
  const SturmDiagnosis d = is_sturm(p);
  put("sigma", p.str());
  put("n", p.size());
  put_bool("meander", d.meander);
  put_bool("dissipative", d.dissipative);
  put_bool("morse", d.morse);
  put_bool("anchored", d.anchored);
  put_bool("sturm", d.sturm);
  if (d.meander) put("morse_h1", join(morse_along_h1(p), 1));
  if (!d.sturm) return;
  const MorseVector mv = morse_numbers(p);
  put("dim", mv.dim());
  put("counts", join(mv.counts));
  const OrbitReport orb = orbit_report(p);
  put("canonical", orb.canonical.str());
  put("isotropy", isotropy_str(orb.isotropy));
  const TemplateReport tr = is_three_meander_template(p);
  put_bool("template", tr.is_template);
  for (const auto& v : tr.violations) put("template_violation", v);
  if (tr.is_template) put("pitchforkable", is_pitchforkable(p) ? "1" : "0");
}

int cmd_check(const std::string& text) {
  const Permutation p = parse_one_line(text);
  report_diagnosis(p);
  if (!is_sturm(p).sturm) {
    std::cerr << "not a Sturm permutation\n";
    return kInvalid;
  }
  return kOk;
}

int cmd_enumerate(int n, const std::string& filter, bool canon, int jobs, bool stats) {
  if (n < 1) throw CLI::ValidationError("--n", "must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  if (filter == "sturm" && !canon && !stats) {
    enumerate_sturm(n, [](const Permutation& p) { std::cout << p.str() << '\n'; }, jobs);
    return kOk;
  }
  const CensusResult r = census(n, filter == "ball3" ? Filter::ball3 : Filter::all, jobs);
  if (!stats) {
    if (canon) {
      for (const auto& item : r.representatives) std::cout << item.rep.str() << '\n';
    } else {
      std::set<Permutation> members;
      for (const auto& item : r.representatives)
        for (const auto& q : orbit_report(item.rep).orbit) members.insert(q);
      for (const auto& q : members) std::cout << q.str() << '\n';
    }
    return kOk;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  put("n", r.n);
  put("sturm", static_cast<long long>(r.total_sturm));
  put("sturm_classes", static_cast<long long>(r.total_sturm_classes));
  put("ball3_classes", static_cast<long long>(r.ball3_classes));
  put("listed", static_cast<long long>(r.representatives.size()));
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << secs;
  put("seconds", s.str());
  for (const auto& item : r.representatives) {
    std::string line = item.rep.str() + " | " + join(item.counts) + " | " + isotropy_str(item.isotropy);
    if (item.ball3) line += std::string(" | pitch ") + (item.pitchforkable ? "1" : "0");
    put("class", line);
  }
  return kOk;
}

int cmd_construct(const std::string& path) {
  ComplexFile f = load_complex(path);
  if (f.tmpl) {
    const ThreeCellTemplate& t = *f.tmpl;
    const TemplateValidation v = validate_template(t);
    if (!v.ok) {
      for (const auto& s : v.violations) std::cerr << s << '\n';
      return kInvalid;
    }
    const HamiltonianPair hp = szs_pair(t);
    put("h0", path_str(t.sphere, hp.h0, t.center));
    put("h1", path_str(t.sphere, hp.h1, t.center));
    report_diagnosis(pair_permutation(hp));
    put("name", template_name(smaller_west(t)));
    put("delta", pole_distance(t));
    return kOk;
  }
  if (f.complex.kind != Kind::disk) {
    std::cerr << "sphere complex without template decoration\n";
    return kInvalid;
  }
  const HamiltonianPair hp = zs_pair(f.complex, Flavor::zs);
  put("h0", path_str(f.complex, hp.h0, "O"));
  put("h1", path_str(f.complex, hp.h1, "O"));
  report_diagnosis(pair_permutation(hp));
  return kOk;
}

int cmd_templates(const std::string& path, bool scan, double budget, long long max_orient) {
  const ComplexFile f = load_complex(path);
  if (f.complex.kind != Kind::sphere) throw ValidationError("templates need a sphere complex");
  if (scan) {
    ScanOptions opt;
    opt.budget_seconds = budget;
    const ScanReport r = pole_meridian_scan(f.complex, opt);
    put("pole_pairs", static_cast<long long>(r.pole_pairs));
    put("meridian_pairs", static_cast<long long>(r.meridian_pairs));
    put_bool("capped", r.capped);
    for (const auto& fc : r.feasible) {
      std::string line = f.complex.vertices[fc.north] + " " + f.complex.vertices[fc.south] + " delta " +
                         std::to_string(fc.delta) + " eta " + std::to_string(fc.eta_west) + "/" +
                         std::to_string(fc.eta_east);
      if (fc.example) line += " sigma " + sigma_of(*fc.example).str();
      put("feasible", line);
    }
    if (r.capped) {
      std::cerr << "scan budget exhausted\n";
      return kCap;
    }
    return kOk;
  }
  TemplateCensusOptions opt;
  if (max_orient > 0) opt.max_orientations = static_cast<size_t>(max_orient);
  const TemplateCensus r = enumerate_templates(f.complex, opt);
  put("classes", static_cast<long long>(r.classes.size()));
  put("candidates", static_cast<long long>(r.candidates));
  put("sigma_classes", static_cast<long long>(r.sigma_classes));
  for (const auto& k : r.classes)
    put("class", canonical(k.sigma).str() + " | " + template_name(smaller_west(k.tmpl)) + " | delta " +
                     std::to_string(k.delta) + " eta " + std::to_string(k.eta));
  return kOk;
}

int cmd_dualize(const std::string& path, const std::string& out) {
  const ComplexFile f = load_complex(path);
  if (!f.tmpl) throw ValidationError("dualize needs a decorated template");
  const DualComplex d = dualize(*f.tmpl);
  const DualReport r = check_dual_cores(d);
  if (out == "-") {
    std::cout << complex_to_json(d.sphere);
  } else {
    if (!out.empty()) write_to(out, complex_to_json(d.sphere));
    put("delta", r.delta);
    put("eta_west", r.eta_west);
    put("eta_east", r.eta_east);
    put("north_circle", r.north_circle);
    put("south_circle", r.south_circle);
    put("north_segment", r.north_segment);
    put("south_segment", r.south_segment);
    for (const auto& [k, v] : r.clauses) put("clause " + k, v ? "pass" : "FAIL");
  }
  if (!r.all_pass()) {
    for (const auto& k : r.failed()) std::cerr << "failed clause: " << k << '\n';
    return kInvalid;
  }
  return kOk;
}

int cmd_generate(const std::string& family, const std::string& params, const std::string& out) {
  const std::vector<int> ps = parse_params(params);
  auto need = [&](size_t k) {
    if (ps.size() != k)
      throw CLI::ValidationError("--params", family + " takes " + std::to_string(k) + " parameter(s)");
    for (int x : ps)
      if (x < 1) throw CLI::ValidationError("--params", "parameters must be positive");
  };
  std::optional<Permutation> sigma;
  std::string json;
  if (family == "ci" || family == "simplex" || family == "hypercube") {
    need(1);
    sigma = family == "ci" ? ci_meander(ps[0]) : family == "simplex" ? simplex_meander(ps[0]) : hypercube_meander(ps[0]);
    if (!out.empty()) throw CLI::ValidationError("--out", family + " has no complex output");
  } else if (family == "gon") {
    need(2);
    const CellComplex2 disk = gon_disk(ps[0], ps[1]);
    sigma = pair_permutation(zs_pair(disk, Flavor::zs));
    json = complex_to_json(disk);
  } else {
    need(2);
    const ThreeCellTemplate t = family == "pitchfork" ? lift(gon_disk(ps[0], ps[1]), gon_disk(ps[1], ps[0]))
                                                      : lift(striped_disk(ps[0]), striped_disk(ps[1]));
    sigma = sigma_of(t);
    json = template_to_json(t);
  }
  report_diagnosis(*sigma);
  if (!out.empty()) write_to(out, json);
  return kOk;
}

int cmd_render(const std::string& perm, const std::string& complex, const std::string& svg, const std::string& dot,
               const RenderOptions& opt) {
  if (!perm.empty() == !complex.empty()) throw CLI::ValidationError("render", "give exactly one of --perm, --complex");
  if (!perm.empty()) {
    write_to(svg, render_meander_svg(parse_one_line(perm), opt));
    return kOk;
  }
  const ComplexFile f = load_complex(complex);
  write_to(dot, render_complex_dot(f.complex, f.tmpl ? &*f.tmpl : nullptr));
  return kOk;
}

int cmd_catalog_verify(int jobs, bool rebuild) {
  const std::string dir = fixture_dir();
  int failures = 0;
  std::map<std::string, std::vector<CatalogEntry>> books{
      {"catalog_ball3", load_catalog(dir + "/catalog_ball3.txt")}, {"platonic", load_catalog(dir + "/platonic.txt")}};
  for (const auto& [name, entries] : books) {
    int bad = 0;
    for (const auto& chk : verify_catalog(entries, jobs))
      for (const auto& msg : chk.failures) {
        std::cerr << name << ' ' << chk.id << ": " << msg << '\n';
        ++bad;
      }
    put(name + "_entries", static_cast<long long>(entries.size()));
    put(name + "_failures", bad);
    failures += bad;
  }
  const Permutation golden = sigma_of(load_complex(dir + "/golden.json").tmpl.value());
  put("golden", golden.str());
  if (golden != parse_one_line("1 8 3 4 7 6 5 2 9")) ++failures;
  for (const char* bad : {"tristar.json", "nudged.json"}) {
    const ComplexFile f = load_complex(dir + "/" + bad);
    const bool rejected = !validate_template(f.tmpl.value()).ok;
    put(std::string("rejects ") + bad, rejected ? "yes" : "NO");
    if (!rejected) ++failures;
  }
  if (rebuild) {
    const bool same_ball3 = catalog_text(build_ball3_catalog(jobs)) == catalog_text(books["catalog_ball3"]);
    const bool same_platonic = catalog_text(build_platonic_catalog()) == catalog_text(books["platonic"]);
    put_bool("rebuild_ball3_matches", same_ball3);
    put_bool("rebuild_platonic_matches", same_platonic);
    failures += !same_ball3 + !same_platonic;
  }
  put("failures", failures);
  return failures ? kInvalid : kOk;
}

int cmd_catalog_build(const std::string& dir, int jobs) {
  auto save = [&](const std::string& name, const std::string& text) {
    write_to(dir + "/" + name, text);
    write_to(dir + "/" + name + ".fnv", checksum_hex(text) + "\n");
  };
  save("catalog_ball3.txt", catalog_text(build_ball3_catalog(jobs)));
  save("platonic.txt", catalog_text(build_platonic_catalog()));
  write_to(dir + "/golden.json", template_to_json(golden_template()));
  write_to(dir + "/tristar.json", template_to_json(octahedron_tristar()));
  write_to(dir + "/nudged.json", template_to_json(nudged_template()));
  write_to(dir + "/gon_1_1.json", complex_to_json(gon_disk(1, 1)));
  write_to(dir + "/tetrahedron.json", complex_to_json(tetrahedron()));
  write_to(dir + "/octahedron.json", complex_to_json(octahedron()));
  write_to(dir + "/cube.json", complex_to_json(cube()));
  write_to(dir + "/icosahedron.json", complex_to_json(icosahedron()));
  write_to(dir + "/dodecahedron.json", complex_to_json(dodecahedron()));
  put("written", dir);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sturm permutations, meanders and 3-cell templates"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or machine (key=value)")->check(CLI::IsMember({"text", "machine"}));

  std::string perm_text;
  auto* check = app.add_subcommand("check", "diagnose one permutation");
  check->add_option("perm", perm_text, "one-line permutation, e.g. \"1 8 3 4 7 6 5 2 9\"")->required();

  int n = 0, jobs = 1;
  std::string filter = "sturm";
  bool canon = false, stats = false;
  auto* en = app.add_subcommand("enumerate", "list Sturm permutations of size n");
  en->add_option("--n", n)->required();
  en->add_option("--filter", filter)->check(CLI::IsMember({"sturm", "ball3"}));
  en->add_flag("--canonical", canon, "one representative per trivial-equivalence class");
  en->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  en->add_flag("--stats", stats);

  std::string complex_path;
  auto* cons = app.add_subcommand("construct", "SZS pair and sigma of a template or ZS pair of a disk");
  cons->add_option("--complex", complex_path)->required()->check(CLI::ExistingFile);

  bool scan = false;
  double budget = 540.0;
  long long max_orient = 0;
  auto* tpl = app.add_subcommand("templates", "all 3-cell templates on a sphere complex");
  tpl->add_option("--complex", complex_path)->required()->check(CLI::ExistingFile);
  tpl->add_flag("--scan", scan, "pole/meridian feasibility scan only");
  tpl->add_option("--budget", budget, "scan budget in seconds");
  tpl->add_option("--max-orientations", max_orient);

  std::string out;
  auto* dual = app.add_subcommand("dualize", "dual sphere and dual-core report");
  dual->add_option("--complex", complex_path)->required()->check(CLI::ExistingFile);
  dual->add_option("--out", out, "write the dual complex here ('-' for stdout instead of the report)");

  std::string family, params;
  auto* gen = app.add_subcommand("generate", "families of Sturm permutations and templates");
  gen->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"ci", "simplex", "hypercube", "gon", "pitchfork", "suspension"}));
  gen->add_option("--params", params, "comma-separated sizes")->required();
  gen->add_option("--out", out, "write the complex file");

  std::string svg, dot, labels = "both";
  RenderOptions ropt;
  auto* ren = app.add_subcommand("render", "SVG meander or DOT skeleton");
  ren->add_option("--perm", perm_text);
  ren->add_option("--complex", complex_path)->check(CLI::ExistingFile);
  ren->add_option("--svg", svg, "output path (default stdout)");
  ren->add_option("--dot", dot, "output path (default stdout)");
  ren->add_option("--width", ropt.width);
  ren->add_option("--height", ropt.height);
  ren->add_option("--stroke", ropt.stroke);
  ren->add_option("--labels", labels)->check(CLI::IsMember({"labels", "morse", "both"}));

  bool rebuild = false;
  std::string build_dir;
  auto* cat = app.add_subcommand("catalog", "frozen fixture catalogs");
  cat->require_subcommand(1);
  auto* verify = cat->add_subcommand("verify", "recheck every fixture");
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--rebuild", rebuild, "also rebuild both catalogs from the sphere complexes");
  auto* build = cat->add_subcommand("build", "regenerate the fixture files");
  build->add_option("--dir", build_dir)->required();
  build->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  g_machine = format == "machine";
  ropt.labels = labels == "labels" ? LabelMode::labels : labels == "morse" ? LabelMode::morse : LabelMode::both;

  try {
    if (*check) return cmd_check(perm_text);
    if (*en) return cmd_enumerate(n, filter, canon, jobs, stats);
    if (*cons) return cmd_construct(complex_path);
    if (*tpl) return cmd_templates(complex_path, scan, budget, max_orient);
    if (*dual) return cmd_dualize(complex_path, out);
    if (*gen) return cmd_generate(family, params, out);
    if (*ren) return cmd_render(perm_text, complex_path, svg, dot, ropt);
    if (*verify) return cmd_catalog_verify(jobs, rebuild);
    if (*build) return cmd_catalog_build(build_dir, jobs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ResourceCap& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kCap;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}
