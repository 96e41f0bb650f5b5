#include "sturm/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "sturm/error.hpp"
#include "sturm/meander.hpp"

namespace sturm {

namespace {

void matchings_rec(int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out,
                   const std::function<void()>& done) {
  (void)out;
  if (lo > hi) {
    done();
    return;
  }
  for (int partner = lo + 1; partner <= hi; partner += 2) {
    cur[lo] = partner;
    cur[partner] = lo;
    matchings_rec(lo + 1, partner - 1, cur, out, [&] { matchings_rec(partner + 1, hi, cur, out, done); });
    cur[lo] = cur[partner] = 0;
  }
}

}  // namespace

std::vector<std::vector<int>> noncrossing_matchings(int first, int count, int total) {
  std::vector<std::vector<int>> out;
  if (count % 2) return out;
  std::vector<int> cur(total + 1, 0);
  matchings_rec(first, first + count - 1, cur, out, [&] { out.push_back(cur); });
  return out;
}

std::vector<int> trace_arcs(int n, const std::vector<int>& upper, const std::vector<int>& lower) {
  std::vector<int> seq;
  seq.reserve(n);
  int slot = 1;
  bool up = true;
  while (true) {
    seq.push_back(slot);
    if (static_cast<int>(seq.size()) > n) return {};
    int next = up ? upper[slot] : lower[slot];
    if (next == 0) break;
    slot = next;
    up = !up;
  }
  if (static_cast<int>(seq.size()) != n || seq.back() != n) return {};
  return seq;
}

void enumerate_sturm(int n, const std::function<void(const Permutation&)>& sink, int jobs) {
  if (n < 1 || n % 2 == 0) throw ValidationError("enumerate_sturm needs odd n >= 1, got " + std::to_string(n));
  if (n == 1) {
    sink(Permutation::identity(1));
    return;
  }
  const auto uppers = noncrossing_matchings(1, n - 1, n);
  const auto lowers = noncrossing_matchings(2, n - 1, n);
  std::vector<std::vector<Permutation>> found(uppers.size());
  auto work = [&](size_t u) {
    for (const auto& lo : lowers) {
      std::vector<int> seq = trace_arcs(n, uppers[u], lo);
      if (seq.empty()) continue;
      Permutation sigma = Permutation(seq).inverse();
      const std::vector<int> m = morse_along_h1(sigma);
      if (std::all_of(m.begin() + 1, m.end(), [](int x) { return x >= 0; })) found[u].push_back(sigma);
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (size_t u = 0; u < uppers.size(); ++u) {
      work(u);
      for (const auto& s : found[u]) sink(s);
      found[u].clear();
    }
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (size_t u = t; u < uppers.size(); u += jobs) work(u);
    });
  for (auto& th : pool) th.join();
  for (const auto& bucket : found)
    for (const auto& s : bucket) sink(s);
}

std::vector<Permutation> enumerate_sturm(int n, int jobs) {
  std::vector<Permutation> out;
  enumerate_sturm(n, [&](const Permutation& p) { out.push_back(p); }, jobs);
  return out;
}

CensusResult census(int n, Filter filter, int jobs) {
  CensusResult r;
  r.n = n;
  std::set<Permutation> classes;
  enumerate_sturm(n, [&](const Permutation& p) {
    ++r.total_sturm;
    classes.insert(canonical(p));
  }, jobs);
  r.total_sturm_classes = classes.size();
  for (const Permutation& c : classes) {
    CensusItem item;
    item.rep = c;
    item.ball3 = is_three_meander_template(c).is_template;
    if (item.ball3) ++r.ball3_classes;
    if (filter == Filter::ball3 && !item.ball3) continue;
    item.counts = morse_numbers(c).counts;
    item.isotropy = orbit_report(c).isotropy;
    item.pitchforkable = is_pitchforkable(c);
    r.representatives.push_back(std::move(item));
  }
  return r;
}

std::vector<Collapse> pitchfork_collapses(const Permutation& p) {
  if (!is_sturm(p).sturm) throw ValidationError("not-sturm: " + p.str());
  std::vector<Collapse> out;
  const int n = p.size();
  const Permutation inv = p.inverse();
  for (int k = 1; k + 2 <= n; ++k) {
    int s0 = inv.at(k), s1 = inv.at(k + 1), s2 = inv.at(k + 2);
    bool monotone = (s1 == s0 + 1 && s2 == s0 + 2) || (s1 == s0 - 1 && s2 == s0 - 2);
    if (!monotone) continue;
    const int lo = std::min(s0, s2);
    std::vector<int> slots;
    slots.reserve(n - 2);
    for (int j = 1; j <= n; ++j) {
      if (j == k + 1 || j == k + 2) continue;
      int s = (j == k) ? lo : inv.at(j);
      if (s > lo + 2) s -= 2;
      slots.push_back(s);
    }
    Permutation reduced = Permutation(std::move(slots)).inverse();
    if (is_sturm(reduced).sturm) out.push_back({{k, k + 1, k + 2}, std::move(reduced)});
  }
  return out;
}

namespace {
std::mutex g_pitch_mu;
std::map<Permutation, bool> g_pitch_memo;

bool pitchforkable_rec(const Permutation& p) {
  if (p.size() == 1) return true;
  Permutation key = canonical(p);
  {
    std::lock_guard<std::mutex> lock(g_pitch_mu);
    auto it = g_pitch_memo.find(key);
    if (it != g_pitch_memo.end()) return it->second;
  }
  bool ok = false;
  for (const Collapse& c : pitchfork_collapses(key))
    if (pitchforkable_rec(c.reduced)) {
      ok = true;
      break;
    }
  std::lock_guard<std::mutex> lock(g_pitch_mu);
  g_pitch_memo[key] = ok;
  return ok;
}
}  // namespace

bool is_pitchforkable(const Permutation& p) {
  if (!is_sturm(p).sturm) throw ValidationError("not-sturm: " + p.str());
  return pitchforkable_rec(p);
}

}  // namespace sturm
