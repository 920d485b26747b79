#include <algorithm>
#include <array>
#include <functional>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <mutex>
#include <queue>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "parallel.hpp"
#include "planar_turan/embedding.hpp"
#include "planar_turan/graph_io.hpp"
#include "planar_turan/oracle.hpp"

namespace planar_turan {

namespace {

constexpr int kRotMax = 16;
constexpr int kFormatVersion = 1;
constexpr const char* kGenerator = "vertex-splitting/plane-bfs-code";

// Packed rotation system of a triangulation on at most kRotMax vertices.
struct Rot {
  std::uint8_t n = 0;
  std::array<std::uint8_t, kRotMax + 1> off{};
  std::array<std::uint8_t, 6 * kRotMax> nb{};

  int degree(int v) const { return off[v + 1] - off[v]; }
  const std::uint8_t* around(int v) const { return nb.data() + off[v]; }
};

Rot pack(const std::vector<std::vector<Vertex>>& rot) {
  Rot r;
  r.n = static_cast<std::uint8_t>(rot.size());
  int k = 0;
  for (std::size_t v = 0; v < rot.size(); ++v) {
    r.off[v] = static_cast<std::uint8_t>(k);
    for (Vertex w : rot[v]) r.nb[k++] = static_cast<std::uint8_t>(w);
  }
  r.off[rot.size()] = static_cast<std::uint8_t>(k);
  return r;
}

std::vector<std::vector<Vertex>> unpack(const Rot& r) {
  std::vector<std::vector<Vertex>> rot(r.n);
  for (int v = 0; v < r.n; ++v) rot[v].assign(r.around(v), r.around(v) + r.degree(v));
  return rot;
}

Graph graph_of(const Rot& r) {
  std::vector<Edge> es;
  for (int v = 0; v < r.n; ++v)
    for (int i = 0; i < r.degree(v); ++i)
      if (v < r.around(v)[i]) es.push_back({v, r.around(v)[i]});
  return Graph(r.n, es);
}

Rot rotation_of(const Graph& g) {
  auto res = planarity(g);
  if (!res.planar()) throw OracleError("census file contains a non-planar graph");
  return pack(res.embedding->rotations());
}

// Splits w: w keeps x_a..x_b, the new vertex m takes x_b..x_a.
Rot split(const Rot& r, int w, int a, int b) {
  const int n = r.n, m = n, d = r.degree(w);
  const std::uint8_t* x = r.around(w);
  std::array<std::array<std::uint8_t, kRotMax>, kRotMax> lists;
  std::array<int, kRotMax> deg{};
  for (int v = 0; v < n; ++v) {
    deg[v] = r.degree(v);
    std::copy(r.around(v), r.around(v) + deg[v], lists[v].begin());
  }
  deg[w] = 0;
  for (int i = a; i <= b; ++i) lists[w][deg[w]++] = x[i];
  lists[w][deg[w]++] = static_cast<std::uint8_t>(m);
  deg[m] = 0;
  for (int i = b;; i = (i + 1) % d) {
    lists[m][deg[m]++] = x[i];
    if (i == a) break;
  }
  lists[m][deg[m]++] = static_cast<std::uint8_t>(w);
  for (int i = (b + 1) % d; i != a; i = (i + 1) % d) {
    auto& l = lists[x[i]];
    for (int k = 0; k < deg[x[i]]; ++k)
      if (l[k] == w) l[k] = static_cast<std::uint8_t>(m);
  }
  auto insert = [&](int v, bool after) {
    auto& l = lists[v];
    int k = 0;
    while (l[k] != w) ++k;
    const int at = after ? k + 1 : k;
    for (int j = deg[v]; j > at; --j) l[j] = l[j - 1];
    l[at] = static_cast<std::uint8_t>(m);
    ++deg[v];
  };
  insert(x[a], true);
  insert(x[b], false);
  Rot out;
  out.n = static_cast<std::uint8_t>(n + 1);
  int k = 0;
  for (int v = 0; v <= n; ++v) {
    out.off[v] = static_cast<std::uint8_t>(k);
    for (int j = 0; j < deg[v]; ++j) out.nb[k++] = lists[v][j];
  }
  out.off[n + 1] = static_cast<std::uint8_t>(k);
  return out;
}

int index_in(const Rot& r, int v, int w) {
  const std::uint8_t* l = r.around(v);
  int k = 0;
  while (l[k] != w) ++k;
  return k;
}

// Breadth-first numbering from dart (v0, i0) turning in direction dir. The
// code is written into out; returns false as soon as it exceeds best.
bool bfs_code(const Rot& r, int v0, int i0, int dir, std::string& out, const std::string* best) {
  std::array<std::uint8_t, kRotMax> number{}, first{}, queue{};
  int head = 0, tail = 0, count = 1;
  std::size_t pos = 0;
  bool less = best == nullptr;
  number[v0] = 1;
  first[v0] = static_cast<std::uint8_t>(i0);
  queue[tail++] = static_cast<std::uint8_t>(v0);
  auto emit = [&](char c) {
    if (!less) {
      if (c > (*best)[pos]) return false;
      if (c < (*best)[pos]) less = true;
    }
    out[pos++] = c;
    return true;
  };
  while (head < tail) {
    const int x = queue[head++];
    const int d = r.degree(x);
    for (int k = 0; k < d; ++k) {
      const int idx = ((first[x] + dir * k) % d + d) % d;
      const int y = r.around(x)[idx];
      if (!number[y]) {
        number[y] = static_cast<std::uint8_t>(++count);
        first[y] = static_cast<std::uint8_t>(index_in(r, y, x));
        queue[tail++] = static_cast<std::uint8_t>(y);
      }
      if (!emit(static_cast<char>(number[y]))) return false;
    }
    if (!emit(0)) return false;
  }
  return less;
}

// Least BFS code over starting darts with the largest degree pair, in both
// orientations. Equal codes <=> isomorphic plane maps up to reflection.
std::string map_code(const Rot& r) {
  int best_pair = -1;
  for (int v = 0; v < r.n; ++v)
    for (int i = 0; i < r.degree(v); ++i) best_pair = std::max(best_pair, r.degree(v) * 64 + r.degree(r.around(v)[i]));
  const std::size_t len = static_cast<std::size_t>(r.off[r.n]) + r.n;
  std::string best, scratch(len, '\0');
  bool have = false;
  for (int v = 0; v < r.n; ++v) {
    if (r.degree(v) * 64 + 64 <= best_pair) continue;
    for (int i = 0; i < r.degree(v); ++i) {
      if (r.degree(v) * 64 + r.degree(r.around(v)[i]) != best_pair) continue;
      for (int dir : {1, -1}) {
        if (bfs_code(r, v, i, dir, scratch, have ? &best : nullptr)) {
          best = scratch;
          have = true;
        }
      }
    }
  }
  return best;
}

struct Level {
  TriangulationCensus census;
  std::vector<Rot> rots;
};

std::mutex& level_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::shared_ptr<const Level>>& level_memo() {
  static std::map<int, std::shared_ptr<const Level>> memo;
  return memo;
}

std::filesystem::path census_file(int n) { return cache_directory() / "census" / ("tri_" + std::to_string(n) + ".g6"); }

std::filesystem::path manifest_file() { return cache_directory() / "census" / "manifest.json"; }

nlohmann::json read_manifest() {
  std::ifstream in(manifest_file());
  if (!in) return nlohmann::json::object();
  try {
    auto j = nlohmann::json::parse(in);
    if (j.value("format", 0) != kFormatVersion || j.value("generator", "") != kGenerator) return nlohmann::json::object();
    return j;
  } catch (const nlohmann::json::exception&) {
    return nlohmann::json::object();
  }
}

void write_atomically(const std::filesystem::path& target, const std::string& content) {
  std::filesystem::create_directories(target.parent_path());
  auto tmp = target;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) throw OracleError("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::shared_ptr<const Level> load_level(int n) {
  const auto manifest = read_manifest();
  const auto key = std::to_string(n);
  if (!manifest.contains("counts") || !manifest["counts"].contains(key)) return nullptr;
  std::ifstream in(census_file(n));
  if (!in) return nullptr;
  auto level = std::make_shared<Level>();
  level->census.n = n;
  level->census.graphs = read_graph6_lines(in);
  if (level->census.graphs.size() != manifest["counts"][key].get<std::size_t>()) return nullptr;
  for (const Graph& g : level->census.graphs) {
    if (g.order() != n) return nullptr;
    level->census.codes.push_back({to_graph6(g)});
    level->rots.push_back(rotation_of(g));
  }
  if (!std::is_sorted(level->census.codes.begin(), level->census.codes.end())) return nullptr;
  return level;
}

void store_level(const Level& level) {
  std::ostringstream body;
  write_graph6_lines(body, level.census.graphs);
  write_atomically(census_file(level.census.n), body.str());
  std::lock_guard lock(level_mutex());
  auto manifest = read_manifest();
  manifest["format"] = kFormatVersion;
  manifest["generator"] = kGenerator;
  manifest["counts"][std::to_string(level.census.n)] = level.census.size();
  write_atomically(manifest_file(), manifest.dump(2) + "\n");
}

std::shared_ptr<const Level> base_level() {
  auto level = std::make_shared<Level>();
  const Graph k4 = complete_graph(4);
  level->census.n = 4;
  level->census.graphs.push_back(canonical_form(k4));
  level->census.codes.push_back(canonical_code(k4));
  level->rots.push_back(rotation_of(level->census.graphs[0]));
  return level;
}

std::shared_ptr<const Level> generate_level(const Level& parent, const OracleOptions& opts) {
  const auto deadline = opts.census_time_limit
                            ? std::optional(std::chrono::steady_clock::now() + *opts.census_time_limit)
                            : std::nullopt;
  constexpr std::size_t kBlock = 32;
  const std::size_t blocks = (parent.rots.size() + kBlock - 1) / kBlock;
  std::vector<std::vector<std::pair<std::string, Rot>>> found(blocks);
  detail::parallel_for(blocks, opts.threads, [&](std::size_t b) {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      throw BudgetExhausted("census generation exceeded its time limit");
    }
    std::unordered_map<std::string, Rot> local;
    const std::size_t end = std::min(parent.rots.size(), (b + 1) * kBlock);
    for (std::size_t p = b * kBlock; p < end; ++p) {
      const Rot& r = parent.rots[p];
      for (int w = 0; w < r.n; ++w) {
        const int d = r.degree(w);
        for (int a = 0; a < d; ++a)
          for (int c = a + 1; c < d; ++c) {
            Rot child = split(r, w, a, c);
            local.try_emplace(map_code(child), child);
          }
      }
    }
    found[b].assign(local.begin(), local.end());
  });
  std::unordered_map<std::string, Rot> all;
  for (auto& block : found)
    for (auto& [code, rot] : block) all.try_emplace(std::move(code), rot);
  found.clear();

  std::vector<Rot> reps;
  reps.reserve(all.size());
  for (auto& [code, rot] : all) reps.push_back(rot);
  all.clear();

  struct Entry {
    CanonicalCode code;
    Graph graph;
    Rot rot;
  };
  std::vector<Entry> entries(reps.size());
  detail::parallel_for(reps.size(), opts.threads, [&](std::size_t i) {
    const Graph g = graph_of(reps[i]);
    const auto lab = canonical_labeling(g);
    auto rot = unpack(reps[i]);
    std::vector<std::vector<Vertex>> renamed(rot.size());
    for (std::size_t v = 0; v < rot.size(); ++v) {
      for (Vertex& w : rot[v]) w = lab.perm[w];
      renamed[lab.perm[v]] = std::move(rot[v]);
    }
    entries[i] = {lab.code, relabel(g, lab.perm), pack(renamed)};
  });
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) { return x.code < y.code; });
  auto level = std::make_shared<Level>();
  level->census.n = parent.census.n + 1;
  for (auto& e : entries) {
    if (!level->census.codes.empty() && level->census.codes.back() == e.code) {
      throw OracleError("census dedup produced two classes with one canonical code");
    }
    level->census.codes.push_back(std::move(e.code));
    level->census.graphs.push_back(std::move(e.graph));
    level->rots.push_back(e.rot);
  }
  return level;
}

std::shared_ptr<const Level> get_level(int n, const OracleOptions& opts) {
  {
    std::lock_guard lock(level_mutex());
    auto it = level_memo().find(n);
    if (it != level_memo().end()) return it->second;
  }
  std::shared_ptr<const Level> level;
  if (n == kCensusMin) {
    level = base_level();
  } else {
    if (opts.use_cache) level = load_level(n);
    if (!level) {
      level = generate_level(*get_level(n - 1, opts), opts);
      if (opts.use_cache) store_level(*level);
    }
  }
  std::lock_guard lock(level_mutex());
  return level_memo().emplace(n, level).first->second;
}

}  // namespace

std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("PLANAR_TURAN_CACHE"); env && *env) return env;
  return ".planar-turan-cache";
}

TriangulationCensus enumerate_triangulations(int n, const OracleOptions& opts) {
  if (n < kCensusMin || n > kCensusMax) {
    throw OracleError("census supports 4 <= n <= 14, got n = " + std::to_string(n));
  }
  if (n > kCensusCheap && !opts.allow_expensive) {
    throw OracleError("census at n = " + std::to_string(n) + " is expensive; pass the expensive flag");
  }
  return get_level(n, opts)->census;
}

std::vector<CanonicalCode> triangulations_by_flips(int n) {
  if (n < 4 || n > 10) throw OracleError("flip cross-check supports 4 <= n <= 10");
  const Graph start = n == 4 ? complete_graph(4) : join(empty_graph(2), cycle_graph(n - 2));
  std::set<CanonicalCode> seen{canonical_code(start)};
  std::queue<Graph> todo;
  todo.push(start);
  while (!todo.empty()) {
    const Graph g = todo.front();
    todo.pop();
    for (const Edge& e : g.edges()) {
      std::vector<Vertex> common;
      std::set_intersection(g.neighbors(e.u).begin(), g.neighbors(e.u).end(), g.neighbors(e.v).begin(),
                            g.neighbors(e.v).end(), std::back_inserter(common));
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          if (g.has_edge(common[i], common[j])) continue;
          const Graph h = add_edge(delete_edge(g, e.u, e.v), common[i], common[j]);
          if (!is_planar(h)) continue;
          if (seen.insert(canonical_code(h)).second) todo.push(h);
        }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<CanonicalCode> triangulations_by_filter(int n) {
  if (n < 4 || n > 8) throw OracleError("filter cross-check supports 4 <= n <= 8");
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.push_back({u, v});
  const int target = 3 * n - 6;
  const int m = static_cast<int>(all.size());
  // remaining[v][i]: edges at index >= i touching v.
  std::vector<std::vector<int>> remaining(n, std::vector<int>(m + 1, 0));
  for (int i = m - 1; i >= 0; --i)
    for (int v = 0; v < n; ++v) remaining[v][i] = remaining[v][i + 1] + (all[i].u == v || all[i].v == v);
  std::set<CanonicalCode> seen;
  std::vector<int> deg(n, 0);
  std::vector<Edge> chosen;
  std::function<void(int)> go = [&](int i) {
    if (static_cast<int>(chosen.size()) == target) {
      for (int v = 0; v < n; ++v)
        if (deg[v] < 3) return;
      const Graph g(n, chosen);
      if (g.is_connected() && is_planar(g)) seen.insert(canonical_code(g));
      return;
    }
    if (i == m || m - i < target - static_cast<int>(chosen.size())) return;
    for (int v = 0; v < n; ++v)
      if (deg[v] + remaining[v][i] < 3) return;
    const Edge e = all[i];
    chosen.push_back(e);
    ++deg[e.u];
    ++deg[e.v];
    go(i + 1);
    chosen.pop_back();
    --deg[e.u];
    --deg[e.v];
    go(i + 1);
  };
  go(0);
  return {seen.begin(), seen.end()};
}

}  // namespace planar_turan
