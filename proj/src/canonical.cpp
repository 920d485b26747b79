#include "planar_turan/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>

#include "planar_turan/graph_io.hpp"

namespace planar_turan {

namespace {

// Ordered partition of the vertex set. lab lists vertices by position; a
// cell occupies positions [s, s + len[s]) and start[p] is the cell start of
// position p.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<int> start;
  std::vector<int> len;
  std::vector<int> pos;  // vertex -> position

  explicit Partition(int n) : lab(n), start(n, 0), len(n, 0), pos(n) {
    std::iota(lab.begin(), lab.end(), 0);
    std::iota(pos.begin(), pos.end(), 0);
    if (n > 0) len[0] = n;
  }

  bool discrete() const {
    for (std::size_t p = 0; p < lab.size(); ++p)
      if (len[start[p]] != 1) return false;
    return true;
  }

  int first_nonsingleton() const {
    int s = 0;
    const int n = static_cast<int>(lab.size());
    while (s < n) {
      if (len[s] > 1) return s;
      s += len[s];
    }
    return -1;
  }
};

using Certificate = std::vector<std::uint64_t>;

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()), count_(n_, 0) {}

  CanonicalLabeling run() {
    Partition root(n_);
    if (n_ > 0) {
      // Degree classes give a cheaper starting point than the unit partition.
      refine(root, {0});
    }
    path_.clear();
    search(root, 0);
    CanonicalLabeling out;
    out.perm.assign(n_, 0);
    for (int i = 0; i < n_; ++i) out.perm[best_lab_[i]] = i;
    out.code.bytes = to_graph6(relabel(g_, out.perm));
    return out;
  }

 private:
  void refine(Partition& p, std::deque<int> queue) {
    std::vector<char> queued(n_, 0);
    for (int s : queue) queued[s] = 1;
    while (!queue.empty()) {
      const int w = queue.front();
      queue.pop_front();
      queued[w] = 0;
      const int wlen = p.len[w];
      for (int k = w; k < w + wlen; ++k)
        for (Vertex x : g_.neighbors(p.lab[k])) ++count_[x];

      int s = 0;
      while (s < n_) {
        const int len = p.len[s];
        if (len > 1) split_cell(p, s, len, queue, queued);
        s += len;
      }
      for (int k = w; k < w + wlen; ++k)
        for (Vertex x : g_.neighbors(p.lab[k])) count_[x] = 0;
    }
  }

  void split_cell(Partition& p, int s, int len, std::deque<int>& queue, std::vector<char>& queued) {
    const int c0 = count_[p.lab[s]];
    bool uniform = true;
    for (int k = s + 1; k < s + len && uniform; ++k) uniform = count_[p.lab[k]] == c0;
    if (uniform) return;
    auto first = p.lab.begin() + s;
    std::stable_sort(first, first + len,
                     [&](Vertex a, Vertex b) { return count_[a] < count_[b]; });
    const bool parent_queued = queued[s] != 0;
    int k = s;
    while (k < s + len) {
      int e = k + 1;
      while (e < s + len && count_[p.lab[e]] == count_[p.lab[k]]) ++e;
      p.len[k] = e - k;
      for (int q = k; q < e; ++q) {
        p.start[q] = k;
        p.pos[p.lab[q]] = q;
      }
      if (!queued[k]) {
        queued[k] = 1;
        queue.push_back(k);
      }
      k = e;
    }
    (void)parent_queued;
  }

  Certificate certificate(const Partition& p) const {
    const std::size_t bits = static_cast<std::size_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2;
    Certificate cert((bits + 63) / 64, 0);
    std::size_t k = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        if (g_.has_edge(p.lab[i], p.lab[j])) cert[k / 64] |= std::uint64_t{1} << (63 - k % 64);
      }
    }
    return cert;
  }

  // Orbits of the group generated by stored automorphisms that fix every
  // vertex of the current individualization path.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (Vertex v : path_)
        if (gamma[v] != v) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // Returns the depth to unwind to, or -1 to continue normally.
  int search(const Partition& p, int depth) {
    if (p.discrete()) return leaf(p);
    const int s = p.first_nonsingleton();
    const int len = p.len[s];
    std::vector<Vertex> cell(p.lab.begin() + s, p.lab.begin() + s + len);
    std::sort(cell.begin(), cell.end());
    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      if (!explored.empty()) {
        auto orbit = stabilizer_orbits();
        bool skip = false;
        for (Vertex u : explored)
          if (orbit[u] == orbit[v]) {
            skip = true;
            break;
          }
        if (skip) continue;
      }
      explored.push_back(v);
      Partition child = p;
      individualize(child, s, v);
      path_.push_back(v);
      const int jump = search(child, depth + 1);
      path_.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  void individualize(Partition& p, int s, Vertex v) {
    const int len = p.len[s];
    const int at = p.pos[v];
    std::swap(p.lab[s], p.lab[at]);
    p.pos[p.lab[at]] = at;
    p.pos[v] = s;
    p.len[s] = 1;
    p.len[s + 1] = len - 1;
    for (int q = s + 1; q < s + len; ++q) p.start[q] = s + 1;
    refine(p, {s});
  }

  int leaf(const Partition& p) {
    Certificate cert = certificate(p);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = p.lab;
      first_path_ = path_;
      first_cert_ = cert;
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
      return -1;
    }
    if (cert == first_cert_) {
      record_automorphism(first_lab_, p.lab);
      std::size_t d = 0;
      while (d < path_.size() && d < first_path_.size() && path_[d] == first_path_[d]) ++d;
      return static_cast<int>(d);
    }
    if (cert == best_cert_) {
      record_automorphism(best_lab_, p.lab);
      return -1;
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = p.lab;
    }
    return -1;
  }

  void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(std::move(gamma));
  }

  const Graph& g_;
  int n_;
  std::vector<int> count_;
  std::vector<Vertex> path_;
  bool have_first_ = false;
  std::vector<Vertex> first_lab_, first_path_, best_lab_;
  Certificate first_cert_, best_cert_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonSearch(g).run(); }

CanonicalCode canonical_code(const Graph& g) { return canonical_labeling(g).code; }

Graph canonical_form(const Graph& g) {
  auto lab = canonical_labeling(g);
  return relabel(g, lab.perm);
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (degree_profile(g) != degree_profile(h)) return false;
  return canonical_code(g) == canonical_code(h);
}

}  // namespace planar_turan
