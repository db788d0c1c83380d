#include "fatgraph/enumerate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fatgraph/canonical.hpp"
#include "fatgraph/io.hpp"

namespace fg {

namespace {

class MatchingSearch {
 public:
  MatchingSearch(int n, bool bordered) : n_(n), bordered_(bordered), alpha_(n, -1) {
    if (bordered_) pair_up(0, n_ - 1);
  }

  int first_free() const {
    for (int i = 0; i < n_; ++i)
      if (alpha_[i] == -1) return i;
    return -1;
  }

  bool is_free(int i) const { return alpha_[i] == -1; }

  // Pairs i and j, then forces every partner needed to close a 3-cycle of
  // the rotation.  Returns false on contradiction; undo() restores state.
  bool assign(int i, int j) {
    marks_.push_back(trail_.size());
    pair_up(i, j);
    return propagate();
  }

  void undo() {
    std::size_t to = marks_.back();
    marks_.pop_back();
    while (trail_.size() > to) {
      int i = trail_.back();
      trail_.pop_back();
      alpha_[alpha_[i]] = -1;
      alpha_[i] = -1;
    }
  }

  template <class F>
  void run(F&& leaf, std::uint64_t& count, std::optional<std::size_t> limit) {
    if (limit && count >= *limit) return;
    // Extend an open chain u -> v when there is one, else open a new one.
    int i = -1;
    for (int u = 0; u < n_ && i == -1; ++u) {
      int v = sigma(u);
      if (v != -1 && sigma(v) == -1) i = (v + 1) % n_;
    }
    if (i == -1) i = first_free();
    if (i == -1) {
      ++count;
      leaf(alpha_);
      return;
    }
    for (int j = 0; j < n_; ++j) {
      if (j == i || !is_free(j)) continue;
      if (assign(i, j)) run(leaf, count, limit);
      undo();
    }
  }

 private:
  int sigma(int u) const { return alpha_[(u + 1) % n_]; }

  void pair_up(int i, int j) {
    alpha_[i] = j;
    alpha_[j] = i;
    trail_.push_back(i);
  }

  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int u = 0; u < n_; ++u) {
        int v = sigma(u);
        if (v == -1) continue;
        if (v == u) {
          if (!(bordered_ && u == n_ - 1)) return false;
          continue;
        }
        int w = sigma(v);
        if (w == -1) continue;
        if (w == u) return false;
        int x = sigma(w);
        if (x != -1) {
          if (x != u) return false;
          continue;
        }
        // sigma(w) = alpha(w+1) must be u.
        int k = (w + 1) % n_;
        if (k == u || alpha_[u] != -1 || alpha_[k] != -1) return false;
        pair_up(k, u);
        changed = true;
      }
    }
    return true;
  }

  int n_;
  bool bordered_;
  std::vector<int> alpha_;
  std::vector<int> trail_;
  std::vector<std::size_t> marks_;
};

Fatgraph from_matching(const std::vector<int>& alpha, bool bordered) {
  const int n = static_cast<int>(alpha.size());
  std::vector<Dart> label(n, -1);
  for (int p = 0, k = 0; p < n; ++p)
    if (alpha[p] > p) {
      label[p] = 2 * k;
      label[alpha[p]] = 2 * k + 1;
      ++k;
    }
  RotationSystem rs;
  rs.kind = bordered ? Kind::Bordered : Kind::Punctured;
  std::vector<bool> seen(n, false);
  for (int p = 0; p < n; ++p) {
    if (seen[p]) continue;
    std::vector<Dart> cyc;
    for (int q = p; !seen[q]; q = alpha[(q + 1) % n]) {
      seen[q] = true;
      cyc.push_back(label[q]);
    }
    rs.vertices.push_back(std::move(cyc));
  }
  if (bordered) rs.tail = label[0];
  return Fatgraph::make(std::move(rs));
}

int darts_for(int genus, Kind kind) { return kind == Kind::Bordered ? 12 * genus - 2 : 12 * genus - 6; }

}  // namespace

std::vector<Fatgraph> enumerate(const EnumTask& task, Exec exec) {
  if (task.genus < 1) throw Error(ErrorKind::InvalidInputs, "genus must be at least 1");
  if (task.genus > 3) throw Error(ErrorKind::GenusTooLarge, "exhaustive enumeration is limited to genus 3");
  const int n = darts_for(task.genus, task.kind);
  const bool bordered = task.kind == Kind::Bordered;

  // Top-level branches: the partner of the first free position.
  MatchingSearch root(n, bordered);
  const int i0 = root.first_free();
  std::vector<int> partners;
  for (int j = i0 + 1; j < n; ++j)
    if (root.is_free(j)) partners.push_back(j);

  std::vector<std::map<std::string, Fatgraph>> found(partners.size());
  auto branch = [&](std::size_t b) {
    MatchingSearch s(n, bordered);
    std::uint64_t count = 0;
    auto leaf = [&](const std::vector<int>& alpha) {
      Fatgraph g = canonical_graph(from_matching(alpha, bordered));
      auto key = serialize(g);
      found[b].emplace(std::move(key), std::move(g));
    };
    if (s.assign(i0, partners[b])) s.run(leaf, count, task.limit);
    s.undo();
  };
  const long nb = static_cast<long>(partners.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long b = 0; b < nb; ++b) branch(static_cast<std::size_t>(b));
  } else {
    for (long b = 0; b < nb; ++b) branch(static_cast<std::size_t>(b));
  }
  std::map<std::string, Fatgraph> merged;
  for (auto& m : found) merged.merge(m);
  std::vector<Fatgraph> out;
  for (auto& [k, g] : merged) {
    if (task.limit && out.size() >= *task.limit) break;
    out.push_back(std::move(g));
  }
  return out;
}

std::uint64_t count_rooted(int genus, Kind kind) {
  MatchingSearch s(darts_for(genus, kind), kind == Kind::Bordered);
  std::uint64_t count = 0;
  s.run([](const std::vector<int>&) {}, count, std::nullopt);
  return count;
}

void random_walk(const WalkSpec& spec, const std::function<void(const FlipMove&)>& visit) {
  std::mt19937_64 rng(spec.seed);
  Fatgraph cur = spec.start;
  for (std::size_t s = 0; s < spec.steps; ++s) {
    auto edges = flippable_edges(cur);
    if (edges.empty()) throw Error(ErrorKind::FlipFailed, "no flippable edge");
    int e = edges[rng() % edges.size()];
    FlipMove mv = flip(cur, e);
    visit(mv);
    cur = mv.result;
  }
}

std::vector<Fatgraph> walk_states(const WalkSpec& spec) {
  std::vector<Fatgraph> out{spec.start};
  random_walk(spec, [&](const FlipMove& mv) { out.push_back(mv.result); });
  return out;
}

}  // namespace fg
