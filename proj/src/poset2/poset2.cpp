#include "mmv/poset2.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include <json.hpp>

namespace mmv {

namespace {

using Mask = std::uint32_t;

// below[x] = set of elements strictly less than x
std::vector<Mask> closure(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Mask> below(n, 0);
  for (auto [a, b] : edges) below[b] |= Mask(1) << a;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n; ++x) {
      Mask m = below[x];
      for (int y = 0; y < n; ++y)
        if (below[x] & (Mask(1) << y)) m |= below[y];
      if (m != below[x]) {
        below[x] = m;
        changed = true;
      }
    }
  }
  return below;
}

}  // namespace

Poset2 make_poset(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& labels) {
  if (n < 0 || n > 32) throw DomainError("poset: size must be in [0, 32]");
  if (static_cast<int>(labels.size()) != n) throw DomainError("poset: label count mismatch");
  for (int l : labels)
    if (l != 0 && l != 1) throw DomainError("poset: labels must be 0 or 1");
  for (auto [a, b] : edges)
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw DomainError("poset: bad edge");
  auto below = closure(n, edges);
  for (int x = 0; x < n; ++x)
    if (below[x] & (Mask(1) << x)) throw DomainError("poset: order relation has a cycle");
  Poset2 X;
  X.n = n;
  X.labels = labels;
  // transitive reduction: keep a < b when no c has a < c < b
  for (int b = 0; b < n; ++b) {
    for (int a = 0; a < n; ++a) {
      if (!(below[b] & (Mask(1) << a))) continue;
      bool covered = false;
      for (int c = 0; c < n && !covered; ++c)
        if ((below[b] & (Mask(1) << c)) && (below[c] & (Mask(1) << a))) covered = true;
      if (!covered) X.edges.emplace_back(a, b);
    }
  }
  std::sort(X.edges.begin(), X.edges.end());
  return X;
}

bool is_admissible(const Poset2& X) {
  auto below = closure(X.n, X.edges);
  for (int x = 0; x < X.n; ++x) {
    bool minimal = below[x] == 0;
    bool maximal = true;
    for (int y = 0; y < X.n; ++y)
      if (below[y] & (Mask(1) << x)) maximal = false;
    if (maximal && X.labels[x] != 0) return false;
    if (minimal && X.labels[x] != 1) return false;
  }
  return X.n > 0;
}

namespace {

std::vector<int> column_labels(const Comp& k) {
  std::vector<int> lab;
  for (int kj : k) {
    lab.push_back(1);
    for (int i = 1; i < kj; ++i) lab.push_back(0);
  }
  return lab;
}

std::vector<std::pair<int, int>> chain_edges(int from, int to) {
  std::vector<std::pair<int, int>> e;
  for (int i = from; i + 1 < to; ++i) e.emplace_back(i, i + 1);
  return e;
}

}  // namespace

Poset2 chain_poset(const Comp& k) {
  check_comp(k);
  if (k.back() < 2) throw DomainError("chain_poset: non-admissible composition");
  auto lab = column_labels(k);
  int n = static_cast<int>(lab.size());
  return make_poset(n, chain_edges(0, n), lab);
}

Poset2 psi_poset(const Comp& k, int p) {
  check_comp(k);
  if (p < 1) throw DomainError("psi_poset: p must be positive");
  auto lab = column_labels(plus_index(k));
  const int top = static_cast<int>(lab.size()) - 1;
  auto edges = chain_edges(0, top + 1);
  for (int i = 0; i < p; ++i) {
    lab.push_back(1);
    int v = top + 1 + i;
    if (i > 0) edges.emplace_back(v - 1, v);
  }
  edges.emplace_back(top + p, top);
  return make_poset(static_cast<int>(lab.size()), edges, lab);
}

Poset2 two_chain_poset(const Comp& k, int l1, int l2) {
  check_comp(k);
  if (l1 < 1 || l2 < 1) throw DomainError("two_chain_poset: l1, l2 must be positive");
  auto lab = column_labels(k);
  for (int i = 0; i < l2; ++i) lab.push_back(0);
  const int x = static_cast<int>(lab.size()) - 1;
  auto edges = chain_edges(0, x + 1);
  const int t1 = x + 1;
  lab.push_back(1);
  edges.emplace_back(t1, x);
  for (int i = 1; i < l1; ++i) {
    lab.push_back(0);
    edges.emplace_back(t1 + i - 1, t1 + i);
  }
  return make_poset(static_cast<int>(lab.size()), edges, lab);
}

namespace {

class Expander {
 public:
  Expander(const std::vector<int>& labels, PairChoice choice) : labels_(labels), choice_(choice) {}

  WordComb run(const std::vector<Mask>& below) {
    if (auto it = memo_.find(below); it != memo_.end()) return it->second;
    const int n = static_cast<int>(below.size());
    int pa = -1, pb = -1;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        bool comparable = (below[b] & (Mask(1) << a)) || (below[a] & (Mask(1) << b));
        if (comparable) continue;
        if (pa < 0 || choice_ == PairChoice::Largest) {
          pa = a;
          pb = b;
        }
        if (choice_ == PairChoice::Smallest) break;
      }
      if (pa >= 0 && choice_ == PairChoice::Smallest) break;
    }
    WordComb out;
    if (pa < 0) {
      // total order: the element with the most elements below is outermost
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int x, int y) { return std::popcount(below[x]) > std::popcount(below[y]); });
      Word w;
      for (int x : order) w.push_back(labels_[x] == 0 ? Letter::O : Letter::N);
      out.add(w, 1);
    } else {
      out += run(add_relation(below, pa, pb));
      out += run(add_relation(below, pb, pa));
    }
    memo_.emplace(below, out);
    return out;
  }

 private:
  // adds a < b and closes transitively
  static std::vector<Mask> add_relation(std::vector<Mask> below, int a, int b) {
    const int n = static_cast<int>(below.size());
    Mask lower = below[a] | (Mask(1) << a);
    for (int y = 0; y < n; ++y)
      if (y == b || (below[y] & (Mask(1) << b))) below[y] |= lower;
    return below;
  }

  std::vector<int> labels_;
  PairChoice choice_;
  std::map<std::vector<Mask>, WordComb> memo_;
};

// Relabels so that every relation goes from a smaller to a larger index.
std::pair<std::vector<Mask>, std::vector<int>> topological(const Poset2& X) {
  auto below = closure(X.n, X.edges);
  std::vector<int> order(X.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return std::popcount(below[x]) < std::popcount(below[y]); });
  std::vector<int> pos(X.n);
  for (int i = 0; i < X.n; ++i) pos[order[i]] = i;
  std::vector<Mask> nb(X.n, 0);
  std::vector<int> lab(X.n);
  for (int x = 0; x < X.n; ++x) {
    lab[pos[x]] = X.labels[x];
    for (int y = 0; y < X.n; ++y)
      if (below[x] & (Mask(1) << y)) nb[pos[x]] |= Mask(1) << pos[y];
  }
  return {nb, lab};
}

}  // namespace

WordComb expand(const Poset2& X, PairChoice choice) {
  if (!is_admissible(X)) throw DomainError("expand: non-admissible 2-poset");
  auto [below, lab] = topological(X);
  Expander e(lab, choice);
  return e.run(below);
}

Real poset_value(const Poset2& X, int D) { return eval_comb(expand(X), D); }

Z count_linear_extensions(const Poset2& X) {
  if (X.n > 24) throw DomainError("count_linear_extensions: too many elements");
  auto below = closure(X.n, X.edges);
  const Mask full = X.n == 32 ? ~Mask(0) : ((Mask(1) << X.n) - 1);
  std::vector<Z> ways(static_cast<std::size_t>(full) + 1, Z(0));
  ways[0] = 1;
  for (Mask S = 0; S <= full; ++S) {
    if (ways[S] == 0) continue;
    for (int x = 0; x < X.n; ++x) {
      if (S & (Mask(1) << x)) continue;
      if ((below[x] & S) != below[x]) continue;
      ways[S | (Mask(1) << x)] += ways[S];
    }
    if (S == full) break;
  }
  return ways[full];
}

std::string poset_to_json(const Poset2& X) {
  nlohmann::json j;
  j["n"] = X.n;
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : X.edges) j["edges"].push_back({a, b});
  j["labels"] = X.labels;
  return j.dump();
}

Poset2 poset_from_json(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("poset json: ") + e.what());
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return make_poset(j.at("n").get<int>(), edges, j.at("labels").get<std::vector<int>>());
}

}  // namespace mmv
