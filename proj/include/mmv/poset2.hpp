// 2-labeled posets and their expansion into words.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mmv/numeval.hpp"
#include "mmv/wordalg.hpp"

namespace mmv {

/// Finite poset with labels in {0,1}; label 0 is w0, label 1 is w-.
/// Edges (a, b) mean a < b and are stored transitively reduced.
struct Poset2 {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> labels;
};

/// Validates (acyclic, labels in {0,1}, at most 32 elements) and reduces edges.
Poset2 make_poset(int n, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& labels);
bool is_admissible(const Poset2& X);

Poset2 chain_poset(const Comp& k);
/// Column of k_+ with a chain of p label-1 elements under its top.
Poset2 psi_poset(const Comp& k, int p);
/// Column of k topped by l2 label-0 elements; a branch t1 < ... < t_{l1}
/// (t1 labeled 1, the rest 0) hangs under the top with t1 below it.
Poset2 two_chain_poset(const Comp& k, int l1, int l2);

enum class PairChoice { Smallest, Largest };
WordComb expand(const Poset2& X, PairChoice choice = PairChoice::Smallest);
Real poset_value(const Poset2& X, int D);

/// Independent count of linear extensions (dynamic programming over down-sets).
Z count_linear_extensions(const Poset2& X);

std::string poset_to_json(const Poset2& X);
Poset2 poset_from_json(const std::string& s);

}  // namespace mmv
