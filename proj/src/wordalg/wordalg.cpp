#include "mmv/wordalg.hpp"

#include <algorithm>
#include <map>

namespace mmv {

std::vector<ZBlock> to_blocks(const Word& w) {
  if (!in_A1(w)) throw DomainError("word not in A1: " + render_word(w));
  std::vector<ZBlock> out;
  int k = 1;
  for (Letter l : w) {
    if (l == Letter::O) {
      ++k;
      continue;
    }
    out.push_back({k, l == Letter::N ? -1 : 1});
    k = 1;
  }
  return out;
}

Word from_blocks(const std::vector<ZBlock>& b) {
  Word w;
  for (const auto& z : b) {
    for (int i = 1; i < z.k; ++i) w.push_back(Letter::O);
    w.push_back(z.eps < 0 ? Letter::N : Letter::P);
  }
  return w;
}

namespace {

using WordPair = std::pair<Word, Word>;

// Shuffle recursion on the first letters; memoized per call tree.
WordComb shuffle_rec(const Word& u, std::size_t i, const Word& v, std::size_t j,
                     std::map<std::pair<std::size_t, std::size_t>, WordComb>& memo) {
  if (i == u.size()) return WordComb(Word(v.begin() + j, v.end()));
  if (j == v.size()) return WordComb(Word(u.begin() + i, u.end()));
  auto key = std::make_pair(i, j);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  WordComb out;
  for (const auto& [w, c] : shuffle_rec(u, i + 1, v, j, memo)) {
    Word n{u[i]};
    n.insert(n.end(), w.begin(), w.end());
    out.add(n, c);
  }
  for (const auto& [w, c] : shuffle_rec(u, i, v, j + 1, memo)) {
    Word n{v[j]};
    n.insert(n.end(), w.begin(), w.end());
    out.add(n, c);
  }
  memo.emplace(key, out);
  return out;
}

}  // namespace

WordComb shuffle(const Word& u, const Word& v) {
  std::map<std::pair<std::size_t, std::size_t>, WordComb> memo;
  return shuffle_rec(u, 0, v, 0, memo);
}

WordComb shuffle(const WordComb& u, const WordComb& v) {
  WordComb out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) out.add_scaled(shuffle(a, b), ca * cb);
  return out;
}

Word tau_shift(int eps, const Word& w) {
  if (eps != 1 && eps != -1) throw DomainError("tau_shift: eps must be +1 or -1");
  auto b = to_blocks(w);
  for (auto& z : b) z.eps *= eps;
  return from_blocks(b);
}

namespace {

// Flip the sign of the innermost block (the last block); empty stays empty.
std::vector<ZBlock> rebase(std::vector<ZBlock> b, int eps) {
  if (!b.empty()) b.back().eps *= eps;
  return b;
}

using BlockComb = std::map<std::vector<ZBlock>, Q>;

void add_to(BlockComb& c, const std::vector<ZBlock>& b, const Q& q) {
  if (q == 0) return;
  auto [it, ins] = c.try_emplace(b, q);
  if (!ins) {
    it->second += q;
    if (it->second == 0) c.erase(it);
  }
}

BlockComb stuffle_blocks(const std::vector<ZBlock>& u, const std::vector<ZBlock>& v,
                         std::map<std::pair<std::vector<ZBlock>, std::vector<ZBlock>>, BlockComb>& memo) {
  if (u.empty()) return BlockComb{{v, Q(1)}};
  if (v.empty()) return BlockComb{{u, Q(1)}};
  auto key = std::make_pair(u, v);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const ZBlock zs = u.back();
  const ZBlock zt = v.back();
  std::vector<ZBlock> u1(u.begin(), u.end() - 1);
  std::vector<ZBlock> v1(v.begin(), v.end() - 1);
  BlockComb out;
  // (u' * v) z_s : u' is relative to zs, the product is absolute, then
  // placed above zs it becomes relative again.
  auto place = [&](const BlockComb& c, int e, ZBlock bottom, const Q& s) {
    for (const auto& [w, q] : c) {
      auto n = rebase(w, e);
      n.push_back(bottom);
      add_to(out, n, q * s);
    }
  };
  place(stuffle_blocks(rebase(u1, zs.eps), v, memo), zs.eps, zs, 1);
  place(stuffle_blocks(u, rebase(v1, zt.eps), memo), zt.eps, zt, 1);
  if (zs.eps == zt.eps)
    place(stuffle_blocks(rebase(u1, zs.eps), rebase(v1, zt.eps), memo), zs.eps, ZBlock{zs.k + zt.k, zs.eps}, 2);
  memo.emplace(key, out);
  return out;
}

}  // namespace

WordComb stuffle(const Word& u, const Word& v) {
  std::map<std::pair<std::vector<ZBlock>, std::vector<ZBlock>>, BlockComb> memo;
  WordComb out;
  for (const auto& [b, q] : stuffle_blocks(to_blocks(u), to_blocks(v), memo)) out.add(from_blocks(b), q);
  return out;
}

WordComb stuffle(const WordComb& u, const WordComb& v) {
  WordComb out;
  for (const auto& [a, ca] : u)
    for (const auto& [b, cb] : v) out.add_scaled(stuffle(a, b), ca * cb);
  return out;
}

IndexComb stuffle_indices(const Index& a, const Index& b) {
  if (!a.admissible() || !b.admissible()) throw DomainError("stuffle_indices: non-admissible input");
  check_signs(a.eps);
  check_signs(b.eps);
  return quasi_shuffle(a, b);
}

namespace {

// Letter substitution under t -> (1-t)/(1+t), as combinations of letters.
std::vector<std::pair<Letter, int>> dual_letter(Letter l) {
  switch (l) {
    case Letter::O: return {{Letter::N, 1}};
    case Letter::N: return {{Letter::O, 1}};
    case Letter::P: return {{Letter::O, 1}, {Letter::P, 1}, {Letter::N, -1}};
  }
  return {};
}

}  // namespace

WordComb dual_substitute(const Word& w) {
  WordComb acc(Word{});
  for (std::size_t i = w.size(); i-- > 0;) {
    WordComb next;
    auto subs = dual_letter(w[i]);
    for (const auto& [pre, c] : acc) {
      for (const auto& [l, s] : subs) {
        Word n = pre;
        n.push_back(l);
        next.add(n, c * s);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

bool is_mmvo(const Word& w) { return is_admissible(w) && w.back() == Letter::N; }

WordComb dual_word(const Word& w) {
  if (!is_admissible(w)) throw DomainError("dual_word: non-admissible word " + render_word(w));
  if (!is_mmvo(w)) throw DomainError("dual_word: even signature word has no dual " + render_word(w));
  return dual_substitute(w);
}

WordComb dual_word(const WordComb& c) {
  WordComb out;
  for (const auto& [w, q] : c) out.add_scaled(dual_word(w), q);
  return out;
}

WordComb to_comb(const IndexComb& c) {
  WordComb out;
  for (const auto& [i, q] : c) out.add(index_to_word(i), q);
  return out;
}

IndexComb to_indices(const WordComb& c) {
  IndexComb out;
  for (const auto& [w, q] : c) out.add(word_to_index(w), q);
  return out;
}

}  // namespace mmv
