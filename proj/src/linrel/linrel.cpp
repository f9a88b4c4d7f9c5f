#include "mmv/linrel.hpp"

#include <algorithm>

#include <json.hpp>

namespace mmv {

namespace {

using ZRow = std::map<int, Z>;

ZRow primitive(const SVec& v) {
  Z den = 1;
  for (const auto& [c, q] : v) den = lcm(den, Z(q.get_den()));
  ZRow r;
  Z g = 0;
  for (const auto& [c, q] : v) {
    Z x = q.get_num() * (den / q.get_den());
    r[c] = x;
    g = gcd(g, x);
  }
  if (g > 1)
    for (auto& [c, x] : r) x /= g;
  return r;
}

void make_primitive(ZRow& r) {
  Z g = 0;
  for (const auto& [c, x] : r) g = gcd(g, x);
  if (g > 1)
    for (auto& [c, x] : r) x /= g;
}

}  // namespace

RankResult rational_rank(const std::vector<SVec>& M) {
  std::vector<ZRow> rows;
  for (const auto& v : M)
    if (!v.empty()) rows.push_back(primitive(v));
  std::vector<bool> alive(rows.size(), true);
  RankResult res;
  for (;;) {
    std::map<int, int> colcnt;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (alive[i])
        for (const auto& kv : rows[i]) ++colcnt[kv.first];
    if (colcnt.empty()) break;
    long best = -1;
    std::size_t prow = 0;
    int pcol = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!alive[i]) continue;
      const long nr = static_cast<long>(rows[i].size()) - 1;
      for (const auto& kv : rows[i]) {
        const long cost = nr * (colcnt[kv.first] - 1);
        if (best < 0 || cost < best) {
          best = cost;
          prow = i;
          pcol = kv.first;
        }
      }
    }
    alive[prow] = false;
    const ZRow& P = rows[prow];
    const Z ap = P.at(pcol);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!alive[i]) continue;
      auto it = rows[i].find(pcol);
      if (it == rows[i].end()) continue;
      const Z ai = it->second;
      ZRow n;
      for (const auto& [c, x] : rows[i]) n[c] = ap * x;
      for (const auto& [c, x] : P) {
        Z& t = n[c];
        t -= ai * x;
      }
      for (auto jt = n.begin(); jt != n.end();) jt = jt->second == 0 ? n.erase(jt) : std::next(jt);
      make_primitive(n);
      rows[i] = std::move(n);
      if (rows[i].empty()) alive[i] = false;
    }
    res.rows.push_back(P);
    res.pivot_cols.push_back(pcol);
    ++res.rank;
  }
  return res;
}

SVec RankResult::reduce(const SVec& v) const {
  SVec r = v;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    auto it = r.find(pivot_cols[k]);
    if (it == r.end()) continue;
    const Q f = it->second / Q(rows[k].at(pivot_cols[k]));
    for (const auto& [c, x] : rows[k]) {
      Q& t = r[c];
      t -= f * Q(x);
      if (t == 0) r.erase(c);
    }
  }
  return r;
}

namespace {

// Row-reduced echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<std::vector<Q>>& A, int ncols) {
  std::vector<int> piv;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < A.size(); ++c) {
    std::size_t p = r;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[r]);
    const Q inv = 1 / A[r][c];
    for (auto& x : A[r]) x *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c] == 0) continue;
      const Q f = A[i][c];
      for (int j = 0; j < static_cast<int>(A[i].size()); ++j) A[i][j] -= f * A[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::vector<std::vector<Q>> densify(const std::vector<SVec>& M, int ncols) {
  std::vector<std::vector<Q>> A(M.size(), std::vector<Q>(ncols, Q(0)));
  for (std::size_t i = 0; i < M.size(); ++i)
    for (const auto& [c, q] : M[i]) {
      if (c < 0 || c >= ncols) throw DomainError("matrix column out of range");
      A[i][c] = q;
    }
  return A;
}

}  // namespace

int rational_rank_dense(const std::vector<SVec>& M, int ncols) {
  auto A = densify(M, ncols);
  return static_cast<int>(rref(A, ncols).size());
}

std::vector<SVec> nullspace(const std::vector<SVec>& M, int ncols) {
  auto A = densify(M, ncols);
  auto piv = rref(A, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<SVec> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    SVec v;
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      if (A[i][f] != 0) v[piv[i]] = -A[i][f];
    out.push_back(v);
  }
  return out;
}

std::string source_name(RelSource s) {
  switch (s) {
    case RelSource::DBSF: return "DBSF";
    case RelSource::Duality: return "duality";
    case RelSource::RegDBSF: return "regDBSF";
  }
  return "";
}

int RelationSet::column_of(const Index& i) const {
  auto it = std::lower_bound(generators.begin(), generators.end(), i, GenOrder{});
  if (it == generators.end() || *it != i) return -1;
  return static_cast<int>(it - generators.begin());
}

std::vector<SVec> RelationSet::matrix() const {
  std::vector<SVec> M;
  for (const auto& r : rows) M.push_back(r.coeffs);
  return M;
}

WordComb RelationSet::row_words(const Relation& r) const {
  WordComb out;
  const int ng = static_cast<int>(generators.size());
  for (const auto& [c, q] : r.coeffs) {
    if (c < ng) out.add(index_to_word(generators[c]), q);
    else out.add_scaled(from_dy(WordComb(extended[c - ng])), q);
  }
  return out;
}

long fibonacci(int w) {
  long a = 1, b = 1;
  for (int i = 1; i < w; ++i) {
    long t = a + b;
    a = b;
    b = t;
  }
  return w == 0 ? 1 : b;
}

std::optional<int> table1_value(int w) {
  static const int t[] = {1, 0, 1, 2, 4, 7, 12, 20, 33, 54, 88, 143, 232, 376};
  if (w < 0 || w > 13) return std::nullopt;
  return t[w];
}

WordComb flatten(const Coeff& c) {
  static const WordComb log2_word = [] {
    WordComb d;
    d.add(Word{Letter::P}, Q(-1, 2));
    d.add(Word{Letter::N}, Q(1, 2));
    return d;
  }();
  WordComb out;
  for (const auto& [x, q] : c) {
    WordComb acc(x.w);
    for (const auto& [a, e] : x.c) {
      if (e < 0) throw DomainError("flatten: negative power");
      WordComb f;
      if (a.kind == AtomKind::Log2) {
        f = log2_word;
      } else if (a.kind == AtomKind::Zeta) {
        const int n = a.a.at(0);
        Word z(n - 1, Letter::O);
        z.push_back(Letter::P);
        f = WordComb(z, pow2(n - 1));
      } else {
        throw DomainError("flatten: unsupported constant " + render_atom(a));
      }
      for (int i = 0; i < e; ++i) acc = shuffle(acc, f);
    }
    out.add_scaled(acc, q);
  }
  return out;
}

SVec to_row(const WordComb& c, const RelationSet& rs) {
  SVec row;
  WordComb rest;
  for (const auto& [w, q] : c) {
    if (static_cast<int>(w.size()) != rs.weight) throw DomainError("to_row: weight mismatch " + render_word(w));
    if (is_admissible(w)) {
      const int col = rs.column_of(word_to_index(w));
      row[col] += q;
    } else {
      rest.add(w, q);
    }
  }
  const int ng = static_cast<int>(rs.generators.size());
  for (const auto& [v, q] : to_dy(rest)) {
    if (v.front() != Letter::P) throw DomainError("to_row: divergent part does not cancel: " + render_word(v));
    auto it = std::lower_bound(rs.extended.begin(), rs.extended.end(), v);
    if (it == rs.extended.end() || *it != v) throw DomainError("to_row: unknown extended word");
    row[ng + static_cast<int>(it - rs.extended.begin())] += q;
  }
  for (auto it = row.begin(); it != row.end();) it = it->second == 0 ? row.erase(it) : std::next(it);
  return row;
}

namespace {

std::vector<Word> all_words(int n, const std::vector<Letter>& first, const std::vector<Letter>& last) {
  std::vector<Word> out;
  if (n == 1) {
    for (Letter a : first)
      if (std::find(last.begin(), last.end(), a) != last.end()) out.push_back({a});
    return out;
  }
  std::vector<Word> mid{{}};
  for (int i = 0; i < n - 2; ++i) {
    std::vector<Word> next;
    for (const auto& m : mid)
      for (Letter l : {Letter::O, Letter::P, Letter::N}) {
        Word x = m;
        x.push_back(l);
        next.push_back(x);
      }
    mid = std::move(next);
  }
  for (Letter a : first)
    for (const auto& m : mid)
      for (Letter b : last) {
        Word x{a};
        x.insert(x.end(), m.begin(), m.end());
        x.push_back(b);
        out.push_back(x);
      }
  return out;
}

// Admissible words, then d-leading words (rewritten in w0, w+, w-).
std::vector<WordComb> convergent_basis(int n) {
  std::vector<WordComb> out;
  if (n >= 2)
    for (const Word& x : all_words(n, {Letter::O}, {Letter::P, Letter::N})) out.emplace_back(x);
  for (const Word& x : all_words(n, {Letter::P}, {Letter::P, Letter::N})) out.push_back(from_dy(WordComb(x)));
  return out;
}

}  // namespace

RelationSet harvest(int w, const HarvestOptions& opt) {
  if (w < 2 || w > kMaxWeight) throw DomainError("harvest: weight out of range");
  RelationSet rs;
  rs.weight = w;
  for (const Word& x : all_words(w, {Letter::O}, {Letter::P, Letter::N})) rs.generators.push_back(word_to_index(x));
  std::sort(rs.generators.begin(), rs.generators.end(), GenOrder{});
  rs.extended = all_words(w, {Letter::P}, {Letter::P, Letter::N});
  std::sort(rs.extended.begin(), rs.extended.end());

  const int ng = static_cast<int>(rs.generators.size());
  const int D = opt.digits;
  PrecisionScope prec(D + 10);
  std::vector<Real> colval;
  for (const auto& g : rs.generators) colval.push_back(eval_index(g, D + 5));
  for (const auto& x : rs.extended) colval.push_back(eval_mix(dy_to_mix(x), D + 5));
  const Real gate(opt.gate);

  auto consider = [&](const WordComb& c, RelSource src) {
    SVec row = to_row(c, rs);
    if (row.empty()) return;
    Real s = 0;
    for (const auto& [col, q] : row) s += Real(q.get_mpq_t()) * colval[col];
    if (abs(s) >= gate) {
      ++rs.rejected;
      return;
    }
    rs.rows.push_back({std::move(row), src, 0});
  };

  if (opt.dbsf) {
    for (int a = 1; 2 * a <= w; ++a) {
      const auto U = convergent_basis(a);
      const auto V = convergent_basis(w - a);
      for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t j = (2 * a == w ? i : 0); j < V.size(); ++j)
          consider(shuffle(U[i], V[j]) - stuffle(U[i], V[j]), RelSource::DBSF);
    }
  }
  if (opt.duality) {
    // t -> (1-t)/(1+t) on every convergent basis element whose image converges
    for (const auto& x : convergent_basis(w)) {
      WordComb d;
      for (const auto& [v, q] : x) d.add_scaled(dual_substitute(v), q);
      bool ok = true;
      for (const auto& [v, q] : to_dy(d))
        if (v.front() == Letter::N || v.back() == Letter::O) ok = false;
      if (ok) consider(x - d, RelSource::Duality);
    }
  }
  if (opt.regdbsf) {
    for (const Word& x : all_words(w, {Letter::P, Letter::N}, {Letter::P, Letter::N}))
      consider(flatten(reg_dbsf(x).at(0)), RelSource::RegDBSF);
  }

  const auto M = rs.matrix();
  std::vector<SVec> ext;
  for (const auto& r : M) {
    SVec e;
    for (const auto& [c, q] : r)
      if (c >= ng) e[c] = q;
    ext.push_back(e);
  }
  rs.rank = rational_rank(M).rank - rational_rank(ext).rank;
  rs.bound = ng - rs.rank;
  return rs;
}

int dim_upper_bound(int w) { return harvest(w).bound; }

std::optional<std::vector<Q>> express(const IndexComb& target, const std::vector<Index>& basis,
                                      const RelationSet& rs) {
  for (const auto& [i, q] : target)
    if (i.weight() != rs.weight) throw DomainError("express: weight mismatch");
  for (const auto& b : basis)
    if (b.weight() != rs.weight) throw DomainError("express: weight mismatch");
  auto col = [&](const Index& i) {
    const int c = rs.column_of(i);
    if (c < 0) throw DomainError("express: not a generator " + render_index(i));
    return c;
  };
  const RankResult E = rational_rank(rs.matrix());
  SVec t;
  for (const auto& [i, q] : target) t[col(i)] += q;
  const SVec rt = E.reduce(t);
  std::vector<SVec> rb;
  for (const auto& b : basis) rb.push_back(E.reduce(SVec{{col(b), Q(1)}}));
  // solve sum c_j rb_j = rt over the union of supports
  std::map<int, int> rowid;
  for (const auto& v : rb)
    for (const auto& kv : v) rowid.emplace(kv.first, 0);
  for (const auto& kv : rt) rowid.emplace(kv.first, 0);
  int n = 0;
  for (auto& kv : rowid) kv.second = n++;
  const int nb = static_cast<int>(basis.size());
  std::vector<std::vector<Q>> A(n, std::vector<Q>(nb + 1, Q(0)));
  for (int j = 0; j < nb; ++j)
    for (const auto& [c, q] : rb[j]) A[rowid[c]][j] = q;
  for (const auto& [c, q] : rt) A[rowid[c]][nb] = q;
  auto piv = rref(A, nb + 1);
  if (!piv.empty() && piv.back() == nb) return std::nullopt;
  std::vector<Q> sol(nb, Q(0));
  for (std::size_t i = 0; i < piv.size(); ++i) sol[piv[i]] = A[i][nb];
  return sol;
}

std::string render_dy(const Word& w) {
  std::string s = "I(";
  for (Letter l : w) s += l == Letter::O ? '0' : (l == Letter::P ? 'd' : 'y');
  return s + ")";
}

std::string to_json(const RelationSet& rs, bool with_rows) {
  nlohmann::json j;
  j["weight"] = rs.weight;
  j["generators"] = nlohmann::json::array();
  for (const auto& g : rs.generators) j["generators"].push_back(render_index(g));
  j["extended_generators"] = nlohmann::json::array();
  for (const auto& x : rs.extended) j["extended_generators"].push_back(render_dy(x));
  j["relations"] = nlohmann::json::array();
  if (with_rows) {
    const int ng = static_cast<int>(rs.generators.size());
    for (const auto& r : rs.rows) {
      nlohmann::json c = nlohmann::json::object();
      for (const auto& [col, q] : r.coeffs)
        c[col < ng ? render_index(rs.generators[col]) : render_dy(rs.extended[col - ng])] = q_str(q);
      j["relations"].push_back({{"coeffs", c}, {"source", source_name(r.source)}, {"tdegree", r.tdegree}});
    }
  }
  j["rejected"] = rs.rejected;
  j["rank"] = rs.rank;
  j["bound"] = rs.bound;
  j["fibonacci_bound"] = fibonacci(rs.weight) - 1;
  if (auto t = table1_value(rs.weight)) j["table1"] = *t;
  else j["table1"] = nullptr;
  return j.dump(2);
}

}  // namespace mmv
