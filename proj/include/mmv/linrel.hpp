// Exact rational linear algebra, relation harvesting and dimension bounds.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmv/regutils.hpp"

namespace mmv {

/// Sparse rational vector: column -> nonzero value.
using SVec = std::map<int, Q>;

struct RankResult {
  int rank = 0;
  /// Independent rows in elimination order; pivot_cols[i] is the pivot of rows[i]
  /// and later rows vanish on it.
  std::vector<std::map<int, Z>> rows;
  std::vector<int> pivot_cols;

  /// Residual of v modulo the row space (zero iff v lies in it).
  SVec reduce(const SVec& v) const;
};

/// Fraction-free elimination with Markowitz pivoting; ties go to the lowest
/// row, then the lowest column.
RankResult rational_rank(const std::vector<SVec>& M);
/// Dense Gaussian elimination over Q in natural row and column order.
int rational_rank_dense(const std::vector<SVec>& M, int ncols);
/// Basis of {x : M x = 0} with ncols unknowns.
std::vector<SVec> nullspace(const std::vector<SVec>& M, int ncols);

enum class RelSource { DBSF, Duality, RegDBSF };
std::string source_name(RelSource s);

struct Relation {
  SVec coeffs;
  RelSource source;
  int tdegree = 0;
};

/// Columns: generators first (admissible words of the weight, as indices),
/// then extended generators (words in {0,d,y} starting with d, d = w+ - w-).
struct RelationSet {
  int weight = 0;
  std::vector<Index> generators;
  std::vector<Word> extended;
  std::vector<Relation> rows;
  int rejected = 0;
  int rank = 0;   // rank of the relations restricted to pure MMV combinations
  int bound = 0;  // #generators - rank

  int column_of(const Index& i) const;
  /// Rows as sparse vectors over all columns.
  std::vector<SVec> matrix() const;
  /// Word combination of a row (generators as words, extended columns via d = w+ - w-).
  WordComb row_words(const Relation& r) const;
};

struct HarvestOptions {
  bool dbsf = true;
  bool duality = true;
  bool regdbsf = true;
  int digits = 40;
  double gate = 1e-25;
};

constexpr int kMaxWeight = 8;

RelationSet harvest(int w, const HarvestOptions& opt = {});
int dim_upper_bound(int w);

/// Fibonacci F_w with F_0 = F_1 = 1.
long fibonacci(int w);
/// Table value for weights 0..13, or nothing outside.
std::optional<int> table1_value(int w);

/// Splits a convergent word combination of weight w into generator and
/// extended coordinates; divergent parts must cancel.
SVec to_row(const WordComb& c, const RelationSet& rs);
/// Replaces log2 and zeta(n) by words (log2 = -d/2, zeta(n) = 2^{n-1} w0^{n-1} w+)
/// and multiplies everything out with the shuffle product.
WordComb flatten(const Coeff& c);

/// Coefficients c with target - sum c_i basis_i in the span of the relations,
/// or nothing when the harvested rows do not give one.
std::optional<std::vector<Q>> express(const IndexComb& target, const std::vector<Index>& basis,
                                      const RelationSet& rs);

std::string render_dy(const Word& w);  // "I(d0y)"
std::string to_json(const RelationSet& rs, bool with_rows = true);

}  // namespace mmv
