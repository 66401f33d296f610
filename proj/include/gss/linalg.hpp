#ifndef GSS_LINALG_HPP
#define GSS_LINALG_HPP

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace gss {

using Rational = mpq_class;
using Integer = mpz_class;

// Sorted by index, no zero entries.
using IntVec = std::vector<std::pair<int, Integer>>;
using RatVec = std::vector<std::pair<int, Rational>>;

class NotAComplex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {}
  // Duplicate positions are summed; resulting zeros are dropped.
  static RationalMatrix from_triplets(int rows, int cols,
                                      const std::vector<std::tuple<int, int, Rational>>& t);
  static RationalMatrix from_columns(int rows, std::vector<RatVec> columns);
  static RationalMatrix from_dense(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }
  const RatVec& column(int c) const { return columns_.at(c); }
  Rational entry(int r, int c) const;

  RatVec apply(const RatVec& x) const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  RationalMatrix transpose() const;
  // Rows [r0, r1) and columns [c0, c1), reindexed from zero.
  RationalMatrix block(int r0, int r1, int c0, int c1) const;

  // One "row col num/den" line per entry, after a "rows cols nnz" header.
  void dump(std::ostream& os) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<RatVec> columns_;
};

IntVec primitive(const RatVec& v);
RatVec to_rational(const IntVec& v);
IntVec to_integer(const RatVec& v);  // requires integral entries
bool is_zero_vector(const RatVec& v);

// Markowitz-pivoted fraction-free elimination. threads > 1 splits the row
// updates of each pivot; the pivot sequence and result do not depend on it.
int rank(const RationalMatrix& m, int threads = 1);
inline int nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

// Right kernel via column reduction; vectors are primitive integral.
std::vector<IntVec> kernel_basis(const RationalMatrix& m);
// A basis of the column space extracted by the same reduction.
std::vector<IntVec> image_basis(const RationalMatrix& m);

// Incremental row-echelon basis of a subspace of Q^dim with optional
// bookkeeping of how stored rows combine the inserted generators.
class EchelonBasis {
 public:
  explicit EchelonBasis(int dim = 0) : dim_(dim) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }

  // tag >= 0 records the vector as generator number tag. Returns whether
  // the span grew.
  bool insert(const IntVec& v, int tag = -1);
  bool contains(const IntVec& v) const;

  struct Reduction {
    IntVec remainder;
    Integer scale = 1;
    IntVec tag_coeffs;  // scale * v - remainder = sum tag_coeffs[j] * generator_j
  };
  Reduction reduce(const IntVec& v) const;

  // Coordinates of v in the tagged generators, when v lies in the span and
  // only tagged generators were inserted.
  std::optional<RatVec> coordinates(const IntVec& v) const;

 private:
  struct Row {
    IntVec v;
    IntVec tags;
  };
  int dim_ = 0;
  std::vector<Row> rows_;
  std::vector<int> owner_;  // pivot index -> row, or -1
};

std::optional<RatVec> solve(const RationalMatrix& m, const RatVec& b);
// Membership of b in the column space by comparing ranks; cheaper than
// solve on large sparse matrices since no coordinates are tracked.
bool in_column_space(const RationalMatrix& m, const RatVec& b, int threads = 1);

struct SubquotientBasis {
  int ambient_dim = 0;
  std::vector<IntVec> cycle_basis;
  std::vector<IntVec> boundary_basis;
  std::vector<IntVec> representatives;
  int homology_dim = 0;
};

// Homology at the middle of C_{k+1} -d_in-> C_k -d_out-> C_{k-1}.
// Throws NotAComplex if d_out * d_in != 0.
SubquotientBasis homology_dim(const RationalMatrix& d_in, const RationalMatrix& d_out);

}  // namespace gss

#endif
