#pragma once

#include <vector>

#include "cpmoments/rational.hpp"

namespace cpmom {

// Tuple (a0; a1, ..., a_{floor(n/2)}) of nonnegative integers with
// a0 + 2 * sum_j j*a_j = n. a0 always has the parity of n.
struct DerivTuple {
  unsigned a0 = 0;
  std::vector<unsigned> higher;  // higher[j-1] holds a_j

  // a0! * a1! * ... * a_{floor(n/2)}!
  Integer tuple_factorial() const;

  bool operator==(const DerivTuple&) const = default;
};

// All DerivTuples for target order n, sorted lexicographically by
// (a1, ..., a_{floor(n/2)}). The list length is the P (resp. Q) of the
// outer composition sums.
std::vector<DerivTuple> enum_deriv_tuples(unsigned n);

// All tuples of `parts` nonnegative integers summing to `total`, in
// lexicographic order. Count is binomial(total+parts-1, parts-1).
std::vector<std::vector<unsigned>> enum_weak_compositions(unsigned total, unsigned parts);

// rows x cols matrix of nonnegative integers, row-major storage.
struct BoundedRowMatrix {
  unsigned rows = 0;
  unsigned cols = 0;
  std::vector<unsigned> entries;

  unsigned at(unsigned i, unsigned j) const { return entries[i * cols + j]; }
  unsigned row_sum(unsigned i) const;
  unsigned col_sum(unsigned j) const;
};

// Streams every rows x cols matrix with 2 * row_sum(i) <= bound for all i,
// each exactly once, in row-major lexicographic order. rows == 0 yields a
// single empty matrix. Single-consumer; restart by constructing anew.
class BoundedRowMatrixStream {
 public:
  BoundedRowMatrixStream(unsigned rows, unsigned cols, unsigned bound);

  // Copies the next matrix into `out`; false once exhausted.
  bool next(BoundedRowMatrix& out);

  // Number of admissible single rows; the full stream has count^rows
  // elements.
  std::size_t row_option_count() const { return row_options_.size(); }

 private:
  unsigned rows_, cols_;
  std::vector<std::vector<unsigned>> row_options_;
  std::vector<std::size_t> odometer_;
  bool done_;
};

}  // namespace cpmom
