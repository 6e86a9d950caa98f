#include "cpmoments/enumeration.hpp"

#include <stdexcept>

namespace cpmom {

Integer DerivTuple::tuple_factorial() const {
  Integer f = factorial(a0);
  for (unsigned a : higher) f *= factorial(a);
  return f;
}

std::vector<DerivTuple> enum_deriv_tuples(unsigned n) {
  const unsigned half = n / 2;
  std::vector<DerivTuple> out;
  std::vector<unsigned> higher(half, 0);
  // Lexicographic order over (a1, ..., a_half); a0 is forced by the
  // weight constraint.
  auto rec = [&](auto&& self, unsigned j, unsigned weight) -> void {
    if (j > half) {
      DerivTuple t;
      t.a0 = n - weight;
      t.higher = higher;
      out.push_back(std::move(t));
      return;
    }
    for (unsigned a = 0; weight + 2 * j * a <= n; ++a) {
      higher[j - 1] = a;
      self(self, j + 1, weight + 2 * j * a);
    }
    higher[j - 1] = 0;
  };
  rec(rec, 1, 0);
  return out;
}

std::vector<std::vector<unsigned>> enum_weak_compositions(unsigned total, unsigned parts) {
  if (parts == 0) throw std::invalid_argument("enum_weak_compositions: parts must be >= 1");
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> comp(parts, 0);
  auto rec = [&](auto&& self, unsigned idx, unsigned left) -> void {
    if (idx + 1 == parts) {
      comp[idx] = left;
      out.push_back(comp);
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      comp[idx] = v;
      self(self, idx + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

unsigned BoundedRowMatrix::row_sum(unsigned i) const {
  unsigned s = 0;
  for (unsigned j = 0; j < cols; ++j) s += at(i, j);
  return s;
}

unsigned BoundedRowMatrix::col_sum(unsigned j) const {
  unsigned s = 0;
  for (unsigned i = 0; i < rows; ++i) s += at(i, j);
  return s;
}

namespace {
std::vector<std::vector<unsigned>> admissible_rows(unsigned cols, unsigned bound) {
  // Rows e with 2 * sum(e) <= bound, lexicographic.
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> row(cols, 0);
  const unsigned cap = bound / 2;
  auto rec = [&](auto&& self, unsigned idx, unsigned used) -> void {
    if (idx == cols) {
      out.push_back(row);
      return;
    }
    for (unsigned v = 0; used + v <= cap; ++v) {
      row[idx] = v;
      self(self, idx + 1, used + v);
    }
  };
  rec(rec, 0, 0);
  return out;
}
}  // namespace

BoundedRowMatrixStream::BoundedRowMatrixStream(unsigned rows, unsigned cols, unsigned bound)
    : rows_(rows), cols_(cols), row_options_(admissible_rows(cols, bound)),
      odometer_(rows, 0), done_(false) {
  if (cols == 0) throw std::invalid_argument("BoundedRowMatrixStream: cols must be >= 1");
}

bool BoundedRowMatrixStream::next(BoundedRowMatrix& out) {
  if (done_) return false;
  out.rows = rows_;
  out.cols = cols_;
  out.entries.resize(static_cast<std::size_t>(rows_) * cols_);
  for (unsigned i = 0; i < rows_; ++i) {
    const auto& row = row_options_[odometer_[i]];
    for (unsigned j = 0; j < cols_; ++j) out.entries[i * cols_ + j] = row[j];
  }
  // Advance, last row fastest, so the stream is row-major lexicographic.
  done_ = true;
  for (unsigned i = rows_; i-- > 0;) {
    if (++odometer_[i] < row_options_.size()) {
      done_ = false;
      break;
    }
    odometer_[i] = 0;
  }
  if (rows_ == 0) done_ = true;
  return true;
}

}  // namespace cpmom
