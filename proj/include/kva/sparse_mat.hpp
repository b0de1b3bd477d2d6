#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kva/rational.hpp"

namespace kva {

// Sparse rational matrix in triplet form, 1-based indices, at most one entry
// per position, no zeros stored. Entries are kept sorted row-major.
class SparseMatQ {
 public:
  struct Entry {
    long long row;
    long long col;
    Rational value;
    friend bool operator==(const Entry& a, const Entry& b) {
      return a.row == b.row && a.col == b.col && a.value == b.value;
    }
  };

  SparseMatQ(long long rows, long long cols);

  long long rows() const { return rows_; }
  long long cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Appends; value must be nonzero and the position unused. Call finalize()
  // after a batch of unordered inserts.
  void add(long long row, long long col, Rational value);
  // Sorts row-major and checks the one-entry-per-position invariant.
  void finalize();

  friend bool operator==(const SparseMatQ& a, const SparseMatQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  long long rows_;
  long long cols_;
  std::vector<Entry> entries_;
};

// Plain-text triplet format: header "rows cols nnz", then one "i j num/den"
// line per entry, row-major. Bit-exact round trip.
void export_sparse(const SparseMatQ& m, std::ostream& os);
void export_sparse(const SparseMatQ& m, const std::string& path);

// Throws std::runtime_error naming the offending line on malformed input.
SparseMatQ import_sparse(std::istream& is);
SparseMatQ import_sparse_file(const std::string& path);

}  // namespace kva
