#include "kva/sparse_mat.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kva {

SparseMatQ::SparseMatQ(long long rows, long long cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("SparseMatQ: negative shape");
}

void SparseMatQ::add(long long row, long long col, Rational value) {
  if (value.is_zero()) return;
  if (row < 1 || row > rows_ || col < 1 || col > cols_)
    throw std::invalid_argument("SparseMatQ: entry out of bounds");
  entries_.push_back(Entry{row, col, std::move(value)});
}

void SparseMatQ::finalize() {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i - 1].row == entries_[i].row && entries_[i - 1].col == entries_[i].col)
      throw std::invalid_argument("SparseMatQ: duplicate entry position");
  }
}

void export_sparse(const SparseMatQ& m, std::ostream& os) {
  os << m.rows() << " " << m.cols() << " " << m.nnz() << "\n";
  for (const auto& e : m.entries())
    os << e.row << " " << e.col << " " << e.value.str() << "\n";
}

void export_sparse(const SparseMatQ& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("export_sparse: cannot open " + path);
  export_sparse(m, out);
}

SparseMatQ import_sparse(std::istream& is) {
  std::string line;
  long long lineno = 0;
  auto next_line = [&]() {
    while (std::getline(is, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> std::runtime_error {
    return std::runtime_error("import_sparse: " + what + " (line " +
                              std::to_string(lineno) + ")");
  };

  if (!next_line()) throw fail("missing header");
  long long rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream head(line);
    std::string extra;
    if (!(head >> rows >> cols >> nnz) || (head >> extra) || rows < 0 || cols < 0 || nnz < 0)
      throw fail("malformed header");
  }
  SparseMatQ m(rows, cols);
  for (long long k = 0; k < nnz; ++k) {
    if (!next_line()) throw fail("unexpected end of input");
    std::istringstream entry(line);
    long long i = 0, j = 0;
    std::string value, extra;
    if (!(entry >> i >> j >> value) || (entry >> extra)) throw fail("malformed entry");
    try {
      Rational v = Rational::parse(value);
      if (v.is_zero()) throw std::invalid_argument("zero entry value");
      m.add(i, j, std::move(v));
    } catch (const std::invalid_argument& e) {
      throw fail(e.what());
    }
  }
  if (next_line()) throw fail("trailing content");
  try {
    m.finalize();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("import_sparse: ") + e.what());
  }
  return m;
}

SparseMatQ import_sparse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("import_sparse: cannot open " + path);
  return import_sparse(in);
}

}  // namespace kva
