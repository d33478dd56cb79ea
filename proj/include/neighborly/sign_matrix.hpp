#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "neighborly/common.hpp"

namespace neighborly {

/// An r x n grid of +-1 entries encoding a Lawrence oriented matroid: the
/// union of r rank-1 oriented matroids on the column order 1..n. Rows and
/// columns are 1-based throughout, matching the usual indexing for these
/// matrices. Values are immutable; every mutation-like operation returns a
/// fresh matrix.
class SignMatrix {
 public:
  SignMatrix(int rows, int cols, std::vector<std::int8_t> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) throw input_error("SignMatrix: need r >= 1 and n >= 1");
    if (static_cast<int>(entries_.size()) != rows_ * cols_)
      throw input_error("SignMatrix: entry count does not match shape");
    for (std::int8_t e : entries_)
      if (e != 1 && e != -1) throw input_error("SignMatrix: entries must be +1 or -1");
  }

  static SignMatrix constant(int rows, int cols, int sign = +1) {
    return SignMatrix(rows, cols, std::vector<std::int8_t>(
                                      static_cast<std::size_t>(rows) * cols,
                                      static_cast<std::int8_t>(sign)));
  }

  /// Decodes the low rows*cols bits of `code` row-major; bit set means -1.
  /// Inverse of code(). Used by exhaustive enumerations.
  static SignMatrix from_code(int rows, int cols, std::uint64_t code) {
    std::vector<std::int8_t> e(static_cast<std::size_t>(rows) * cols);
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = (code >> i) & 1 ? -1 : +1;
    return SignMatrix(rows, cols, std::move(e));
  }

  std::uint64_t code() const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i] < 0) c |= std::uint64_t{1} << i;
    return c;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Entry a(i,j), 1-based.
  int at(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      throw input_error("SignMatrix::at out of range");
    return entries_[static_cast<std::size_t>(i - 1) * cols_ + (j - 1)];
  }

  bool operator==(const SignMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }
  bool operator!=(const SignMatrix& other) const { return !(*this == other); }

  /// 180-degree rotation: entry (i,j) moves to (r+1-i, n+1-j).
  SignMatrix rotated180() const {
    std::vector<std::int8_t> e(entries_.size());
    for (int i = 1; i <= rows_; ++i)
      for (int j = 1; j <= cols_; ++j)
        e[static_cast<std::size_t>(rows_ - i) * cols_ + (cols_ - j)] =
            static_cast<std::int8_t>(at(i, j));
    return SignMatrix(rows_, cols_, std::move(e));
  }

  /// Text form: r lines over {+,-}.
  std::string to_text() const {
    std::string out;
    out.reserve(entries_.size() + rows_);
    for (int i = 1; i <= rows_; ++i) {
      for (int j = 1; j <= cols_; ++j) out.push_back(at(i, j) > 0 ? '+' : '-');
      if (i < rows_) out.push_back('\n');
    }
    return out;
  }

 private:
  int rows_;
  int cols_;
  std::vector<std::int8_t> entries_;
};

/// A subset of column indices to negate. Stored sorted and deduplicated.
class ReorientationSet {
 public:
  ReorientationSet() = default;
  explicit ReorientationSet(std::vector<int> columns) : columns_(std::move(columns)) {
    std::sort(columns_.begin(), columns_.end());
    columns_.erase(std::unique(columns_.begin(), columns_.end()), columns_.end());
  }

  const std::vector<int>& columns() const { return columns_; }
  std::size_t size() const { return columns_.size(); }
  bool empty() const { return columns_.empty(); }
  bool contains(int column) const {
    return std::binary_search(columns_.begin(), columns_.end(), column);
  }

  /// Symmetric difference; composing two reorientations equals reorienting by it.
  ReorientationSet symmetric_difference(const ReorientationSet& other) const {
    std::vector<int> out;
    std::set_symmetric_difference(columns_.begin(), columns_.end(),
                                  other.columns_.begin(), other.columns_.end(),
                                  std::back_inserter(out));
    return ReorientationSet(std::move(out));
  }

  /// Complement within columns 1..n.
  ReorientationSet complement(int n) const {
    std::vector<int> out;
    for (int j = 1; j <= n; ++j)
      if (!contains(j)) out.push_back(j);
    return ReorientationSet(std::move(out));
  }

  bool operator==(const ReorientationSet& other) const { return columns_ == other.columns_; }
  bool operator<(const ReorientationSet& other) const { return columns_ < other.columns_; }

 private:
  std::vector<int> columns_;
};

/// Negates every entry in the columns of `s`. Involution: applying the same
/// set twice gives back the input.
inline SignMatrix reorient(const SignMatrix& m, const ReorientationSet& s) {
  for (int j : s.columns())
    if (j < 1 || j > m.cols()) throw input_error("reorient: column index out of range");
  std::vector<std::int8_t> e;
  e.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
  for (int i = 1; i <= m.rows(); ++i)
    for (int j = 1; j <= m.cols(); ++j)
      e.push_back(static_cast<std::int8_t>(s.contains(j) ? -m.at(i, j) : m.at(i, j)));
  return SignMatrix(m.rows(), m.cols(), std::move(e));
}

/// Chirotope of a basis: the product of a(i, j_i) over rows i = 1..r, where
/// j_1 < ... < j_r are the basis columns.
inline int chirotope(const SignMatrix& m, const std::vector<int>& basis) {
  if (static_cast<int>(basis.size()) != m.rows())
    throw input_error("chirotope: basis size must equal the rank r");
  int prod = 1;
  int prev = 0;
  for (int i = 1; i <= m.rows(); ++i) {
    int j = basis[static_cast<std::size_t>(i) - 1];
    if (j <= prev) throw input_error("chirotope: basis columns must be strictly increasing");
    if (j > m.cols()) throw input_error("chirotope: basis column out of range");
    prod *= m.at(i, j);
    prev = j;
  }
  return prod;
}

/// Parses the matrix text format: r lines over {+,-}, all the same length.
inline SignMatrix parse_sign_matrix(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw input_error("matrix text: no rows");
  std::size_t width = lines.front().size();
  std::vector<std::int8_t> e;
  for (const std::string& line : lines) {
    if (line.size() != width) throw input_error("matrix text: ragged lines");
    for (char c : line) {
      if (c == '+') e.push_back(+1);
      else if (c == '-') e.push_back(-1);
      else throw input_error(std::string("matrix text: invalid character '") + c + "'");
    }
  }
  return SignMatrix(static_cast<int>(lines.size()), static_cast<int>(width), std::move(e));
}

}  // namespace neighborly
