#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobalg/groebner.hpp"

namespace frobalg {

// Dense matrix over a free polynomial ring. Columns are the elements of S^rows
// that the matrix maps the standard basis of S^cols to.
class Matrix {
 public:
  Matrix(PolyRingPtr ring, std::size_t rows, std::size_t cols);

  static Matrix from_rows(PolyRingPtr ring, const std::vector<std::vector<Polynomial>>& rows);
  static Matrix from_columns(PolyRingPtr ring, std::size_t rows,
                             const std::vector<std::vector<Polynomial>>& columns);
  static Matrix identity(PolyRingPtr ring, std::size_t n);

  const PolyRingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Polynomial value);

  std::vector<Polynomial> column(std::size_t j) const;
  std::vector<std::vector<Polynomial>> columns() const;

  bool is_zero() const;
  // There are row degrees making every column homogeneous.
  bool is_graded() const;

  Matrix operator*(const Matrix& other) const;
  // [this | other]
  Matrix hconcat(const Matrix& other) const;
  Matrix select_columns(const std::vector<std::size_t>& keep) const;
  // Kronecker product with the identity of size n: each entry a becomes a*Id_n.
  Matrix kron_identity(std::size_t n) const;
  // Every entry replaced by f(entry).
  template <class F>
  Matrix map(F&& f) const {
    Matrix out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = f(entries_[k]);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  std::string str() const;

 private:
  PolyRingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

// M = R^rank / (column span of relations), R the (possibly quotient) ring.
class ModulePresentation {
 public:
  ModulePresentation(Ring ring, Matrix relations);

  static ModulePresentation free(const Ring& ring, std::size_t rank);
  // R / J
  static ModulePresentation cyclic(const Ideal& ideal);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return relations_.rows(); }
  const Matrix& relations() const { return relations_; }
  bool is_cyclic() const { return rank() == 1; }

  // Relations over S: the given ones plus every quotient generator in every
  // coordinate.
  Matrix lifted_relations() const;
  bool is_graded() const;

  std::string str() const;

 private:
  Ring ring_;
  Matrix relations_;
};

struct FreeComplex {
  // maps[i] = D_{i+1}: F_{i+1} -> F_i
  std::vector<Matrix> maps;

  bool is_complex() const;
};

// Columns generate { v : A v = 0 } over S.
Matrix syzygy_module(const Matrix& a);

// Columns generate { v in S^cols : D v ∈ span(target_relations) }, the kernel
// of the induced map S^cols -> S^rows / span(target_relations).
Matrix kernel(const Matrix& d, const Matrix& target_relations);

// v lies in the column span of `generators`.
bool in_column_span(const Matrix& generators, const std::vector<Polynomial>& v);
// Every column of `vectors` lies in the column span of `generators`.
bool column_span_contains(const Matrix& generators, const Matrix& vectors);
bool column_span_equal(const Matrix& a, const Matrix& b);

// Presentation with unit entries pivoted away and redundant relations
// dropped. Minimal when the relations are homogeneous.
ModulePresentation minimize(const ModulePresentation& m);

// Drops columns that lie in the span of the remaining ones.
Matrix prune_redundant_columns(const Matrix& m);

struct Resolution {
  // Resolution of the lifted module over S. maps[0] presents M.
  FreeComplex complex;
  std::size_t rank0 = 0;
  // Number of nonzero maps when the resolution terminated within the cap.
  std::optional<std::size_t> pd;
  bool zero_module = false;
};

Resolution free_resolution(const ModulePresentation& m, std::size_t cap);

// { r : r M = 0 }, as an ideal of the module's ring.
Ideal annihilator(const ModulePresentation& m);

}  // namespace frobalg
