#include "frobalg/module.hpp"

#include <optional>
#include <stdexcept>

#include "gb_engine.hpp"

namespace frobalg {

Matrix::Matrix(PolyRingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring_)) {}

Matrix Matrix::from_rows(PolyRingPtr ring, const std::vector<std::vector<Polynomial>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  Matrix m(ring, rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < ncols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(PolyRingPtr ring, std::size_t rows,
                            const std::vector<std::vector<Polynomial>>& columns) {
  Matrix m(ring, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("column of wrong length");
    for (std::size_t i = 0; i < rows; ++i) m.set(i, j, columns[j][i]);
  }
  return m;
}

Matrix Matrix::identity(PolyRingPtr ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Polynomial::constant(ring, 1));
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Polynomial value) {
  if (!(*value.ring() == *ring_)) value = value.in(ring_);
  entries_[i * cols_ + j] = std::move(value);
}

std::vector<Polynomial> Matrix::column(std::size_t j) const {
  std::vector<Polynomial> c;
  c.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

std::vector<std::vector<Polynomial>> Matrix::columns() const {
  std::vector<std::vector<Polynomial>> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool Matrix::is_graded() const {
  for (const auto& e : entries_)
    if (!e.is_homogeneous()) return false;
  // Row degrees d_i with deg(a_ij) + d_i depending only on j.
  std::vector<std::optional<std::int64_t>> row_degree(rows_);
  std::vector<std::optional<std::int64_t>> col_degree(cols_);
  bool changed = true;
  while (changed) {
    changed = false;
    bool seeded = false;
    for (std::size_t j = 0; j < cols_; ++j) {
      for (std::size_t i = 0; i < rows_; ++i) {
        const Polynomial& a = at(i, j);
        if (a.is_zero()) continue;
        const std::int64_t d = a.total_degree();
        if (row_degree[i] && !col_degree[j]) {
          col_degree[j] = d + *row_degree[i];
          changed = true;
        } else if (!row_degree[i] && col_degree[j]) {
          row_degree[i] = *col_degree[j] - d;
          changed = true;
        } else if (row_degree[i] && col_degree[j] && *row_degree[i] + d != *col_degree[j]) {
          return false;
        }
      }
    }
    if (!changed) {
      for (std::size_t i = 0; i < rows_ && !seeded; ++i) {
        if (row_degree[i]) continue;
        for (std::size_t j = 0; j < cols_; ++j) {
          if (!at(i, j).is_zero()) {
            row_degree[i] = 0;
            seeded = changed = true;
            break;
          }
        }
      }
    }
  }
  return true;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix shapes do not compose");
  Matrix out(ring_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < other.cols_; ++j) {
      Polynomial s(ring_);
      for (std::size_t k = 0; k < cols_; ++k) {
        if (at(i, k).is_zero() || other.at(k, j).is_zero()) continue;
        s = s + at(i, k) * other.at(k, j).in(ring_);
      }
      out.set(i, j, std::move(s));
    }
  return out;
}

Matrix Matrix::hconcat(const Matrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("row counts differ");
  Matrix out(ring_, rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (std::size_t j = 0; j < other.cols_; ++j) out.set(i, cols_ + j, other.at(i, j));
  }
  return out;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& keep) const {
  Matrix out(ring_, rows_, keep.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out.set(i, j, at(i, keep[j]));
  return out;
}

Matrix Matrix::kron_identity(std::size_t n) const {
  Matrix out(ring_, rows_ * n, cols_ * n);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero())
        for (std::size_t k = 0; k < n; ++k) out.set(i * n + k, j * n + k, at(i, j));
  return out;
}

std::string Matrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) s += ", ";
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) s += ", ";
      s += at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

ModulePresentation::ModulePresentation(Ring ring, Matrix relations)
    : ring_(std::move(ring)), relations_(std::move(relations)) {
  if (!relations_.ring()->same_variables(*ring_.free()))
    throw std::invalid_argument("relations over a different ring");
}

ModulePresentation ModulePresentation::free(const Ring& ring, std::size_t rank) {
  return ModulePresentation(ring, Matrix(ring.free(), rank, 0));
}

ModulePresentation ModulePresentation::cyclic(const Ideal& ideal) {
  return ModulePresentation(ideal.ring(), Matrix::from_rows(ideal.ring().free(), {ideal.generators()}));
}

Matrix ModulePresentation::lifted_relations() const {
  const auto& q = ring_.quotient();
  if (q.empty()) return relations_;
  const std::size_t r = rank();
  Matrix extra(ring_.free(), r, r * q.size());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < q.size(); ++k) extra.set(i, i * q.size() + k, q[k]);
  return relations_.hconcat(extra);
}

bool ModulePresentation::is_graded() const { return lifted_relations().is_graded(); }

std::string ModulePresentation::str() const {
  return "coker " + relations_.str() + " over " + ring_.str();
}

bool FreeComplex::is_complex() const {
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    if (!(maps[i] * maps[i + 1]).is_zero()) return false;
  return true;
}

namespace {

using detail::GbEngine;
using detail::ModVec;

GbEngine module_engine(const PolyRingPtr& ring) { return GbEngine(ring->field(), {ring->order(), true}); }

// Column j as a vector whose coordinate i sits at position offset + i.
ModVec column_vector(const Matrix& m, std::size_t j, std::uint32_t offset = 0) {
  ModVec v;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ModVec part = detail::from_polynomial(m.at(i, j), offset + static_cast<std::uint32_t>(i));
    v.insert(v.end(), part.begin(), part.end());
  }
  return v;
}

// Coordinates [from, from + count) of v.
std::vector<Polynomial> coordinates(const ModVec& v, std::uint32_t from, std::size_t count,
                                    const PolyRingPtr& ring) {
  std::vector<std::vector<Term>> terms(count);
  for (const auto& t : v)
    if (t.pos >= from && t.pos < from + count) terms[t.pos - from].push_back({t.coeff, t.mono});
  std::vector<Polynomial> out;
  out.reserve(count);
  for (auto& ts : terms) out.emplace_back(ring, std::move(ts));
  return out;
}

std::vector<ModVec> span_basis(const Matrix& gens) {
  GbEngine engine = module_engine(gens.ring());
  std::vector<ModVec> vs;
  for (std::size_t j = 0; j < gens.cols(); ++j) vs.push_back(column_vector(gens, j));
  return engine.basis(std::move(vs));
}

Matrix drop_zero_columns(const Matrix& m) {
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (!m.at(i, j).is_zero()) {
        keep.push_back(j);
        break;
      }
    }
  }
  return keep.size() == m.cols() ? m : m.select_columns(keep);
}

}  // namespace

Matrix syzygy_module(const Matrix& a) {
  const PolyRingPtr& ring = a.ring();
  const std::size_t r = a.rows(), k = a.cols();
  GbEngine engine = module_engine(ring);
  std::vector<ModVec> vs;
  vs.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    ModVec v = column_vector(a, j);
    v.push_back({1, Monomial(ring->nvars()), static_cast<std::uint32_t>(r + j)});
    vs.push_back(std::move(v));
  }
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& b : engine.basis(std::move(vs)))
    if (b.front().pos >= r) cols.push_back(coordinates(b, static_cast<std::uint32_t>(r), k, ring));
  return Matrix::from_columns(ring, k, cols);
}

Matrix kernel(const Matrix& d, const Matrix& target_relations) {
  Matrix syz = syzygy_module(d.hconcat(target_relations));
  Matrix out(d.ring(), d.cols(), syz.cols());
  for (std::size_t i = 0; i < d.cols(); ++i)
    for (std::size_t j = 0; j < syz.cols(); ++j) out.set(i, j, syz.at(i, j));
  return drop_zero_columns(out);
}

bool in_column_span(const Matrix& generators, const std::vector<Polynomial>& v) {
  return column_span_contains(generators, Matrix::from_columns(generators.ring(), generators.rows(), {v}));
}

bool column_span_contains(const Matrix& generators, const Matrix& vectors) {
  if (generators.rows() != vectors.rows()) throw std::invalid_argument("row counts differ");
  GbEngine engine = module_engine(generators.ring());
  auto basis = span_basis(generators);
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    ModVec v = column_vector(vectors.map([&](const Polynomial& p) { return p.in(generators.ring()); }), j);
    if (!engine.reduce(std::move(v), basis).empty()) return false;
  }
  return true;
}

bool column_span_equal(const Matrix& a, const Matrix& b) {
  return column_span_contains(a, b) && column_span_contains(b, a);
}

Matrix prune_redundant_columns(const Matrix& m) {
  Matrix current = drop_zero_columns(m);
  std::size_t j = current.cols();
  while (j-- > 0) {
    std::vector<std::size_t> others;
    for (std::size_t l = 0; l < current.cols(); ++l)
      if (l != j) others.push_back(l);
    Matrix rest = current.select_columns(others);
    if (in_column_span(rest, current.column(j))) current = rest;
  }
  return current;
}

ModulePresentation minimize(const ModulePresentation& m) {
  Matrix n = drop_zero_columns(m.lifted_relations());
  const PolyRingPtr& ring = n.ring();
  const PrimeField& field = ring->field();
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t j = 0; j < n.cols() && !pivot; ++j)
      for (std::size_t i = 0; i < n.rows() && !pivot; ++i)
        if (!n.at(i, j).is_zero() && n.at(i, j).is_constant()) pivot = {{i, j}};
    if (!pivot) break;
    const auto [pi, pj] = *pivot;
    const Coeff inv = field.inv(n.at(pi, pj).lead_coeff());
    // Clear row pi with the pivot column, then drop the row and the column.
    for (std::size_t l = 0; l < n.cols(); ++l) {
      if (l == pj || n.at(pi, l).is_zero()) continue;
      Polynomial factor = n.at(pi, l).scaled(inv);
      for (std::size_t i = 0; i < n.rows(); ++i)
        if (!n.at(i, pj).is_zero()) n.set(i, l, n.at(i, l) - factor * n.at(i, pj));
    }
    Matrix smaller(ring, n.rows() - 1, n.cols() - 1);
    for (std::size_t i = 0, si = 0; i < n.rows(); ++i) {
      if (i == pi) continue;
      for (std::size_t l = 0, sl = 0; l < n.cols(); ++l) {
        if (l == pj) continue;
        smaller.set(si, sl++, n.at(i, l));
      }
      ++si;
    }
    n = drop_zero_columns(smaller);
  }
  return ModulePresentation(m.ring().ambient(), prune_redundant_columns(n));
}

Resolution free_resolution(const ModulePresentation& m, std::size_t cap) {
  Resolution res;
  ModulePresentation minimal = minimize(m);
  const Matrix& d1 = minimal.relations();
  res.rank0 = d1.rows();
  if (res.rank0 == 0) {
    res.zero_module = true;
    return res;
  }
  if (d1.cols() == 0) {
    res.pd = 0;
    return res;
  }
  res.complex.maps.push_back(d1);
  while (true) {
    Matrix next = prune_redundant_columns(syzygy_module(res.complex.maps.back()));
    if (next.cols() == 0) {
      res.pd = res.complex.maps.size();
      return res;
    }
    if (res.complex.maps.size() >= cap) return res;
    res.complex.maps.push_back(std::move(next));
  }
}

Ideal annihilator(const ModulePresentation& m) {
  const Ring& ring = m.ring();
  Matrix n = m.lifted_relations();
  const std::size_t r = m.rank();
  std::optional<Ideal> result;
  for (std::size_t j = 0; j < r; ++j) {
    Matrix e(ring.free(), r, 1);
    e.set(j, 0, ring.one());
    Matrix k = kernel(e, n);
    std::vector<Polynomial> gens;
    for (std::size_t c = 0; c < k.cols(); ++c) gens.push_back(k.at(0, c));
    Ideal colon(ring, std::move(gens));
    result = result ? intersect(*result, colon) : colon;
  }
  return result ? *result : Ideal::unit(ring);
}

}  // namespace frobalg
