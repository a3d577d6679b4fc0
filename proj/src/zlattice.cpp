#include <qinv/zlattice.hpp>

#include <stdexcept>

namespace qinv {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  IntVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

void IntMatrix::append_row(const IntVec& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
  e_.insert(e_.end(), v.begin(), v.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t a, std::size_t b, const Int& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(a, j) += k * at(b, j);
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, c) = -at(i, c);
}

void IntMatrix::add_col_multiple(std::size_t a, std::size_t b, const Int& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, a) += k * at(i, b);
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec vec_mat_mul(const IntVec& v, const IntMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vec_mat_mul: shape mismatch");
  IntVec out(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m.at(i, j);
  }
  return out;
}

namespace {

// In-place row reduction to Hermite form; mirror ops onto *u when given.
// Returns the rank.  Rows [0, rank) hold the HNF basis; the rest are zero.
std::size_t hnf_in_place(IntMatrix& m, IntMatrix* u) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // clear column c below r down to a single nonzero via gcd steps
    while (true) {
      std::size_t best = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i) {
        if (m.at(i, c) == 0) continue;
        if (best == m.rows() || boost::multiprecision::abs(m.at(i, c)) < boost::multiprecision::abs(m.at(best, c)))
          best = i;
      }
      if (best == m.rows()) break;  // column already clear
      m.swap_rows(r, best);
      if (u) u->swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (m.at(i, c) == 0) continue;
        Int q = m.at(i, c) / m.at(r, c);  // truncated division shrinks |entry|
        m.add_row_multiple(i, r, -q);
        if (u) u->add_row_multiple(i, r, -q);
        if (m.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (m.at(r, c) == 0) continue;
    if (m.at(r, c) < 0) {
      m.negate_row(r);
      if (u) u->negate_row(r);
    }
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < r; ++i) {
      Int q = m.at(i, c) / m.at(r, c);
      if (m.at(i, c) - q * m.at(r, c) < 0) q -= 1;  // floor division
      m.add_row_multiple(i, r, -q);
      if (u) u->add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return r;
}

}  // namespace

Lattice hnf(const IntMatrix& m) {
  IntMatrix w = m;
  std::size_t r = hnf_in_place(w, nullptr);
  Lattice out;
  out.ambient_rank = m.cols();
  out.basis = IntMatrix(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.basis.at(i, j) = w.at(i, j);
  return out;
}

HnfTransform hnf_with_transform(const IntMatrix& m) {
  HnfTransform t;
  t.h = m;
  t.u = IntMatrix::identity(m.rows());
  hnf_in_place(t.h, &t.u);
  return t;
}

SnfResult snf(const IntMatrix& m) {
  SnfResult s;
  IntMatrix d = m;
  s.left = IntMatrix::identity(m.rows());
  s.right = IntMatrix::identity(m.cols());
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      // move the least nonzero entry of the trailing block to (k,k)
      std::size_t bi = m.rows(), bj = m.cols();
      for (std::size_t i = k; i < m.rows(); ++i)
        for (std::size_t j = k; j < m.cols(); ++j) {
          if (d.at(i, j) == 0) continue;
          if (bi == m.rows() ||
              boost::multiprecision::abs(d.at(i, j)) < boost::multiprecision::abs(d.at(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m.rows()) break;  // trailing block is zero
      d.swap_rows(k, bi);
      s.left.swap_rows(k, bi);
      d.swap_cols(k, bj);
      s.right.swap_cols(k, bj);
      bool clean = true;
      for (std::size_t i = k + 1; i < m.rows(); ++i) {
        Int q = d.at(i, k) / d.at(k, k);
        d.add_row_multiple(i, k, -q);
        s.left.add_row_multiple(i, k, -q);
        if (d.at(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < m.cols(); ++j) {
        Int q = d.at(k, j) / d.at(k, k);
        d.add_col_multiple(j, k, -q);
        s.right.add_col_multiple(j, k, -q);
        if (d.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;
      // enforce divisibility: fold any non-multiple into row k and restart
      bool divides = true;
      for (std::size_t i = k + 1; i < m.rows() && divides; ++i)
        for (std::size_t j = k + 1; j < m.cols() && divides; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            d.add_row_multiple(k, i, 1);
            s.left.add_row_multiple(k, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (d.at(k, k) < 0) {
      d.negate_row(k);
      s.left.negate_row(k);
    }
  }
  s.invariant_factors.resize(n);
  for (std::size_t k = 0; k < n; ++k) s.invariant_factors[k] = d.at(k, k);
  return s;
}

Lattice kernel_basis(const IntMatrix& m) {
  // Rows of u aligned with zero rows of h span the left kernel.
  HnfTransform t = hnf_with_transform(m);
  std::vector<IntVec> ker;
  for (std::size_t i = 0; i < t.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < t.h.cols() && zero; ++j) zero = (t.h.at(i, j) == 0);
    if (zero) ker.push_back(t.u.row(i));
  }
  return lattice_from_rows(m.rows(), ker);
}

Lattice lattice_from_rows(std::size_t ambient_rank, const std::vector<IntVec>& rows) {
  return hnf(IntMatrix::from_rows(rows, ambient_rank));
}

Lattice zero_lattice(std::size_t ambient_rank) {
  Lattice l;
  l.ambient_rank = ambient_rank;
  l.basis = IntMatrix(0, ambient_rank);
  return l;
}

Lattice full_lattice(std::size_t ambient_rank) {
  Lattice l;
  l.ambient_rank = ambient_rank;
  l.basis = IntMatrix::identity(ambient_rank);
  return l;
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank != b.ambient_rank) throw std::invalid_argument("intersect: ambient-rank mismatch");
  // (x|y) * [A; -B] = 0  <=>  x*A = y*B; the common value x*A runs over a ∩ b.
  IntMatrix stacked(a.rank() + b.rank(), a.ambient_rank);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.ambient_rank; ++j) stacked.at(i, j) = a.basis.at(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.ambient_rank; ++j) stacked.at(a.rank() + i, j) = -b.basis.at(i, j);
  Lattice ker = kernel_basis(stacked);
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < ker.rank(); ++i) {
    IntVec xy = ker.basis.row(i);
    IntVec x(xy.begin(), xy.begin() + a.rank());
    gens.push_back(vec_mat_mul(x, a.basis));
  }
  return lattice_from_rows(a.ambient_rank, gens);
}

std::optional<IntVec> coordinates(const Lattice& l, const IntVec& v) {
  if (v.size() != l.ambient_rank) throw std::invalid_argument("coordinates: length mismatch");
  IntVec w = v;
  IntVec x(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i) {
    std::size_t c = 0;
    while (c < l.ambient_rank && l.basis.at(i, c) == 0) ++c;
    // pivot column: rows below i are zero there, so the coefficient is forced
    if (w[c] % l.basis.at(i, c) != 0) return std::nullopt;
    x[i] = w[c] / l.basis.at(i, c);
    for (std::size_t j = 0; j < l.ambient_rank; ++j) w[j] -= x[i] * l.basis.at(i, j);
  }
  for (const Int& e : w)
    if (e != 0) return std::nullopt;
  return x;
}

bool contains(const Lattice& l, const IntVec& v) {
  return coordinates(l, v).has_value();
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_rank != b.ambient_rank) throw std::invalid_argument("lattice_sum: ambient-rank mismatch");
  IntMatrix stacked(a.rank() + b.rank(), a.ambient_rank);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.ambient_rank; ++j) stacked.at(i, j) = a.basis.at(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.ambient_rank; ++j) stacked.at(a.rank() + i, j) = b.basis.at(i, j);
  return hnf(stacked);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix w = m;
  return hnf_in_place(w, nullptr);
}

}  // namespace qinv
