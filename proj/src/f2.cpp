#include "qcmut/f2.hpp"

namespace qcmut {

F2Matrix F2Matrix::from_integer(const IntMatrix& m) {
  F2Matrix out(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) out.set(i, j, mod_ui(m.at(i, j), 2) != 0);
  return out;
}

bool F2Matrix::is_symmetric_zero_diag() const {
  for (int i = 0; i < n_; ++i) {
    if (get(i, i)) return false;
    for (int j = 0; j < i; ++j)
      if (get(i, j) != get(j, i)) return false;
  }
  return true;
}

F2Vector F2Matrix::mul(const F2Vector& v) const {
  F2Vector out(n_);
  for (int i = 0; i < n_; ++i) {
    bool acc = false;
    for (int j = 0; j < n_; ++j) acc ^= get(i, j) && v.get(j);
    out.set(i, acc);
  }
  return out;
}

namespace {

// Row echelon form; returns pivot column per used row. `extra` columns ride
// along to the right of the main block.
struct Echelon {
  std::vector<F2Vector> rows;  // length n, width = n + extra
  std::vector<int> pivot_col;  // one entry per nonzero row, increasing
};

Echelon eliminate(const F2Matrix& m, const std::vector<F2Vector>& extra) {
  const int n = m.n();
  const int width = n + static_cast<int>(extra.size());
  std::vector<F2Vector> rows(n, F2Vector(width));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i].set(j, m.get(i, j));
    for (size_t k = 0; k < extra.size(); ++k) rows[i].set(n + static_cast<int>(k), extra[k].get(i));
  }
  std::vector<int> pivots;
  int next_row = 0;
  for (int col = 0; col < width && next_row < n; ++col) {
    int pr = -1;
    for (int r = next_row; r < n; ++r)
      if (rows[r].get(col)) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(rows[next_row], rows[pr]);
    for (int r = 0; r < n; ++r)
      if (r != next_row && rows[r].get(col)) rows[r].xor_with(rows[next_row]);
    pivots.push_back(col);
    ++next_row;
  }
  return {std::move(rows), std::move(pivots)};
}

}  // namespace

int f2_rank(const F2Matrix& m) {
  return static_cast<int>(eliminate(m, {}).pivot_col.size());
}

std::vector<F2Vector> f2_kernel_basis(const F2Matrix& m) {
  const int n = m.n();
  Echelon ech = eliminate(m, {});
  std::vector<bool> is_pivot(n, false);
  for (int c : ech.pivot_col) is_pivot[c] = true;
  std::vector<F2Vector> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    F2Vector v(n);
    v.set(free, true);
    for (size_t r = 0; r < ech.pivot_col.size(); ++r)
      if (ech.rows[r].get(free)) v.set(ech.pivot_col[r], true);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool f2_in_image(const F2Matrix& m, const F2Vector& b) {
  return f2_rank_increase(m, {b}) == 0;
}

int f2_rank_increase(const F2Matrix& m, const std::vector<F2Vector>& targets) {
  const int base = f2_rank(m);
  Echelon aug = eliminate(m, targets);
  return static_cast<int>(aug.pivot_col.size()) - base;
}

}  // namespace qcmut
