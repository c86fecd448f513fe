#include "lp.hpp"

#include <algorithm>

#include "cubeflip/errors.hpp"

namespace cubeflip::lp {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Dense tableau simplex, maximization, Bland's rule throughout (no cycling).
// Artificial columns stay in the tableau after phase 1 so the equality-row
// duals can be read off their reduced costs, but they are barred from
// entering the basis again.
class Simplex {
 public:
  Simplex(Matrix tableau, std::vector<Rational> rhs, std::vector<int> basis)
      : t_(std::move(tableau)), rhs_(std::move(rhs)), basis_(std::move(basis)) {
    rows_ = static_cast<int>(t_.size());
    cols_ = rows_ ? static_cast<int>(t_[0].size()) : 0;
    barred_.assign(static_cast<std::size_t>(cols_), false);
  }

  void bar(int col) { barred_[static_cast<std::size_t>(col)] = true; }

  // Maximize c·v from the current basis. Returns the optimum.
  Rational optimize(const std::vector<Rational>& cost) {
    obj_ = cost;
    obj_value_ = 0;
    for (int i = 0; i < rows_; ++i) price_out(i, cost);

    for (;;) {
      int entering = -1;
      for (int j = 0; j < cols_; ++j) {
        if (barred_[static_cast<std::size_t>(j)]) continue;
        if (obj_[static_cast<std::size_t>(j)] > 0) {
          entering = j;
          break;  // Bland: smallest eligible index
        }
      }
      if (entering < 0) return obj_value_;

      int leaving = -1;
      Rational best_ratio = 0;
      for (int i = 0; i < rows_; ++i) {
        const Rational& coef = t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(entering)];
        if (coef <= 0) continue;
        Rational ratio = rhs_[static_cast<std::size_t>(i)] / coef;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) throw ParadoxError("LP unbounded despite the normalization row");
      pivot(leaving, entering);
    }
  }

  void pivot(int row, int col) {
    const Rational p = t_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    for (int j = 0; j < cols_; ++j) t_[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] /= p;
    rhs_[static_cast<std::size_t>(row)] /= p;
    for (int i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const Rational f = t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < cols_; ++j)
        t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * t_[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
      rhs_[static_cast<std::size_t>(i)] -= f * rhs_[static_cast<std::size_t>(row)];
    }
    const Rational g = obj_[static_cast<std::size_t>(col)];
    if (g != 0) {
      for (int j = 0; j < cols_; ++j)
        obj_[static_cast<std::size_t>(j)] -= g * t_[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)];
      obj_value_ += g * rhs_[static_cast<std::size_t>(row)];
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  int rows() const { return rows_; }
  int basis_of(int row) const { return basis_[static_cast<std::size_t>(row)]; }
  const Rational& rhs(int row) const { return rhs_[static_cast<std::size_t>(row)]; }
  const Rational& coef(int row, int col) const {
    return t_[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
  }
  const Rational& reduced_cost(int col) const { return obj_[static_cast<std::size_t>(col)]; }

 private:
  // Absorbs the cost of the basic variable of row i into the objective row.
  void price_out(int i, const std::vector<Rational>& cost) {
    const Rational c = cost[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
    if (c == 0) return;
    for (int j = 0; j < cols_; ++j)
      obj_[static_cast<std::size_t>(j)] -= c * t_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    obj_value_ += c * rhs_[static_cast<std::size_t>(i)];
    // price_out is called before any pivoting, when the basic column of row i
    // is a unit vector, so subtracting c times the row zeroes its entry. The
    // basic variable's own reduced cost becomes 0 as required.
    obj_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = 0;
  }

  Matrix t_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<bool> barred_;
  std::vector<Rational> obj_;
  Rational obj_value_;
  int rows_ = 0, cols_ = 0;
};

}  // namespace

Feasibility solve_feasibility(const Matrix& A, const std::vector<Rational>& b) {
  const int m = static_cast<int>(A.size());  // primal constraints = dual variables
  const int n = m ? static_cast<int>(A[0].size()) : 0;

  // Dual tableau: rows are the n equalities Aᵀy = 0 plus the normalization
  // Σy + s = 1; columns are y (m), the slack s, and n+1 artificials.
  const int rows = n + 1;
  const int y0 = 0, s_col = m, art0 = m + 1;
  const int cols = m + 1 + rows;

  Matrix t(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols), Rational(0)));
  std::vector<Rational> rhs(static_cast<std::size_t>(rows), Rational(0));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < m; ++j)
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(y0 + j)] =
          A[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
  for (int j = 0; j < m; ++j) t[static_cast<std::size_t>(n)][static_cast<std::size_t>(y0 + j)] = 1;
  t[static_cast<std::size_t>(n)][static_cast<std::size_t>(s_col)] = 1;
  rhs[static_cast<std::size_t>(n)] = 1;

  std::vector<int> basis(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    t[static_cast<std::size_t>(r)][static_cast<std::size_t>(art0 + r)] = 1;
    basis[static_cast<std::size_t>(r)] = art0 + r;
  }

  Simplex simplex(std::move(t), std::move(rhs), std::move(basis));

  // Phase 1: drive the artificials to zero.
  std::vector<Rational> phase1(static_cast<std::size_t>(cols), Rational(0));
  for (int r = 0; r < rows; ++r) phase1[static_cast<std::size_t>(art0 + r)] = -1;
  Rational p1 = simplex.optimize(phase1);
  if (p1 != 0) throw ParadoxError("phase-1 optimum nonzero on a feasible-by-construction system");

  // Pivot leftover basic artificials out (or accept rows as redundant), then
  // bar every artificial from entering again.
  for (int r = 0; r < rows; ++r) {
    if (simplex.basis_of(r) < art0) continue;
    for (int j = 0; j < art0; ++j) {
      if (simplex.coef(r, j) != 0) {
        simplex.pivot(r, j);
        break;
      }
    }
  }
  for (int r = 0; r < rows; ++r) simplex.bar(art0 + r);

  // Phase 2: maximize bᵀy.
  std::vector<Rational> phase2(static_cast<std::size_t>(cols), Rational(0));
  for (int j = 0; j < m; ++j) phase2[static_cast<std::size_t>(y0 + j)] = b[static_cast<std::size_t>(j)];
  Rational omega = simplex.optimize(phase2);

  Feasibility result;
  if (omega > 0) {
    // Farkas certificate: the optimal y.
    result.feasible = false;
    result.farkas.assign(static_cast<std::size_t>(m), Rational(0));
    for (int r = 0; r < simplex.rows(); ++r) {
      int v = simplex.basis_of(r);
      if (v >= y0 && v < m) result.farkas[static_cast<std::size_t>(v)] = simplex.rhs(r);
    }
    // Substitution check: y >= 0, yᵀA = 0, yᵀb > 0.
    Rational yb = 0;
    for (int j = 0; j < m; ++j) {
      if (result.farkas[static_cast<std::size_t>(j)] < 0)
        throw ParadoxError("negative Farkas multiplier");
      yb += result.farkas[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)];
    }
    for (int c = 0; c < n; ++c) {
      Rational acc = 0;
      for (int j = 0; j < m; ++j)
        acc += result.farkas[static_cast<std::size_t>(j)] *
               A[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      if (acc != 0) throw ParadoxError("Farkas combination does not vanish");
    }
    if (yb <= 0) throw ParadoxError("Farkas objective not positive");
    return result;
  }

  // Feasible: the equality-row duals are a primal witness. The sign depends
  // on the tableau orientation, so check by substitution and flip if needed.
  auto witness_ok = [&](const std::vector<Rational>& x) {
    for (int j = 0; j < m; ++j) {
      Rational acc = 0;
      for (int c = 0; c < n; ++c)
        acc += A[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] *
               x[static_cast<std::size_t>(c)];
      if (acc < b[static_cast<std::size_t>(j)]) return false;
    }
    return true;
  };
  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) x[static_cast<std::size_t>(c)] = -simplex.reduced_cost(art0 + c);
  if (!witness_ok(x)) {
    for (auto& v : x) v = -v;
    if (!witness_ok(x)) throw ParadoxError("LP dual witness fails substitution");
  }
  result.feasible = true;
  result.witness = std::move(x);
  return result;
}

}  // namespace cubeflip::lp
