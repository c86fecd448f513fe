#include "linalg.hpp"

#include <cassert>
#include <utility>

namespace cubeflip::linalg {

namespace {

// Row echelon elimination in place. Returns the pivot columns.
std::vector<int> eliminate(Matrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(p)]);
    const Rational pivot = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (int i = r + 1; i < rows; ++i) {
      Rational& lead = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (lead == 0) continue;
      Rational factor = lead / pivot;
      for (int j = c; j < cols; ++j) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            factor * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m) { return static_cast<int>(eliminate(m).size()); }

Rational det(Matrix m) {
  assert(!m.empty() && m.size() == m[0].size());
  int n = static_cast<int>(m.size());
  Rational result = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return Rational(0);
    if (p != c) {
      std::swap(m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(p)]);
      result = -result;
    }
    const Rational pivot = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    result *= pivot;
    for (int i = c + 1; i < n; ++i) {
      Rational& lead = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (lead == 0) continue;
      Rational factor = lead / pivot;
      for (int j = c; j < n; ++j) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            factor * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
      }
    }
  }
  return result;
}

std::optional<std::vector<Rational>> kernel_if_1d(Matrix m, int cols) {
  std::vector<int> pivots = eliminate(m);
  if (static_cast<int>(pivots.size()) != cols - 1) return std::nullopt;

  // Exactly one free column; back-substitute with the free variable at 1.
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  int free_col = 0;
  while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;

  std::vector<Rational> x(static_cast<std::size_t>(cols), Rational(0));
  x[static_cast<std::size_t>(free_col)] = 1;
  for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
    int c = pivots[static_cast<std::size_t>(r)];
    Rational acc = 0;
    for (int j = c + 1; j < cols; ++j) {
      acc += m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] *
             x[static_cast<std::size_t>(j)];
    }
    x[static_cast<std::size_t>(c)] =
        -acc / m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return x;
}

std::optional<std::vector<Rational>> solve(Matrix m, std::vector<Rational> rhs) {
  assert(m.size() == rhs.size());
  int n = static_cast<int>(m.size());
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return std::nullopt;
    std::swap(m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(p)]);
    std::swap(rhs[static_cast<std::size_t>(c)], rhs[static_cast<std::size_t>(p)]);
    const Rational pivot = m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      Rational& lead = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (lead == 0) continue;
      Rational factor = lead / pivot;
      for (int j = c; j < n; ++j) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            factor * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
      }
      rhs[static_cast<std::size_t>(i)] -= factor * rhs[static_cast<std::size_t>(c)];
    }
  }
  for (int i = 0; i < n; ++i) {
    rhs[static_cast<std::size_t>(i)] /= m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
  }
  return rhs;
}

}  // namespace cubeflip::linalg
