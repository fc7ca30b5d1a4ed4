#include "semitop/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace semitop {

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("smith normal form: entry overflow");
  }
  return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("smith normal form: entry overflow");
  }
  return r;
}

}  // namespace

std::vector<int64_t>
smith_diagonal(std::vector<std::vector<int64_t>> m) {
  size_t const rows = m.size();
  size_t const cols = rows == 0 ? 0 : m[0].size();
  for (auto const& row : m) {
    if (row.size() != cols) {
      throw std::invalid_argument("ragged matrix");
    }
  }
  size_t const         n = std::min(rows, cols);
  std::vector<int64_t> diag(n, 0);

  size_t t = 0;
  while (t < n) {
    // pivot: smallest nonzero absolute value in the working submatrix
    size_t  pi = t, pj = t;
    int64_t best = 0;
    for (size_t i = t; i < rows; ++i) {
      for (size_t j = t; j < cols; ++j) {
        int64_t a = std::llabs(m[i][j]);
        if (a != 0 && (best == 0 || a < best)) {
          best = a;
          pi   = i;
          pj   = j;
        }
      }
    }
    if (best == 0) {
      break;  // submatrix is zero
    }
    std::swap(m[t], m[pi]);
    for (size_t i = t; i < rows; ++i) {
      std::swap(m[i][t], m[i][pj]);
    }

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) {
          continue;
        }
        int64_t q = m[i][t] / m[t][t];
        for (size_t j = t; j < cols; ++j) {
          m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
        }
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);  // smaller remainder becomes the pivot
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) {
          continue;
        }
        int64_t q = m[t][j] / m[t][t];
        for (size_t i = t; i < rows; ++i) {
          m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
        }
        if (m[t][j] != 0) {
          for (size_t i = t; i < rows; ++i) {
            std::swap(m[i][t], m[i][j]);
          }
          clean = false;
        }
      }
      if (clean) {
        // divisibility: the pivot must divide every remaining entry
        for (size_t i = t + 1; i < rows && clean; ++i) {
          for (size_t j = t + 1; j < cols && clean; ++j) {
            if (m[i][j] % m[t][t] != 0) {
              for (size_t jj = t; jj < cols; ++jj) {
                m[t][jj] = checked_sub(m[t][jj], -m[i][jj]);
              }
              clean = false;
            }
          }
        }
      }
    }
    diag[t] = std::llabs(m[t][t]);
    ++t;
  }
  return diag;
}

std::vector<int64_t> abelian_invariants(size_t ngens,
                                        std::vector<GroupWord> const& relators) {
  std::vector<std::vector<int64_t>> m(
      relators.size(), std::vector<int64_t>(ngens, 0));
  for (size_t i = 0; i < relators.size(); ++i) {
    for (int32_t x : relators[i]) {
      auto g = static_cast<size_t>(std::abs(x)) - 1;
      if (g >= ngens) {
        throw std::invalid_argument("relator letter out of range");
      }
      m[i][g] += x > 0 ? 1 : -1;
    }
  }
  auto diag = smith_diagonal(std::move(m));

  std::vector<int64_t> out;
  size_t               rank = 0;
  for (int64_t d : diag) {
    if (d != 0) {
      ++rank;
      if (d > 1) {
        out.push_back(d);
      }
    }
  }
  for (size_t i = rank; i < ngens; ++i) {
    out.push_back(0);
  }
  return out;
}

}  // namespace semitop
