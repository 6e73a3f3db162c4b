#include <utility>

#include "braidwire/error.hpp"
#include "braidwire/homology.hpp"

namespace braidwire {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Row and column operations applied to D together with the matching
// operation on U (rows) or V (columns).
class Reducer {
 public:
  explicit Reducer(const IntMatrix& m)
      : rows_(m.size()), cols_(m.empty() ? 0 : m[0].size()), d_(m), u_(identity(rows_)), v_(identity(cols_)) {}

  SmithForm run() {
    std::size_t t = 0;
    for (; t < rows_ && t < cols_; ++t) {
      if (!place_smallest(t)) break;
      for (;;) {
        if (clear_column(t) && clear_row(t) && fix_divisibility(t)) break;
      }
      if (sgn(d_[t][t]) < 0) negate_row(t);
    }
    SmithForm out{std::move(u_), std::move(d_), std::move(v_), t};
    return out;
  }

 private:
  // Moves the smallest nonzero entry of the trailing block to (t,t).
  bool place_smallest(std::size_t t) {
    std::size_t bi = rows_, bj = cols_;
    for (std::size_t i = t; i < rows_; ++i)
      for (std::size_t j = t; j < cols_; ++j)
        if (sgn(d_[i][j]) != 0 && (bi == rows_ || mpz_cmpabs(d_[i][j].get_mpz_t(), d_[bi][bj].get_mpz_t()) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi == rows_) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // True when column t is zero below the pivot; otherwise leaves a smaller
  // pivot in place.
  bool clear_column(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (sgn(d_[i][t]) == 0) continue;
      add_row(i, t, -nearest(d_[i][t], d_[t][t]));
      if (sgn(d_[i][t]) != 0) {
        swap_rows(t, i);
        return false;
      }
    }
    return true;
  }

  bool clear_row(std::size_t t) {
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (sgn(d_[t][j]) == 0) continue;
      add_col(j, t, -nearest(d_[t][j], d_[t][t]));
      if (sgn(d_[t][j]) != 0) {
        swap_cols(t, j);
        return false;
      }
    }
    return true;
  }

  // The pivot must divide the whole trailing block; otherwise fold the
  // offending row into row t and reduce again.
  bool fix_divisibility(std::size_t t) {
    for (std::size_t i = t + 1; i < rows_; ++i)
      for (std::size_t j = t + 1; j < cols_; ++j)
        if (!mpz_divisible_p(d_[i][j].get_mpz_t(), d_[t][t].get_mpz_t())) {
          add_row(t, i, 1);
          return false;
        }
    return true;
  }

  // a/b rounded to the nearest integer; keeps remainders, and with them the
  // transform entries, small.
  static mpz_class nearest(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (mpz_cmpabs(mpz_class(2 * r).get_mpz_t(), b.get_mpz_t()) > 0) q += 1;
    return q;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(d_[a], d_[b]);
    std::swap(u_[a], u_[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& r : d_) std::swap(r[a], r[b]);
    for (auto& r : v_) std::swap(r[a], r[b]);
  }
  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const mpz_class& f) {
    for (std::size_t j = 0; j < cols_; ++j) d_[dst][j] += f * d_[src][j];
    for (std::size_t j = 0; j < rows_; ++j) u_[dst][j] += f * u_[src][j];
  }
  void add_col(std::size_t dst, std::size_t src, const mpz_class& f) {
    for (auto& r : d_) r[dst] += f * r[src];
    for (auto& r : v_) r[dst] += f * r[src];
  }
  void negate_row(std::size_t t) {
    for (auto& x : d_[t]) x = -x;
    for (auto& x : u_[t]) x = -x;
  }

  std::size_t rows_, cols_;
  IntMatrix d_, u_, v_;
};

void check(bool ok, const char* what) {
  if (!ok) throw VerificationFailure(std::string("Smith normal form check failed: ") + what);
}

}  // namespace

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(D[i][i]);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = b.empty() ? 0 : b[0].size();
  if (n && a[0].size() != k) throw Error("matrix dimension mismatch");
  IntMatrix out(n, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (sgn(a[i][l]) != 0)
        for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
  return out;
}

mpz_class determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& r : m)
    if (r.size() != n) throw Error("determinant of a non-square matrix");
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (const auto& r : m)
    if (r.size() != cols) throw Error("ragged matrix");
  SmithForm s = Reducer(m).run();

  check(multiply(multiply(s.U, m), s.V) == s.D, "U*M*V != D");
  check(abs(determinant(s.U)) == 1, "U is not unimodular");
  check(abs(determinant(s.V)) == 1, "V is not unimodular");
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (i == j && i < s.rank) continue;
      check(sgn(s.D[i][j]) == 0, "D has an entry off the leading diagonal");
    }
  for (std::size_t i = 0; i < s.rank; ++i) {
    check(sgn(s.D[i][i]) > 0, "nonpositive invariant factor");
    if (i + 1 < s.rank) check(mpz_divisible_p(s.D[i + 1][i + 1].get_mpz_t(), s.D[i][i].get_mpz_t()), "divisibility chain broken");
  }
  return s;
}

}  // namespace braidwire
