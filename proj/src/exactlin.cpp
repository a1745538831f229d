#include "hodge/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hodge {

namespace {

bool is_decimal(const std::string& s) { return s.find('.') != std::string::npos; }

std::optional<Rational> sqrt_rational(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (sgn(r) == 0) return Rational(0);
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  mpz_class sn;
  mpz_class sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  Rational out(sn, sd);
  out.canonicalize();
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error("empty rational literal");
  try {
    if (is_decimal(s)) {
      bool neg = false;
      std::size_t pos = 0;
      if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
      }
      const auto dot = s.find('.');
      std::string whole = s.substr(pos, dot - pos);
      std::string frac = s.substr(dot + 1);
      if (whole.empty()) whole = "0";
      if (frac.find_first_not_of("0123456789") != std::string::npos ||
          whole.find_first_not_of("0123456789") != std::string::npos) {
        throw Error("malformed decimal literal '" + text + "'");
      }
      mpz_class num(whole + frac, 10);
      mpz_class den = 1;
      for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
      Rational out(neg ? mpz_class(-num) : num, den);
      out.canonicalize();
      return out;
    }
    Rational out(s, 10);
    if (out.get_den() == 0) throw Error("zero denominator in '" + text + "'");
    out.canonicalize();
    return out;
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational literal '" + text + "'");
  }
}

std::string to_string(const Rational& r) { return r.get_str(10); }

GaussScalar GaussScalar::inverse() const {
  if (is_zero()) throw Error("division by zero in Q(i)");
  if (is_real()) return GaussScalar(Rational(1) / re_);
  const Rational n = norm2();
  return {re_ / n, -im_ / n};
}

GaussScalar& GaussScalar::operator+=(const GaussScalar& o) {
  if (sgn(o.re_) != 0) re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussScalar& GaussScalar::operator-=(const GaussScalar& o) {
  if (sgn(o.re_) != 0) re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussScalar& GaussScalar::operator*=(const GaussScalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (sgn(o.re_) == 0) {
    Rational nr = -im_ * o.im_;
    im_ = re_ * o.im_;
    re_ = std::move(nr);
    return *this;
  }
  Rational nr = re_ * o.re_ - im_ * o.im_;
  Rational ni = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(nr);
  im_ = std::move(ni);
  return *this;
}

std::string GaussScalar::str() const {
  if (is_real()) return to_string(re_);
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = to_string(im_) + "i";
  }
  if (sgn(re_) == 0) return im_part;
  if (sgn(im_) > 0) return to_string(re_) + "+" + im_part;
  return to_string(re_) + im_part;
}

std::ostream& operator<<(std::ostream& os, const GaussScalar& z) { return os << z.str(); }

GaussScalar pow_i(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussScalar(1);
    case 1: return GaussScalar::i();
    case 2: return GaussScalar(-1);
    default: return -GaussScalar::i();
  }
}

std::optional<GaussScalar> sqrt_exact(const GaussScalar& z) {
  if (z.is_zero()) return GaussScalar(0);
  const auto r = sqrt_rational(z.norm2());
  if (!r) return std::nullopt;
  const auto x = sqrt_rational((z.re() + *r) / 2);
  if (!x) return std::nullopt;
  if (sgn(*x) != 0) {
    GaussScalar out(*x, z.im() / (2 * *x));
    if (out * out == z) return out;
    return std::nullopt;
  }
  const auto y = sqrt_rational((*r - z.re()) / 2);
  if (!y) return std::nullopt;
  GaussScalar out(Rational(0), *y);
  if (out * out == z) return out;
  return std::nullopt;
}

Vec conj(const Vec& v) {
  Vec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.conj());
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const GaussScalar& x) { return x.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector size mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec operator*(const GaussScalar& s, const Vec& v) {
  Vec out = v;
  if (s.is_one()) return out;
  for (auto& x : out) {
    if (!x.is_zero()) x *= s;
  }
  return out;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Mat m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Mat Mat::from_ints(std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
  if (entries.size() != rows * cols) throw Error("entry count mismatch");
  Mat m(rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = GaussScalar(entries[k]);
  return m;
}

Vec Mat::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Vec Mat::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<Vec> Mat::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

std::vector<Vec> Mat::column_list() const {
  std::vector<Vec> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Mat Mat::conj() const {
  Mat out = *this;
  for (auto& x : out.data_) {
    if (!x.is_real()) x = x.conj();
  }
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussScalar& x) { return x.is_zero(); });
}

bool Mat::is_real() const {
  return std::all_of(data_.begin(), data_.end(), [](const GaussScalar& x) { return x.is_real(); });
}

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  }
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  }
  return *this;
}

Mat operator*(const GaussScalar& s, Mat m) {
  if (s.is_one()) return m;
  for (auto& x : m.data_) {
    if (!x.is_zero()) x *= s;
  }
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw Error("matrix shape mismatch in *");
  Mat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const GaussScalar& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols_ != v.size()) throw Error("matrix/vector shape mismatch");
  Vec out(a.rows_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const GaussScalar& aik = a(i, k);
      if (!aik.is_zero()) out[i] += aik * v[k];
    }
  }
  return out;
}

Mat Mat::operator-() const {
  Mat out = *this;
  for (auto& x : out.data_) {
    if (!x.is_zero()) x = -x;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << "]";
}

namespace {

// In-place Gauss-Jordan elimination; returns pivot columns in row order.
std::vector<std::size_t> eliminate(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t pr = lead;
    while (pr < rows && m(pr, c).is_zero()) ++pr;
    if (pr == rows) continue;
    if (pr != lead) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pr, j), m(lead, j));
    }
    if (!m(lead, c).is_one()) {
      const GaussScalar inv = m(lead, c).inverse();
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(lead, j).is_zero()) m(lead, j) *= inv;
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m(r, c).is_zero()) continue;
      const GaussScalar f = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(lead, j).is_zero()) m(r, j) -= f * m(lead, j);
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

}  // namespace

Mat rref(const Mat& m) {
  Mat out = m;
  eliminate(out);
  return out;
}

Mat rref_nonzero(const Mat& m, std::vector<std::size_t>* pivots) {
  Mat work = m;
  const auto piv = eliminate(work);
  Mat out(piv.size(), m.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = work(r, c);
  }
  if (pivots) *pivots = piv;
  return out;
}

std::size_t rank(const Mat& m) {
  Mat work = m;
  return eliminate(work).size();
}

Mat inverse(const Mat& m) {
  if (!m.is_square()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto piv = eliminate(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error("matrix is singular");
  Mat out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

GaussScalar det(const Mat& m) {
  if (!m.is_square()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Mat a = m;
  GaussScalar out = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && a(pr, c).is_zero()) ++pr;
    if (pr == n) return 0;
    if (pr != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(pr, j), a(c, j));
      out = -out;
    }
    out *= a(c, c);
    const GaussScalar inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const GaussScalar f = a(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!a(c, j).is_zero()) a(r, j) -= f * a(c, j);
      }
    }
  }
  return out;
}

Mat power(const Mat& m, unsigned k) {
  if (!m.is_square()) throw Error("power of a non-square matrix");
  Mat out = Mat::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) out = out * m;
  return out;
}

Mat bracket(const Mat& a, const Mat& b) { return a * b - b * a; }

GaussScalar bilinear(const Vec& u, const Mat& q, const Vec& v) {
  if (u.size() != q.rows() || v.size() != q.cols()) throw Error("bilinear form shape mismatch");
  GaussScalar acc;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    GaussScalar row;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero() && !q(i, j).is_zero()) row += q(i, j) * v[j];
    }
    if (!row.is_zero()) acc += u[i] * row;
  }
  return acc;
}

bool is_nilpotent(const Mat& m) {
  if (!m.is_square()) return false;
  Mat p = m;
  for (std::size_t k = 1; k < m.rows() && !p.is_zero(); ++k) p = p * m;
  return p.is_zero();
}

Mat exp_nilpotent(const Mat& m) {
  if (!m.is_square()) throw Error("exp of a non-square matrix");
  const std::size_t n = m.rows();
  Mat out = Mat::identity(n);
  Mat term = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = GaussScalar(Rational(1, static_cast<long>(k))) * (term * m);
    if (term.is_zero()) return out;
    out += term;
  }
  if (!term.is_zero()) throw Error("exp_nilpotent: matrix is not nilpotent");
  return out;
}

Subspace Subspace::zero(std::size_t ambient) { return {ambient, Mat(0, ambient), {}}; }

Subspace Subspace::full(std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return {ambient, Mat::identity(ambient), piv};
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t ambient) {
  if (vectors.empty()) return zero(ambient);
  return row_space(Mat::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const Mat& m) {
  std::vector<std::size_t> piv;
  Mat basis = rref_nonzero(m, &piv);
  return {m.cols(), std::move(basis), std::move(piv)};
}

Subspace Subspace::column_space(const Mat& m) { return row_space(m.transpose()); }

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw Error("vector does not live in the ambient space");
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const GaussScalar f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = pivots_[i]; c < ambient_; ++c) {
      if (!basis_(i, c).is_zero()) r[c] -= f * basis_(i, c);
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return hodge::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& s) const {
  if (s.ambient_ != ambient_) throw Error("subspaces live in different ambient spaces");
  if (s.dim() > dim()) return false;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (!contains(s.basis_.row(r))) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Subspace& s) {
  return os << "span(dim " << s.dim() << " in " << s.ambient_dim() << ": " << s.basis() << ")";
}

Subspace kernel(const Mat& m) {
  std::vector<std::size_t> piv;
  const Mat r = rref_nonzero(m, &piv);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) {
      if (!r(i, f).is_zero()) v[piv[i]] = -r(i, f);
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, n);
}

Subspace image(const Mat& m) { return Subspace::column_space(m); }

Subspace intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw Error("intersect: ambient mismatch");
  const std::size_t n = s.ambient_dim();
  if (s.is_zero() || t.is_zero()) return Subspace::zero(n);
  if (s.is_full()) return t;
  if (t.is_full()) return s;
  // Zassenhaus: rows [a | a] and [b | 0]; rows with zero left half span the intersection.
  Mat z(s.dim() + t.dim(), 2 * n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      z(r, c) = s.basis()(r, c);
      z(r, n + c) = s.basis()(r, c);
    }
  }
  for (std::size_t r = 0; r < t.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) z(s.dim() + r, c) = t.basis()(r, c);
  }
  std::vector<std::size_t> piv;
  const Mat red = rref_nonzero(z, &piv);
  std::vector<Vec> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] < n) continue;
    Vec v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = red(r, n + c);
    out.push_back(std::move(v));
  }
  return Subspace::span(out, n);
}

Subspace sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw Error("sum: ambient mismatch");
  if (t.is_zero() || s.is_full()) return s;
  if (s.is_zero() || t.is_full()) return t;
  auto rows = s.vectors();
  for (auto& v : t.vectors()) rows.push_back(std::move(v));
  return Subspace::span(rows, s.ambient_dim());
}

Subspace conjugate(const Subspace& s) {
  // Conjugating an RREF matrix keeps it in RREF, so the result is already canonical.
  return Subspace::row_space(s.basis().conj());
}

Subspace apply(const Mat& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw Error("apply: shape mismatch");
  if (s.is_zero()) return Subspace::zero(m.rows());
  return Subspace::row_space(s.basis() * m.transpose());
}

bool is_direct_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) return true;
  std::vector<Vec> rows;
  std::size_t total = 0;
  for (const auto& p : parts) {
    total += p.dim();
    for (auto& v : p.vectors()) rows.push_back(std::move(v));
  }
  if (rows.empty()) return true;
  return rank(Mat::from_rows(rows, parts.front().ambient_dim())) == total;
}

}  // namespace hodge
