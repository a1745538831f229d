#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hodge {

/// Raised for contract violations and inputs that fail a structural invariant.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of a decidable check: pass/fail plus the first violation found.
struct Verdict {
  bool pass = true;
  std::string detail;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return pass; }
};

using Rational = mpq_class;

/// Parses "a", "a/b" or a decimal literal such as "-0.25" into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Exact element of Q(i).
class GaussScalar {
 public:
  GaussScalar() = default;
  GaussScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussScalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  GaussScalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussScalar i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  GaussScalar conj() const { return {re_, -im_}; }
  /// re^2 + im^2
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GaussScalar inverse() const;

  GaussScalar& operator+=(const GaussScalar& o);
  GaussScalar& operator-=(const GaussScalar& o);
  GaussScalar& operator*=(const GaussScalar& o);
  GaussScalar& operator/=(const GaussScalar& o) { return *this *= o.inverse(); }

  friend GaussScalar operator+(GaussScalar a, const GaussScalar& b) { return a += b; }
  friend GaussScalar operator-(GaussScalar a, const GaussScalar& b) { return a -= b; }
  friend GaussScalar operator*(GaussScalar a, const GaussScalar& b) { return a *= b; }
  friend GaussScalar operator/(GaussScalar a, const GaussScalar& b) { return a /= b; }
  GaussScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussScalar& a, const GaussScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussScalar& a, const GaussScalar& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string str() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussScalar& z);

/// i^k for any integer k.
GaussScalar pow_i(int k);

/// Exact square root in Q(i) when one exists.
std::optional<GaussScalar> sqrt_exact(const GaussScalar& z);

using Vec = std::vector<GaussScalar>;

Vec conj(const Vec& v);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const GaussScalar& s, const Vec& v);
/// Unit vector e_i of length n.
Vec unit_vector(std::size_t n, std::size_t i);

/// Dense row-major matrix over Q(i).
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n);
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_columns(const std::vector<Vec>& cols, std::size_t rows);
  /// Convenience for tests and fixtures: integer entries, row by row.
  static Mat from_ints(std::size_t rows, std::size_t cols, const std::vector<long>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_list() const;
  std::vector<Vec> column_list() const;

  Mat transpose() const;
  Mat conj() const;
  bool is_zero() const;
  bool is_real() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const GaussScalar& s, Mat m);
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Vec operator*(const Mat& a, const Vec& v);
  Mat operator-() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussScalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

/// Reduced row-echelon form; the result keeps the input row count (zero rows last).
Mat rref(const Mat& m);
/// Like rref() but also reports pivot columns; zero rows are dropped.
Mat rref_nonzero(const Mat& m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Mat& m);
/// Throws Error when the matrix is singular.
Mat inverse(const Mat& m);
GaussScalar det(const Mat& m);
Mat power(const Mat& m, unsigned k);
/// Commutator ab - ba.
Mat bracket(const Mat& a, const Mat& b);
/// u^T q v (no conjugation).
GaussScalar bilinear(const Vec& u, const Mat& q, const Vec& v);
bool is_nilpotent(const Mat& m);
/// exp of a nilpotent matrix as a finite series; throws when m is not nilpotent.
Mat exp_nilpotent(const Mat& m);

/// A subspace of Q(i)^n stored in canonical form: the nonzero rows of an RREF matrix.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t ambient);
  static Subspace row_space(const Mat& m);
  static Subspace column_space(const Mat& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  std::vector<Vec> vectors() const { return basis_.row_list(); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& s) const;
  /// Residue of v after reduction against the canonical basis; zero iff v is in the span.
  Vec reduce(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(std::size_t ambient, Mat basis, std::vector<std::size_t> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

std::ostream& operator<<(std::ostream& os, const Subspace& s);

/// {v : m v = 0}
Subspace kernel(const Mat& m);
/// Column space of m.
Subspace image(const Mat& m);
Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);
/// Entrywise complex conjugation of the subspace.
Subspace conjugate(const Subspace& s);
/// Image of s under the linear map m.
Subspace apply(const Mat& m, const Subspace& s);
/// True when the family of subspaces is independent (dimensions add up in the sum).
bool is_direct_sum(const std::vector<Subspace>& parts);

}  // namespace hodge
