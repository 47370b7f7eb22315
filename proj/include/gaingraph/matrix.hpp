#pragma once

// Dense complex matrices and a Hermitian eigenvalue solver.
//
// Eigenvalues come from the real symmetric embedding
//
//     M = A + iB   ->   [ A  -B ]
//                       [ B   A ]
//
// whose spectrum is that of M with every eigenvalue doubled, diagonalized by
// cyclic Jacobi rotations.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaingraph {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ComplexMatrix adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
    return t;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    ComplexMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }

  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a.require_same_shape(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }

  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  /// Largest |m_ij - conj(m_ji)|; zero for an exactly Hermitian matrix.
  double hermitian_defect() const {
    if (!square()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i; j < cols_; ++j) d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
  }

  Complex trace() const {
    Complex t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : data_) s += std::norm(x);
    return std::sqrt(s);
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& x : data_) m = std::max(m, std::abs(x));
    return m;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
  void require_same_shape(const ComplexMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Eigenvalues sorted ascending.
struct Spectrum {
  std::vector<double> eigenvalues;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  bool empty() const noexcept { return eigenvalues.empty(); }
  double min() const { return eigenvalues.at(0); }
  double max() const { return eigenvalues.at(eigenvalues.size() - 1); }
};

/// Largest entrywise gap between two sorted spectra of equal length.
inline double max_spectral_difference(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) throw std::invalid_argument("spectra have different lengths");
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a.eigenvalues[k] - b.eigenvalues[k]));
  return d;
}

class NonHermitianError : public std::invalid_argument {
public:
  explicit NonHermitianError(double defect)
      : std::invalid_argument("matrix is not Hermitian (max asymmetry " + std::to_string(defect) + ")"),
        defect_(defect) {}
  double defect() const noexcept { return defect_; }

private:
  double defect_;
};

struct JacobiOptions {
  double tolerance = 1e-12;  // off-diagonal Frobenius norm, scaled by max(1, |M|_F)
  int max_sweeps = 100;
  double pair_tolerance = 1e-8;
};

namespace detail {

/// Eigenvalues of a real symmetric row-major matrix by cyclic Jacobi sweeps.
inline std::vector<double> jacobi_symmetric(std::vector<double> a, std::size_t n, const JacobiOptions& opt) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += at(i, j) * at(i, j);
    return std::sqrt(s);
  };
  double total = 0.0;
  for (double x : a) total += x * x;
  const double threshold = opt.tolerance * std::max(1.0, std::sqrt(total));

  int sweep = 0;
  while (off_norm() >= threshold) {
    if (sweep++ == opt.max_sweeps) throw std::runtime_error("Jacobi eigensolver did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p), aqq = at(q, q);
        // Rotation angle from the stable tangent formula.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::abs(theta) > 1e150
                             ? 0.5 / theta
                             : std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = at(p, k) = c * akp - s * akq;
          at(k, q) = at(q, k) = s * akp + c * akq;
        }
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace detail

/// Real spectrum of a Hermitian matrix. Throws NonHermitianError when the
/// defect exceeds hermitian_tolerance.
inline Spectrum hermitian_eigenvalues(const ComplexMatrix& m, double hermitian_tolerance = 1e-12,
                                      const JacobiOptions& opt = {}) {
  if (!m.square()) throw std::invalid_argument("eigenvalues need a square matrix");
  const double defect = m.hermitian_defect();
  if (defect > hermitian_tolerance) throw NonHermitianError(defect);
  const std::size_t n = m.rows();
  const std::size_t big = 2 * n;
  std::vector<double> s(big * big);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Symmetrize so tiny Hermitian defects cannot break the embedding.
      const Complex x = 0.5 * (m(i, j) + std::conj(m(j, i)));
      s[i * big + j] = x.real();
      s[(i + n) * big + (j + n)] = x.real();
      s[i * big + (j + n)] = -x.imag();
      s[(i + n) * big + j] = x.imag();
    }
  const std::vector<double> doubled = detail::jacobi_symmetric(std::move(s), big, opt);
  Spectrum out;
  out.eigenvalues.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = doubled[2 * k], b = doubled[2 * k + 1];
    if (std::abs(a - b) > opt.pair_tolerance)
      throw std::runtime_error("embedded eigenvalues failed to pair up (" + std::to_string(a) + " vs " +
                               std::to_string(b) + ")");
    out.eigenvalues.push_back(0.5 * (a + b));
  }
  return out;
}

// Text format: "rows cols" on the first line, then one line per row holding
// entries "re+imi" separated by spaces, 17 significant digits.

inline std::string format_complex(Complex z) {
  char buf[96];
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  const char sign = im < 0.0 ? '-' : '+';
  std::snprintf(buf, sizeof buf, "%.17g%c%.17gi", re, sign, std::abs(im));
  return buf;
}

inline std::optional<Complex> parse_complex(const std::string& text) {
  if (text.size() < 2 || text.back() != 'i') return std::nullopt;
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size() - 1; k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return std::nullopt;
  const std::string re_s = text.substr(0, split);
  const std::string im_s = text.substr(split, text.size() - 1 - split);
  try {
    std::size_t used = 0;
    const double re = std::stod(re_s, &used);
    if (used != re_s.size()) return std::nullopt;
    const double im = std::stod(im_s, &used);
    if (used != im_s.size()) return std::nullopt;
    return Complex{re, im};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

inline void write_matrix(std::ostream& os, const ComplexMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << format_complex(m(r, c));
    }
    os << '\n';
  }
}

inline std::string to_text(const ComplexMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m);
  return os.str();
}

inline ComplexMatrix read_matrix(std::istream& is) {
  std::size_t rows = 0, cols = 0;
  if (!(is >> rows >> cols)) throw std::invalid_argument("matrix header must be \"rows cols\"");
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::string tok;
      if (!(is >> tok)) throw std::invalid_argument("matrix text ends early");
      auto z = parse_complex(tok);
      if (!z) throw std::invalid_argument("bad matrix entry \"" + tok + "\"");
      m(r, c) = *z;
    }
  return m;
}

}  // namespace gaingraph
