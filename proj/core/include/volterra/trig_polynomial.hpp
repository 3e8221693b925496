#pragma once

#include <array>
#include <complex>
#include <map>
#include <span>
#include <vector>

namespace volterra {

using complex = std::complex<double>;

/// Largest torus dimension the calculus is built for.
inline constexpr int kMaxDim = 2;

/// Integer multi-index; entries beyond the active dimension are zero.
using MultiIndex = std::array<int, kMaxDim>;

/// Point on the torus T^d; unused coordinates are ignored.
using Point = std::array<double, kMaxDim>;

/// Finite Fourier series Σ c_k e^{i⟨k,x⟩} on T^d with complex amplitudes.
///
/// Every amplitude carries a magnitude bound of the floating-point terms that
/// were summed to produce it. An amplitude whose value falls below
/// kCancellation times that bound is dropped, so exact algebraic cancellations
/// come out as exact zeros rather than rounding residue.
class TrigPolynomial {
 public:
  static constexpr double kCancellation = 64.0 * 2.220446049250313e-16;

  struct Amplitude {
    complex value;
    double magnitude;
  };

  TrigPolynomial() = default;
  explicit TrigPolynomial(int dim);

  static TrigPolynomial constant(int dim, complex c);
  static TrigPolynomial monomial(int dim, const MultiIndex& freq, complex c);
  /// amplitude·cos(freq·x_axis).
  static TrigPolynomial cosine(int dim, int axis, int freq, double amplitude);
  /// amplitude·sin(freq·x_axis).
  static TrigPolynomial sine(int dim, int axis, int freq, double amplitude);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  /// Largest |k_i| over stored frequencies.
  int max_frequency() const;

  complex coefficient(const MultiIndex& freq) const;
  const std::map<MultiIndex, Amplitude>& terms() const { return terms_; }

  /// Adds c·e^{i⟨freq,x⟩}.
  void add(const MultiIndex& freq, complex c);

  complex operator()(const Point& x) const;

  TrigPolynomial derivative(int axis) const;
  /// Pointwise complex conjugate, i.e. c_k ↦ conj(c_{-k}).
  TrigPolynomial conjugate() const;

  /// True when c_{-k} = conj(c_k) for every stored k (to `tol` absolute).
  bool is_real_valued(double tol = 0.0) const;

  TrigPolynomial& operator+=(const TrigPolynomial& other);
  TrigPolynomial& operator-=(const TrigPolynomial& other);
  TrigPolynomial& operator*=(complex s);

  friend TrigPolynomial operator+(TrigPolynomial a, const TrigPolynomial& b) { return a += b; }
  friend TrigPolynomial operator-(TrigPolynomial a, const TrigPolynomial& b) { return a -= b; }
  friend TrigPolynomial operator*(TrigPolynomial a, complex s) { return a *= s; }
  friend TrigPolynomial operator*(complex s, TrigPolynomial a) { return a *= s; }
  TrigPolynomial operator-() const;

  friend TrigPolynomial operator*(const TrigPolynomial& a, const TrigPolynomial& b);

  /// Exact amplitude equality.
  friend bool operator==(const TrigPolynomial& a, const TrigPolynomial& b);

  /// Largest |c_k|.
  double max_abs() const;

 private:
  void prune(const MultiIndex& freq);

  int dim_ = 1;
  std::map<MultiIndex, Amplitude> terms_;
};

/// max_k |a_k - b_k| <= rel_tol * max(1, max|a|, max|b|).
bool approx_equal(const TrigPolynomial& a, const TrigPolynomial& b, double rel_tol);

/// Projects samples on the uniform grid (2π j/n)^d onto a trigonometric
/// polynomial, dropping amplitudes below `drop_below` times the largest one.
TrigPolynomial interpolate_on_grid(int dim, int n, std::span<const complex> samples,
                                   double drop_below = 1e-15);

/// Uniform grid {2π j/n}^d, row-major with x_0 varying slowest.
std::vector<Point> uniform_grid(int dim, int n);

}  // namespace volterra
