#include "volterra/trig_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

#include "volterra/errors.hpp"

namespace volterra {

namespace {

MultiIndex negate(const MultiIndex& k) {
  MultiIndex r{};
  for (int i = 0; i < kMaxDim; ++i) r[i] = -k[i];
  return r;
}

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) throw DomainError("torus dimension must be 1 or 2");
}

}  // namespace

TrigPolynomial::TrigPolynomial(int dim) : dim_(dim) { check_dim(dim); }

TrigPolynomial TrigPolynomial::constant(int dim, complex c) {
  TrigPolynomial p(dim);
  p.add(MultiIndex{}, c);
  return p;
}

TrigPolynomial TrigPolynomial::monomial(int dim, const MultiIndex& freq, complex c) {
  TrigPolynomial p(dim);
  p.add(freq, c);
  return p;
}

TrigPolynomial TrigPolynomial::cosine(int dim, int axis, int freq, double amplitude) {
  TrigPolynomial p(dim);
  if (freq == 0) {
    p.add(MultiIndex{}, amplitude);
    return p;
  }
  MultiIndex k{};
  k[axis] = freq;
  p.add(k, 0.5 * amplitude);
  p.add(negate(k), 0.5 * amplitude);
  return p;
}

TrigPolynomial TrigPolynomial::sine(int dim, int axis, int freq, double amplitude) {
  TrigPolynomial p(dim);
  if (freq == 0) return p;
  MultiIndex k{};
  k[axis] = freq;
  // sin θ = (e^{iθ} − e^{−iθ}) / 2i
  p.add(k, complex(0.0, -0.5 * amplitude));
  p.add(negate(k), complex(0.0, 0.5 * amplitude));
  return p;
}

bool TrigPolynomial::is_constant() const {
  for (const auto& [k, a] : terms_)
    if (k != MultiIndex{}) return false;
  return true;
}

int TrigPolynomial::max_frequency() const {
  int m = 0;
  for (const auto& [k, a] : terms_)
    for (int i = 0; i < dim_; ++i) m = std::max(m, std::abs(k[i]));
  return m;
}

complex TrigPolynomial::coefficient(const MultiIndex& freq) const {
  auto it = terms_.find(freq);
  return it == terms_.end() ? complex{} : it->second.value;
}

void TrigPolynomial::prune(const MultiIndex& freq) {
  auto it = terms_.find(freq);
  if (it == terms_.end()) return;
  const auto& a = it->second;
  if (a.value == complex{} || std::abs(a.value) <= kCancellation * a.magnitude) terms_.erase(it);
}

void TrigPolynomial::add(const MultiIndex& freq, complex c) {
  if (c == complex{}) return;
  for (int i = dim_; i < kMaxDim; ++i)
    if (freq[i] != 0) throw DomainError("frequency has components beyond the torus dimension");
  auto& a = terms_[freq];
  a.value += c;
  a.magnitude += std::abs(c);
  prune(freq);
}

complex TrigPolynomial::operator()(const Point& x) const {
  complex sum{};
  for (const auto& [k, a] : terms_) {
    double phase = 0.0;
    for (int i = 0; i < dim_; ++i) phase += k[i] * x[i];
    sum += a.value * complex(std::cos(phase), std::sin(phase));
  }
  return sum;
}

TrigPolynomial TrigPolynomial::derivative(int axis) const {
  if (axis < 0 || axis >= dim_) throw DomainError("derivative axis out of range");
  TrigPolynomial r(dim_);
  for (const auto& [k, a] : terms_) {
    if (k[axis] == 0) continue;
    const complex factor(0.0, static_cast<double>(k[axis]));
    r.terms_[k] = Amplitude{a.value * factor, a.magnitude * std::abs(k[axis])};
  }
  return r;
}

TrigPolynomial TrigPolynomial::conjugate() const {
  TrigPolynomial r(dim_);
  for (const auto& [k, a] : terms_) r.terms_[negate(k)] = Amplitude{std::conj(a.value), a.magnitude};
  return r;
}

bool TrigPolynomial::is_real_valued(double tol) const {
  for (const auto& [k, a] : terms_)
    if (std::abs(coefficient(negate(k)) - std::conj(a.value)) > tol) return false;
  return true;
}

TrigPolynomial& TrigPolynomial::operator+=(const TrigPolynomial& other) {
  if (other.dim_ != dim_) throw DomainError("trigonometric polynomials of different dimensions");
  for (const auto& [k, b] : other.terms_) {
    auto& a = terms_[k];
    a.value += b.value;
    a.magnitude += b.magnitude;
    prune(k);
  }
  return *this;
}

TrigPolynomial& TrigPolynomial::operator-=(const TrigPolynomial& other) {
  if (other.dim_ != dim_) throw DomainError("trigonometric polynomials of different dimensions");
  for (const auto& [k, b] : other.terms_) {
    auto& a = terms_[k];
    a.value -= b.value;
    a.magnitude += b.magnitude;
    prune(k);
  }
  return *this;
}

TrigPolynomial& TrigPolynomial::operator*=(complex s) {
  if (s == complex{}) {
    terms_.clear();
    return *this;
  }
  const double as = std::abs(s);
  for (auto& [k, a] : terms_) {
    a.value *= s;
    a.magnitude *= as;
  }
  return *this;
}

TrigPolynomial TrigPolynomial::operator-() const {
  TrigPolynomial r = *this;
  for (auto& [k, a] : r.terms_) a.value = -a.value;
  return r;
}

TrigPolynomial operator*(const TrigPolynomial& a, const TrigPolynomial& b) {
  if (a.dim_ != b.dim_) throw DomainError("trigonometric polynomials of different dimensions");
  TrigPolynomial r(a.dim_);
  for (const auto& [ka, aa] : a.terms_) {
    for (const auto& [kb, ab] : b.terms_) {
      MultiIndex k{};
      for (int i = 0; i < kMaxDim; ++i) k[i] = ka[i] + kb[i];
      auto& c = r.terms_[k];
      c.value += aa.value * ab.value;
      c.magnitude += aa.magnitude * ab.magnitude;
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    const auto& c = it->second;
    if (c.value == complex{} || std::abs(c.value) <= TrigPolynomial::kCancellation * c.magnitude)
      it = r.terms_.erase(it);
    else
      ++it;
  }
  return r;
}

bool operator==(const TrigPolynomial& a, const TrigPolynomial& b) {
  if (a.dim_ != b.dim_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.value != ib->second.value) return false;
  return true;
}

double TrigPolynomial::max_abs() const {
  double m = 0.0;
  for (const auto& [k, a] : terms_) m = std::max(m, std::abs(a.value));
  return m;
}

bool approx_equal(const TrigPolynomial& a, const TrigPolynomial& b, double rel_tol) {
  if (a.dim() != b.dim()) return false;
  const double scale = std::max({1.0, a.max_abs(), b.max_abs()});
  for (const auto& [k, amp] : a.terms())
    if (std::abs(amp.value - b.coefficient(k)) > rel_tol * scale) return false;
  for (const auto& [k, amp] : b.terms())
    if (std::abs(amp.value - a.coefficient(k)) > rel_tol * scale) return false;
  return true;
}

std::vector<Point> uniform_grid(int dim, int n) {
  check_dim(dim);
  std::vector<Point> pts;
  const double h = 2.0 * M_PI / n;
  if (dim == 1) {
    for (int i = 0; i < n; ++i) pts.push_back(Point{i * h, 0.0});
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pts.push_back(Point{i * h, j * h});
  }
  return pts;
}

TrigPolynomial interpolate_on_grid(int dim, int n, std::span<const complex> samples,
                                   double drop_below) {
  check_dim(dim);
  const std::size_t expected = dim == 1 ? std::size_t(n) : std::size_t(n) * n;
  if (samples.size() != expected) throw ShapeError("sample count does not match grid");

  Eigen::FFT<double> fft;
  std::vector<complex> spectrum(expected);
  if (dim == 1) {
    std::vector<complex> in(samples.begin(), samples.end());
    fft.fwd(spectrum, in);
  } else {
    // Rows (x_1 fastest) first, then columns.
    std::vector<complex> row(n), out(n);
    std::vector<complex> stage(expected);
    for (int i = 0; i < n; ++i) {
      std::copy_n(samples.begin() + i * n, n, row.begin());
      fft.fwd(out, row);
      std::copy(out.begin(), out.end(), stage.begin() + i * n);
    }
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) row[i] = stage[i * n + j];
      fft.fwd(out, row);
      for (int i = 0; i < n; ++i) spectrum[i * n + j] = out[i];
    }
  }

  const double norm = dim == 1 ? 1.0 / n : 1.0 / (double(n) * n);
  double largest = 0.0;
  for (auto& c : spectrum) {
    c *= norm;
    largest = std::max(largest, std::abs(c));
  }
  auto signed_freq = [n](int idx) { return idx <= n / 2 - 1 ? idx : idx - n; };
  TrigPolynomial p(dim);
  for (std::size_t idx = 0; idx < spectrum.size(); ++idx) {
    if (std::abs(spectrum[idx]) <= drop_below * largest) continue;
    MultiIndex k{};
    if (dim == 1) {
      k[0] = signed_freq(int(idx));
    } else {
      k[0] = signed_freq(int(idx) / n);
      k[1] = signed_freq(int(idx) % n);
    }
    p.add(k, spectrum[idx]);
  }
  return p;
}

}  // namespace volterra
