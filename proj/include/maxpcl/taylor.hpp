#pragma once

// Truncated univariate Taylor series f(x0 + s) = sum_k c[k] s^k, k <= N.
//
// Arithmetic on these propagates exact derivatives through closed-form
// expressions (forward-mode differentiation). T is double for real
// parametrizations and std::complex<double> for holomorphic data.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <type_traits>

namespace maxpcl {

template <class T, int N>
class Taylor {
  static_assert(N >= 0);

 public:
  using value_type = T;
  static constexpr int order = N;

  constexpr Taylor() : c_{} {}
  constexpr Taylor(T constant) : c_{} { c_[0] = constant; }  // NOLINT

  template <class U, class = std::enable_if_t<std::is_arithmetic_v<U> &&
                                              !std::is_same_v<U, T>>>
  constexpr Taylor(U constant) : c_{} {  // NOLINT
    c_[0] = T(constant);
  }

  /// The series of the identity map at x0 moving with unit speed `dir`.
  static Taylor variable(T x0, T dir = T(1)) {
    Taylor r(x0);
    if constexpr (N >= 1) r.c_[1] = dir;
    return r;
  }

  T& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const T& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }

  T value() const { return c_[0]; }

  /// k-th derivative with respect to the series parameter.
  T derivative(int k) const {
    T r = c_[static_cast<std::size_t>(k)];
    for (int j = 2; j <= k; ++j) r *= T(j);
    return r;
  }

  /// Series of d/ds, one order shorter.
  Taylor<T, (N > 0 ? N - 1 : 0)> differentiate() const {
    Taylor<T, (N > 0 ? N - 1 : 0)> r;
    for (int k = 0; k < N; ++k) r[k] = c_[static_cast<std::size_t>(k + 1)] * T(k + 1);
    return r;
  }

  template <int M>
  Taylor<T, M> truncate() const {
    static_assert(M <= N);
    Taylor<T, M> r;
    for (int k = 0; k <= M; ++k) r[k] = c_[static_cast<std::size_t>(k)];
    return r;
  }

  Taylor operator-() const {
    Taylor r;
    for (int k = 0; k <= N; ++k) r.c_[k] = -c_[k];
    return r;
  }

  Taylor& operator+=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Taylor& operator-=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Taylor& operator*=(const Taylor& o) { return *this = *this * o; }
  Taylor& operator/=(const Taylor& o) { return *this = *this / o; }

  friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }

  friend Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (int k = 0; k <= N; ++k) {
      T acc{};
      for (int j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
      r.c_[k] = acc;
    }
    return r;
  }

  friend Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor q;
    for (int k = 0; k <= N; ++k) {
      T acc = a.c_[k];
      for (int j = 1; j <= k; ++j) acc -= b.c_[j] * q.c_[k - j];
      q.c_[k] = acc / b.c_[0];
    }
    return q;
  }

  // exp, sin/cos and sinh/cosh follow from f' = a' g recurrences.
  friend Taylor exp(const Taylor& a) {
    using std::exp;
    Taylor e;
    e.c_[0] = exp(a.c_[0]);
    for (int k = 1; k <= N; ++k) {
      T acc{};
      for (int j = 1; j <= k; ++j) acc += T(j) * a.c_[j] * e.c_[k - j];
      e.c_[k] = acc / T(k);
    }
    return e;
  }

  friend void sincos(const Taylor& a, Taylor& s, Taylor& c) {
    using std::cos;
    using std::sin;
    s.c_[0] = sin(a.c_[0]);
    c.c_[0] = cos(a.c_[0]);
    for (int k = 1; k <= N; ++k) {
      T as{}, ac{};
      for (int j = 1; j <= k; ++j) {
        as += T(j) * a.c_[j] * c.c_[k - j];
        ac += T(j) * a.c_[j] * s.c_[k - j];
      }
      s.c_[k] = as / T(k);
      c.c_[k] = -ac / T(k);
    }
  }

  friend void sinhcosh(const Taylor& a, Taylor& s, Taylor& c) {
    using std::cosh;
    using std::sinh;
    s.c_[0] = sinh(a.c_[0]);
    c.c_[0] = cosh(a.c_[0]);
    for (int k = 1; k <= N; ++k) {
      T as{}, ac{};
      for (int j = 1; j <= k; ++j) {
        as += T(j) * a.c_[j] * c.c_[k - j];
        ac += T(j) * a.c_[j] * s.c_[k - j];
      }
      s.c_[k] = as / T(k);
      c.c_[k] = ac / T(k);
    }
  }

  friend Taylor sin(const Taylor& a) {
    Taylor s, c;
    sincos(a, s, c);
    return s;
  }
  friend Taylor cos(const Taylor& a) {
    Taylor s, c;
    sincos(a, s, c);
    return c;
  }
  friend Taylor tan(const Taylor& a) {
    Taylor s, c;
    sincos(a, s, c);
    return s / c;
  }
  friend Taylor sinh(const Taylor& a) {
    Taylor s, c;
    sinhcosh(a, s, c);
    return s;
  }
  friend Taylor cosh(const Taylor& a) {
    Taylor s, c;
    sinhcosh(a, s, c);
    return c;
  }

 private:
  std::array<T, N + 1> c_;
};

template <class T, int N, class U,
          class = std::enable_if_t<std::is_constructible_v<T, U> &&
                                   !std::is_same_v<U, Taylor<T, N>>>>
Taylor<T, N> operator+(const Taylor<T, N>& a, const U& b) {
  return a + Taylor<T, N>(T(b));
}
template <class T, int N, class U,
          class = std::enable_if_t<std::is_constructible_v<T, U> &&
                                   !std::is_same_v<U, Taylor<T, N>>>>
Taylor<T, N> operator+(const U& b, const Taylor<T, N>& a) {
  return a + Taylor<T, N>(T(b));
}
template <class T, int N, class U,
          class = std::enable_if_t<std::is_constructible_v<T, U> &&
                                   !std::is_same_v<U, Taylor<T, N>>>>
Taylor<T, N> operator-(const Taylor<T, N>& a, const U& b) {
  return a - Taylor<T, N>(T(b));
}
template <class T, int N, class U,
          class = std::enable_if_t<std::is_constructible_v<T, U> &&
                                   !std::is_same_v<U, Taylor<T, N>>>>
Taylor<T, N> operator-(const U& b, const Taylor<T, N>& a) {
  return Taylor<T, N>(T(b)) - a;
}
template <class T, int N, class U,
          class = std::enable_if_t<std::is_constructible_v<T, U> &&
                                   !std::is_same_v<U, Taylor<T, N>>>>
Taylor<T, N> operator*(const Taylor<T, N>& a, const U& b) {
  Taylor<T, N> r = a;
  for (int k = 0; k <= N; ++k) r[k] *= T(b);
  return r;
}
template <class T, int N, class U,
          class = std::enable_if_t<std::is_constructible_v<T, U> &&
                                   !std::is_same_v<U, Taylor<T, N>>>>
Taylor<T, N> operator*(const U& b, const Taylor<T, N>& a) {
  return a * b;
}
template <class T, int N, class U,
          class = std::enable_if_t<std::is_constructible_v<T, U> &&
                                   !std::is_same_v<U, Taylor<T, N>>>>
Taylor<T, N> operator/(const Taylor<T, N>& a, const U& b) {
  Taylor<T, N> r = a;
  for (int k = 0; k <= N; ++k) r[k] /= T(b);
  return r;
}
template <class T, int N, class U,
          class = std::enable_if_t<std::is_constructible_v<T, U> &&
                                   !std::is_same_v<U, Taylor<T, N>>>>
Taylor<T, N> operator/(const U& b, const Taylor<T, N>& a) {
  return Taylor<T, N>(T(b)) / a;
}

/// Real and imaginary parts of a complex series, coefficientwise.
template <int N>
Taylor<double, N> real_part(const Taylor<std::complex<double>, N>& a) {
  Taylor<double, N> r;
  for (int k = 0; k <= N; ++k) r[k] = a[k].real();
  return r;
}
template <int N>
Taylor<double, N> imag_part(const Taylor<std::complex<double>, N>& a) {
  Taylor<double, N> r;
  for (int k = 0; k <= N; ++k) r[k] = a[k].imag();
  return r;
}

}  // namespace maxpcl
