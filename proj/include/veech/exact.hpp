#ifndef VEECH_EXACT_HPP
#define VEECH_EXACT_HPP

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "veech/pf.hpp"

namespace veech {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Coefficient of x^i at index i.
using IntPoly = std::vector<BigInt>;

/// det(x I - M), by Faddeev-LeVerrier (all divisions are exact).
IntPoly characteristic_polynomial(const MatrixX<long long> &M);

BigInt evaluate(const IntPoly &p, const BigInt &x);

/// Remainder-free division of p by x^2 - t x + d.
bool divisible_by_quadratic(const IntPoly &p, const BigInt &t, const BigInt &d);

/// a + b sqrt(d) with rational a, b; d == 0 marks plain rationals.
class QuadNumber
{
public:
  QuadNumber() = default;
  QuadNumber(BigRational a, BigRational b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {}
  static QuadNumber rational(BigRational a, long long d = 0) { return {std::move(a), BigRational(0), d}; }

  const BigRational &a() const { return a_; }
  const BigRational &b() const { return b_; }
  long long d() const { return d_; }

  int sign() const;
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  double to_double() const;
  QuadNumber conjugate() const { return {a_, -b_, d_}; }
  BigRational norm() const { return a_ * a_ - b_ * b_ * d_; }

  friend QuadNumber operator+(const QuadNumber &x, const QuadNumber &y);
  friend QuadNumber operator-(const QuadNumber &x, const QuadNumber &y);
  friend QuadNumber operator*(const QuadNumber &x, const QuadNumber &y);
  friend QuadNumber operator/(const QuadNumber &x, const QuadNumber &y);
  friend QuadNumber operator-(const QuadNumber &x) { return {-x.a_, -x.b_, x.d_}; }
  friend bool operator==(const QuadNumber &x, const QuadNumber &y) { return x.a_ == y.a_ && x.b_ == y.b_; }

private:
  BigRational a_{0};
  BigRational b_{0};
  long long d_ = 0;
};

/// The dominant eigenvalue as a root of x^2 - trace x + norm, when it has
/// degree at most 2 over Q. Degree 1 is reported with disc == 0 and
/// trace = 2 lambda.
struct QuadraticEigenvalue
{
  long long trace = 0;
  long long norm = 0;
  long long disc = 0; ///< trace^2 - 4 norm; 0 or a non-square
};

std::optional<QuadraticEigenvalue> quadratic_eigenvalue(const MatrixX<long long> &M, double lambda);

/// Exact cylinder data in Q(sqrt(disc)), unnormalized (h(0) = 1).
struct QuadGeometry
{
  long long disc = 0;
  std::vector<QuadNumber> h;
  std::vector<QuadNumber> v;
  QuadNumber area;
};

/// Empty when the eigenvalue has degree > 2.
std::optional<QuadGeometry> quadratic_geometry(const IntMatrix &A, const TwistVector &n,
                                               const TwistVector &n_vert);

} // namespace veech

#endif // VEECH_EXACT_HPP
