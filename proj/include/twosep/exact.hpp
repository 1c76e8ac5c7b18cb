#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace twosep {

using BigInt = mpz_class;

/// Nonnegative wherever it denotes a number of trees or forests.
using Count = mpz_class;

// Big-integer multiplication counter used by the benchmark. Thread-local, so
// concurrent solves do not interfere.
namespace stats {
std::uint64_t bigint_multiplications();
void reset_bigint_multiplications();
void add_bigint_multiplications(std::uint64_t n);
}  // namespace stats

/// a * b, recorded in the multiplication counter.
BigInt mul(const BigInt& a, const BigInt& b);

/// Dense square matrix of big integers, row-major, 0-indexed accessors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim);

  std::size_t dim() const { return dim_; }

  BigInt& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const BigInt& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  bool is_symmetric() const;
  bool operator==(const IntMatrix& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// det of the 0x0 matrix is 1.
BigInt det_exact(IntMatrix m);

/// Removes the given rows and columns. Indices are 1-based so that vertex
/// labels can be passed straight through.
IntMatrix minor_matrix(const IntMatrix& m, const std::set<std::size_t>& rows,
                       const std::set<std::size_t>& cols);

/// Exact rational in canonical form: gcd(|num|, den) == 1 and den > 0.
class Ratio {
 public:
  Ratio() = default;
  Ratio(BigInt num, BigInt den = 1);  // NOLINT(google-explicit-constructor)

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  Ratio operator-() const;
  Ratio& operator+=(const Ratio& rhs);
  Ratio& operator-=(const Ratio& rhs);
  Ratio& operator*=(const Ratio& rhs);
  Ratio& operator/=(const Ratio& rhs);

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }

  friend bool operator==(const Ratio& a, const Ratio& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// "num/den", always with both parts.
  std::string str() const;

  /// Decimal rendering rounded half-to-even at `digits` fractional digits,
  /// trailing zeros trimmed ("0.5625", "1", "1.111111111111").
  std::string decimal(int digits = 12) const;

  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

/// Decimal rendering of num/den without building a Ratio (the fraction need
/// not be reduced).
std::string render_decimal(const BigInt& num, const BigInt& den, int digits = 12);

/// Parses a base-10 integer; throws InvalidArgument on junk.
BigInt parse_bigint(const std::string& text);

}  // namespace twosep
