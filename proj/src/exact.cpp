#include "twosep/exact.hpp"

#include <algorithm>
#include <utility>

#include "twosep/errors.hpp"

namespace twosep {

namespace stats {
namespace {
thread_local std::uint64_t multiplications = 0;
}

std::uint64_t bigint_multiplications() { return multiplications; }
void reset_bigint_multiplications() { multiplications = 0; }
void add_bigint_multiplications(std::uint64_t n) { multiplications += n; }
}  // namespace stats

BigInt mul(const BigInt& a, const BigInt& b) {
  stats::add_bigint_multiplications(1);
  return a * b;
}

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

bool IntMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r + 1; c < dim_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

bool IntMatrix::operator==(const IntMatrix& other) const {
  return dim_ == other.dim_ && data_ == other.data_;
}

BigInt det_exact(IntMatrix m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;

  BigInt previous = 1;
  bool negate = false;
  BigInt scratch;
  std::uint64_t products = 0;

  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m.at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(m.at(k, c), m.at(pivot, c));
      negate = !negate;
    }
    const BigInt& p = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool lead_zero = m.at(i, k) == 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt& target = m.at(i, j);
        // (a_ij * a_kk - a_ik * a_kj) / previous pivot, exact by Sylvester.
        target *= p;
        ++products;
        if (!lead_zero && m.at(k, j) != 0) {
          scratch = m.at(i, k) * m.at(k, j);
          ++products;
          target -= scratch;
        }
        if (previous != 1) mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), previous.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    previous = p;
  }
  stats::add_bigint_multiplications(products);
  BigInt result = m.at(n - 1, n - 1);
  if (negate) result = -result;
  return result;
}

IntMatrix minor_matrix(const IntMatrix& m, const std::set<std::size_t>& rows,
                       const std::set<std::size_t>& cols) {
  const std::size_t n = m.dim();
  for (std::size_t r : rows)
    if (r < 1 || r > n) throw InvalidArgument("minor: row index " + std::to_string(r) + " out of range");
  for (std::size_t c : cols)
    if (c < 1 || c > n) throw InvalidArgument("minor: column index " + std::to_string(c) + " out of range");
  if (rows.size() != cols.size()) throw InvalidArgument("minor: result would not be square");

  std::vector<std::size_t> keep_rows;
  std::vector<std::size_t> keep_cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows.contains(i + 1)) keep_rows.push_back(i);
    if (!cols.contains(i + 1)) keep_cols.push_back(i);
  }
  IntMatrix out(keep_rows.size());
  for (std::size_t r = 0; r < keep_rows.size(); ++r)
    for (std::size_t c = 0; c < keep_cols.size(); ++c) out.at(r, c) = m.at(keep_rows[r], keep_cols[c]);
  return out;
}

Ratio::Ratio(BigInt num, BigInt den) {
  if (den == 0) throw InvalidArgument("ratio: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Ratio Ratio::operator-() const {
  Ratio r = *this;
  r.value_ = -r.value_;
  return r;
}

Ratio& Ratio::operator+=(const Ratio& rhs) {
  value_ += rhs.value_;
  return *this;
}

Ratio& Ratio::operator-=(const Ratio& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Ratio& Ratio::operator*=(const Ratio& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Ratio& Ratio::operator/=(const Ratio& rhs) {
  if (rhs.is_zero()) throw InvalidArgument("ratio: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Ratio::str() const { return num().get_str() + "/" + den().get_str(); }

std::string Ratio::decimal(int digits) const { return render_decimal(num(), den(), digits); }

std::string render_decimal(const BigInt& num, const BigInt& den, int digits) {
  if (den == 0) throw InvalidArgument("decimal: zero denominator");
  if (digits < 0) throw InvalidArgument("decimal: negative digit count");
  const bool negative = (sgn(num) < 0) != (sgn(den) < 0);
  BigInt a = abs(num);
  const BigInt b = abs(den);

  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  a *= scale;
  BigInt q;
  BigInt r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const int half = cmp(BigInt(2 * r), b);
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string digits_str = q.get_str();
  if (digits > 0) {
    if (digits_str.size() <= static_cast<std::size_t>(digits))
      digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
    while (digits_str.back() == '0') digits_str.pop_back();
    if (digits_str.back() == '.') digits_str.pop_back();
  }
  if (negative && q != 0) digits_str.insert(0, "-");
  return digits_str;
}

BigInt parse_bigint(const std::string& text) {
  BigInt out;
  if (text.empty() || out.set_str(text, 10) != 0) throw InvalidArgument("not an integer: '" + text + "'");
  return out;
}

}  // namespace twosep
