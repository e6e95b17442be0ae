#include "sandwich/rational.hpp"

#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sandwich {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || first == s.data() + s.size())
    throw std::invalid_argument("malformed rational: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  *this = normalized(n, d);
}

Rat Rat::normalized(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (!fits64(n) || !fits64(d)) throw std::overflow_error("rational overflow");
  Rat r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (den_ == 1 && o.den_ == 1) {
    std::int64_t s;
    if (__builtin_add_overflow(num_, o.num_, &s)) throw std::overflow_error("rational overflow");
    num_ = s;
    return *this;
  }
  return *this = normalized(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                            static_cast<i128>(den_) * o.den_);
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  if (num_ == 0 || o.num_ == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  if (den_ == 1 && o.den_ == 1) {
    std::int64_t p;
    if (__builtin_mul_overflow(num_, o.num_, &p)) throw std::overflow_error("rational overflow");
    num_ = p;
    return *this;
  }
  return *this = normalized(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.num_ == 0) throw std::domain_error("division by zero");
  return *this = normalized(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
}

Rat Rat::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw std::overflow_error("rational overflow");
  Rat r = *this;
  r.num_ = -num_;
  return r;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  i128 l = static_cast<i128>(a.num_) * b.den_;
  i128 r = static_cast<i128>(b.num_) * a.den_;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

// ---------------------------------------------------------------------------

RatVec RatVec::unit(std::size_t n, std::size_t i) {
  RatVec v(n);
  v[i] = 1;
  return v;
}

bool RatVec::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

Rat RatVec::dot(const RatVec& o) const {
  if (o.size() != size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero() && !o.c_[i].is_zero()) s += c_[i] * o.c_[i];
  return s;
}

int RatVec::leading_sign() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return x.sign();
  return 0;
}

RatVec& RatVec::operator+=(const RatVec& o) {
  if (o.size() != size()) throw std::invalid_argument("vector add: dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& o) {
  if (o.size() != size()) throw std::invalid_argument("vector sub: dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RatVec& RatVec::operator*=(const Rat& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

RatVec RatVec::operator-() const {
  RatVec r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::strong_ordering operator<=>(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::string RatVec::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].str();
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const RatVec& v) { return os << v.str(); }

std::size_t RatVecHash::operator()(const RatVec& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& x : v) {
    h ^= std::hash<std::int64_t>{}(x.num()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::int64_t>{}(x.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::from_columns(const std::vector<RatVec>& cols, std::size_t rows) {
  RatMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("from_columns: ragged input");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  RatMat m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVec RatMat::row(std::size_t i) const {
  RatVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

RatVec RatMat::column(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RatVec RatMat::apply(const RatVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
  RatVec r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Rat& a = (*this)(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RatMat r(a.rows_, b.cols_);
  // Group elements are mostly signed permutations; skipping zeros keeps this near O(n^2).
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RatMat r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

RatMat operator-(const RatMat& a, const RatMat& b) { return a + (-b); }

RatMat RatMat::operator-() const {
  RatMat r = *this;
  for (auto& x : r.e_) x = -x;
  return r;
}

RatMat RatMat::inverse() const {
  if (!is_square()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = rows_;
  RatMat a = *this;
  RatMat inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rat p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      Rat f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::size_t RatMat::rank() const {
  RatMat a = *this;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t piv = r;
    while (piv < rows_ && a(piv, col).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(r, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (a(i, col).is_zero()) continue;
      Rat f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < cols_; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::string RatMat::key() const {
  std::string k;
  k.reserve(e_.size() * 3);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) k += ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) k += ',';
      k += (*this)(i, j).str();
    }
  }
  return k;
}

std::ostream& operator<<(std::ostream& os, const RatMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << m.row(i);
  }
  return os << ']';
}

}  // namespace sandwich
