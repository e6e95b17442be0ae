#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sandwich {

/// Exact rational number over int64 with overflow detection.
///
/// Always stored in lowest terms with a positive denominator. Intermediate
/// products are formed in 128-bit arithmetic; a result that does not fit back
/// into int64 throws std::overflow_error rather than wrapping.
class Rat {
 public:
  constexpr Rat() noexcept = default;
  constexpr Rat(std::int64_t n) noexcept : num_(n) {}  // NOLINT(implicit)
  Rat(std::int64_t n, std::int64_t d);

  [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend constexpr bool operator==(const Rat&, const Rat&) noexcept = default;
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) noexcept;

  /// "n" for integers, "n/d" otherwise.
  [[nodiscard]] std::string str() const;
  /// Inverse of str(); accepts "n", "-n", "n/d".
  static Rat parse(std::string_view text);

 private:
  __extension__ typedef __int128 wide;
  static Rat normalized(wide n, wide d);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Coordinate vector with exact entries.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t n) : c_(n) {}
  explicit RatVec(std::vector<Rat> c) : c_(std::move(c)) {}
  RatVec(std::initializer_list<Rat> c) : c_(c) {}

  static RatVec unit(std::size_t n, std::size_t i);

  [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  [[nodiscard]] auto begin() const { return c_.begin(); }
  [[nodiscard]] auto end() const { return c_.end(); }
  [[nodiscard]] const std::vector<Rat>& coords() const noexcept { return c_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Rat dot(const RatVec& o) const;
  /// Sign of the first nonzero coordinate; 0 for the zero vector.
  [[nodiscard]] int leading_sign() const;

  RatVec& operator+=(const RatVec& o);
  RatVec& operator-=(const RatVec& o);
  RatVec& operator*=(const Rat& s);
  friend RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
  friend RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
  friend RatVec operator*(const Rat& s, RatVec v) { return v *= s; }
  RatVec operator-() const;

  friend bool operator==(const RatVec&, const RatVec&) = default;
  friend std::strong_ordering operator<=>(const RatVec& a, const RatVec& b);

  [[nodiscard]] std::string str() const;

 private:
  std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const RatVec& v);

struct RatVecHash {
  std::size_t operator()(const RatVec& v) const noexcept;
};

/// Dense row-major matrix with exact entries.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RatMat identity(std::size_t n);
  /// Matrix whose j-th column is cols[j].
  static RatMat from_columns(const std::vector<RatVec>& cols, std::size_t rows);
  static RatMat from_rows(const std::vector<RatVec>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  [[nodiscard]] const std::vector<Rat>& entries() const noexcept { return e_; }

  [[nodiscard]] RatVec row(std::size_t i) const;
  [[nodiscard]] RatVec column(std::size_t j) const;
  [[nodiscard]] RatMat transpose() const;
  [[nodiscard]] RatVec apply(const RatVec& v) const;
  /// Throws std::domain_error when singular.
  [[nodiscard]] RatMat inverse() const;
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] bool is_invertible() const { return is_square() && rank() == rows_; }

  RatMat operator-() const;
  friend RatMat operator*(const RatMat& a, const RatMat& b);
  friend RatMat operator+(const RatMat& a, const RatMat& b);
  friend RatMat operator-(const RatMat& a, const RatMat& b);
  friend bool operator==(const RatMat&, const RatMat&) = default;

  /// Deterministic textual serialization: rows joined by ';', entries by ','.
  /// Equal keys iff equal matrices (same shape, same reduced entries).
  [[nodiscard]] std::string key() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> e_;
};

std::ostream& operator<<(std::ostream& os, const RatMat& m);

}  // namespace sandwich
