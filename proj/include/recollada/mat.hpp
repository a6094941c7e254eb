#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace recollada {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Default field prime for a session; overridable per object.
inline constexpr u32 kDefaultPrime = 101;

struct Error : std::runtime_error {
  enum class Kind { input, cap_exceeded, hypothesis, crosscheck, internal };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

inline u32 fp_reduce(long long v, u32 p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<u32>(r);
}

inline u32 fp_add(u32 a, u32 b, u32 p) { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 fp_sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 fp_mul(u32 a, u32 b, u32 p) { return static_cast<u32>((static_cast<u64>(a) * b) % p); }
inline u32 fp_neg(u32 a, u32 p) { return a == 0 ? 0 : p - a; }

u32 fp_inv(u32 a, u32 p);
bool is_prime(u32 p);

// Dense matrix over F_p, row-major.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, u32 p)
      : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {}

  static Mat identity(std::size_t n, u32 p);
  static Mat zero(std::size_t rows, std::size_t cols, u32 p) { return Mat(rows, cols, p); }
  static Mat from_rows(const std::vector<std::vector<u32>>& rows, u32 p);
  static Mat col_vec(const std::vector<u32>& v, u32 p);
  static Mat random(std::size_t rows, std::size_t cols, u32 p, std::mt19937_64& rng);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u32 prime() const { return p_; }

  u32 at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  u32& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  bool is_zero() const;
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
  }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat scaled(u32 c) const;
  Mat transpose() const;

  std::vector<u32> col(std::size_t j) const;
  std::vector<u32> row(std::size_t i) const;
  Mat cols_subset(const std::vector<std::size_t>& idx) const;

  // v -> M v
  std::vector<u32> apply(const std::vector<u32>& v) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  u32 p_ = kDefaultPrime;
  std::vector<u32> e_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

struct Echelon {
  Mat r;                           // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column indices
  std::size_t rank = 0;
};

Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);

// Columns form a basis of ker(m); cols = m.cols() - rank(m).
Mat kernel_basis(const Mat& m);

// Columns form a basis of the column space of m.
Mat column_space(const Mat& m);

// One solution of m x = b (b may have several columns), or nullopt if inconsistent.
std::optional<Mat> solve(const Mat& m, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

// Is v in the column space of basis?
bool in_span(const Mat& basis, const std::vector<u32>& v);

}  // namespace recollada
