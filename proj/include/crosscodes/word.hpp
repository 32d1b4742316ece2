#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "crosscodes/residue.hpp"

namespace crosscodes {

/**
 * Fixed-length word over Z_{2^m}. Coordinates are stored canonically;
 * all coordinates share one modulus.
 */
class Word {
 public:
  Word(Modulus mod, std::vector<std::int64_t> coords) : mod_(mod) {
    if (coords.empty()) throw std::invalid_argument("word length must be positive");
    coords_.reserve(coords.size());
    for (std::int64_t c : coords) coords_.push_back(mod.reduce(c));
  }
  Word(Modulus mod, std::initializer_list<std::int64_t> coords)
      : Word(mod, std::vector<std::int64_t>(coords)) {}

  static Word zero(Modulus mod, std::size_t n) {
    return Word(mod, std::vector<std::int64_t>(n, 0));
  }

  std::size_t size() const { return coords_.size(); }
  Modulus modulus() const { return mod_; }

  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  RingElement at(std::size_t i) const { return RingElement(coords_[i], mod_); }

  const std::vector<std::uint32_t>& coords() const { return coords_; }

  Word with_coord(std::size_t i, std::int64_t value) const {
    Word w = *this;
    w.coords_[i] = mod_.reduce(value);
    return w;
  }

  // Bijective packing into n*m bits; requires n*m <= 64.
  std::uint64_t packed() const {
    const unsigned m = mod_.exponent();
    if (size() * m > 64) throw std::invalid_argument("word does not fit 64-bit packing");
    std::uint64_t p = 0;
    for (std::size_t i = coords_.size(); i-- > 0;) p = (p << m) | coords_[i];
    return p;
  }
  static Word unpack(std::uint64_t p, Modulus mod, std::size_t n) {
    std::vector<std::int64_t> c(n);
    const std::uint64_t mask = mod.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = static_cast<std::int64_t>(p & mask);
      p >>= mod.exponent();
    }
    return Word(mod, std::move(c));
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.mod_ == b.mod_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) { return a.coords_ < b.coords_; }

 private:
  Modulus mod_;
  std::vector<std::uint32_t> coords_;
};

inline void require_same_shape(const Word& a, const Word& b) {
  require_same_modulus(a.modulus(), b.modulus());
  if (a.size() != b.size()) throw std::invalid_argument("words have different lengths");
}

inline Word word_add(const Word& a, const Word& b) {
  require_same_shape(a, b);
  std::vector<std::int64_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = static_cast<std::int64_t>(a[i]) + b[i];
  return Word(a.modulus(), std::move(c));
}

inline Word word_sub(const Word& a, const Word& b) {
  require_same_shape(a, b);
  std::vector<std::int64_t> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
  return Word(a.modulus(), std::move(c));
}

inline Word word_scale(std::int64_t s, const Word& v) {
  const std::uint32_t c = v.modulus().reduce(s);
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = static_cast<std::int64_t>(c) * v[i];
  return Word(v.modulus(), std::move(out));
}

// Sum of coordinatewise cycle distances; a metric on Z_{2^m}^n.
inline std::uint64_t lee_distance(const Word& a, const Word& b) {
  require_same_shape(a, b);
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d += abs_val(a.modulus().reduce(static_cast<std::int64_t>(a[i]) -
                                    static_cast<std::int64_t>(b[i])),
                 a.modulus());
  return d;
}

inline unsigned hamming_distance(const Word& a, const Word& b) {
  require_same_shape(a, b);
  unsigned d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++d;
  return d;
}

/** Dense row-major matrix over Z_{2^m}. */
class Matrix {
 public:
  Matrix(Modulus mod, std::vector<std::vector<std::int64_t>> rows) : mod_(mod) {
    if (rows.empty() || rows.front().empty())
      throw std::invalid_argument("matrix must be nonempty");
    rows_ = rows.size();
    cols_ = rows.front().size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::int64_t v : r) data_.push_back(mod.reduce(v));
    }
  }

  Modulus modulus() const { return mod_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Word row(std::size_t r) const {
    std::vector<std::int64_t> out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return Word(mod_, std::move(out));
  }
  Word column(std::size_t c) const {
    std::vector<std::int64_t> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return Word(mod_, std::move(out));
  }

  std::vector<std::vector<std::int64_t>> row_lists() const {
    std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.mod_ == b.mod_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  Modulus mod_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> data_;
};

// Syndrome map s = v * H^T; component j is the inner product of v with row j of H.
inline Word mat_vec(const Matrix& H, const Word& v) {
  require_same_modulus(H.modulus(), v.modulus());
  if (H.cols() != v.size()) throw std::invalid_argument("matrix/word shape mismatch");
  std::vector<std::int64_t> s(H.rows(), 0);
  const std::uint64_t q = H.modulus().size();
  for (std::size_t r = 0; r < H.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < H.cols(); ++c)
      acc = (acc + static_cast<std::uint64_t>(H.at(r, c)) * v[c]) % q;
    s[r] = static_cast<std::int64_t>(acc);
  }
  return Word(H.modulus(), std::move(s));
}

}  // namespace crosscodes
