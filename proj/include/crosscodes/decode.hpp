#pragma once

#include <optional>

#include "crosscodes/construct.hpp"
#include "crosscodes/word.hpp"

namespace crosscodes {

/** Result of bounded-magnitude decoding: a codeword/error pair, or failure. */
class DecodeOutcome {
 public:
  static DecodeOutcome failure() { return DecodeOutcome(); }
  static DecodeOutcome corrected(Word codeword, Word error) {
    DecodeOutcome o;
    o.codeword_ = std::move(codeword);
    o.error_ = std::move(error);
    return o;
  }

  bool corrected() const { return codeword_.has_value(); }
  const Word& codeword() const { return require(codeword_); }
  const Word& error() const { return require(error_); }

  friend bool operator==(const DecodeOutcome& a, const DecodeOutcome& b) {
    return a.codeword_ == b.codeword_ && a.error_ == b.error_;
  }
  friend bool operator!=(const DecodeOutcome& a, const DecodeOutcome& b) { return !(a == b); }

 private:
  DecodeOutcome() = default;
  static const Word& require(const std::optional<Word>& w) {
    if (!w) throw std::domain_error("decode failure carries no codeword");
    return *w;
  }
  std::optional<Word> codeword_;
  std::optional<Word> error_;
};

/**
 * Syndrome decoder for cor5_code(m, t). Branches on the syndrome: s2 = 0
 * places the error on coordinate 1, 2*s1 = s2 on coordinate 2. The recovered
 * quotient is centered into (-2^{k+1}, 2^{k+1}] and rejected beyond
 * magnitude t, so failure is returned for any word outside every
 * radius-t cross.
 */
DecodeOutcome decode_cor5(const Word& received, unsigned m, unsigned t);

/**
 * Syndrome decoder for thm9_code(m, 2). The scalar syndrome is matched
 * against the eight values +-3*2^j*2^{m-4} (coordinate 1, error -+2^j) and
 * +-2^j*2^{m-4} (coordinate 2, error +-2^j), j in {0,1}; zero syndrome
 * means no error.
 */
DecodeOutcome decode_thm9_t2(const Word& received, unsigned m);

/**
 * Syndrome decoder for cor12_code(m, t). Branch order: s2 = 0 (coordinate 1),
 * 2*s1 = s2 (coordinate 2), (2t+1)*s1 = s2 (coordinate 3); same quotient
 * centering and magnitude check as decode_cor5.
 */
DecodeOutcome decode_cor12(const Word& received, unsigned m, unsigned t);

/**
 * Construction-independent reference decoder: finds the unique single
 * coordinate error of magnitude <= t whose syndrome matches. Two distinct
 * matches would mean overlapping crosses and raise std::logic_error.
 */
DecodeOutcome decode_syndrome_match(const Matrix& H, const Word& received, unsigned t);

}  // namespace crosscodes
