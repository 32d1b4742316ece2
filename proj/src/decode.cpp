#include "crosscodes/decode.hpp"

#include <cstdlib>
#include <stdexcept>

#include "crosscodes/errors.hpp"

namespace crosscodes {

namespace {

void require_received(const Word& r, unsigned n, unsigned m) {
  if (r.size() != n || r.modulus().exponent() != m)
    throw std::invalid_argument("received word has the wrong shape for this code");
}

// First-row unit is 2^{m-k-2}; a magnitude-alpha error at any coordinate puts
// alpha * 2^{m-k-2} into s1. Divide out the unit and center the quotient into
// (-2^{k+1}, 2^{k+1}]; magnitudes beyond t are not correctable.
std::optional<std::int64_t> recover_magnitude(std::uint32_t s1, unsigned m, unsigned k,
                                              unsigned t) {
  const unsigned unit_exp = m - k - 2;
  if (s1 & ((std::uint32_t{1} << unit_exp) - 1)) return std::nullopt;
  const std::int64_t alpha = signed_residue(s1 >> unit_exp, Modulus(k + 2));
  if (std::abs(alpha) > static_cast<std::int64_t>(t)) return std::nullopt;
  return alpha;
}

DecodeOutcome corrected_at(const Word& r, std::size_t coord, std::int64_t alpha) {
  Word e = Word::zero(r.modulus(), r.size()).with_coord(coord, alpha);
  return DecodeOutcome::corrected(word_sub(r, e), e);
}

}  // namespace

DecodeOutcome decode_cor5(const Word& r, unsigned m, unsigned t) {
  const LinearCode code = cor5_code(m, t);
  require_received(r, 2, m);
  const unsigned k = code.spec.k();
  const Word s = mat_vec(code.parity, r);
  const Modulus mod = r.modulus();

  const bool first = s[1] == 0;
  const bool second = s[1] == mod.reduce(2 * static_cast<std::int64_t>(s[0]));
  if (!first && !second) return DecodeOutcome::failure();

  const auto alpha = recover_magnitude(s[0], m, k, t);
  if (!alpha) return DecodeOutcome::failure();
  // Both branches holding with a correctable nonzero magnitude would mean two
  // crosses share r; the column structure rules that out.
  if (*alpha != 0 && first && second) throw std::logic_error("ambiguous syndrome branch");
  return corrected_at(r, first ? 0 : 1, *alpha);
}

DecodeOutcome decode_thm9_t2(const Word& r, unsigned m) {
  const LinearCode code = thm9_code(m, 2);
  require_received(r, 2, m);
  const Modulus mod = r.modulus();
  const std::uint32_t s = mat_vec(code.parity, r)[0];
  if (s == 0) return corrected_at(r, 0, 0);

  const std::int64_t unit = std::int64_t{1} << (m - 4);
  for (int sign : {+1, -1}) {
    for (unsigned j = 0; j <= 1; ++j) {
      const std::int64_t a = sign * (std::int64_t{1} << j);
      // A magnitude-a error in the first coordinate contributes -3a * 2^{m-4}.
      if (s == mod.reduce(-3 * a * unit)) return corrected_at(r, 0, a);
      if (s == mod.reduce(a * unit)) return corrected_at(r, 1, a);
    }
  }
  return DecodeOutcome::failure();
}

DecodeOutcome decode_cor12(const Word& r, unsigned m, unsigned t) {
  const LinearCode code = cor12_code(m, t);
  require_received(r, 3, m);
  const unsigned k = code.spec.k();
  const Word s = mat_vec(code.parity, r);
  const Modulus mod = r.modulus();

  const bool first = s[1] == 0;
  const bool second = s[1] == mod.reduce(2 * static_cast<std::int64_t>(s[0]));
  const bool third =
      s[1] == mod.reduce((2 * static_cast<std::int64_t>(t) + 1) * s[0]);
  if (!first && !second && !third) return DecodeOutcome::failure();

  const auto alpha = recover_magnitude(s[0], m, k, t);
  if (!alpha) return DecodeOutcome::failure();
  if (*alpha != 0 && first + second + third > 1)
    throw std::logic_error("ambiguous syndrome branch");
  return corrected_at(r, first ? 0 : (second ? 1 : 2), *alpha);
}

DecodeOutcome decode_syndrome_match(const Matrix& H, const Word& r, unsigned t) {
  require_same_modulus(H.modulus(), r.modulus());
  if (H.cols() != r.size()) throw std::invalid_argument("matrix/word shape mismatch");
  const Modulus mod = r.modulus();
  if (t + std::uint64_t{1} > mod.size() / 2)
    throw ParameterError("requires t <= 2^{m-1} - 1");

  const Word s = mat_vec(H, r);
  bool zero = true;
  for (std::size_t i = 0; i < s.size(); ++i) zero = zero && s[i] == 0;
  if (zero) return corrected_at(r, 0, 0);

  std::optional<DecodeOutcome> found;
  for (std::size_t i = 0; i < H.cols(); ++i) {
    for (unsigned a = 1; a <= t; ++a) {
      for (int sign : {+1, -1}) {
        const std::int64_t alpha = sign * static_cast<std::int64_t>(a);
        bool match = true;
        for (std::size_t row = 0; row < H.rows() && match; ++row)
          match = mod.reduce(alpha * H.at(row, i)) == s[row];
        if (!match) continue;
        if (found)
          throw std::logic_error(
              "two distinct single-coordinate errors share this syndrome");
        found = corrected_at(r, i, alpha);
      }
    }
  }
  return found ? *found : DecodeOutcome::failure();
}

}  // namespace crosscodes
