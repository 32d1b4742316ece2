#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crosscodes/metric.hpp"
#include "crosscodes/word.hpp"

namespace crosscodes {

enum class Construction { cor5, thm9, cor12, custom };

std::string construction_name(Construction c);
Construction construction_from_name(const std::string& name);

/** Parameters of a magnitude-t single-coordinate error correcting code. */
struct CodeSpec {
  unsigned n = 0;  // word length
  unsigned m = 0;  // modulus exponent
  unsigned t = 0;  // correctable error magnitude
  Construction construction = Construction::custom;

  // Largest k with 2^k <= t.
  unsigned k() const;
  // t rounded down to an odd value.
  unsigned t_bar() const { return t % 2 == 1 ? t : t - 1; }
  Modulus modulus() const { return Modulus(m); }
};

struct LinearCode {
  CodeSpec spec;
  Matrix parity;  // code = { v : v * parity^T = 0 }
  std::optional<std::uint64_t> closed_form_cardinality;
};

/**
 * Two-row parity check over Z_{2^m}^2 with entries 2^{m-k-2} on the first row
 * and (0, 2^{m-k-1}) on the second. Corrects one coordinate error of
 * magnitude at most t, and simultaneously has Lee distance >= 2t+1.
 * Requires m >= k+2. Cardinality 2^{2(m-k)-3}. The matrix depends on t only
 * through k, so all t in [2^k, 2^{k+1}) share it.
 */
LinearCode cor5_code(unsigned m, unsigned t);

/**
 * Single-row parity check (-(t+1)*2^{m-2t}, 2^{m-2t}) over Z_{2^m}^2 for
 * t in {2,3}. Requires m >= 2t. Cardinality 2^{2(m-t)}.
 */
LinearCode thm9_code(unsigned m, unsigned t);

/**
 * Two-row parity check over Z_{2^m}^3: first row all 2^{m-k-2}, second row
 * (0, 2^{m-k-1}, (2t+1)*2^{m-k-2}). Requires m >= k+2 (and t <= 2^{m-1}).
 * Cardinality is not given in closed form; it comes from the kernel.
 */
LinearCode cor12_code(unsigned m, unsigned t);

struct ValidationResult {
  bool ok = true;
  unsigned violated_condition = 0;  // first violated condition, 0 when ok
  std::string detail;
};

/**
 * Sufficient conditions for a 2x2 parity check to define a magnitude-t
 * cross code, checked by set enumeration in fixed order:
 *   1. neither first-row entry lies in +-{0, 2^{m-1}, ..., 2^{m-k-1}};
 *   2. H12 not in +-{1..t}*{1, 3^-1, ..., t_bar^-1}*H11  (second row, mod 2^m);
 *   3. same with the second-row entries swapped;
 *   4. condition 2 with magnitude floor(t/2^k), mod 2^{m-k};
 *   5. condition 3 with magnitude floor(t/2^k), mod 2^{m-k}.
 * Requires m >= k. Sufficient, not necessary.
 */
ValidationResult validate_length2_matrix(const Matrix& H, unsigned t);

/**
 * Validity conditions for a 2x3 parity check, in fixed order:
 *   1. no first-row entry lies in +-{0, 2^{m-1}, ..., 2^{m-k-1}};
 *   2. for column pairs (1,2), (1,3), (2,3): no alpha*col_i = +-beta*col_j
 *      mod 2^m with 1 <= alpha, beta <= t (syndromes of two small
 *      single-coordinate errors never coincide);
 *   3. no column is annihilated by any alpha in [1, 2t]
 *      (no small nonzero single-coordinate codeword).
 * Conditions 2 and 3 are exactly the weight-<=2 obstructions, so a matrix
 * passing all three always defines a magnitude-t cross code.
 */
ValidationResult validate_length3_matrix(const Matrix& H, unsigned t);

/**
 * Generating set of the kernel in internal direct-sum form: every codeword
 * is sum_i c_i * row_i with 0 <= c_i < row_order_i, each exactly once.
 */
struct GeneratorMatrix {
  Modulus mod = Modulus(1);
  std::size_t n = 0;
  std::vector<Word> rows;
  std::vector<std::uint64_t> row_orders;
  std::uint64_t cardinality = 1;
  unsigned log2_cardinality = 0;
};

/**
 * Kernel of v -> v*H^T by diagonalization over Z_{2^m} (odd entries are
 * units; pivoting on minimal 2-adic valuation). Deterministic.
 */
GeneratorMatrix kernel_basis(const Matrix& H);

// Message coefficients times generator rows. Message length must equal the
// number of generator rows; coefficients are taken mod the row orders.
Word encode(const GeneratorMatrix& G, const std::vector<std::int64_t>& message);

// Cross-metric linear sphere packing bound divided by the code cardinality.
// The ratio is always an exact power of two for the constructions above.
std::uint64_t gap_to_bound(const LinearCode& code, std::uint64_t cardinality);

}  // namespace crosscodes
