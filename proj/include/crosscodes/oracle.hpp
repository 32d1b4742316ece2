#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "crosscodes/construct.hpp"
#include "crosscodes/decode.hpp"
#include "crosscodes/metric.hpp"
#include "crosscodes/word.hpp"

namespace crosscodes {

/**
 * Finite set of distinct words sharing one shape, sorted for deterministic
 * iteration and comparison. Duplicate input words are rejected.
 */
class CodeSet {
 public:
  CodeSet(Modulus mod, std::size_t length, std::vector<Word> words);

  Modulus modulus() const { return mod_; }
  std::size_t length() const { return n_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  bool contains(const Word& w) const;

  friend bool operator==(const CodeSet& a, const CodeSet& b) {
    return a.mod_ == b.mod_ && a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const CodeSet& a, const CodeSet& b) { return !(a == b); }

 private:
  Modulus mod_;
  std::size_t n_;
  std::vector<Word> words_;
};

// Smallest pairwise cross distance. Often infinite: any two words differing
// in two or more coordinates are infinitely far apart. Requires size >= 2.
ExtendedDistance min_cross_distance(const CodeSet& code);

// Smallest pairwise Lee distance. Requires size >= 2.
std::uint64_t min_lee_distance(const CodeSet& code);

/** Outcome of a sphere-disjointness check, with a witness on failure. */
struct CertifyResult {
  bool ok = true;
  std::optional<Word> first;    // two codewords whose spheres meet...
  std::optional<Word> second;
  std::optional<Word> overlap;  // ...and a word inside both

  explicit operator bool() const { return ok; }
};

/**
 * A code corrects every single-coordinate error of magnitude <= t exactly
 * when the radius-t crosses around its words are pairwise disjoint. Checked
 * by hashing every sphere member and watching for a second owner.
 * Work is size * (2nt+1) hash insertions.
 */
CertifyResult certify_cross_code(const CodeSet& code, unsigned t);

/**
 * Same verdict as certify_cross_code, established independently: two crosses
 * meet exactly when the difference of their centers has one coordinate of
 * magnitude <= 2t and the rest zero, or two coordinates of magnitude <= t
 * and the rest zero. Work is quadratic in size; kept as a cross-check.
 */
CertifyResult certify_cross_code_pairwise(const CodeSet& code, unsigned t);

/**
 * Lee-sphere disjointness. The Lee distance is a genuine metric, so this is
 * equivalent to every pairwise distance being >= 2t+1. Any code passing here
 * also passes certify_cross_code for the same t.
 */
CertifyResult certify_lee_code(const CodeSet& code, unsigned t);

// All words with zero syndrome, by scanning the full space.
// Refuses when n*m exceeds the enumeration budget.
CodeSet enumerate_kernel(const Matrix& H);

// All words generated by the rows of G (each combination of row coefficients
// taken once). Refuses when the cardinality exceeds the enumeration budget.
CodeSet enumerate_span(const GeneratorMatrix& G);

struct SearchResult {
  std::uint64_t best_size = 0;
  CodeSet witness;  // one maximum code; deterministic for fixed arguments
};

/**
 * Exact maximum code size for the chosen metric, as a maximum clique of the
 * compatibility graph over all of Z_{2^m}^n: words are compatible when their
 * radius-t spheres are disjoint (cross), or at distance >= 2t+1 (Lee).
 * Branch-and-bound with greedy coloring bounds; vertices are ordered by
 * degree so results are reproducible. Refuses when n*m exceeds the search
 * budget; never returns a heuristic answer.
 */
SearchResult max_code_search(unsigned n, unsigned m, unsigned t, Metric metric);

enum class AuditScope {
  spheres,     // every codeword + every error of magnitude <= t
  full_space,  // additionally every word outside all spheres must fail
};

/** Tally of decoder behaviour over all audited received words. */
struct AuditReport {
  std::uint64_t cases = 0;
  std::uint64_t successes = 0;      // decoder output matched the expectation
  std::uint64_t wrong_decodes = 0;  // corrected, but to the wrong pair
  std::uint64_t missed = 0;         // expected a correction, decoder failed
  std::uint64_t spurious = 0;       // expected failure, decoder corrected
  std::uint64_t anomalies = 0;      // decoder threw

  bool clean() const { return successes == cases; }
};

using DecodeFn = std::function<DecodeOutcome(const Word&)>;

/**
 * Runs the decoder against every received word it must handle and compares
 * with the ground truth implied by sphere membership. The code must be
 * cross-correcting at magnitude t (spheres disjoint), otherwise the
 * expectation is not well defined and an error is raised.
 */
AuditReport audit_decoder(const CodeSet& code, unsigned t, const DecodeFn& decode,
                          AuditScope scope = AuditScope::spheres);

}  // namespace crosscodes
