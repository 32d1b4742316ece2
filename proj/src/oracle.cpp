#include "crosscodes/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "crosscodes/errors.hpp"
#include "crosscodes/limits.hpp"

namespace crosscodes {

namespace {

void require_radius(Modulus mod, unsigned t) {
  if (t + std::uint64_t{1} > mod.size() / 2)
    throw ParameterError("requires t <= 2^{m-1} - 1");
}

void require_packable(const CodeSet& code) {
  if (code.length() * code.modulus().exponent() > 64)
    throw BudgetError("certification needs words that fit 64-bit packing");
}

void require_hash_budget(const CodeSet& code, std::uint64_t volume) {
  if (code.size() > kMaxSphereHashEntries / volume)
    throw BudgetError("sphere hash would exceed " +
                      std::to_string(kMaxSphereHashEntries) + " entries");
}

void require_pairwise_budget(const CodeSet& code) {
  if (code.size() > kMaxPairwiseWords)
    throw BudgetError("pairwise certification limited to " +
                      std::to_string(kMaxPairwiseWords) + " words");
}

// Signed per-coordinate differences a - b, nonzero coordinates only.
struct SparseDiff {
  std::vector<std::pair<std::size_t, std::int64_t>> entries;
};

SparseDiff sparse_diff(const Word& a, const Word& b) {
  SparseDiff d;
  const Modulus mod = a.modulus();
  for (std::size_t c = 0; c < a.size(); ++c) {
    const std::uint32_t delta = mod.reduce(static_cast<std::int64_t>(a[c]) -
                                           static_cast<std::int64_t>(b[c]));
    if (delta != 0) d.entries.emplace_back(c, signed_residue(delta, mod));
  }
  return d;
}

// Radius-t crosses around a and b share a word exactly when a - b is zero,
// one coordinate of magnitude <= 2t, or two coordinates of magnitude <= t.
bool crosses_meet(const Word& a, const Word& b, unsigned t) {
  const SparseDiff d = sparse_diff(a, b);
  if (d.entries.empty()) return true;
  if (d.entries.size() == 1)
    return std::abs(d.entries[0].second) <= 2 * static_cast<std::int64_t>(t);
  if (d.entries.size() == 2)
    return std::abs(d.entries[0].second) <= static_cast<std::int64_t>(t) &&
           std::abs(d.entries[1].second) <= static_cast<std::int64_t>(t);
  return false;
}

// A word inside both crosses, for witness reporting. Preconditions as above.
Word cross_overlap_point(const Word& a, const Word& b, unsigned t) {
  const SparseDiff d = sparse_diff(a, b);
  if (d.entries.empty()) return a;
  const auto [c0, d0] = d.entries[0];
  if (d.entries.size() == 1) {
    // Split the gap: step from b by at most t, leaving at most t for a.
    const std::int64_t step = d0 > 0 ? std::min<std::int64_t>(d0, t)
                                     : -std::min<std::int64_t>(-d0, t);
    return b.with_coord(c0, static_cast<std::int64_t>(b[c0]) + step);
  }
  return b.with_coord(c0, static_cast<std::int64_t>(b[c0]) + d0);
}

}  // namespace

CodeSet::CodeSet(Modulus mod, std::size_t length, std::vector<Word> words)
    : mod_(mod), n_(length), words_(std::move(words)) {
  if (n_ == 0) throw std::invalid_argument("code length must be positive");
  if (words_.empty()) throw std::invalid_argument("code set must be nonempty");
  for (const Word& w : words_)
    if (w.size() != n_ || w.modulus() != mod_)
      throw std::invalid_argument("code word has the wrong shape");
  std::sort(words_.begin(), words_.end());
  if (std::adjacent_find(words_.begin(), words_.end()) != words_.end())
    throw std::invalid_argument("duplicate code words");
}

bool CodeSet::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

ExtendedDistance min_cross_distance(const CodeSet& code) {
  if (code.size() < 2) throw std::invalid_argument("needs at least two words");
  ExtendedDistance best = ExtendedDistance::infinity();
  const auto& ws = code.words();
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      const ExtendedDistance d = cross_distance(ws[i], ws[j]);
      if (d < best) best = d;
    }
  return best;
}

std::uint64_t min_lee_distance(const CodeSet& code) {
  if (code.size() < 2) throw std::invalid_argument("needs at least two words");
  std::uint64_t best = UINT64_MAX;
  const auto& ws = code.words();
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      best = std::min(best, lee_distance(ws[i], ws[j]));
  return best;
}

CertifyResult certify_cross_code(const CodeSet& code, unsigned t) {
  require_radius(code.modulus(), t);
  require_packable(code);
  const std::uint64_t volume = cross_sphere_volume(code.length(), t);
  require_hash_budget(code, volume);

  std::unordered_map<std::uint64_t, std::size_t> owner;
  owner.reserve(code.size() * volume);
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (const Word& w : cross_sphere(code.words()[i], t)) {
      const auto [it, inserted] = owner.emplace(w.packed(), i);
      // One sphere never repeats a word, so a collision is inter-codeword.
      if (!inserted)
        return CertifyResult{false, code.words()[it->second], code.words()[i], w};
    }
  }
  return CertifyResult{};
}

CertifyResult certify_cross_code_pairwise(const CodeSet& code, unsigned t) {
  require_radius(code.modulus(), t);
  require_pairwise_budget(code);
  const auto& ws = code.words();
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j)
      if (crosses_meet(ws[i], ws[j], t))
        return CertifyResult{false, ws[i], ws[j], cross_overlap_point(ws[i], ws[j], t)};
  return CertifyResult{};
}

CertifyResult certify_lee_code(const CodeSet& code, unsigned t) {
  require_radius(code.modulus(), t);
  require_pairwise_budget(code);
  const auto& ws = code.words();
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      const std::uint64_t d = lee_distance(ws[i], ws[j]);
      if (d >= 2 * std::uint64_t{t} + 1) continue;
      // Walk from ws[j] toward ws[i] just far enough that both ends are
      // within t Lee steps of the meeting point.
      std::int64_t remaining =
          static_cast<std::int64_t>(d) - static_cast<std::int64_t>(t);
      Word p = ws[j];
      for (const auto& [c, gap] : sparse_diff(ws[i], ws[j]).entries) {
        if (remaining <= 0) break;
        const std::int64_t step =
            gap > 0 ? std::min(gap, remaining) : -std::min(-gap, remaining);
        p = p.with_coord(c, static_cast<std::int64_t>(p[c]) + step);
        remaining -= std::abs(step);
      }
      return CertifyResult{false, ws[i], ws[j], p};
    }
  return CertifyResult{};
}

CodeSet enumerate_kernel(const Matrix& H) {
  const Modulus mod = H.modulus();
  const unsigned m = mod.exponent();
  const std::size_t n = H.cols();
  if (n * m > kMaxEnumerationBits)
    throw BudgetError("kernel enumeration limited to n*m <= " +
                      std::to_string(kMaxEnumerationBits) + " bits");
  const std::uint64_t space = std::uint64_t{1} << (n * m);
  const std::uint64_t mask = mod.size() - 1;

  std::vector<std::vector<std::uint64_t>> rows(H.rows(), std::vector<std::uint64_t>(n));
  for (std::size_t r = 0; r < H.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = H.at(r, c);

  std::vector<Word> out;
  for (std::uint64_t p = 0; p < space; ++p) {
    bool zero = true;
    for (const auto& row : rows) {
      std::uint64_t acc = 0, v = p;
      for (std::size_t c = 0; c < n; ++c) {
        acc += row[c] * (v & mask);
        v >>= m;
      }
      if ((acc & mask) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) out.push_back(Word::unpack(p, mod, n));
  }
  return CodeSet(mod, n, std::move(out));
}

CodeSet enumerate_span(const GeneratorMatrix& G) {
  if (G.cardinality > kMaxSphereHashEntries)
    throw BudgetError("span enumeration limited to " +
                      std::to_string(kMaxSphereHashEntries) + " words");
  std::vector<Word> out;
  out.reserve(G.cardinality);
  std::vector<std::int64_t> message(G.rows.size(), 0);
  while (true) {
    out.push_back(encode(G, message));
    std::size_t i = 0;
    for (; i < message.size(); ++i) {
      if (++message[i] < static_cast<std::int64_t>(G.row_orders[i])) break;
      message[i] = 0;
    }
    if (i == message.size()) break;
  }
  // The generating rows are independent, so duplicates cannot arise; the
  // CodeSet constructor re-checks that.
  return CodeSet(G.mod, G.n, std::move(out));
}

SearchResult max_code_search(unsigned n, unsigned m, unsigned t, Metric metric) {
  const Modulus mod(m);
  if (n == 0) throw ParameterError("requires n >= 1");
  if (n * m > kMaxSearchBits)
    throw BudgetError("exact search limited to n*m <= " +
                      std::to_string(kMaxSearchBits) + " bits");
  require_radius(mod, t);

  const std::size_t count = std::size_t{1} << (n * m);
  std::vector<Word> words;
  words.reserve(count);
  for (std::uint64_t p = 0; p < count; ++p) words.push_back(Word::unpack(p, mod, n));

  const auto compatible = [&](std::size_t a, std::size_t b) {
    if (metric == Metric::lee)
      return lee_distance(words[a], words[b]) >= 2 * std::uint64_t{t} + 1;
    return !crosses_meet(words[a], words[b], t);
  };

  // Vertices sorted by compatibility degree (descending, id-tiebroken) give
  // the branch-and-bound a stable, effective expansion order.
  std::vector<std::uint32_t> degree(count, 0);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (compatible(a, b)) {
        ++degree[a];
        ++degree[b];
      }
  std::vector<std::uint32_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return degree[a] != degree[b] ? degree[a] > degree[b] : a < b;
  });

  // Adjacency bitset in permuted numbering.
  const std::size_t stride = (count + 63) / 64;
  std::vector<std::uint64_t> adj(count * stride, 0);
  const auto adjacent = [&](std::size_t a, std::size_t b) {
    return (adj[a * stride + b / 64] >> (b % 64)) & 1u;
  };
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      if (compatible(order[a], order[b])) {
        adj[a * stride + b / 64] |= std::uint64_t{1} << (b % 64);
        adj[b * stride + a / 64] |= std::uint64_t{1} << (a % 64);
      }

  std::vector<std::uint32_t> best, current;
  // Tomita-style expansion: candidates greedily colored, highest color first,
  // pruned when |clique| + color cannot beat the incumbent.
  const std::function<void(std::vector<std::uint32_t>)> expand =
      [&](std::vector<std::uint32_t> cand) {
        std::sort(cand.begin(), cand.end());
        std::vector<std::vector<std::uint32_t>> classes;
        for (const std::uint32_t v : cand) {
          std::size_t cls = 0;
          for (; cls < classes.size(); ++cls) {
            bool clashes = false;
            for (const std::uint32_t u : classes[cls])
              if (adjacent(u, v)) {
                clashes = true;
                break;
              }
            if (!clashes) break;
          }
          if (cls == classes.size()) classes.emplace_back();
          classes[cls].push_back(v);
        }
        std::vector<std::uint32_t> colored, color;
        for (std::size_t cls = 0; cls < classes.size(); ++cls)
          for (const std::uint32_t v : classes[cls]) {
            colored.push_back(v);
            color.push_back(static_cast<std::uint32_t>(cls) + 1);
          }
        for (std::size_t i = colored.size(); i-- > 0;) {
          if (current.size() + color[i] <= best.size()) return;
          const std::uint32_t v = colored[i];
          std::vector<std::uint32_t> next;
          for (std::size_t j = 0; j < i; ++j)
            if (adjacent(colored[j], v)) next.push_back(colored[j]);
          current.push_back(v);
          if (next.empty()) {
            if (current.size() > best.size()) best = current;
          } else {
            expand(std::move(next));
          }
          current.pop_back();
        }
      };
  std::vector<std::uint32_t> all(count);
  for (std::size_t i = 0; i < count; ++i) all[i] = static_cast<std::uint32_t>(i);
  expand(std::move(all));

  std::vector<Word> witness;
  witness.reserve(best.size());
  for (const std::uint32_t v : best) witness.push_back(words[order[v]]);
  return SearchResult{best.size(), CodeSet(mod, n, std::move(witness))};
}

AuditReport audit_decoder(const CodeSet& code, unsigned t, const DecodeFn& decode,
                          AuditScope scope) {
  if (!decode) throw std::invalid_argument("audit needs a decoder");
  require_radius(code.modulus(), t);
  require_packable(code);
  const Modulus mod = code.modulus();
  const std::size_t n = code.length();
  const std::uint64_t volume = cross_sphere_volume(n, t);
  require_hash_budget(code, volume);
  if (scope == AuditScope::full_space && n * mod.exponent() > kMaxEnumerationBits)
    throw BudgetError("full-space audit limited to n*m <= " +
                      std::to_string(kMaxEnumerationBits) + " bits");

  // Ground truth: which codeword's sphere owns each received word.
  std::unordered_map<std::uint64_t, std::uint32_t> owner;
  owner.reserve(code.size() * volume);
  for (std::size_t i = 0; i < code.size(); ++i)
    for (const Word& w : cross_sphere(code.words()[i], t))
      if (!owner.emplace(w.packed(), static_cast<std::uint32_t>(i)).second)
        throw std::invalid_argument("code is not cross-correcting at this magnitude");

  AuditReport report;
  const auto run_case = [&](const Word& received, const Word* codeword) {
    ++report.cases;
    std::optional<DecodeOutcome> got;
    try {
      got = decode(received);
    } catch (...) {
      ++report.anomalies;
      return;
    }
    if (codeword == nullptr) {
      if (got->corrected())
        ++report.spurious;
      else
        ++report.successes;
      return;
    }
    const DecodeOutcome expected =
        DecodeOutcome::corrected(*codeword, word_sub(received, *codeword));
    if (*got == expected)
      ++report.successes;
    else if (got->corrected())
      ++report.wrong_decodes;
    else
      ++report.missed;
  };

  if (scope == AuditScope::spheres) {
    for (const Word& c : code.words())
      for (const Word& w : cross_sphere(c, t)) run_case(w, &c);
  } else {
    const std::uint64_t space = std::uint64_t{1} << (n * mod.exponent());
    for (std::uint64_t p = 0; p < space; ++p) {
      const Word w = Word::unpack(p, mod, n);
      const auto it = owner.find(p);
      run_case(w, it == owner.end() ? nullptr : &code.words()[it->second]);
    }
  }
  return report;
}

}  // namespace crosscodes
