#include "crosscodes/construct.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "crosscodes/errors.hpp"

namespace crosscodes {

std::string construction_name(Construction c) {
  switch (c) {
    case Construction::cor5: return "cor5";
    case Construction::thm9: return "thm9";
    case Construction::cor12: return "cor12";
    case Construction::custom: return "custom";
  }
  throw std::logic_error("unknown construction tag");
}

Construction construction_from_name(const std::string& name) {
  if (name == "cor5") return Construction::cor5;
  if (name == "thm9") return Construction::thm9;
  if (name == "cor12") return Construction::cor12;
  if (name == "custom") return Construction::custom;
  throw std::invalid_argument("unknown construction: " + name);
}

unsigned CodeSpec::k() const {
  if (t == 0) throw ParameterError("requires t >= 1");
  unsigned k = 0;
  while ((std::uint64_t{2} << k) <= t) ++k;
  return k;
}

namespace {

unsigned floor_log2(unsigned t) {
  unsigned k = 0;
  while ((std::uint64_t{2} << k) <= t) ++k;
  return k;
}

void require(bool ok, const char* inequality) {
  if (!ok) throw ParameterError(std::string("requires ") + inequality);
}

}  // namespace

LinearCode cor5_code(unsigned m, unsigned t) {
  require(t >= 1, "t >= 1");
  const unsigned k = floor_log2(t);
  require(m >= k + 2 && m <= kMaxModulusBits, "m >= k+2");
  const std::int64_t c = std::int64_t{1} << (m - k - 2);
  CodeSpec spec{2, m, t, Construction::cor5};
  Matrix H(Modulus(m), {{c, c}, {0, 2 * c}});
  return LinearCode{spec, H, std::uint64_t{1} << (2 * (m - k) - 3)};
}

LinearCode thm9_code(unsigned m, unsigned t) {
  require(t == 2 || t == 3, "t in {2,3}");
  require(m >= 2 * t, "m >= 2t");
  require(m <= kMaxModulusBits, "m <= modulus cap");
  const std::int64_t unit = std::int64_t{1} << (m - 2 * t);
  CodeSpec spec{2, m, t, Construction::thm9};
  Matrix H(Modulus(m), {{-static_cast<std::int64_t>(t + 1) * unit, unit}});
  return LinearCode{spec, H, std::uint64_t{1} << (2 * (m - t))};
}

LinearCode cor12_code(unsigned m, unsigned t) {
  require(t >= 1, "t >= 1");
  const unsigned k = floor_log2(t);
  require(m >= k + 2 && m <= kMaxModulusBits, "m >= k+2");
  require(static_cast<std::uint64_t>(t) <= (std::uint64_t{1} << (m - 1)), "t <= 2^{m-1}");
  const std::int64_t c = std::int64_t{1} << (m - k - 2);
  CodeSpec spec{3, m, t, Construction::cor12};
  Matrix H(Modulus(m), {{c, c, c}, {0, 2 * c, (2 * static_cast<std::int64_t>(t) + 1) * c}});
  return LinearCode{spec, H, std::nullopt};
}

namespace {

// +-{0, 2^{m-1}, ..., 2^{m-k-1}} as canonical residues.
std::set<std::uint32_t> first_row_excluded_set(Modulus mod, unsigned k) {
  std::set<std::uint32_t> ex{0};
  const unsigned m = mod.exponent();
  const unsigned lo = m >= k + 1 ? m - k - 1 : 0;
  for (unsigned j = lo; j <= m - 1; ++j) {
    const std::int64_t p = std::int64_t{1} << j;
    ex.insert(mod.reduce(p));
    ex.insert(mod.reduce(-p));
  }
  return ex;
}

// {a * u^{-1} * x : 1 <= a <= t, u odd in [1, t_bar]} and its negation.
std::set<std::uint32_t> scaled_inverse_set(Modulus mod, std::uint32_t x, unsigned t) {
  std::set<std::uint32_t> s;
  const unsigned t_bar = t % 2 == 1 ? t : t - 1;
  const RingElement xe(x, mod);
  for (unsigned u = 1; u <= t_bar; u += 2) {
    const RingElement inv_u = inverse_odd(RingElement(u, mod));
    for (unsigned a = 1; a <= t; ++a) {
      const RingElement v = RingElement(a, mod) * inv_u * xe;
      s.insert(v.value());
      s.insert((-v).value());
    }
  }
  return s;
}

ValidationResult violation(unsigned condition, std::string detail) {
  return ValidationResult{false, condition, std::move(detail)};
}

}  // namespace

ValidationResult validate_length2_matrix(const Matrix& H, unsigned t) {
  if (H.rows() != 2 || H.cols() != 2)
    throw std::invalid_argument("validator expects a 2x2 matrix");
  if (t == 0) throw ParameterError("requires t >= 1");
  const Modulus mod = H.modulus();
  const unsigned m = mod.exponent();
  const unsigned k = floor_log2(t);
  if (m < k) throw ParameterError("requires m >= k");

  const auto excluded = first_row_excluded_set(mod, k);
  for (std::size_t j = 0; j < 2; ++j)
    if (excluded.count(H.at(0, j)))
      return violation(1, "first-row entry " + std::to_string(H.at(0, j)) +
                              " lies in the excluded set");

  const std::uint32_t x2 = H.at(1, 0), y2 = H.at(1, 1);
  if (scaled_inverse_set(mod, x2, t).count(y2))
    return violation(2, "H22 is a forbidden multiple of H21 mod 2^m");
  if (scaled_inverse_set(mod, y2, t).count(x2))
    return violation(3, "H21 is a forbidden multiple of H22 mod 2^m");

  if (m == k)
    return violation(4, "m = k leaves no residue freedom mod 2^{m-k}");
  const Modulus sub(m - k);
  const std::uint32_t x2s = sub.reduce(x2), y2s = sub.reduce(y2);
  const unsigned t_sub = t >> k;  // floor(t / 2^k) = 1 whenever 2^k <= t < 2^{k+1}
  if (scaled_inverse_set(sub, x2s, t_sub).count(y2s))
    return violation(4, "H22 is a forbidden multiple of H21 mod 2^{m-k}");
  if (scaled_inverse_set(sub, y2s, t_sub).count(x2s))
    return violation(5, "H21 is a forbidden multiple of H22 mod 2^{m-k}");

  return ValidationResult{};
}

ValidationResult validate_length3_matrix(const Matrix& H, unsigned t) {
  if (H.rows() != 2 || H.cols() != 3)
    throw std::invalid_argument("validator expects a 2x3 matrix");
  if (t == 0) throw ParameterError("requires t >= 1");
  const Modulus mod = H.modulus();
  const unsigned k = floor_log2(t);
  if (mod.exponent() < k) throw ParameterError("requires m >= k");

  const auto excluded = first_row_excluded_set(mod, k);
  for (std::size_t j = 0; j < 3; ++j)
    if (excluded.count(H.at(0, j)))
      return violation(1, "first-row entry of column " + std::to_string(j + 1) +
                              " lies in the excluded set");

  const auto scaled_column = [&](std::size_t j, std::int64_t a) {
    return std::pair<std::uint32_t, std::uint32_t>(
        mod.reduce(a * H.at(0, j)), mod.reduce(a * H.at(1, j)));
  };

  constexpr std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [i, j] : pairs) {
    for (unsigned a = 1; a <= t; ++a) {
      const auto sa = scaled_column(i, a);
      for (unsigned b = 1; b <= t; ++b) {
        if (sa == scaled_column(j, b) || sa == scaled_column(j, -static_cast<std::int64_t>(b)))
          return violation(2, "columns " + std::to_string(i + 1) + " and " +
                                  std::to_string(j + 1) +
                                  " share a small-error syndrome");
      }
    }
  }

  for (std::size_t j = 0; j < 3; ++j)
    for (unsigned a = 1; a <= 2 * t; ++a)
      if (scaled_column(j, a) == std::pair<std::uint32_t, std::uint32_t>(0, 0))
        return violation(3, "column " + std::to_string(j + 1) +
                                " is annihilated by " + std::to_string(a));

  return ValidationResult{};
}

namespace {

unsigned valuation(std::uint32_t v, unsigned m) {
  if (v == 0) return m;
  unsigned e = 0;
  while ((v & 1u) == 0) {
    v >>= 1;
    ++e;
  }
  return e;
}

}  // namespace

GeneratorMatrix kernel_basis(const Matrix& H) {
  const Modulus mod = H.modulus();
  const unsigned m = mod.exponent();
  const std::uint64_t q = mod.size();
  const std::size_t rows = H.rows(), n = H.cols();

  // Work copy A and column-operation accumulator B: kernel(H) = B * kernel(diag).
  std::vector<std::vector<std::uint64_t>> A(rows, std::vector<std::uint64_t>(n));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < n; ++c) A[r][c] = H.at(r, c);
  std::vector<std::vector<std::uint64_t>> B(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) B[i][i] = 1;

  std::vector<unsigned> diag_exp;  // valuations of the diagonal entries
  const std::size_t steps = std::min(rows, n);
  for (std::size_t p = 0; p < steps; ++p) {
    // Pivot: minimal 2-adic valuation in the remaining block, first position wins ties.
    unsigned best_e = m;
    std::size_t pr = p, pc = p;
    for (std::size_t r = p; r < rows; ++r)
      for (std::size_t c = p; c < n; ++c) {
        const unsigned e = valuation(static_cast<std::uint32_t>(A[r][c]), m);
        if (e < best_e) {
          best_e = e;
          pr = r;
          pc = c;
        }
      }
    if (best_e == m) break;  // remaining block is zero

    std::swap(A[p], A[pr]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(A[r][p], A[r][pc]);
    for (std::size_t i = 0; i < n; ++i) std::swap(B[i][p], B[i][pc]);

    // Scale the pivot row by the inverse of the pivot's odd part.
    const std::uint64_t inv =
        inverse_odd(RingElement(static_cast<std::int64_t>(A[p][p] >> best_e), mod)).value();
    for (std::size_t c = p; c < n; ++c) A[p][c] = (A[p][c] * inv) % q;

    for (std::size_t r = 0; r < rows; ++r) {
      if (r == p || A[r][p] == 0) continue;
      const std::uint64_t f = A[r][p] >> best_e;  // divisible: pivot has minimal valuation
      for (std::size_t c = p; c < n; ++c)
        A[r][c] = (A[r][c] + (q - ((f * A[p][c]) % q))) % q;
    }
    for (std::size_t c = p + 1; c < n; ++c) {
      if (A[p][c] == 0) continue;
      const std::uint64_t g = A[p][c] >> best_e;
      A[p][c] = 0;  // rows below p are already zero in column p
      for (std::size_t i = 0; i < n; ++i)
        B[i][c] = (B[i][c] + (q - ((g * B[i][p]) % q))) % q;
    }
    diag_exp.push_back(best_e);
  }

  // Kernel of the diagonal form: annihilators 2^{m-e} per pivot column, the
  // full ring for free columns; map back through B.
  GeneratorMatrix G{mod, n, {}, {}, 1, 0};
  for (std::size_t c = 0; c < n; ++c) {
    const unsigned e = c < diag_exp.size() ? diag_exp[c] : m;
    if (e == 0) continue;  // unit pivot contributes nothing
    std::vector<std::int64_t> gen(n);
    const std::uint64_t lift = std::uint64_t{1} << (m - e);
    for (std::size_t i = 0; i < n; ++i)
      gen[i] = static_cast<std::int64_t>((B[i][c] * lift) % q);
    G.rows.emplace_back(mod, std::move(gen));
    G.row_orders.push_back(std::uint64_t{1} << e);
    G.log2_cardinality += e;
  }
  if (G.log2_cardinality > 62) throw BudgetError("kernel cardinality exceeds 2^62");
  G.cardinality = std::uint64_t{1} << G.log2_cardinality;

  for (const Word& g : G.rows) {
    const Word s = mat_vec(H, g);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != 0) throw std::logic_error("kernel generator fails the parity check");
  }
  return G;
}

Word encode(const GeneratorMatrix& G, const std::vector<std::int64_t>& message) {
  if (message.size() != G.rows.size())
    throw std::invalid_argument("message length must match the generator row count");
  Word acc = Word::zero(G.mod, G.n);
  for (std::size_t i = 0; i < message.size(); ++i)
    acc = word_add(acc, word_scale(message[i], G.rows[i]));
  return acc;
}

std::uint64_t gap_to_bound(const LinearCode& code, std::uint64_t cardinality) {
  const std::uint64_t bound =
      linear_sphere_packing_bound(code.spec.n, code.spec.m, code.spec.t, Metric::cross);
  if (cardinality == 0 || bound % cardinality != 0)
    throw std::logic_error("cardinality does not divide the linear bound");
  return bound / cardinality;
}

}  // namespace crosscodes
