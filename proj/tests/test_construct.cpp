#include <doctest.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "crosscodes/construct.hpp"
#include "crosscodes/errors.hpp"
#include "crosscodes/oracle.hpp"

using namespace crosscodes;

namespace {

// Span of arbitrary rows by closure, independent of the generator machinery.
std::set<Word> span_by_closure(Modulus mod, const std::vector<Word>& rows) {
  std::set<Word> span{Word::zero(mod, rows.front().size())};
  for (bool grew = true; grew;) {
    grew = false;
    std::set<Word> next = span;
    for (const Word& w : span)
      for (const Word& r : rows) {
        const Word s = word_add(w, r);
        if (next.insert(s).second) grew = true;
      }
    span = std::move(next);
  }
  return span;
}

std::set<Word> as_set(const CodeSet& code) {
  return std::set<Word>(code.words().begin(), code.words().end());
}

}  // namespace

TEST_CASE("construction names round-trip") {
  for (const Construction c :
       {Construction::cor5, Construction::thm9, Construction::cor12, Construction::custom})
    CHECK(construction_from_name(construction_name(c)) == c);
  CHECK_THROWS_AS(construction_from_name("nonsense"), std::invalid_argument);
}

TEST_CASE("code spec derives k and the odd part of t") {
  CodeSpec spec{2, 4, 3, Construction::cor5};
  CHECK(spec.k() == 1);
  CHECK(spec.t_bar() == 3);
  spec.t = 4;
  CHECK(spec.k() == 2);
  CHECK(spec.t_bar() == 3);
  spec.t = 1;
  CHECK(spec.k() == 0);
  spec.t = 15;
  CHECK(spec.k() == 3);
}

TEST_CASE("cor5 parity fixtures over Z_8, Z_16, Z_32 at t = 3") {
  const LinearCode c8 = cor5_code(3, 3);
  CHECK(c8.parity == Matrix(Modulus(3), {{1, 1}, {0, 2}}));
  CHECK(c8.closed_form_cardinality == 2);

  const LinearCode c16 = cor5_code(4, 3);
  CHECK(c16.parity == Matrix(Modulus(4), {{2, 2}, {0, 4}}));
  CHECK(c16.closed_form_cardinality == 8);

  const LinearCode c32 = cor5_code(5, 3);
  CHECK(c32.parity == Matrix(Modulus(5), {{4, 4}, {0, 8}}));
  CHECK(c32.closed_form_cardinality == 32);

  // The matrix depends on t only through k, so t = 2 gives the same codes.
  CHECK(cor5_code(4, 2).parity == c16.parity);
}

TEST_CASE("cor5 parity fixtures at t = 7") {
  const LinearCode c16 = cor5_code(4, 7);
  CHECK(c16.parity == Matrix(Modulus(4), {{1, 1}, {0, 2}}));
  CHECK(c16.closed_form_cardinality == 2);

  const LinearCode c32 = cor5_code(5, 7);
  CHECK(c32.parity == Matrix(Modulus(5), {{2, 2}, {0, 4}}));
  CHECK(c32.closed_form_cardinality == 8);
}

TEST_CASE("cor5 requires m >= k+2 and a positive magnitude") {
  CHECK_THROWS_WITH_AS(cor5_code(3, 7), "requires m >= k+2", ParameterError);
  CHECK_THROWS_WITH_AS(cor5_code(2, 0), "requires t >= 1", ParameterError);
  CHECK_NOTHROW(cor5_code(2, 1));  // k = 0, smallest valid modulus
}

TEST_CASE("cor5 kernels match the closed form across the valid range") {
  for (unsigned t = 1; t <= 15; ++t)
    for (unsigned m = 3; m <= 8; ++m) {
      const CodeSpec probe{2, m, t, Construction::cor5};
      if (m < probe.k() + 2) continue;
      const LinearCode code = cor5_code(m, t);
      const CodeSet words = enumerate_kernel(code.parity);
      CHECK(words.size() == *code.closed_form_cardinality);
      CHECK(words.size() == std::uint64_t{1} << (2 * (m - probe.k()) - 3));
      CHECK(validate_length2_matrix(code.parity, t).ok);
    }
}

TEST_CASE("thm9 parity fixtures and closed-form cardinality") {
  const LinearCode c42 = thm9_code(4, 2);
  CHECK(c42.parity == Matrix(Modulus(4), {{13, 1}}));  // (-3, 1) mod 16
  CHECK(c42.closed_form_cardinality == 16);

  const LinearCode c63 = thm9_code(6, 3);
  CHECK(c63.parity == Matrix(Modulus(6), {{60, 1}}));  // (-4*2^0, 2^0) mod 64
  CHECK(c63.closed_form_cardinality == 64);

  for (unsigned m = 4; m <= 8; ++m)
    CHECK(enumerate_kernel(thm9_code(m, 2).parity).size() == std::uint64_t{1} << (2 * (m - 2)));
  for (unsigned m = 6; m <= 8; ++m)
    CHECK(enumerate_kernel(thm9_code(m, 3).parity).size() == std::uint64_t{1} << (2 * (m - 3)));
}

TEST_CASE("thm9 rejects magnitudes outside {2,3} and m < 2t") {
  CHECK_THROWS_WITH_AS(thm9_code(8, 1), "requires t in {2,3}", ParameterError);
  CHECK_THROWS_AS(thm9_code(8, 4), ParameterError);
  CHECK_THROWS_WITH_AS(thm9_code(5, 3), "requires m >= 2t", ParameterError);
  CHECK_THROWS_AS(thm9_code(3, 2), ParameterError);
}

TEST_CASE("the rows (1, t+1) and (16, 0) generate exactly the thm9 kernel") {
  // Fixture generator displays; literal second row (16, 0) for both magnitudes.
  for (unsigned t = 2; t <= 3; ++t)
    for (unsigned m = 2 * t; m <= 8; ++m) {
      const Modulus mod(m);
      const std::set<Word> spanned =
          span_by_closure(mod, {Word(mod, {1, static_cast<std::int64_t>(t) + 1}),
                                Word(mod, {16, 0})});
      CHECK(spanned == as_set(enumerate_kernel(thm9_code(m, t).parity)));
    }
}

TEST_CASE("replacing (16, 0) by (64, 0) under-generates the t = 3 kernel for m >= 7") {
  for (unsigned m = 7; m <= 8; ++m) {
    const Modulus mod(m);
    const std::set<Word> spanned =
        span_by_closure(mod, {Word(mod, {1, 4}), Word(mod, {64, 0})});
    const std::set<Word> kernel = as_set(enumerate_kernel(thm9_code(m, 3).parity));
    CHECK(spanned.size() < kernel.size());
    for (const Word& w : spanned) CHECK(kernel.count(w) == 1);
  }
  // At m = 6 the two rows coincide with (16,0)'s span: 64 = 0 there anyway.
  const Modulus m6(6);
  CHECK(span_by_closure(m6, {Word(m6, {1, 4}), Word(m6, {64, 0})}) ==
        as_set(enumerate_kernel(thm9_code(6, 3).parity)));
}

TEST_CASE("cor12 parity fixtures over Z_16 and Z_32") {
  const LinearCode c16t3 = cor12_code(4, 3);
  CHECK(c16t3.parity == Matrix(Modulus(4), {{2, 2, 2}, {0, 4, 14}}));  // 7*2 = -2 mod 16
  const LinearCode c32t3 = cor12_code(5, 3);
  CHECK(c32t3.parity == Matrix(Modulus(5), {{4, 4, 4}, {0, 8, 28}}));
  const LinearCode c16t7 = cor12_code(4, 7);
  CHECK(c16t7.parity == Matrix(Modulus(4), {{1, 1, 1}, {0, 2, 15}}));
  const LinearCode c32t7 = cor12_code(5, 7);
  CHECK(c32t7.parity == Matrix(Modulus(5), {{2, 2, 2}, {0, 4, 30}}));

  CHECK(enumerate_kernel(c16t3.parity).size() == 64);
  CHECK(enumerate_kernel(c32t3.parity).size() == 512);
  CHECK(enumerate_kernel(c16t7.parity).size() == 16);
  CHECK(enumerate_kernel(c32t7.parity).size() == 128);
}

TEST_CASE("cor12 fixture generator displays mostly under-generate the kernel") {
  // The displayed row pairs all lie inside the kernel, but only the Z_16,
  // t = 7 pair generates it. The rest span proper subgroups, so generators
  // are always derived from the kernel here instead of taken from a display.
  struct Fixture {
    unsigned m, t;
    std::vector<std::int64_t> r1, r2;
    std::size_t span_size;
  };
  const std::vector<Fixture> fixtures = {
      {4, 3, {2, 2, 4}, {1, 5, 2}, 32},    // kernel 64
      {5, 3, {2, 2, 4}, {1, 5, 2}, 128},   // kernel 512
      {4, 7, {7, 3, 6}, {1, 5, 10}, 16},   // kernel 16: exact
      {5, 7, {7, 3, 6}, {1, 5, 10}, 32},   // kernel 128
  };
  for (const Fixture& f : fixtures) {
    const Modulus mod(f.m);
    const std::set<Word> spanned =
        span_by_closure(mod, {Word(mod, f.r1), Word(mod, f.r2)});
    const std::set<Word> kernel = as_set(enumerate_kernel(cor12_code(f.m, f.t).parity));
    CHECK(spanned.size() == f.span_size);
    for (const Word& w : spanned) CHECK(kernel.count(w) == 1);
  }
  CHECK(span_by_closure(Modulus(4), {Word(Modulus(4), {7, 3, 6}), Word(Modulus(4), {1, 5, 10})}) ==
        as_set(enumerate_kernel(cor12_code(4, 7).parity)));
}

TEST_CASE("cor12 validates its range") {
  CHECK_THROWS_WITH_AS(cor12_code(3, 7), "requires m >= k+2", ParameterError);
  CHECK_NOTHROW(cor12_code(3, 1));
}

TEST_CASE("two-column condition checker accepts the cor5 matrices") {
  for (unsigned t = 1; t <= 15; ++t)
    for (unsigned m = 3; m <= 8; ++m) {
      const CodeSpec probe{2, m, t, Construction::cor5};
      if (m < probe.k() + 2) continue;
      const ValidationResult v = validate_length2_matrix(cor5_code(m, t).parity, t);
      CHECK(v.ok);
      CHECK(v.violated_condition == 0);
    }
}

TEST_CASE("two-column condition checker rejects known-bad matrices") {
  const Modulus m4(4);
  // A zero in the first row lands in the excluded set.
  const ValidationResult v1 = validate_length2_matrix(Matrix(m4, {{0, 1}, {1, 1}}), 2);
  CHECK(!v1.ok);
  CHECK(v1.violated_condition == 1);
  // Identical columns: the second-row entries collide at multiplier 1.
  const ValidationResult v2 = validate_length2_matrix(Matrix(m4, {{1, 1}, {1, 1}}), 2);
  CHECK(!v2.ok);
  CHECK(v2.violated_condition == 2);
  // An antipodal first-row entry is excluded.
  const ValidationResult v3 = validate_length2_matrix(Matrix(m4, {{8, 1}, {0, 2}}), 2);
  CHECK(!v3.ok);
  CHECK(v3.violated_condition == 1);
}

TEST_CASE("three-column condition checker accepts cor12 and rejects mutants") {
  for (unsigned t = 1; t <= 15; ++t)
    for (unsigned m = 3; m <= 7; ++m) {
      const CodeSpec probe{3, m, t, Construction::cor12};
      if (m < probe.k() + 2) continue;
      CHECK(validate_length3_matrix(cor12_code(m, t).parity, t).ok);
    }

  const Modulus m4(4);
  // Second-row entries of columns 1 and 2 equal: their syndrome sets collide.
  const Matrix equal_cols(m4, {{2, 2, 2}, {4, 4, 14}});
  const ValidationResult v1 = validate_length3_matrix(equal_cols, 3);
  CHECK(!v1.ok);
  CHECK(v1.violated_condition == 2);
  // First-row entry 8 = 2^{m-1} sits in the excluded set.
  const Matrix bad_top(m4, {{2, 2, 8}, {0, 4, 14}});
  const ValidationResult v2 = validate_length3_matrix(bad_top, 3);
  CHECK(!v2.ok);
  CHECK(v2.violated_condition == 1);
}

TEST_CASE("kernel basis reproduces the enumerated kernel exactly") {
  const std::vector<Matrix> parities = {
      cor5_code(4, 3).parity,
      cor5_code(5, 7).parity,
      thm9_code(4, 2).parity,
      thm9_code(6, 3).parity,
      cor12_code(4, 3).parity,
      cor12_code(4, 7).parity,
      cor12_code(5, 2).parity,
      Matrix(Modulus(3), {{1, 2, 3}, {4, 5, 6}}),
      Matrix(Modulus(4), {{2, 0}, {0, 2}}),
      Matrix(Modulus(4), {{0, 0}}),  // everything is a codeword
  };
  for (const Matrix& H : parities) {
    const GeneratorMatrix G = kernel_basis(H);
    CHECK(G.cardinality == (std::uint64_t{1} << G.log2_cardinality));
    const CodeSet spanned = enumerate_span(G);  // throws on duplicates
    CHECK(spanned == enumerate_kernel(H));
    std::uint64_t product = 1;
    for (const std::uint64_t o : G.row_orders) product *= o;
    CHECK(product == G.cardinality);
  }
}

TEST_CASE("encode walks the generator rows") {
  const GeneratorMatrix G = kernel_basis(cor5_code(4, 3).parity);
  REQUIRE(G.rows.size() == 2);
  CHECK(encode(G, {0, 0}) == Word::zero(Modulus(4), 2));
  const Word w = encode(G, {1, 1});
  CHECK(w == word_add(G.rows[0], G.rows[1]));
  // Coefficients wrap at the row order, so order and 0 agree.
  CHECK(encode(G, {static_cast<std::int64_t>(G.row_orders[0]), 0}) ==
        Word::zero(Modulus(4), 2));
  CHECK_THROWS_AS(encode(G, {1}), std::invalid_argument);
}

TEST_CASE("gap to the linear bound is a power of two for every construction") {
  for (unsigned t = 1; t <= 15; ++t)
    for (unsigned m = 3; m <= 8; ++m) {
      const CodeSpec probe{2, m, t, Construction::cor5};
      if (m < probe.k() + 2) continue;
      const LinearCode code = cor5_code(m, t);
      const std::uint64_t gap = gap_to_bound(code, *code.closed_form_cardinality);
      CHECK((gap & (gap - 1)) == 0);
      CHECK(gap == std::uint64_t{1} << probe.k());
    }
  const LinearCode c2 = thm9_code(6, 2);
  CHECK(gap_to_bound(c2, *c2.closed_form_cardinality) == 1);
  const LinearCode c3 = thm9_code(6, 3);
  CHECK(gap_to_bound(c3, *c3.closed_form_cardinality) == 4);
}
