#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crosscodes/construct.hpp"
#include "crosscodes/metric.hpp"
#include "crosscodes/oracle.hpp"

namespace crosscodes {

// Comma-separated canonical residues, e.g. "12,6". Whitespace around
// separators is accepted; values are reduced mod 2^m.
Word parse_word(const std::string& text, Modulus mod, std::size_t expected_length);
std::string format_word(const Word& w);

/** A constructed code bundled with its generators and certification state. */
struct CodeDocument {
  LinearCode code;
  GeneratorMatrix generators;
  // true/false when the disjointness oracle ran, empty when it was skipped
  // (over budget).
  std::optional<bool> certified;
};

// JSON object with keys type ("linear_code"), n, m, t, construction,
// H and G (row-major residue arrays), G_orders, cardinality, certified
// (true/false/null). Loading re-derives cardinality from G_orders and
// rejects inconsistent documents.
std::string code_document_to_json(const CodeDocument& doc);
CodeDocument code_document_from_json(const std::string& json_text);

/** A plain word set, optionally annotated with its design magnitude. */
struct CodeSetDocument {
  CodeSet set;
  std::optional<unsigned> t;
};

// JSON object with keys type ("code_set"), n, m, words, and t when present.
std::string code_set_to_json(const CodeSetDocument& doc);
CodeSetDocument code_set_from_json(const std::string& json_text);

// Any document kind carrying a code, recognized by its "type" key, reduced
// to the word set it denotes: code sets verbatim, linear codes by kernel
// enumeration (within budget), search reports by their witness set.
CodeSetDocument any_code_file_to_set(const std::string& json_text);

// Rows as emitted by bound_table. CSV has the header
// n,t,q,lee,cross,lee_linear,cross_linear; JSON nests rows under n and t;
// text renders an aligned table for terminals.
std::string bound_table_to_csv(unsigned n, unsigned t, const std::vector<BoundRow>& rows);
std::string bound_table_to_json(unsigned n, unsigned t, const std::vector<BoundRow>& rows);
std::string bound_table_to_text(unsigned n, unsigned t, const std::vector<BoundRow>& rows);

std::string certify_result_to_json(const CertifyResult& result, Metric metric, unsigned t);
std::string search_result_to_json(const SearchResult& result, unsigned n, unsigned m,
                                  unsigned t, Metric metric);
std::string audit_report_to_json(const AuditReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace crosscodes
