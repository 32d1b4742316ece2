// Command-line front end: sphere-packing bound tables, code construction,
// encoding, syndrome decoding, certification, exact search, decoder audits.
// Exit codes: 0 success, 1 negative verdict (decode failure, failed
// certification, unclean audit), 2 usage or parameter errors.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crosscodes/construct.hpp"
#include "crosscodes/decode.hpp"
#include "crosscodes/errors.hpp"
#include "crosscodes/metric.hpp"
#include "crosscodes/oracle.hpp"
#include "crosscodes/serialize.hpp"

namespace cc = crosscodes;

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    cc::write_text_file(out_path, text);
}

cc::Metric metric_from_name(const std::string& name) {
  if (name == "cross") return cc::Metric::cross;
  if (name == "lee") return cc::Metric::lee;
  throw std::invalid_argument("unknown metric: " + name);
}

cc::LinearCode build_code(const std::string& construction, unsigned m, unsigned t) {
  switch (cc::construction_from_name(construction)) {
    case cc::Construction::cor5: return cc::cor5_code(m, t);
    case cc::Construction::thm9: return cc::thm9_code(m, t);
    case cc::Construction::cor12: return cc::cor12_code(m, t);
    default: throw std::invalid_argument("construction must be cor5, thm9 or cor12");
  }
}

// The magnitude-t single-error decoder for a code document: the dedicated
// algorithm when the construction has one, the column matcher otherwise.
cc::DecodeFn decoder_for(const cc::CodeDocument& doc, bool force_generic) {
  const cc::CodeSpec spec = doc.code.spec;
  if (!force_generic) {
    if (spec.construction == cc::Construction::cor5)
      return [spec](const cc::Word& r) { return cc::decode_cor5(r, spec.m, spec.t); };
    if (spec.construction == cc::Construction::thm9 && spec.t == 2)
      return [spec](const cc::Word& r) { return cc::decode_thm9_t2(r, spec.m); };
    if (spec.construction == cc::Construction::cor12)
      return [spec](const cc::Word& r) { return cc::decode_cor12(r, spec.m, spec.t); };
  }
  const cc::Matrix H = doc.code.parity;
  const unsigned t = spec.t;
  return [H, t](const cc::Word& r) { return cc::decode_syndrome_match(H, r, t); };
}

struct TableRequest {
  unsigned n = 0;
  unsigned t = 0;
  std::vector<unsigned> ms;
};

std::string render_tables(const std::vector<TableRequest>& requests,
                          const std::string& format) {
  std::string out;
  if (format == "csv") {
    out = "n,t,q,lee,cross,lee_linear,cross_linear\n";
    for (const TableRequest& req : requests) {
      const std::string one =
          cc::bound_table_to_csv(req.n, req.t, cc::bound_table(req.n, req.t, req.ms));
      out += one.substr(one.find('\n') + 1);  // keep a single shared header
    }
    return out;
  }
  if (format == "json") {
    out = "[\n";
    for (std::size_t i = 0; i < requests.size(); ++i) {
      std::string one = cc::bound_table_to_json(
          requests[i].n, requests[i].t,
          cc::bound_table(requests[i].n, requests[i].t, requests[i].ms));
      if (!one.empty() && one.back() == '\n') one.pop_back();
      out += one;
      out += i + 1 < requests.size() ? ",\n" : "\n";
    }
    return out + "]\n";
  }
  for (const TableRequest& req : requests) {
    out += cc::bound_table_to_text(req.n, req.t, cc::bound_table(req.n, req.t, req.ms));
    out += "\n";
  }
  return out;
}

int run_bounds(unsigned n, unsigned t, const std::vector<unsigned>& ms, bool paper_tables,
               const std::string& format, const std::string& out_path) {
  std::vector<TableRequest> requests;
  if (paper_tables) {
    // The five standard tables: lengths 2..4, magnitudes 2..3, q = 8,16,32.
    for (const auto& [tn, tt] : {std::pair<unsigned, unsigned>{2, 2},
                                 {2, 3},
                                 {3, 2},
                                 {3, 3},
                                 {4, 2}})
      requests.push_back(TableRequest{tn, tt, {3, 4, 5}});
  } else {
    if (n == 0 || t == 0 || ms.empty())
      throw std::invalid_argument("bounds needs --n, --t and --m (or --paper-tables)");
    requests.push_back(TableRequest{n, t, ms});
  }
  emit(render_tables(requests, format), out_path);
  return 0;
}

int run_construct(const std::string& construction, unsigned m, unsigned t,
                  const std::string& out_path) {
  const cc::LinearCode code = build_code(construction, m, t);
  cc::CodeDocument doc{code, cc::kernel_basis(code.parity), std::nullopt};
  if (doc.code.closed_form_cardinality &&
      *doc.code.closed_form_cardinality != doc.generators.cardinality)
    throw std::logic_error("kernel cardinality disagrees with the closed form");
  try {
    doc.certified =
        bool(cc::certify_cross_code(cc::enumerate_span(doc.generators), doc.code.spec.t));
  } catch (const cc::BudgetError&) {
    // Larger than the oracle budget: leave certification open.
  }
  emit(cc::code_document_to_json(doc), out_path);
  return doc.certified.value_or(true) ? 0 : 1;
}

int run_encode(const std::string& code_path, const std::string& message_text) {
  const cc::CodeDocument doc = cc::code_document_from_json(cc::read_text_file(code_path));
  std::vector<std::int64_t> message;
  const cc::Word raw = cc::parse_word(message_text, cc::Modulus(cc::kMaxModulusBits),
                                      doc.generators.rows.size());
  for (std::size_t i = 0; i < raw.size(); ++i) message.push_back(raw[i]);
  std::cout << cc::format_word(cc::encode(doc.generators, message)) << "\n";
  return 0;
}

int run_decode(const std::string& code_path, const std::string& received_text,
               bool force_generic) {
  const cc::CodeDocument doc = cc::code_document_from_json(cc::read_text_file(code_path));
  const cc::Word received =
      cc::parse_word(received_text, doc.code.spec.modulus(), doc.code.spec.n);
  const cc::DecodeOutcome outcome = decoder_for(doc, force_generic)(received);
  if (!outcome.corrected()) {
    std::cout << "Failure\n";
    return 1;
  }
  std::cout << "Corrected c=(" << cc::format_word(outcome.codeword()) << ") e=("
            << cc::format_word(outcome.error()) << ")\n";
  return 0;
}

int run_certify(const std::string& file_path, std::optional<unsigned> t_override,
                const std::string& metric_name, const std::string& out_path) {
  const cc::CodeSetDocument doc = cc::any_code_file_to_set(cc::read_text_file(file_path));
  std::optional<unsigned> t = t_override ? t_override : doc.t;
  if (!t) throw std::invalid_argument("the file carries no magnitude; pass --t");
  const cc::Metric metric = metric_from_name(metric_name);
  const cc::CertifyResult result = metric == cc::Metric::cross
                                       ? cc::certify_cross_code(doc.set, *t)
                                       : cc::certify_lee_code(doc.set, *t);
  emit(cc::certify_result_to_json(result, metric, *t), out_path);
  return result.ok ? 0 : 1;
}

int run_search(unsigned n, unsigned m, unsigned t, const std::string& metric_name,
               const std::string& out_path) {
  const cc::Metric metric = metric_from_name(metric_name);
  const cc::SearchResult result = cc::max_code_search(n, m, t, metric);
  emit(cc::search_result_to_json(result, n, m, t, metric), out_path);
  return 0;
}

int run_audit(const std::string& construction, unsigned m, unsigned t, bool full_space,
              bool force_generic, const std::string& out_path) {
  const cc::LinearCode linear = build_code(construction, m, t);
  const cc::CodeDocument doc{linear, cc::kernel_basis(linear.parity), std::nullopt};
  const cc::CodeSet code = cc::enumerate_span(doc.generators);
  const cc::AuditReport report =
      cc::audit_decoder(code, t, decoder_for(doc, force_generic),
                        full_space ? cc::AuditScope::full_space : cc::AuditScope::spheres);
  emit(cc::audit_report_to_json(report), out_path);
  return report.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-coordinate error correcting integer codes over Z_{2^m}"};
  app.require_subcommand(1);

  unsigned n = 0, m = 0, t = 0;
  std::vector<unsigned> ms;
  bool paper_tables = false, force_generic = false, full_space = false;
  std::string format = "text", out_path, construction, code_path, file_path;
  std::string message_text, received_text, metric = "cross";
  std::optional<unsigned> t_override;

  CLI::App* bounds = app.add_subcommand("bounds", "Sphere-packing bound tables");
  bounds->add_option("--n", n, "word length");
  bounds->add_option("--t", t, "error magnitude");
  bounds->add_option("--m", ms, "modulus exponents, comma separated")->delimiter(',');
  bounds->add_flag("--paper-tables", paper_tables,
                   "emit the five standard tables (n=2,3,4; t=2,3; q=8,16,32)");
  bounds->add_option("--format", format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  bounds->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* construct = app.add_subcommand("construct", "Build a code and emit its JSON");
  construct->add_option("construction", construction, "cor5, thm9 or cor12")
      ->required()
      ->check(CLI::IsMember({"cor5", "thm9", "cor12"}));
  construct->add_option("--m", m, "modulus exponent")->required();
  construct->add_option("--t", t, "error magnitude")->required();
  construct->add_option("--out", out_path, "write to file instead of stdout");

  CLI::App* encode = app.add_subcommand("encode", "Map message coefficients to a codeword");
  encode->add_option("--code", code_path, "code JSON file")->required();
  encode->add_option("--message", message_text, "comma-separated coefficients")->required();

  CLI::App* decode = app.add_subcommand("decode", "Correct a received word");
  decode->add_option("--code", code_path, "code JSON file")->required();
  decode->add_option("--received", received_text, "comma-separated residues")->required();
  decode->add_flag("--generic", force_generic, "use the column-matching decoder");

  CLI::App* certify = app.add_subcommand("certify", "Check sphere disjointness");
  certify->add_option("--file", file_path, "code_set, linear_code or search_report JSON file")->required();
  certify->add_option("--t", t_override, "error magnitude (defaults to the file's)");
  certify->add_option("--metric", metric, "cross or lee")
      ->check(CLI::IsMember({"cross", "lee"}));
  certify->add_option("--out", out_path, "write report to file");

  CLI::App* search = app.add_subcommand("search", "Exact maximum code size");
  search->add_option("--n", n, "word length")->required();
  search->add_option("--m", m, "modulus exponent")->required();
  search->add_option("--t", t, "error magnitude")->required();
  search->add_option("--metric", metric, "cross or lee")
      ->check(CLI::IsMember({"cross", "lee"}));
  search->add_option("--out", out_path, "write report to file");

  CLI::App* audit = app.add_subcommand("audit", "Exhaustive decoder audit");
  audit->add_option("construction", construction, "cor5, thm9 or cor12")
      ->required()
      ->check(CLI::IsMember({"cor5", "thm9", "cor12"}));
  audit->add_option("--m", m, "modulus exponent")->required();
  audit->add_option("--t", t, "error magnitude")->required();
  audit->add_flag("--full-space", full_space, "also require failure outside all spheres");
  audit->add_flag("--generic", force_generic, "audit the column-matching decoder");
  audit->add_option("--out", out_path, "write report to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (bounds->parsed()) return run_bounds(n, t, ms, paper_tables, format, out_path);
    if (construct->parsed()) return run_construct(construction, m, t, out_path);
    if (encode->parsed()) return run_encode(code_path, message_text);
    if (decode->parsed()) return run_decode(code_path, received_text, force_generic);
    if (certify->parsed()) return run_certify(file_path, t_override, metric, out_path);
    if (search->parsed()) return run_search(n, m, t, metric, out_path);
    if (audit->parsed())
      return run_audit(construction, m, t, full_space, force_generic, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
