#include "crosscodes/serialize.hpp"

#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "crosscodes/errors.hpp"

namespace crosscodes {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  parts.push_back(current);
  return parts;
}

std::int64_t parse_residue(const std::string& token) {
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a residue: '" + token + "'");
  }
  while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
  if (pos != token.size()) throw std::invalid_argument("not a residue: '" + token + "'");
  return value;
}

json word_to_json(const Word& w) {
  json a = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) a.push_back(w[i]);
  return a;
}

json matrix_to_json(const Matrix& M) {
  json rows = json::array();
  for (const auto& row : M.row_lists()) rows.push_back(row);
  return rows;
}

std::vector<std::int64_t> json_to_int_row(const json& row) {
  if (!row.is_array() || row.empty()) throw std::invalid_argument("expected a residue row");
  std::vector<std::int64_t> out;
  out.reserve(row.size());
  for (const auto& v : row) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
      throw std::invalid_argument("expected integer residues");
    out.push_back(v.get<std::int64_t>());
  }
  return out;
}

std::vector<std::vector<std::int64_t>> json_to_int_rows(const json& rows) {
  if (!rows.is_array()) throw std::invalid_argument("expected an array of rows");
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(json_to_int_row(row));
  return out;
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON document");
  return doc;
}

unsigned get_unsigned(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned())
    throw std::invalid_argument(std::string("missing or invalid key '") + key + "'");
  return doc[key].get<unsigned>();
}

const char* metric_name(Metric metric) {
  return metric == Metric::cross ? "cross" : "lee";
}

}  // namespace

Word parse_word(const std::string& text, Modulus mod, std::size_t expected_length) {
  const std::vector<std::string> tokens = split(text, ',');
  if (tokens.size() != expected_length)
    throw std::invalid_argument("expected " + std::to_string(expected_length) +
                                " comma-separated residues, got " +
                                std::to_string(tokens.size()));
  std::vector<std::int64_t> coords;
  coords.reserve(tokens.size());
  for (const auto& tk : tokens) coords.push_back(parse_residue(tk));
  return Word(mod, std::move(coords));
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

std::string code_document_to_json(const CodeDocument& doc) {
  json j;
  j["type"] = "linear_code";
  j["n"] = doc.code.spec.n;
  j["m"] = doc.code.spec.m;
  j["t"] = doc.code.spec.t;
  j["construction"] = construction_name(doc.code.spec.construction);
  j["H"] = matrix_to_json(doc.code.parity);
  json g = json::array();
  for (const Word& row : doc.generators.rows) g.push_back(word_to_json(row));
  j["G"] = g;
  j["G_orders"] = doc.generators.row_orders;
  j["cardinality"] = doc.generators.cardinality;
  j["certified"] = doc.certified.has_value() ? json(*doc.certified) : json(nullptr);
  return j.dump(2) + "\n";
}

CodeDocument code_document_from_json(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.contains("type") || j["type"] != "linear_code")
    throw std::invalid_argument("not a linear_code document");
  CodeSpec spec;
  spec.n = get_unsigned(j, "n");
  spec.m = get_unsigned(j, "m");
  spec.t = get_unsigned(j, "t");
  if (!j.contains("construction") || !j["construction"].is_string())
    throw std::invalid_argument("missing construction tag");
  spec.construction = construction_from_name(j["construction"].get<std::string>());
  const Modulus mod = spec.modulus();

  if (!j.contains("H")) throw std::invalid_argument("missing parity matrix");
  Matrix H(mod, json_to_int_rows(j["H"]));
  if (H.cols() != spec.n) throw std::invalid_argument("parity matrix width disagrees with n");

  GeneratorMatrix G;
  G.mod = mod;
  G.n = spec.n;
  if (!j.contains("G") || !j.contains("G_orders"))
    throw std::invalid_argument("missing generator matrix or row orders");
  for (const auto& row : j["G"]) {
    Word w(mod, json_to_int_row(row));
    if (w.size() != spec.n) throw std::invalid_argument("generator width disagrees with n");
    G.rows.push_back(std::move(w));
  }
  if (!j["G_orders"].is_array() || j["G_orders"].size() != G.rows.size())
    throw std::invalid_argument("row orders disagree with generator count");
  for (const auto& o : j["G_orders"]) {
    if (!o.is_number_unsigned() || o.get<std::uint64_t>() == 0)
      throw std::invalid_argument("row orders must be positive integers");
    G.row_orders.push_back(o.get<std::uint64_t>());
  }
  G.log2_cardinality = 0;
  for (const std::uint64_t o : G.row_orders) {
    if ((o & (o - 1)) != 0) throw std::invalid_argument("row orders must be powers of two");
    for (std::uint64_t v = o; v > 1; v >>= 1) ++G.log2_cardinality;
  }
  if (G.log2_cardinality > 62) throw std::invalid_argument("code too large to represent");
  G.cardinality = std::uint64_t{1} << G.log2_cardinality;
  if (!j.contains("cardinality") || j["cardinality"].get<std::uint64_t>() != G.cardinality)
    throw std::invalid_argument("cardinality disagrees with row orders");

  CodeDocument doc{LinearCode{spec, std::move(H), std::nullopt}, std::move(G), std::nullopt};
  if (j.contains("certified") && !j["certified"].is_null())
    doc.certified = j["certified"].get<bool>();
  return doc;
}

std::string code_set_to_json(const CodeSetDocument& doc) {
  json j;
  j["type"] = "code_set";
  j["n"] = doc.set.length();
  j["m"] = doc.set.modulus().exponent();
  json words = json::array();
  for (const Word& w : doc.set.words()) words.push_back(word_to_json(w));
  j["words"] = words;
  if (doc.t) j["t"] = *doc.t;
  return j.dump(2) + "\n";
}

CodeSetDocument code_set_from_json(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.contains("type") || j["type"] != "code_set")
    throw std::invalid_argument("not a code_set document");
  const unsigned n = get_unsigned(j, "n");
  const unsigned m = get_unsigned(j, "m");
  const Modulus mod{m};
  if (!j.contains("words")) throw std::invalid_argument("missing words");
  std::vector<Word> words;
  for (const auto& row : j["words"]) {
    Word w(mod, json_to_int_row(row));
    if (w.size() != n) throw std::invalid_argument("word length disagrees with n");
    words.push_back(std::move(w));
  }
  CodeSetDocument doc{CodeSet(mod, n, std::move(words)), std::nullopt};
  if (j.contains("t")) doc.t = get_unsigned(j, "t");
  return doc;
}

CodeSetDocument any_code_file_to_set(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.contains("type") || !j["type"].is_string())
    throw std::invalid_argument("document has no type tag");
  const std::string type = j["type"].get<std::string>();
  if (type == "code_set") return code_set_from_json(json_text);
  if (type == "linear_code") {
    const CodeDocument doc = code_document_from_json(json_text);
    return CodeSetDocument{enumerate_span(doc.generators), doc.code.spec.t};
  }
  if (type == "search_report") {
    const unsigned n = get_unsigned(j, "n");
    const Modulus mod{get_unsigned(j, "m")};
    if (!j.contains("witness")) throw std::invalid_argument("missing witness");
    std::vector<Word> words;
    for (const auto& row : j["witness"]) {
      Word w(mod, json_to_int_row(row));
      if (w.size() != n) throw std::invalid_argument("word length disagrees with n");
      words.push_back(std::move(w));
    }
    return CodeSetDocument{CodeSet(mod, n, std::move(words)), get_unsigned(j, "t")};
  }
  throw std::invalid_argument("unknown document type '" + type + "'");
}

std::string bound_table_to_csv(unsigned n, unsigned t, const std::vector<BoundRow>& rows) {
  std::string out = "n,t,q,lee,cross,lee_linear,cross_linear\n";
  for (const BoundRow& r : rows) {
    out += std::to_string(n) + ',' + std::to_string(t) + ',' + std::to_string(r.q) + ',' +
           std::to_string(r.lee_bound) + ',' + std::to_string(r.cross_bound) + ',' +
           std::to_string(r.lee_linear_bound) + ',' + std::to_string(r.cross_linear_bound) +
           '\n';
  }
  return out;
}

std::string bound_table_to_json(unsigned n, unsigned t, const std::vector<BoundRow>& rows) {
  json j;
  j["type"] = "bound_table";
  j["n"] = n;
  j["t"] = t;
  json out_rows = json::array();
  for (const BoundRow& r : rows) {
    json row;
    row["q"] = r.q;
    row["lee"] = r.lee_bound;
    row["cross"] = r.cross_bound;
    row["lee_linear"] = r.lee_linear_bound;
    row["cross_linear"] = r.cross_linear_bound;
    out_rows.push_back(row);
  }
  j["rows"] = out_rows;
  return j.dump(2) + "\n";
}

std::string bound_table_to_text(unsigned n, unsigned t, const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  out << "Largest code sizes by sphere packing, length " << n << ", magnitude " << t << "\n";
  out << std::setw(8) << "q" << std::setw(12) << "lee" << std::setw(12) << "cross"
      << std::setw(12) << "lee_lin" << std::setw(12) << "cross_lin" << "\n";
  for (const BoundRow& r : rows)
    out << std::setw(8) << r.q << std::setw(12) << r.lee_bound << std::setw(12)
        << r.cross_bound << std::setw(12) << r.lee_linear_bound << std::setw(12)
        << r.cross_linear_bound << "\n";
  return out.str();
}

std::string certify_result_to_json(const CertifyResult& result, Metric metric, unsigned t) {
  json j;
  j["type"] = "certify_report";
  j["metric"] = metric_name(metric);
  j["t"] = t;
  j["ok"] = result.ok;
  if (!result.ok) {
    json w;
    w["first"] = word_to_json(*result.first);
    w["second"] = word_to_json(*result.second);
    w["overlap"] = word_to_json(*result.overlap);
    j["witness"] = w;
  }
  return j.dump(2) + "\n";
}

std::string search_result_to_json(const SearchResult& result, unsigned n, unsigned m,
                                  unsigned t, Metric metric) {
  json j;
  j["type"] = "search_report";
  j["n"] = n;
  j["m"] = m;
  j["t"] = t;
  j["metric"] = metric_name(metric);
  j["size"] = result.best_size;
  json words = json::array();
  for (const Word& w : result.witness.words()) words.push_back(word_to_json(w));
  j["witness"] = words;
  return j.dump(2) + "\n";
}

std::string audit_report_to_json(const AuditReport& report) {
  json j;
  j["type"] = "audit_report";
  j["cases"] = report.cases;
  j["successes"] = report.successes;
  j["wrong_decodes"] = report.wrong_decodes;
  j["missed"] = report.missed;
  j["spurious"] = report.spurious;
  j["anomalies"] = report.anomalies;
  j["clean"] = report.clean();
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
  if (!out.flush()) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace crosscodes
