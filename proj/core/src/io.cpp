#include "shapecone/io.hpp"

#include <sstream>

namespace shapecone {

namespace {

mpz_class common_denominator_of(const RMatrix& m) {
  mpz_class d = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& x : m.row(i)) {
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.denominator().get_mpz_t());
    }
  }
  return d;
}

Rational scale_of(const mpz_class& d) { return Rational(mpq_class(1, d)); }

// Entries of row i as strings, multiplied by `factor`.
std::vector<std::string> row_strings(const RMatrix& m, std::size_t i,
                                     const Rational& factor) {
  std::vector<std::string> out;
  out.reserve(m.cols());
  for (const auto& x : m.row(i)) out.push_back((x * factor).str());
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ',';
    out += parts[k];
  }
  return out;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

nlohmann::json rows_json(const RMatrix& m, bool common_denominator,
                         nlohmann::json& into) {
  Rational factor(1);
  if (common_denominator) {
    const mpz_class d = common_denominator_of(m);
    factor = Rational(mpq_class(d));
    into["scale"] = scale_of(d).str();
  }
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(row_strings(m, i, factor));
  return rows;
}

}  // namespace

nlohmann::json matrix_to_json(const RMatrix& m, bool common_denominator) {
  nlohmann::json j;
  j["n"] = m.cols();
  j["rows"] = rows_json(m, common_denominator, j);
  return j;
}

RMatrix matrix_from_json(const nlohmann::json& j) {
  const Rational scale = j.contains("scale")
                             ? Rational::parse(j.at("scale").get<std::string>())
                             : Rational(1);
  std::vector<ShapeVector> rows;
  for (const auto& row : j.at("rows")) {
    ShapeVector r;
    for (const auto& x : row) r.push_back(Rational::parse(x.get<std::string>()) * scale);
    rows.push_back(std::move(r));
  }
  RMatrix m(std::move(rows));
  const auto n = j.at("n").get<std::size_t>();
  if (m.rows() > 0 && m.cols() != n) throw DimensionMismatch(n, m.cols());
  return m;
}

std::string matrix_to_csv(const RMatrix& m, bool common_denominator) {
  std::ostringstream os;
  Rational factor(1);
  if (common_denominator) {
    const mpz_class d = common_denominator_of(m);
    factor = Rational(mpq_class(d));
    os << "# scale " << scale_of(d) << '\n';
  }
  for (std::size_t i = 0; i < m.rows(); ++i) os << join(row_strings(m, i, factor)) << '\n';
  return os.str();
}

RMatrix matrix_from_csv(std::string_view text) {
  Rational scale(1);
  std::vector<ShapeVector> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view tag = "# scale ";
      if (line.starts_with(tag)) scale = Rational::parse(line.substr(tag.size()));
      continue;
    }
    ShapeVector r;
    std::size_t pos = 0;
    for (const auto& field : split(line)) {
      ++pos;
      try {
        r.push_back(Rational::parse(field));
      } catch (const MalformedEntry&) {
        throw MalformedEntry("line " + std::to_string(line_no) + ": malformed entry '" +
                                 field + "'",
                             pos);
      }
    }
    rows.push_back(std::move(r));
  }
  RMatrix m(std::move(rows));
  return scale * m;
}

nlohmann::json generators_to_json(const GeneratorSet& g, bool common_denominator) {
  nlohmann::json j;
  j["n"] = g.n;
  j["labels"] = g.labels;
  j["rows"] = rows_json(g.matrix(), common_denominator, j);
  return j;
}

std::string generators_to_csv(const GeneratorSet& g, bool common_denominator) {
  const RMatrix m = g.matrix();
  std::ostringstream os;
  Rational factor(1);
  if (common_denominator) {
    const mpz_class d = common_denominator_of(m);
    factor = Rational(mpq_class(d));
    os << "# scale " << scale_of(d) << '\n';
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << g.labels[i] << ',' << join(row_strings(m, i, factor)) << '\n';
  }
  return os.str();
}

std::string to_string(Verdict v) {
  return v == Verdict::in_cone ? "in_cone" : "out_of_cone";
}

namespace {

nlohmann::json strings(const ShapeVector& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

nlohmann::json predicate_json(const PredicateResult& r) {
  nlohmann::json j;
  j["holds"] = r.holds;
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

}  // namespace

nlohmann::json certificate_to_json(const MembershipCertificate& c) {
  nlohmann::json j;
  j["verdict"] = to_string(c.verdict);
  nlohmann::json w = nlohmann::json::object();
  if (c.verdict == Verdict::in_cone && c.decomposition) {
    w["cone"] = std::string(to_string(c.decomposition->kind));
    w["labels"] = c.decomposition->labels();
    w["coefficients"] = strings(c.decomposition->coefficients);
    if (c.canonical) {
      w["baseline"] = c.canonical->baseline.str();
      w["lambda"] = strings(c.canonical->lambda);
      w["theta"] = strings(c.canonical->theta);
    }
  } else if (c.violation) {
    w["shape"] = std::string(to_string(c.violation->shape));
    w["index"] = c.violation->index;
  }
  j["witness"] = std::move(w);
  return j;
}

nlohmann::json report_to_json(const ShapeReport& r) {
  nlohmann::json j;
  for (Shape s : kAllShapes) {
    const PredicateResult* p = r.get(s);
    j[std::string(to_string(s))] = p ? predicate_json(*p) : nlohmann::json("not_applicable");
  }
  return j;
}

}  // namespace shapecone
