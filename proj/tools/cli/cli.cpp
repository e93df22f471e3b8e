#include "cli.hpp"

#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "shapecone/decompose.hpp"
#include "shapecone/generators.hpp"
#include "shapecone/io.hpp"
#include "shapecone/matrices.hpp"
#include "shapecone/oracle.hpp"
#include "shapecone/shapes.hpp"
#include "verify.hpp"

namespace shapecone::cli {

ShapeVector parse_vector(std::string_view text) {
  ShapeVector out;
  std::size_t position = 0;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma - start);
    ++position;
    try {
      out.push_back(Rational::parse(token));
    } catch (const ZeroDenominator&) {
      throw ZeroDenominator("zero denominator in entry '" + std::string(token) +
                                "' at position " + std::to_string(position),
                            position);
    } catch (const MalformedEntry&) {
      throw MalformedEntry("malformed entry '" + std::string(token) + "' at position " +
                               std::to_string(position),
                           position);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

enum class Format { json, csv, text };

struct Options {
  std::string cone;
  std::string which;
  std::string vector;
  std::string format;
  std::string eps = "0";
  std::size_t n = 0;
  std::size_t max_extreme_n = kDefaultExtremeRayLimit;
  bool common_denominator = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ConeKind cone_of(const std::string& name) {
  if (auto k = parse_cone_kind(name)) return *k;
  throw UsageError("unknown cone '" + name + "'");
}

ShapeVector read_vector(const std::string& arg, std::istream& in) {
  std::string text = arg;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
      text.pop_back();
    }
  }
  return parse_vector(text);
}

std::string join_labels(const std::vector<std::string>& labels,
                        const ShapeVector& coefficients) {
  std::ostringstream os;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    os << labels[k] << ' ' << coefficients[k] << '\n';
  }
  return os.str();
}

int cmd_gen(const Options& o, std::ostream& out) {
  const GeneratorSet g = generators(cone_of(o.cone), o.n);
  if (o.format == "csv") {
    out << generators_to_csv(g, o.common_denominator);
  } else {
    out << generators_to_json(g, o.common_denominator).dump() << '\n';
  }
  return kSuccess;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  const auto id = parse_matrix_id(o.which);
  if (!id) throw UsageError("unknown matrix '" + o.which + "' (M|Minv|N|Ninv|Z|Zinv)");
  const RMatrix m = named_matrix(*id, o.n);
  if (o.format == "csv") {
    out << matrix_to_csv(m, o.common_denominator);
  } else {
    out << matrix_to_json(m, o.common_denominator).dump() << '\n';
  }
  return kSuccess;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  const ConeKind kind = cone_of(o.cone);
  const MembershipCertificate c = membership(read_vector(o.vector, in), kind);
  out << certificate_to_json(c).dump() << '\n';
  return c.verdict == Verdict::in_cone ? kSuccess : kNegative;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  const ConeKind kind = cone_of(o.cone);
  const ShapeVector v = read_vector(o.vector, in);
  const MembershipCertificate c = membership(v, kind);
  if (c.verdict == Verdict::out_of_cone) {
    err << "not in " << to_string(kind) << ": " << to_string(c.violation->shape)
        << " fails at index " << c.violation->index << '\n';
    return kNegative;
  }
  if (o.format == "json") {
    out << certificate_to_json(c).dump() << '\n';
    return kSuccess;
  }
  if (c.canonical) {
    const ConvexCanonicalForm& f = *c.canonical;
    out << "1 " << f.baseline << '\n';
    for (std::size_t i = 0; i < f.lambda.size(); ++i) {
      out << "a(" << i + 1 << ") " << f.lambda[i] << '\n';
    }
    for (std::size_t i = 0; i < f.theta.size(); ++i) {
      out << "b(" << i + 1 << ") " << f.theta[i] << '\n';
    }
    return kSuccess;
  }
  out << join_labels(c.decomposition->labels(), c.decomposition->coefficients);
  return kSuccess;
}

int cmd_predicates(const Options& o, std::istream& in, std::ostream& out) {
  const Rational eps = Rational::parse(o.eps);
  if (eps.sign() < 0) throw UsageError("--eps must be nonnegative");
  const ShapeReport r = classify(read_vector(o.vector, in), eps);
  if (o.format == "json") {
    out << report_to_json(r).dump() << '\n';
    return kSuccess;
  }
  for (Shape s : kAllShapes) {
    out << to_string(s) << ": ";
    const PredicateResult* p = r.get(s);
    if (!p) {
      out << "not_applicable\n";
    } else if (p->holds) {
      out << "true\n";
    } else {
      out << "false (index " << *p->witness << ")\n";
    }
  }
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto outcomes = run_verification(o.n, o.max_extreme_n);
  std::size_t failed = 0;
  for (const auto& c : outcomes) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) {
      out << ": " << c.detail;
      ++failed;
    }
    out << '\n';
  }
  out << (outcomes.size() - failed) << "/" << outcomes.size() << " checks passed\n";
  return failed == 0 ? kSuccess : kNegative;
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact construction, decomposition and verification of shape cones",
               "shapecone"};
  app.require_subcommand(1);
  Options o;

  auto positive = CLI::PositiveNumber;
  auto* gen = app.add_subcommand("gen", "Print the generators of a cone");
  gen->add_option("--cone", o.cone, "Cone kind")->required();
  gen->add_option("--n", o.n, "Dimension")->required()->check(positive);
  gen->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  gen->add_flag("--common-denominator", o.common_denominator,
                "Factor out the least common denominator");

  auto* matrix = app.add_subcommand("matrix", "Print a basis-change matrix");
  matrix->add_option("--which", o.which, "M, Minv, N, Ninv, Z or Zinv")->required();
  matrix->add_option("--n", o.n, "Dimension")->required()->check(positive);
  matrix->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  matrix->add_flag("--common-denominator", o.common_denominator,
                   "Factor out the least common denominator");

  auto* check = app.add_subcommand("check", "Print a membership certificate");
  check->add_option("--cone", o.cone, "Cone kind")->required();
  check->add_option("--vector", o.vector, "Comma-separated entries, or - for stdin")->required();

  auto* decompose = app.add_subcommand("decompose", "Print conic coefficients");
  decompose->add_option("--cone", o.cone, "Cone kind")->required();
  decompose->add_option("--vector", o.vector, "Comma-separated entries, or - for stdin")
      ->required();
  decompose->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* predicates = app.add_subcommand("predicates", "Print the shape report of a vector");
  predicates->add_option("--vector", o.vector, "Comma-separated entries, or - for stdin")
      ->required();
  predicates->add_option("--eps", o.eps, "Tolerance for every inequality (default 0)");
  predicates->add_option("--format", o.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the structural verification suite");
  verify->add_option("--n", o.n, "Dimension")->required()->check(positive);
  verify->add_option("--max-extreme-n", o.max_extreme_n,
                     "Largest n for extreme-ray certification (default 8)");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kSuccess;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*matrix) return cmd_matrix(o, out);
    if (*check) return cmd_check(o, in, out);
    if (*decompose) return cmd_decompose(o, in, out, err);
    if (*predicates) return cmd_predicates(o, in, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MalformedEntry& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ZeroDenominator& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace shapecone::cli
