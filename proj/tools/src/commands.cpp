#include <charnum/cli/commands.hpp>

#include <charnum/cli/manifold_expr.hpp>
#include <charnum/cli/version.hpp>
#include <charnum/linalg.hpp>
#include <charnum/error.hpp>

#include <string>

namespace charnum::cli {
namespace {

OutputDocument make_document(std::string command, Json input) {
  OutputDocument doc;
  doc.command = std::move(command);
  doc.input = std::move(input);
  doc.version = kVersion;
  return doc;
}

std::string join_row(std::span<const Rational> row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(row[i]);
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

OutputDocument cmd_numbers(std::string_view expr, int max_weight) {
  OutputDocument doc = make_document("numbers", Json{{"expr", expr}, {"max_k", max_weight}});
  const ManifoldExpr parsed = parse_manifold(expr);
  const CobordismClass c = evaluate(parsed, max_weight);

  doc.result["manifold"] = render(parsed);
  doc.result["weight"] = c.weight();
  doc.result["pontrjagin_numbers"] = to_json(c.p_numbers());

  doc.text = "manifold: " + render(parsed) + "\nweight: " + std::to_string(c.weight()) + "\n" +
             to_text(c.p_numbers(), "p");
  return doc;
}

OutputDocument cmd_genus(std::string_view series, std::string_view expr, int max_weight) {
  OutputDocument doc = make_document(
      "genus", Json{{"series", series}, {"expr", expr}, {"max_k", max_weight}});
  if (series != "ahat" && series != "L")
    throw UnknownSeries("unknown series '" + std::string(series) + "' (expected 'ahat' or 'L')");

  const ManifoldExpr parsed = parse_manifold(expr);
  const CobordismClass c = evaluate(parsed, max_weight);
  const GenusPolynomial g =
      series == "ahat" ? ahat_polynomial(c.weight(), max_weight) : l_polynomial(c.weight(), max_weight);
  const Rational value = evaluate_genus(g, c);

  doc.result["series"] = series;
  doc.result["manifold"] = render(parsed);
  doc.result["weight"] = c.weight();
  doc.result["polynomial"] = to_json(g.coefficients());
  doc.result["value"] = to_string(value);

  doc.text = "series: " + std::string(series) + "\nmanifold: " + render(parsed) +
             "\nweight: " + std::to_string(c.weight()) + "\n" + to_text(g.coefficients(), "coefficient p") +
             "value: " + to_string(value) + "\n";
  return doc;
}

OutputDocument cmd_matrix(int k, int max_weight) {
  OutputDocument doc = make_document("matrix", Json{{"k", k}, {"max_k", max_weight}});
  const RationalMatrix m = basis_matrix(k, max_weight);
  const Rational det = determinant(m);
  const auto& parts = partitions_of(k);

  Json labels = Json::array();
  for (const Partition& p : parts) labels.push_back(p.to_string());
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const Rational& q : m.row(r)) row.push_back(to_string(q));
    entries.push_back(std::move(row));
  }
  doc.result["weight"] = k;
  doc.result["rows"] = labels;
  doc.result["columns"] = labels;
  doc.result["entries"] = std::move(entries);
  doc.result["determinant"] = to_string(det);

  std::string text = "weight: " + std::to_string(k) + "\ncolumns:";
  for (const Partition& p : parts) text += " p" + p.to_string();
  text += "\n";
  for (std::size_t r = 0; r < m.rows(); ++r)
    text += "N" + parts[r].to_string() + ": " + join_row(m.row(r)) + "\n";
  text += "determinant: " + to_string(det) + "\n";
  doc.text = std::move(text);
  return doc;
}

VerifyOutcome verify_outcome(const BasisSequenceCertificate& certificate,
                             const VerificationReport& report, int max_weight) {
  const int k = report.weight;
  VerifyOutcome outcome{make_document("verify", Json{{"k", k}, {"max_k", max_weight}}), kExitOk};
  OutputDocument& doc = outcome.document;

  const bool basis_sequence_ok = certificate.ok() && certificate.consistent();
  const bool passed = basis_sequence_ok && report.basis_ok && report.holds();
  outcome.exit_code = passed ? kExitOk : kExitVerificationFailed;

  Json determinants = Json::object(), s_numbers = Json::object();
  for (std::size_t j = 0; j < certificate.determinants.size(); ++j) {
    determinants[std::to_string(j + 1)] = to_string(certificate.determinants[j]);
    s_numbers[std::to_string(j + 1)] = to_string(certificate.top_s_numbers[j]);
  }
  Json kernel = Json::array();
  for (const auto& v : report.kernel) kernel.push_back(to_json(PartitionVector(k, v)));
  Json generator_values = Json::object();
  for (const auto& [j, value] : report.generator_ahat_values)
    generator_values[std::to_string(j)] = to_string(value);
  const Rational expected = power_of_two(static_cast<unsigned>(k));

  Json& r = doc.result;
  r["weight"] = k;
  r["basis_sequence"] = Json{{"ok", basis_sequence_ok},
                             {"determinants", determinants},
                             {"top_s_numbers", s_numbers}};
  r["basis_ok"] = report.basis_ok;
  r["basis_determinant"] = to_string(report.basis_determinant);
  r["kernel_dimension"] = report.kernel_dimension;
  r["kernel"] = std::move(kernel);
  r["ahat_polynomial"] = to_json(report.candidate.coefficients());
  r["kernel_matches_ahat"] = report.kernel_matches_ahat;
  r["ahat_value_on_kummer_power"] = to_string(report.ahat_value_on_kummer_power);
  r["expected_kummer_power_value"] = to_string(expected);
  r["generator_ahat_values"] = std::move(generator_values);
  r["passed"] = passed;

  std::string text = "weight: " + std::to_string(k) + "\n";
  text += "basis_sequence: " + bool_text(basis_sequence_ok) + "\n";
  for (std::size_t j = 0; j < certificate.determinants.size(); ++j)
    text += "  j=" + std::to_string(j + 1) + " det=" + to_string(certificate.determinants[j]) +
            " s_top=" + to_string(certificate.top_s_numbers[j]) + "\n";
  text += "basis_ok: " + bool_text(report.basis_ok) + "\n";
  text += "kernel_dimension: " + std::to_string(report.kernel_dimension) + "\n";
  for (const auto& v : report.kernel) text += to_text(PartitionVector(k, v), "kernel p");
  text += to_text(report.candidate.coefficients(), "ahat p");
  text += "kernel_matches_ahat: " + bool_text(report.kernel_matches_ahat) + "\n";
  text += "ahat_value_on_kummer_power: " + to_string(report.ahat_value_on_kummer_power) +
          " (expected " + to_string(expected) + ")\n";
  for (const auto& [j, value] : report.generator_ahat_values)
    text += "ahat(N^" + std::to_string(j) + ") = " + to_string(value) + "\n";
  text += "passed: " + bool_text(passed) + "\n";
  doc.text = std::move(text);
  return outcome;
}

VerifyOutcome cmd_verify(int k, int max_weight) {
  const BasisSequenceCertificate certificate = basis_sequence_certificate(k, max_weight);
  const VerificationReport report = verify_characterization(k, max_weight);
  return verify_outcome(certificate, report, max_weight);
}

}  // namespace charnum::cli
