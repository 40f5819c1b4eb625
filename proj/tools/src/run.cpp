#include <charnum/cli/commands.hpp>

#include <charnum/error.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace charnum::cli {
namespace {

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Pontrjagin numbers, Hirzebruch genera and the A-hat characterization check",
               "charnum"};
  app.require_subcommand(1);

  std::string format_name = "text";
  int max_k = kDefaultMaxWeight;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-k", max_k, "Largest accepted weight k (dimension 4k)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::vector<std::string> expr_words;
  std::string series;
  int k = 0;

  auto* numbers = app.add_subcommand("numbers", "Pontrjagin numbers of a product of K3 and HP<k>");
  numbers->add_option("expr", expr_words, "Manifold expression, e.g. 'K3^2 x HP3'")->required();
  numbers->fallthrough();

  auto* genus = app.add_subcommand("genus", "Evaluate the A-hat or L genus on a manifold");
  genus->add_option("series", series, "ahat or L")->required();
  genus->add_option("expr", expr_words, "Manifold expression")->required();
  genus->fallthrough();

  auto* verify = app.add_subcommand("verify", "Check the A-hat characterization at weight k");
  verify->add_option("k", k, "Weight (real dimension 4k)")->required();
  verify->fallthrough();

  auto* matrix = app.add_subcommand("matrix", "Pontrjagin numbers of the product basis at weight k");
  matrix->add_option("k", k, "Weight (real dimension 4k)")->required();
  matrix->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    if (std::find(args.begin(), args.end(), "json") != args.end())
      out << render_error("", Json::object(), "UsageError", e.what(), Format::json);
    return kExitUsage;
  }

  const Format format = format_name == "json" ? Format::json : Format::text;
  const std::string command = app.get_subcommands().front()->get_name();
  const std::string expr = join(expr_words);

  Json input = Json::object();
  if (command == "numbers") input = Json{{"expr", expr}, {"max_k", max_k}};
  if (command == "genus") input = Json{{"series", series}, {"expr", expr}, {"max_k", max_k}};
  if (command == "verify" || command == "matrix") input = Json{{"k", k}, {"max_k", max_k}};

  auto usage_error = [&](const std::string& kind, const std::string& message, int column) {
    err << "error: " << kind << ": " << message << "\n";
    if (format == Format::json) out << render_error(command, input, kind, message, format, column);
    return kExitUsage;
  };

  try {
    if (command == "numbers") {
      out << render(cmd_numbers(expr, max_k), format);
    } else if (command == "genus") {
      out << render(cmd_genus(series, expr, max_k), format);
    } else if (command == "matrix") {
      out << render(cmd_matrix(k, max_k), format);
    } else {
      const VerifyOutcome outcome = cmd_verify(k, max_k);
      out << render(outcome.document, format);
      if (outcome.exit_code != kExitOk) err << "verification failed at k=" << k << "\n";
      return outcome.exit_code;
    }
  } catch (const ParseError& e) {
    return usage_error("ParseError", e.detail(), static_cast<int>(e.column()));
  } catch (const OutOfRange& e) {
    return usage_error("OutOfRange", e.what(), 0);
  } catch (const UnknownSeries& e) {
    return usage_error("UnknownSeries", e.what(), 0);
  }
  return kExitOk;
}

}  // namespace charnum::cli
