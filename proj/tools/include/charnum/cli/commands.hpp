#pragma once

#include <charnum/cli/output.hpp>
#include <charnum/verify.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace charnum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerificationFailed = 2;

/// All Pontrjagin numbers of the evaluated expression.
OutputDocument cmd_numbers(std::string_view expr, int max_weight = kDefaultMaxWeight);

/// `series` is "ahat" or "L" (UnknownSeries otherwise).
OutputDocument cmd_genus(std::string_view series, std::string_view expr,
                         int max_weight = kDefaultMaxWeight);

OutputDocument cmd_matrix(int k, int max_weight = kDefaultMaxWeight);

struct VerifyOutcome {
  OutputDocument document;
  int exit_code = kExitOk;
};

VerifyOutcome cmd_verify(int k, int max_weight = kDefaultMaxWeight);

/// Renders already-computed results; cmd_verify() is this applied to the
/// library's certificate and report.
VerifyOutcome verify_outcome(const BasisSequenceCertificate& certificate,
                             const VerificationReport& report, int max_weight);

/// Full command line (args excludes the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charnum::cli
