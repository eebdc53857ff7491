#ifndef NCHILBERT_CLI_HPP
#define NCHILBERT_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nchilbert/errors.hpp"
#include "nchilbert/series.hpp"

namespace nchilbert::cli {

/// Parsed input file:
///
///     # comment
///     vars x y z
///     kind twosided          (or `right`; default twosided)
///     x*x*y                  (one generator per line, optional `gen:` prefix, `1` = empty word)
struct InputFile {
    Alphabet alphabet;
    std::vector<Word> generators;
    IdealKind kind = IdealKind::two_sided;
};

/// Throws Error(parse_error) with a `line:column:` prefixed message.
InputFile parse_input(std::string_view text);

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_parse_error = 2,
    exit_orbit_limit = 3,
    exit_degree_budget = 4,
    exit_invalid_flags = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

struct Report {
    const ComputationRequest* request = nullptr;
    const ComputationResult* result = nullptr;
    std::optional<unsigned> oracle_degree;
    const OracleTable* oracle = nullptr;
};

std::string render_text(const Report& report);
nlohmann::ordered_json render_json(const Report& report);

/// Inverse of the `series` member of the JSON output.
RatFun series_from_json(const nlohmann::ordered_json& series, std::size_t nvars);

/// Full command line front end. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nchilbert::cli

#endif
