#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/transforms.hpp"

namespace cayley::cli {

enum ExitCode : int {
    kSuccess = 0,
    kPropertyFailure = 1,
    kUsageError = 2,
    kDomainError = 3,
};

enum class OutputFormat { Text, Csv, Svg, Json };

struct CliConfig {
    GeometryKind geometry = GeometryKind::Euclidean;
    Tolerance tolerance{};
    std::size_t samples = 256;
    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Text;
};

/// Malformed command-line input (exit code 2).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Point literal "x,y" with no spaces.
Vec2 parse_point(std::string_view text);

/// Strict decimal literal; rejects trailing characters and non-finite values.
double parse_real(std::string_view text);

/// Transform chain such as "rot:0.5+trans:1,2". Components are
/// rot:THETA | gal:U | lor:U | rap:THETA | trans:TX,TY, and the leftmost one
/// is applied last. The chain's geometry is that of its first non-translation
/// component; a chain of translations only uses `fallback`.
Isometry parse_transform(std::string_view spec, GeometryKind fallback);

/// Runs one command line (without the program name). Environment variables
/// CAYLEY_TOL and CAYLEY_SEED supply defaults that flags override.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
