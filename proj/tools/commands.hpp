#pragma once

// Subcommands of the `menhir` tool. Each writes to the given streams and
// returns a process exit code; main() only wires CLI11 to these.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace menhir::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_parse = 2,
    exit_superluminal = 3,
    exit_io = 4,
    exit_unsupported_render = 5,
};

/// Version tag of the CSV columns and JSON keys below.
inline constexpr const char* schema_version = "1";

/// Column and key reference shown in --help.
std::string schema_text();

struct ComposeOptions {
    std::string algebra = "complex";
    std::size_t dim = 0;  ///< Clifford only; 0 = infer from the first list
    std::string v;
    std::string w;
    std::string format = "text";  ///< text | json
};

struct AberrateOptions {
    std::string algebra = "complex";
    std::size_t dim = 0;
    std::string v;
    std::string catalog;
    std::string out;  ///< "-" = stdout
    bool debug = false;
};

struct StarfieldOptions {
    std::string algebra = "complex";
    std::size_t dim = 0;
    std::string v;
    std::optional<std::string> w;  ///< second boost: render the two-boost word
    std::size_t count = 12;
    std::string format = "svg";  ///< svg | csv
    std::string out = "-";
};

struct VerifyOptions {
    std::size_t trials = 1000;
    std::uint64_t seed = 42;
    std::string algebra = "complex";
    std::size_t dim = 0;  ///< Clifford dimension, default 3
    std::string tier = "normal";
    unsigned threads = 0;
    std::string format = "text";
};

struct GoldenOptions {
    std::size_t steps = 1000;
    std::string csv;  ///< empty = no grid, "-" = stdout
};

int cmd_compose(const ComposeOptions& o, std::ostream& out, std::ostream& err);
int cmd_aberrate(const AberrateOptions& o, std::ostream& out, std::ostream& err);
int cmd_starfield(const StarfieldOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_goldenscan(const GoldenOptions& o, std::ostream& out, std::ostream& err);

/// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace menhir::cli
