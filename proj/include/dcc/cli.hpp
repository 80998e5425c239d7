#pragma once

#include <iosfwd>
#include <string>

#include "dcc/render.hpp"

namespace dcc::cli {

/// Exit statuses shared by all subcommands.
inline constexpr int kOk = 0;
inline constexpr int kUnequal = 1;
inline constexpr int kError = 2;

int run_check(const std::string& path, std::ostream& out, std::ostream& err);
int run_normalize(const std::string& path, const std::string& name, std::ostream& out, std::ostream& err);
/// Writes to `output` when non-empty, else to out.
int run_render(const std::string& path, const std::string& name, const std::string& format,
               const std::string& direction, const std::string& output, std::ostream& out, std::ostream& err);
int run_protocol(const std::string& name, bool oracle, bool show, std::ostream& out, std::ostream& err);

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dcc::cli
