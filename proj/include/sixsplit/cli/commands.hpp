#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace sixsplit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 2,
  kExitInvalidInput = 3,
  kExitExhausted = 4,
};

/// Empty path or "-" means the standard stream passed in.
struct SplitArgs {
  std::string input;
  std::string output;
  std::optional<double> tolerance;
};

struct VerifyArgs {
  std::string input;
  std::optional<double> tolerance;
};

struct FuzzArgs {
  std::int64_t trials = 1000;
  std::uint64_t seed = 42;
  std::string sampler = "uniform";
  std::string report;
};

struct RenderArgs {
  std::string input;
  std::string output;
  std::string view = "plane";
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int cmd_split(const SplitArgs& args, const Streams& io);
int cmd_verify(const VerifyArgs& args, const Streams& io);
int cmd_fuzz(const FuzzArgs& args, const Streams& io);
int cmd_render(const RenderArgs& args, const Streams& io);

}  // namespace sixsplit::cli
