#pragma once

namespace lsobstruct {

// Exit code contract: verdicts map to 0 / 10 / 11, anything above 63 is an
// error (64 usage, 65 bad input data, 66 I/O, 70 internal).
inline constexpr int kExitObstructed = 0;
inline constexpr int kExitInconclusive = 10;
inline constexpr int kExitNotApplicable = 11;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;
inline constexpr int kExitIo = 66;
inline constexpr int kExitInternal = 70;

int run_cli(int argc, char** argv);

}  // namespace lsobstruct
