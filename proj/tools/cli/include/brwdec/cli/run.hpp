#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace brwdec::cli {

inline constexpr int kExitProven = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;

inline constexpr std::uint64_t kDefaultFuel = 100000;
inline constexpr std::uint64_t kDefaultKMax = 6;

/// Runs the acceptance suite, writes its report, returns an exit status.
using SelfTest = std::function<int(std::ostream&)>;

/// Entry point of `ord`. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const SelfTest& selftest = nullptr);

}  // namespace brwdec::cli
