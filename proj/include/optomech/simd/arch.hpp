#pragma once

#include <string>

#if defined(__x86_64__) || defined(_M_X64)
#define OPTOMECH_X86 1
#else
#define OPTOMECH_X86 0
#endif

#if defined(__aarch64__) || defined(_M_ARM64)
#define OPTOMECH_ARM64 1
#else
#define OPTOMECH_ARM64 0
#endif

namespace optomech::simd {

enum class Arch { scalar, avx2, neon };

// Best architecture supported by the running CPU.
Arch detect_arch();

// detect_arch() unless overridden by the OPTOMECH_SIMD environment variable
// (values: "scalar", "avx2", "neon"; unsupported requests fall back to scalar).
Arch active_arch();

const char* arch_name(Arch a);

}  // namespace optomech::simd
