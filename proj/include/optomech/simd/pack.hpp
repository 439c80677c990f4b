#pragma once

// Fixed-width lane packs used by the stochastic integrator kernels.
//
// pack<1> is the scalar reference; pack<4> is AVX2; pack<2> is NEON. Every
// lane operation is a single correctly-rounded IEEE-754 operation (or an
// exact integer/bit operation), so a computation expressed once over a pack
// produces bit-identical per-lane results on every backend. The kernels rely
// on this for the scalar/SIMD equivalence tests. Translation units using
// pack<1> must be compiled with -ffp-contract=off so the compiler cannot fuse
// the explicit mul/add sequences that the vector backends keep separate.

#include <cmath>
#include <cstdint>
#include <cstring>

#if OPTOMECH_PACK_AVX2
#include <immintrin.h>
#endif
#if OPTOMECH_PACK_NEON
#include <arm_neon.h>
#endif

namespace optomech::simd {

template <int W>
struct pack_u64;

template <int W>
struct pack;

// ---------------------------------------------------------------- scalar --

template <>
struct pack_u64<1> {
    std::uint64_t v;

    static pack_u64 broadcast(std::uint64_t x) { return {x}; }
    static pack_u64 load(const std::uint64_t* p) { return {*p}; }
    void store(std::uint64_t* p) const { *p = v; }

    friend pack_u64 operator+(pack_u64 a, pack_u64 b) { return {a.v + b.v}; }
    friend pack_u64 operator^(pack_u64 a, pack_u64 b) { return {a.v ^ b.v}; }
    friend pack_u64 operator|(pack_u64 a, pack_u64 b) { return {a.v | b.v}; }
    friend pack_u64 operator&(pack_u64 a, pack_u64 b) { return {a.v & b.v}; }
    template <int K>
    pack_u64 shl() const { return {v << K}; }
    template <int K>
    pack_u64 shr() const { return {v >> K}; }
    template <int K>
    pack_u64 rotl() const { return {(v << K) | (v >> (64 - K))}; }
};

template <>
struct pack<1> {
    double v;
    static constexpr int width = 1;
    using u64 = pack_u64<1>;

    static pack broadcast(double x) { return {x}; }
    static pack zero() { return {0.0}; }
    void store(double* p) const { *p = v; }
    double lane(int) const { return v; }

    friend pack operator+(pack a, pack b) { return {a.v + b.v}; }
    friend pack operator-(pack a, pack b) { return {a.v - b.v}; }
    friend pack operator*(pack a, pack b) { return {a.v * b.v}; }
    friend pack operator/(pack a, pack b) { return {a.v / b.v}; }
    friend pack operator-(pack a) { return {-a.v}; }

    static pack fma(pack a, pack b, pack c) { return {std::fma(a.v, b.v, c.v)}; }
    static pack sqrt(pack a) { return {std::sqrt(a.v)}; }
    static pack floor(pack a) { return {std::floor(a.v)}; }

    // Masks are all-ones / all-zero lane bit patterns, as on the SIMD paths.
    friend pack cmp_eq(pack a, pack b) { return from_mask(a.v == b.v); }
    friend pack cmp_gt(pack a, pack b) { return from_mask(a.v > b.v); }
    friend pack select(pack mask, pack a, pack b) {
        std::uint64_t m = to_bits(mask), r = (to_bits(a) & m) | (to_bits(b) & ~m);
        return from_bits_scalar(r);
    }

    static u64 to_bits_pack(pack a) {
        std::uint64_t r;
        std::memcpy(&r, &a.v, 8);
        return {r};
    }
    static pack from_bits_pack(u64 a) { return from_bits_scalar(a.v); }

    // Exact conversion of lane integers < 2^52 to double.
    static pack from_u52(u64 a) {
        const std::uint64_t magic = 0x4330000000000000ull;  // 2^52
        return from_bits_scalar(a.v | magic) - broadcast(4503599627370496.0);
    }

private:
    static std::uint64_t to_bits(pack a) {
        std::uint64_t r;
        std::memcpy(&r, &a.v, 8);
        return r;
    }
    static pack from_bits_scalar(std::uint64_t r) {
        double d;
        std::memcpy(&d, &r, 8);
        return {d};
    }
    static pack from_mask(bool b) {
        return from_bits_scalar(b ? ~0ull : 0ull);
    }
};

// ------------------------------------------------------------------ AVX2 --

#if OPTOMECH_PACK_AVX2

template <>
struct pack_u64<4> {
    __m256i v;

    static pack_u64 broadcast(std::uint64_t x) { return {_mm256_set1_epi64x((long long)x)}; }
    static pack_u64 load(const std::uint64_t* p) {
        return {_mm256_loadu_si256(reinterpret_cast<const __m256i*>(p))};
    }
    void store(std::uint64_t* p) const {
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
    }

    friend pack_u64 operator+(pack_u64 a, pack_u64 b) { return {_mm256_add_epi64(a.v, b.v)}; }
    friend pack_u64 operator^(pack_u64 a, pack_u64 b) { return {_mm256_xor_si256(a.v, b.v)}; }
    friend pack_u64 operator|(pack_u64 a, pack_u64 b) { return {_mm256_or_si256(a.v, b.v)}; }
    friend pack_u64 operator&(pack_u64 a, pack_u64 b) { return {_mm256_and_si256(a.v, b.v)}; }
    template <int K>
    pack_u64 shl() const { return {_mm256_slli_epi64(v, K)}; }
    template <int K>
    pack_u64 shr() const { return {_mm256_srli_epi64(v, K)}; }
    template <int K>
    pack_u64 rotl() const {
        return {_mm256_or_si256(_mm256_slli_epi64(v, K), _mm256_srli_epi64(v, 64 - K))};
    }
};

template <>
struct pack<4> {
    __m256d v;
    static constexpr int width = 4;
    using u64 = pack_u64<4>;

    static pack broadcast(double x) { return {_mm256_set1_pd(x)}; }
    static pack zero() { return {_mm256_setzero_pd()}; }
    void store(double* p) const { _mm256_storeu_pd(p, v); }
    double lane(int i) const {
        alignas(32) double tmp[4];
        _mm256_store_pd(tmp, v);
        return tmp[i];
    }

    friend pack operator+(pack a, pack b) { return {_mm256_add_pd(a.v, b.v)}; }
    friend pack operator-(pack a, pack b) { return {_mm256_sub_pd(a.v, b.v)}; }
    friend pack operator*(pack a, pack b) { return {_mm256_mul_pd(a.v, b.v)}; }
    friend pack operator/(pack a, pack b) { return {_mm256_div_pd(a.v, b.v)}; }
    friend pack operator-(pack a) { return {_mm256_sub_pd(_mm256_setzero_pd(), a.v)}; }

    static pack fma(pack a, pack b, pack c) { return {_mm256_fmadd_pd(a.v, b.v, c.v)}; }
    static pack sqrt(pack a) { return {_mm256_sqrt_pd(a.v)}; }
    static pack floor(pack a) { return {_mm256_round_pd(a.v, _MM_FROUND_TO_NEG_INF | _MM_FROUND_NO_EXC)}; }

    friend pack cmp_eq(pack a, pack b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_EQ_OQ)}; }
    friend pack cmp_gt(pack a, pack b) { return {_mm256_cmp_pd(a.v, b.v, _CMP_GT_OQ)}; }
    friend pack select(pack mask, pack a, pack b) { return {_mm256_blendv_pd(b.v, a.v, mask.v)}; }

    static u64 to_bits_pack(pack a) { return {_mm256_castpd_si256(a.v)}; }
    static pack from_bits_pack(u64 a) { return {_mm256_castsi256_pd(a.v)}; }

    static pack from_u52(u64 a) {
        const __m256i magic = _mm256_set1_epi64x(0x4330000000000000ll);
        const __m256d m = _mm256_castsi256_pd(_mm256_or_si256(a.v, magic));
        return {_mm256_sub_pd(m, _mm256_set1_pd(4503599627370496.0))};
    }
};

#endif  // OPTOMECH_PACK_AVX2

// ------------------------------------------------------------------ NEON --

#if OPTOMECH_PACK_NEON

template <>
struct pack_u64<2> {
    uint64x2_t v;

    static pack_u64 broadcast(std::uint64_t x) { return {vdupq_n_u64(x)}; }
    static pack_u64 load(const std::uint64_t* p) { return {vld1q_u64(p)}; }
    void store(std::uint64_t* p) const { vst1q_u64(p, v); }

    friend pack_u64 operator+(pack_u64 a, pack_u64 b) { return {vaddq_u64(a.v, b.v)}; }
    friend pack_u64 operator^(pack_u64 a, pack_u64 b) { return {veorq_u64(a.v, b.v)}; }
    friend pack_u64 operator|(pack_u64 a, pack_u64 b) { return {vorrq_u64(a.v, b.v)}; }
    friend pack_u64 operator&(pack_u64 a, pack_u64 b) { return {vandq_u64(a.v, b.v)}; }
    template <int K>
    pack_u64 shl() const { return {vshlq_n_u64(v, K)}; }
    template <int K>
    pack_u64 shr() const { return {vshrq_n_u64(v, K)}; }
    template <int K>
    pack_u64 rotl() const { return {vorrq_u64(vshlq_n_u64(v, K), vshrq_n_u64(v, 64 - K))}; }
};

template <>
struct pack<2> {
    float64x2_t v;
    static constexpr int width = 2;
    using u64 = pack_u64<2>;

    static pack broadcast(double x) { return {vdupq_n_f64(x)}; }
    static pack zero() { return {vdupq_n_f64(0.0)}; }
    void store(double* p) const { vst1q_f64(p, v); }
    double lane(int i) const {
        double tmp[2];
        vst1q_f64(tmp, v);
        return tmp[i];
    }

    friend pack operator+(pack a, pack b) { return {vaddq_f64(a.v, b.v)}; }
    friend pack operator-(pack a, pack b) { return {vsubq_f64(a.v, b.v)}; }
    friend pack operator*(pack a, pack b) { return {vmulq_f64(a.v, b.v)}; }
    friend pack operator/(pack a, pack b) { return {vdivq_f64(a.v, b.v)}; }
    friend pack operator-(pack a) { return {vnegq_f64(a.v)}; }

    static pack fma(pack a, pack b, pack c) { return {vfmaq_f64(c.v, a.v, b.v)}; }
    static pack sqrt(pack a) { return {vsqrtq_f64(a.v)}; }
    static pack floor(pack a) { return {vrndmq_f64(a.v)}; }

    friend pack cmp_eq(pack a, pack b) {
        return {vreinterpretq_f64_u64(vceqq_f64(a.v, b.v))};
    }
    friend pack cmp_gt(pack a, pack b) {
        return {vreinterpretq_f64_u64(vcgtq_f64(a.v, b.v))};
    }
    friend pack select(pack mask, pack a, pack b) {
        return {vbslq_f64(vreinterpretq_u64_f64(mask.v), a.v, b.v)};
    }

    static u64 to_bits_pack(pack a) { return {vreinterpretq_u64_f64(a.v)}; }
    static pack from_bits_pack(u64 a) { return {vreinterpretq_f64_u64(a.v)}; }

    static pack from_u52(u64 a) {
        const uint64x2_t magic = vdupq_n_u64(0x4330000000000000ull);
        const float64x2_t m = vreinterpretq_f64_u64(vorrq_u64(a.v, magic));
        return {vsubq_f64(m, vdupq_n_f64(4503599627370496.0))};
    }
};

#endif  // OPTOMECH_PACK_NEON

}  // namespace optomech::simd
