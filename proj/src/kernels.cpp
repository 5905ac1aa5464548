#include "gsv/kernels.hpp"

#include <atomic>
#include <cstring>

#include "gsv/util.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace gsv::kernels {

void axpy_scalar(uint16_t* a, const uint16_t* b, uint16_t s, uint16_t p, std::size_t n) {
    uint32_t ss = s, pp = p;
    for (std::size_t i = 0; i < n; ++i)
        a[i] = static_cast<uint16_t>((a[i] + ss * b[i]) % pp);
}

void scale_scalar(uint16_t* a, uint16_t s, uint16_t p, std::size_t n) {
    uint32_t ss = s, pp = p;
    for (std::size_t i = 0; i < n; ++i)
        a[i] = static_cast<uint16_t>((a[i] * ss) % pp);
}

std::size_t first_nonzero(const uint16_t* a, std::size_t n, std::size_t from) {
    std::size_t i = from;
    // word-scan the aligned middle
    for (; i < n && (i & 3); ++i)
        if (a[i] != 0) return i;
    for (; i + 4 <= n; i += 4) {
        uint64_t w;
        std::memcpy(&w, a + i, 8);
        if (w != 0) break;
    }
    for (; i < n; ++i)
        if (a[i] != 0) return i;
    return n;
}

#if defined(__x86_64__) || defined(_M_X64)

// Shoup multiplication in 16-bit lanes: with sp = floor(s*2^16/p), the value
// s*b - mulhi(sp, b)*p lies in [0, 2p), so a min-with-wrap folds it into
// [0, p). Requires p < 2^15.
__attribute__((target("avx2"))) void axpy_avx2(uint16_t* a, const uint16_t* b, uint16_t s,
                                               uint16_t p, std::size_t n) {
    if (s == 0) return;
    const uint16_t sp = static_cast<uint16_t>((static_cast<uint32_t>(s) << 16) / p);
    const __m256i vs = _mm256_set1_epi16(static_cast<short>(s));
    const __m256i vsp = _mm256_set1_epi16(static_cast<short>(sp));
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i q = _mm256_mulhi_epu16(vsp, vb);
        __m256i r = _mm256_sub_epi16(_mm256_mullo_epi16(vs, vb), _mm256_mullo_epi16(q, vp));
        r = _mm256_min_epu16(r, _mm256_sub_epi16(r, vp));
        __m256i t = _mm256_add_epi16(va, r);
        t = _mm256_min_epu16(t, _mm256_sub_epi16(t, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), t);
    }
    if (i < n) axpy_scalar(a + i, b + i, s, p, n - i);
}

__attribute__((target("avx2"))) void scale_avx2(uint16_t* a, uint16_t s, uint16_t p, std::size_t n) {
    const uint16_t sp = static_cast<uint16_t>((static_cast<uint32_t>(s) << 16) / p);
    const __m256i vs = _mm256_set1_epi16(static_cast<short>(s));
    const __m256i vsp = _mm256_set1_epi16(static_cast<short>(sp));
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(p));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i q = _mm256_mulhi_epu16(vsp, va);
        __m256i r = _mm256_sub_epi16(_mm256_mullo_epi16(vs, va), _mm256_mullo_epi16(q, vp));
        r = _mm256_min_epu16(r, _mm256_sub_epi16(r, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), r);
    }
    if (i < n) scale_scalar(a + i, s, p, n - i);
}

static bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

#endif // x86_64

#if defined(__aarch64__)

// Same Shoup scheme with vmull/vshrn providing the 16-bit mulhi.
void axpy_neon(uint16_t* a, const uint16_t* b, uint16_t s, uint16_t p, std::size_t n) {
    if (s == 0) return;
    const uint16_t sp = static_cast<uint16_t>((static_cast<uint32_t>(s) << 16) / p);
    const uint16x8_t vs = vdupq_n_u16(s);
    const uint16x4_t vsp4 = vdup_n_u16(sp);
    const uint16x8_t vp = vdupq_n_u16(p);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t vb = vld1q_u16(b + i);
        uint16x8_t va = vld1q_u16(a + i);
        uint16x4_t qlo = vshrn_n_u32(vmull_u16(vget_low_u16(vb), vsp4), 16);
        uint16x4_t qhi = vshrn_n_u32(vmull_u16(vget_high_u16(vb), vsp4), 16);
        uint16x8_t q = vcombine_u16(qlo, qhi);
        uint16x8_t r = vsubq_u16(vmulq_u16(vs, vb), vmulq_u16(q, vp));
        r = vminq_u16(r, vsubq_u16(r, vp));
        uint16x8_t t = vaddq_u16(va, r);
        t = vminq_u16(t, vsubq_u16(t, vp));
        vst1q_u16(a + i, t);
    }
    if (i < n) axpy_scalar(a + i, b + i, s, p, n - i);
}

void scale_neon(uint16_t* a, uint16_t s, uint16_t p, std::size_t n) {
    const uint16_t sp = static_cast<uint16_t>((static_cast<uint32_t>(s) << 16) / p);
    const uint16x8_t vs = vdupq_n_u16(s);
    const uint16x4_t vsp4 = vdup_n_u16(sp);
    const uint16x8_t vp = vdupq_n_u16(p);
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t va = vld1q_u16(a + i);
        uint16x4_t qlo = vshrn_n_u32(vmull_u16(vget_low_u16(va), vsp4), 16);
        uint16x4_t qhi = vshrn_n_u32(vmull_u16(vget_high_u16(va), vsp4), 16);
        uint16x8_t q = vcombine_u16(qlo, qhi);
        uint16x8_t r = vsubq_u16(vmulq_u16(vs, va), vmulq_u16(q, vp));
        r = vminq_u16(r, vsubq_u16(r, vp));
        vst1q_u16(a + i, r);
    }
    if (i < n) scale_scalar(a + i, s, p, n - i);
}

#endif // aarch64

namespace {

Backend pick_default() {
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_supported()) return Backend::Avx2;
#endif
#if defined(__aarch64__)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

std::atomic<Backend> g_backend{pick_default()};

} // namespace

Backend active_backend() { return g_backend.load(); }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
        default: return "scalar";
    }
}

void force_backend(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::Avx2 && !avx2_supported())
        fail(ErrKind::Validation, "backend-unavailable", "avx2 not supported on this cpu");
    if (b == Backend::Neon) fail(ErrKind::Validation, "backend-unavailable", "neon not available on x86");
#elif defined(__aarch64__)
    if (b == Backend::Avx2) fail(ErrKind::Validation, "backend-unavailable", "avx2 not available on arm");
#else
    if (b != Backend::Scalar) fail(ErrKind::Validation, "backend-unavailable", "only scalar available");
#endif
    g_backend.store(b);
}

void axpy(uint16_t* a, const uint16_t* b, uint16_t s, uint16_t p, std::size_t n) {
    switch (g_backend.load(std::memory_order_relaxed)) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2: axpy_avx2(a, b, s, p, n); return;
#endif
#if defined(__aarch64__)
        case Backend::Neon: axpy_neon(a, b, s, p, n); return;
#endif
        default: axpy_scalar(a, b, s, p, n); return;
    }
}

void scale(uint16_t* a, uint16_t s, uint16_t p, std::size_t n) {
    switch (g_backend.load(std::memory_order_relaxed)) {
#if defined(__x86_64__) || defined(_M_X64)
        case Backend::Avx2: scale_avx2(a, s, p, n); return;
#endif
#if defined(__aarch64__)
        case Backend::Neon: scale_neon(a, s, p, n); return;
#endif
        default: scale_scalar(a, s, p, n); return;
    }
}

} // namespace gsv::kernels
