#pragma once

#include <cstddef>
#include <cstdint>

namespace gsv::kernels {

// Dense row kernels over F_p for p < 2^15, the inner loop of the invariant
// linear algebra. Rows are uint16_t residues in [0, p). Each operation has a
// scalar reference implementation and vector variants; `select_backend`
// resolves one at runtime, and the equivalence tests drive every compiled
// variant against the reference.

enum class Backend { Scalar, Avx2, Neon };

Backend active_backend();
const char* backend_name(Backend b);
void force_backend(Backend b); // testing hook; throws if unavailable

// a[i] = (a[i] + s*b[i]) mod p
void axpy_scalar(uint16_t* a, const uint16_t* b, uint16_t s, uint16_t p, std::size_t n);
// a[i] = (a[i] * s) mod p
void scale_scalar(uint16_t* a, uint16_t s, uint16_t p, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
void axpy_avx2(uint16_t* a, const uint16_t* b, uint16_t s, uint16_t p, std::size_t n);
void scale_avx2(uint16_t* a, uint16_t s, uint16_t p, std::size_t n);
#endif
#if defined(__aarch64__)
void axpy_neon(uint16_t* a, const uint16_t* b, uint16_t s, uint16_t p, std::size_t n);
void scale_neon(uint16_t* a, uint16_t s, uint16_t p, std::size_t n);
#endif

// dispatched entry points
void axpy(uint16_t* a, const uint16_t* b, uint16_t s, uint16_t p, std::size_t n);
void scale(uint16_t* a, uint16_t s, uint16_t p, std::size_t n);

// index of first nonzero entry at or after `from`, or n if none
std::size_t first_nonzero(const uint16_t* a, std::size_t n, std::size_t from);

} // namespace gsv::kernels
