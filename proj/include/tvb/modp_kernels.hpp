#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace tvb {

// Modulus context for primes up to 251, so p*(p-1) fits in 16 bits and
// row entries stay in uint16 throughout elimination.
struct ModP {
    uint16_t p;
    uint16_t mulmag;  // floor(2^16 / p), Barrett multiplier

    explicit ModP(uint16_t prime);
};

enum class KernelBackend { AutoDetect, Scalar, Avx2 };

// Selects the row-kernel implementation. AutoDetect honors the TVB_KERNEL
// environment variable ("scalar" or "avx2") and otherwise probes the CPU.
void set_kernel_backend(KernelBackend b);
std::string kernel_backend_name();
bool avx2_available();

// dst[i] <- (dst[i] + c * src[i]) mod p. Inputs must be reduced.
void row_addmul(uint16_t* dst, const uint16_t* src, std::size_t n, uint16_t c,
                const ModP& m);

// dst[i] <- (c * dst[i]) mod p.
void row_scale(uint16_t* dst, std::size_t n, uint16_t c, const ModP& m);

uint16_t mod_inverse(uint16_t a, const ModP& m);

namespace detail {

void row_addmul_scalar(uint16_t* dst, const uint16_t* src, std::size_t n,
                       uint16_t c, const ModP& m);
void row_scale_scalar(uint16_t* dst, std::size_t n, uint16_t c, const ModP& m);

#if defined(__x86_64__) || defined(_M_X64)
void row_addmul_avx2(uint16_t* dst, const uint16_t* src, std::size_t n,
                     uint16_t c, const ModP& m);
void row_scale_avx2(uint16_t* dst, std::size_t n, uint16_t c, const ModP& m);
#endif

}  // namespace detail

}  // namespace tvb
