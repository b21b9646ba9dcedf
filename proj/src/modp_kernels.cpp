#include "tvb/modp_kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace tvb {

ModP::ModP(uint16_t prime) : p(prime), mulmag(0) {
    if (prime < 2) throw std::invalid_argument("modulus must be at least 2");
    if (prime > 251) throw std::invalid_argument("modulus above 251 unsupported");
    for (uint32_t d = 2; d * d <= prime; ++d)
        if (prime % d == 0) throw std::invalid_argument("modulus must be prime");
    mulmag = static_cast<uint16_t>(65536u / prime);
}

namespace detail {

// Barrett reduction of x < p*(p-1)+p <= 2^16 using q_hat = (x*mulmag) >> 16.
// q_hat is floor(x/p) or one less, so a single conditional subtract suffices.
static inline uint16_t reduce(uint32_t x, const ModP& m) {
    uint32_t q = (x * static_cast<uint32_t>(m.mulmag)) >> 16;
    uint32_t r = x - q * m.p;
    if (r >= m.p) r -= m.p;
    return static_cast<uint16_t>(r);
}

void row_addmul_scalar(uint16_t* dst, const uint16_t* src, std::size_t n,
                       uint16_t c, const ModP& m) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = reduce(static_cast<uint32_t>(dst[i]) +
                            static_cast<uint32_t>(c) * src[i],
                        m);
}

void row_scale_scalar(uint16_t* dst, std::size_t n, uint16_t c, const ModP& m) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = reduce(static_cast<uint32_t>(c) * dst[i], m);
}

}  // namespace detail

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

namespace {

using AddmulFn = void (*)(uint16_t*, const uint16_t*, std::size_t, uint16_t,
                          const ModP&);
using ScaleFn = void (*)(uint16_t*, std::size_t, uint16_t, const ModP&);

KernelBackend g_requested = KernelBackend::AutoDetect;
AddmulFn g_addmul = nullptr;
ScaleFn g_scale = nullptr;
const char* g_name = "unbound";

void bind_backend() {
    KernelBackend want = g_requested;
    if (want == KernelBackend::AutoDetect) {
        if (const char* env = std::getenv("TVB_KERNEL")) {
            std::string s(env);
            if (s == "scalar")
                want = KernelBackend::Scalar;
            else if (s == "avx2")
                want = KernelBackend::Avx2;
            else
                throw std::runtime_error("TVB_KERNEL must be scalar or avx2");
        }
    }
    if (want == KernelBackend::AutoDetect)
        want = avx2_available() ? KernelBackend::Avx2 : KernelBackend::Scalar;

    if (want == KernelBackend::Avx2) {
#if defined(__x86_64__) || defined(_M_X64)
        if (!avx2_available())
            throw std::runtime_error("avx2 kernels requested but CPU lacks AVX2");
        g_addmul = detail::row_addmul_avx2;
        g_scale = detail::row_scale_avx2;
        g_name = "avx2";
        return;
#else
        throw std::runtime_error("avx2 kernels unavailable on this architecture");
#endif
    }
    g_addmul = detail::row_addmul_scalar;
    g_scale = detail::row_scale_scalar;
    g_name = "scalar";
}

}  // namespace

void set_kernel_backend(KernelBackend b) {
    g_requested = b;
    g_addmul = nullptr;
    g_scale = nullptr;
    g_name = "unbound";
}

std::string kernel_backend_name() {
    if (!g_addmul) bind_backend();
    return g_name;
}

void row_addmul(uint16_t* dst, const uint16_t* src, std::size_t n, uint16_t c,
                const ModP& m) {
    if (!g_addmul) bind_backend();
    g_addmul(dst, src, n, c, m);
}

void row_scale(uint16_t* dst, std::size_t n, uint16_t c, const ModP& m) {
    if (!g_scale) bind_backend();
    g_scale(dst, n, c, m);
}

uint16_t mod_inverse(uint16_t a, const ModP& m) {
    a = static_cast<uint16_t>(a % m.p);
    if (a == 0) throw std::invalid_argument("no inverse of 0");
    int64_t t = 0, newt = 1;
    int64_t r = m.p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += m.p;
    return static_cast<uint16_t>(t);
}

}  // namespace tvb
