#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "tvb/modp_kernels.hpp"

namespace tvb::detail {

// 16 lanes of uint16. Products never exceed (p-1)^2 <= 62500 so the low
// 16 bits of mullo are exact; mulhi_epu16 against mulmag gives the Barrett
// quotient; the unsigned-min trick performs the conditional subtract.
static inline __m256i reduce16(__m256i x, __m256i vp, __m256i vmag) {
    __m256i q = _mm256_mulhi_epu16(x, vmag);
    __m256i r = _mm256_sub_epi16(x, _mm256_mullo_epi16(q, vp));
    return _mm256_min_epu16(r, _mm256_sub_epi16(r, vp));
}

void row_addmul_avx2(uint16_t* dst, const uint16_t* src, std::size_t n,
                     uint16_t c, const ModP& m) {
    const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(m.p));
    const __m256i vmag = _mm256_set1_epi16(static_cast<short>(m.mulmag));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i d =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_add_epi16(d, _mm256_mullo_epi16(s, vc));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            reduce16(x, vp, vmag));
    }
    if (i < n) row_addmul_scalar(dst + i, src + i, n - i, c, m);
}

void row_scale_avx2(uint16_t* dst, std::size_t n, uint16_t c, const ModP& m) {
    const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(m.p));
    const __m256i vmag = _mm256_set1_epi16(static_cast<short>(m.mulmag));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i d =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i x = _mm256_mullo_epi16(d, vc);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                            reduce16(x, vp, vmag));
    }
    if (i < n) row_scale_scalar(dst + i, n - i, c, m);
}

}  // namespace tvb::detail

#endif
