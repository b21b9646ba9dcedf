#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tvb/modp_kernels.hpp"
#include "tvb/rng.hpp"

namespace {

std::vector<uint16_t> random_row(tvb::SplitMix64& rng, std::size_t n, uint16_t p) {
    std::vector<uint16_t> v(n);
    for (auto& x : v) x = static_cast<uint16_t>(rng.uniform(0, p - 1));
    return v;
}

const uint16_t kPrimes[] = {2, 3, 5, 7, 11, 13, 101, 251};

}  // namespace

TEST_CASE("ModP rejects non-primes and out-of-range moduli") {
    for (uint16_t p : kPrimes) CHECK(tvb::ModP(p).p == p);
    for (uint16_t bad : {0, 1, 4, 6, 9, 100, 255}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(tvb::ModP{bad}, std::invalid_argument);
    }
    CHECK_THROWS_AS(tvb::ModP{257}, std::invalid_argument);
}

TEST_CASE("scalar row kernels agree with plain modular arithmetic") {
    tvb::SplitMix64 rng(31);
    for (uint16_t p : kPrimes) {
        tvb::ModP m(p);
        for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{7},
                              std::size_t{16}, std::size_t{33}, std::size_t{100}}) {
            for (uint32_t c = 0; c < p; ++c) {
                auto dst = random_row(rng, n, p);
                auto src = random_row(rng, n, p);
                std::vector<uint16_t> want(n), want2(n);
                for (std::size_t i = 0; i < n; ++i) {
                    want[i] = static_cast<uint16_t>((dst[i] + uint32_t{c} * src[i]) % p);
                    want2[i] = static_cast<uint16_t>(uint32_t{c} * dst[i] % p);
                }
                auto d1 = dst;
                tvb::detail::row_addmul_scalar(d1.data(), src.data(), n,
                                               static_cast<uint16_t>(c), m);
                CHECK(d1 == want);
                auto d2 = dst;
                tvb::detail::row_scale_scalar(d2.data(), n,
                                              static_cast<uint16_t>(c), m);
                CHECK(d2 == want2);
            }
        }
    }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 kernels match scalar kernels lane for lane") {
    if (!tvb::avx2_available()) return;
    tvb::SplitMix64 rng(32);
    for (uint16_t p : kPrimes) {
        tvb::ModP m(p);
        // lengths around the 16-lane boundary plus ragged tails
        for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{15},
                              std::size_t{16}, std::size_t{17}, std::size_t{31},
                              std::size_t{48}, std::size_t{1000}}) {
            for (int rep = 0; rep < 8; ++rep) {
                uint16_t c = static_cast<uint16_t>(rng.uniform(0, p - 1));
                auto dst = random_row(rng, n, p);
                auto src = random_row(rng, n, p);
                auto a = dst, b = dst;
                tvb::detail::row_addmul_scalar(a.data(), src.data(), n, c, m);
                tvb::detail::row_addmul_avx2(b.data(), src.data(), n, c, m);
                CHECK(a == b);
                a = dst, b = dst;
                tvb::detail::row_scale_scalar(a.data(), n, c, m);
                tvb::detail::row_scale_avx2(b.data(), n, c, m);
                CHECK(a == b);
            }
        }
    }
}
#endif

TEST_CASE("backend selection is observable and reversible") {
    tvb::set_kernel_backend(tvb::KernelBackend::Scalar);
    CHECK(tvb::kernel_backend_name() == "scalar");
    tvb::SplitMix64 rng(33);
    tvb::ModP m(251);
    auto dst = random_row(rng, 40, m.p);
    auto src = random_row(rng, 40, m.p);
    auto scalar_out = dst;
    tvb::row_addmul(scalar_out.data(), src.data(), 40, 123, m);

    if (tvb::avx2_available()) {
        tvb::set_kernel_backend(tvb::KernelBackend::Avx2);
        CHECK(tvb::kernel_backend_name() == "avx2");
        auto simd_out = dst;
        tvb::row_addmul(simd_out.data(), src.data(), 40, 123, m);
        CHECK(simd_out == scalar_out);
    } else {
        tvb::set_kernel_backend(tvb::KernelBackend::Avx2);
        CHECK_THROWS_AS(tvb::kernel_backend_name(), std::runtime_error);
    }
    tvb::set_kernel_backend(tvb::KernelBackend::AutoDetect);
}

TEST_CASE("mod_inverse inverts every unit") {
    for (uint16_t p : kPrimes) {
        tvb::ModP m(p);
        for (uint32_t a = 1; a < p; ++a) {
            uint16_t inv = tvb::mod_inverse(static_cast<uint16_t>(a), m);
            CHECK(a * uint32_t{inv} % p == 1);
        }
        CHECK_THROWS_AS(tvb::mod_inverse(0, m), std::invalid_argument);
    }
}
