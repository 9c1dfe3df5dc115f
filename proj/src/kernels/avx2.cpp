// AVX2 kernels. Compiled with -mavx2 only; callers must check CPU support.

#include <immintrin.h>

#include <algorithm>

#include "tables.hpp"

namespace rtdsp::kernels::avx2 {
namespace {

// std::round semantics (half away from zero) without a tie-prone +0.5:
// the fractional part t - trunc(t) is exact.
inline __m256d round_half_away(__m256d t) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d r = _mm256_round_pd(t, _MM_FROUND_TO_ZERO | _MM_FROUND_NO_EXC);
  const __m256d f = _mm256_sub_pd(t, r);
  const __m256d up = _mm256_and_pd(_mm256_cmp_pd(f, _mm256_set1_pd(0.5), _CMP_GE_OQ), one);
  const __m256d down = _mm256_and_pd(_mm256_cmp_pd(f, _mm256_set1_pd(-0.5), _CMP_LE_OQ), one);
  return _mm256_sub_pd(_mm256_add_pd(r, up), down);
}

inline __m128i round_to_epi32(__m256d t) {
  __m256d r = round_half_away(t);
  r = _mm256_max_pd(r, _mm256_set1_pd(double(kSampleMin)));
  r = _mm256_min_pd(r, _mm256_set1_pd(double(kSampleMax)));
  return _mm256_cvtpd_epi32(r);
}

// Eight int16 lanes widened into two groups of four doubles.
inline void widen(__m128i v, __m256d& lo, __m256d& hi) {
  const __m256i w = _mm256_cvtepi16_epi32(v);
  lo = _mm256_cvtepi32_pd(_mm256_castsi256_si128(w));
  hi = _mm256_cvtepi32_pd(_mm256_extracti128_si256(w, 1));
}

inline __m128i narrow(__m256d lo, __m256d hi) {
  return _mm_packs_epi32(round_to_epi32(lo), round_to_epi32(hi));
}

inline __m128i load8(const Sample16* p) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}
inline void store8(Sample16* p, __m128i v) { _mm_storeu_si128(reinterpret_cast<__m128i*>(p), v); }

void apply_gain(std::span<const Sample16> in, std::span<Sample16> out, double factor) {
  const __m256d k = _mm256_set1_pd(factor);
  std::size_t n = 0;
  for (; n + 8 <= in.size(); n += 8) {
    __m256d lo, hi;
    widen(load8(in.data() + n), lo, hi);
    store8(out.data() + n, narrow(_mm256_mul_pd(lo, k), _mm256_mul_pd(hi, k)));
  }
  scalar::apply_gain(in.subspan(n), out.subspan(n), factor);
}

// Lanes are independent as long as a chunk stays inside one pass over the
// line: sample n reads and writes slot i, and no two lanes share a slot.
std::size_t delay(std::span<Sample16> line, std::size_t i, std::span<const Sample16> in,
                  std::span<Sample16> out) {
  const std::size_t d = line.size();
  std::size_t n = 0;
  while (n < in.size()) {
    const std::size_t run = std::min(in.size() - n, d - i);
    std::size_t k = 0;
    for (; k + 16 <= run; k += 16) {
      auto* slot = reinterpret_cast<__m256i*>(line.data() + i + k);
      const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in.data() + n + k));
      const __m256i delayed = _mm256_loadu_si256(slot);
      _mm256_storeu_si256(slot, x);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + n + k),
                          _mm256_adds_epi16(delayed, x));
    }
    if (k < run) {
      scalar::delay(line.subspan(i + k, run - k), 0, in.subspan(n + k, run - k),
                    out.subspan(n + k, run - k));
    }
    n += run;
    i += run;
    if (i == d) i = 0;
  }
  return i;
}

std::size_t echo(std::span<Sample16> line, std::size_t i, double gain,
                 std::span<const Sample16> in, std::span<Sample16> out) {
  const std::size_t d = line.size();
  const __m256d g = _mm256_set1_pd(gain);
  std::size_t n = 0;
  while (n < in.size()) {
    const std::size_t run = std::min(in.size() - n, d - i);
    std::size_t k = 0;
    for (; k + 8 <= run; k += 8) {
      Sample16* slot = line.data() + i + k;
      const __m128i x = load8(in.data() + n + k);
      const __m128i delayed = load8(slot);
      __m256d xl, xh, dl, dh;
      widen(x, xl, xh);
      widen(delayed, dl, dh);
      store8(slot, narrow(_mm256_add_pd(xl, _mm256_mul_pd(dl, g)),
                          _mm256_add_pd(xh, _mm256_mul_pd(dh, g))));
      store8(out.data() + n + k, _mm_adds_epi16(delayed, x));
    }
    if (k < run) {
      scalar::echo(line.subspan(i + k, run - k), 0, gain, in.subspan(n + k, run - k),
                   out.subspan(n + k, run - k));
    }
    n += run;
    i += run;
    if (i == d) i = 0;
  }
  return i;
}

void downmix(std::span<const Sample16> left, std::span<const Sample16> right,
             std::span<Sample16> out) {
  const __m256i one = _mm256_set1_epi32(1);
  std::size_t n = 0;
  for (; n + 8 <= left.size(); n += 8) {
    const __m256i sum = _mm256_add_epi32(_mm256_cvtepi16_epi32(load8(left.data() + n)),
                                         _mm256_cvtepi16_epi32(load8(right.data() + n)));
    // |sum| rounded up by half, then the sign of sum restored.
    const __m256i mag = _mm256_srai_epi32(_mm256_add_epi32(_mm256_abs_epi32(sum), one), 1);
    const __m256i avg = _mm256_sign_epi32(mag, sum);
    store8(out.data() + n,
           _mm_packs_epi32(_mm256_castsi256_si128(avg), _mm256_extracti128_si256(avg, 1)));
  }
  scalar::downmix(left.subspan(n), right.subspan(n), out.subspan(n));
}

void to_pcm(std::span<const double> in, std::span<Sample16> out, double full_scale) {
  const __m256d k = _mm256_set1_pd(full_scale);
  std::size_t n = 0;
  for (; n + 8 <= in.size(); n += 8) {
    const __m256d lo = _mm256_mul_pd(_mm256_loadu_pd(in.data() + n), k);
    const __m256d hi = _mm256_mul_pd(_mm256_loadu_pd(in.data() + n + 4), k);
    store8(out.data() + n, narrow(lo, hi));
  }
  scalar::to_pcm(in.subspan(n), out.subspan(n), full_scale);
}

}  // namespace

const KernelTable kTable{Isa::avx2, apply_gain, delay, echo, downmix, to_pcm};

}  // namespace rtdsp::kernels::avx2
