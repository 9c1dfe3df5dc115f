// NEON kernels for AArch64, where Advanced SIMD is always present.

#include <arm_neon.h>

#include <algorithm>

#include "tables.hpp"

namespace rtdsp::kernels::neon {
namespace {

inline float64x2_t round_half_away(float64x2_t t) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t r = vrndq_f64(t);
  const float64x2_t f = vsubq_f64(t, r);
  const uint64x2_t up = vcgeq_f64(f, vdupq_n_f64(0.5));
  const uint64x2_t down = vcleq_f64(f, vdupq_n_f64(-0.5));
  const float64x2_t plus = vreinterpretq_f64_u64(vandq_u64(up, vreinterpretq_u64_f64(one)));
  const float64x2_t minus = vreinterpretq_f64_u64(vandq_u64(down, vreinterpretq_u64_f64(one)));
  return vsubq_f64(vaddq_f64(r, plus), minus);
}

inline int32x2_t round_to_s32(float64x2_t t) {
  float64x2_t r = round_half_away(t);
  r = vmaxq_f64(r, vdupq_n_f64(double(kSampleMin)));
  r = vminq_f64(r, vdupq_n_f64(double(kSampleMax)));
  return vmovn_s64(vcvtq_s64_f64(r));
}

struct Quad {
  float64x2_t v[4];
};

inline Quad widen(int16x8_t x) {
  const int32x4_t lo = vmovl_s16(vget_low_s16(x));
  const int32x4_t hi = vmovl_s16(vget_high_s16(x));
  return {{vcvtq_f64_s64(vmovl_s32(vget_low_s32(lo))), vcvtq_f64_s64(vmovl_s32(vget_high_s32(lo))),
           vcvtq_f64_s64(vmovl_s32(vget_low_s32(hi))), vcvtq_f64_s64(vmovl_s32(vget_high_s32(hi)))}};
}

inline int16x8_t narrow(const Quad& q) {
  const int32x4_t lo = vcombine_s32(round_to_s32(q.v[0]), round_to_s32(q.v[1]));
  const int32x4_t hi = vcombine_s32(round_to_s32(q.v[2]), round_to_s32(q.v[3]));
  return vcombine_s16(vqmovn_s32(lo), vqmovn_s32(hi));
}

void apply_gain(std::span<const Sample16> in, std::span<Sample16> out, double factor) {
  std::size_t n = 0;
  for (; n + 8 <= in.size(); n += 8) {
    Quad q = widen(vld1q_s16(in.data() + n));
    for (auto& v : q.v) v = vmulq_n_f64(v, factor);
    vst1q_s16(out.data() + n, narrow(q));
  }
  scalar::apply_gain(in.subspan(n), out.subspan(n), factor);
}

std::size_t delay(std::span<Sample16> line, std::size_t i, std::span<const Sample16> in,
                  std::span<Sample16> out) {
  const std::size_t d = line.size();
  std::size_t n = 0;
  while (n < in.size()) {
    const std::size_t run = std::min(in.size() - n, d - i);
    std::size_t k = 0;
    for (; k + 8 <= run; k += 8) {
      Sample16* slot = line.data() + i + k;
      const int16x8_t x = vld1q_s16(in.data() + n + k);
      const int16x8_t delayed = vld1q_s16(slot);
      vst1q_s16(slot, x);
      vst1q_s16(out.data() + n + k, vqaddq_s16(delayed, x));
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
  std::size_t n = 0;
  while (n < in.size()) {
    const std::size_t run = std::min(in.size() - n, d - i);
    std::size_t k = 0;
    for (; k + 8 <= run; k += 8) {
      Sample16* slot = line.data() + i + k;
      const int16x8_t x = vld1q_s16(in.data() + n + k);
      const int16x8_t delayed = vld1q_s16(slot);
      const Quad xq = widen(x);
      Quad fb = widen(delayed);
      for (int j = 0; j < 4; ++j) fb.v[j] = vaddq_f64(xq.v[j], vmulq_n_f64(fb.v[j], gain));
      vst1q_s16(slot, narrow(fb));
      vst1q_s16(out.data() + n + k, vqaddq_s16(delayed, x));
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
  const int32x4_t one = vdupq_n_s32(1);
  std::size_t n = 0;
  for (; n + 4 <= left.size(); n += 4) {
    const int32x4_t sum = vaddl_s16(vld1_s16(left.data() + n), vld1_s16(right.data() + n));
    const int32x4_t mag = vshrq_n_s32(vaddq_s32(vabsq_s32(sum), one), 1);
    const int32x4_t avg = vbslq_s32(vcltzq_s32(sum), vnegq_s32(mag), mag);
    vst1_s16(out.data() + n, vqmovn_s32(avg));
  }
  scalar::downmix(left.subspan(n), right.subspan(n), out.subspan(n));
}

void to_pcm(std::span<const double> in, std::span<Sample16> out, double full_scale) {
  std::size_t n = 0;
  for (; n + 8 <= in.size(); n += 8) {
    Quad q;
    for (int j = 0; j < 4; ++j) q.v[j] = vmulq_n_f64(vld1q_f64(in.data() + n + 2 * j), full_scale);
    vst1q_s16(out.data() + n, narrow(q));
  }
  scalar::to_pcm(in.subspan(n), out.subspan(n), full_scale);
}

}  // namespace

const KernelTable kTable{Isa::neon, apply_gain, delay, echo, downmix, to_pcm};

}  // namespace rtdsp::kernels::neon
