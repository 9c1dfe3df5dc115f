#pragma once

// Block kernels behind the per-sample operations. Every entry point has a
// scalar reference implementation; SIMD variants must be bit-identical to it
// and are picked at runtime from what the CPU supports.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rtdsp/codec.hpp"

namespace rtdsp::kernels {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;

  // out[n] = saturate(round(in[n] * factor)). in and out may be the same buffer.
  void (*apply_gain)(std::span<const Sample16> in, std::span<Sample16> out, double factor);

  // Runs the feed-forward delay recurrence over a circular line starting at
  // write_index; returns the write index after the last sample.
  std::size_t (*delay)(std::span<Sample16> line, std::size_t write_index,
                       std::span<const Sample16> in, std::span<Sample16> out);

  // Same as delay, but the line stores saturate(round(in + delayed * gain)).
  std::size_t (*echo)(std::span<Sample16> line, std::size_t write_index, double gain,
                      std::span<const Sample16> in, std::span<Sample16> out);

  // out[n] = (left[n] + right[n]) / 2, rounded half away from zero.
  void (*downmix)(std::span<const Sample16> left, std::span<const Sample16> right,
                  std::span<Sample16> out);

  // out[n] = saturate(round(in[n] * full_scale)). Inputs must be finite.
  void (*to_pcm)(std::span<const double> in, std::span<Sample16> out, double full_scale);
};

namespace scalar {
void apply_gain(std::span<const Sample16> in, std::span<Sample16> out, double factor);
std::size_t delay(std::span<Sample16> line, std::size_t write_index,
                  std::span<const Sample16> in, std::span<Sample16> out);
std::size_t echo(std::span<Sample16> line, std::size_t write_index, double gain,
                 std::span<const Sample16> in, std::span<Sample16> out);
void downmix(std::span<const Sample16> left, std::span<const Sample16> right,
             std::span<Sample16> out);
void to_pcm(std::span<const double> in, std::span<Sample16> out, double full_scale);
}  // namespace scalar

std::string_view isa_name(Isa isa) noexcept;

/// Table for a specific ISA, or nullptr if it was not built or the CPU lacks it.
const KernelTable* kernels_for(Isa isa) noexcept;

/// ISAs usable on this machine, scalar first.
std::vector<Isa> available_isas();

/// Best available ISA unless overridden with select_isa().
const KernelTable& active() noexcept;

/// Throws std::invalid_argument if the ISA is unavailable here.
void select_isa(Isa isa);

/// Restores automatic selection.
void reset_isa() noexcept;

}  // namespace rtdsp::kernels
