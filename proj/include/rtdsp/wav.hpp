#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtdsp/codec.hpp"

namespace rtdsp::wav {

enum class ErrorKind {
  malformed_header,   // not RIFF/WAVE, missing or misordered fmt/data chunks
  not_pcm,            // format tag other than 1
  unsupported_depth,  // bits per sample other than 16
  unsupported_layout, // channel count other than 1 or 2, inconsistent block align
  truncated,          // a chunk or the sample payload runs past end of input
  io,                 // file could not be opened, read or written
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

class WavError : public std::runtime_error {
 public:
  WavError(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// PCM-16 audio, one sample vector per channel, all the same length.
class AudioClip {
 public:
  /// Throws std::invalid_argument on a non-positive rate, a channel count
  /// other than 1 or 2, or ragged channels.
  AudioClip(int sample_rate_hz, std::vector<std::vector<Sample16>> channels);

  static AudioClip mono(int sample_rate_hz, std::vector<Sample16> samples);

  int sample_rate_hz() const noexcept { return rate_; }
  int channels() const noexcept { return int(data_.size()); }
  std::size_t frames() const noexcept { return data_.front().size(); }
  std::span<const Sample16> channel(int c) const { return data_.at(std::size_t(c)); }

  friend bool operator==(const AudioClip&, const AudioClip&) = default;

 private:
  int rate_;
  std::vector<std::vector<Sample16>> data_;
};

AudioClip read_wav(std::span<const std::uint8_t> bytes);

/// Canonical 44-byte header followed by interleaved little-endian samples.
std::vector<std::uint8_t> write_wav(const AudioClip& clip);

AudioClip read_wav_file(const std::filesystem::path& path);
void write_wav_file(const std::filesystem::path& path, const AudioClip& clip);

enum class ChannelSelect { left, right, downmix };

/// LEFT on mono is the identity; RIGHT on mono throws std::invalid_argument.
/// DOWNMIX of mono returns the single channel.
std::vector<Sample16> select_channel(const AudioClip& clip, ChannelSelect which);

}  // namespace rtdsp::wav
