#include "rtdsp/wav.hpp"

#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>

#include "rtdsp/kernels.hpp"

namespace rtdsp::wav {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::malformed_header: return "malformed header";
    case ErrorKind::not_pcm: return "not PCM";
    case ErrorKind::unsupported_depth: return "unsupported bit depth";
    case ErrorKind::unsupported_layout: return "unsupported channel layout";
    case ErrorKind::truncated: return "truncated";
    case ErrorKind::io: return "I/O error";
  }
  return "?";
}

AudioClip::AudioClip(int sample_rate_hz, std::vector<std::vector<Sample16>> channels)
    : rate_(sample_rate_hz), data_(std::move(channels)) {
  if (rate_ <= 0) throw std::invalid_argument("sample rate must be positive");
  if (data_.empty() || data_.size() > 2) throw std::invalid_argument("clip must have 1 or 2 channels");
  if (data_.size() == 2 && data_[0].size() != data_[1].size()) {
    throw std::invalid_argument("channels must have equal length");
  }
}

AudioClip AudioClip::mono(int sample_rate_hz, std::vector<Sample16> samples) {
  std::vector<std::vector<Sample16>> ch;
  ch.push_back(std::move(samples));
  return AudioClip(sample_rate_hz, std::move(ch));
}

namespace {

constexpr std::uint16_t kFormatPcm = 1;

std::uint16_t le16(const std::uint8_t* p) { return std::uint16_t(p[0] | (p[1] << 8)); }
std::uint32_t le32(const std::uint8_t* p) {
  return std::uint32_t(p[0]) | std::uint32_t(p[1]) << 8 | std::uint32_t(p[2]) << 16 |
         std::uint32_t(p[3]) << 24;
}

void put16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(std::uint8_t(v));
  out.push_back(std::uint8_t(v >> 8));
}
void put32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int s = 0; s < 32; s += 8) out.push_back(std::uint8_t(v >> s));
}
void put_tag(std::vector<std::uint8_t>& out, const char (&tag)[5]) {
  out.insert(out.end(), tag, tag + 4);
}

bool tag_is(const std::uint8_t* p, const char (&tag)[5]) { return std::memcmp(p, tag, 4) == 0; }

struct Format {
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::uint16_t block_align = 0;
};

Format parse_fmt(const std::uint8_t* p, std::uint32_t size) {
  if (size < 16) throw WavError(ErrorKind::malformed_header, "fmt chunk shorter than 16 bytes");
  const std::uint16_t tag = le16(p);
  if (tag != kFormatPcm) {
    throw WavError(ErrorKind::not_pcm, "format tag " + std::to_string(tag) + " is not PCM (1)");
  }
  Format f;
  f.channels = le16(p + 2);
  f.rate = le32(p + 4);
  f.block_align = le16(p + 12);
  const std::uint16_t bits = le16(p + 14);
  if (bits != 16) {
    throw WavError(ErrorKind::unsupported_depth, std::to_string(bits) + "-bit samples not supported");
  }
  if (f.channels != 1 && f.channels != 2) {
    throw WavError(ErrorKind::unsupported_layout,
                   std::to_string(f.channels) + " channels not supported");
  }
  if (f.block_align != 2 * f.channels) {
    throw WavError(ErrorKind::unsupported_layout, "block align does not match 16-bit frames");
  }
  if (f.rate == 0 || f.rate > 0x7fffffffu) {
    throw WavError(ErrorKind::malformed_header, "invalid sample rate");
  }
  return f;
}

}  // namespace

AudioClip read_wav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !tag_is(bytes.data(), "RIFF") || !tag_is(bytes.data() + 8, "WAVE")) {
    throw WavError(ErrorKind::malformed_header, "not a RIFF/WAVE stream");
  }
  std::optional<Format> fmt;
  std::size_t pos = 12;
  while (true) {
    if (pos + 8 > bytes.size()) {
      throw WavError(fmt ? ErrorKind::truncated : ErrorKind::malformed_header,
                     fmt ? "data chunk missing or cut off" : "fmt chunk missing");
    }
    const std::uint8_t* hdr = bytes.data() + pos;
    const std::uint32_t size = le32(hdr + 4);
    const std::size_t body = pos + 8;
    if (tag_is(hdr, "fmt ")) {
      if (fmt) throw WavError(ErrorKind::malformed_header, "duplicate fmt chunk");
      if (body + size > bytes.size()) throw WavError(ErrorKind::truncated, "fmt chunk cut off");
      fmt = parse_fmt(bytes.data() + body, size);
    } else if (tag_is(hdr, "data")) {
      if (!fmt) throw WavError(ErrorKind::malformed_header, "data chunk before fmt chunk");
      if (body + size > bytes.size()) {
        throw WavError(ErrorKind::truncated, "data chunk declares " + std::to_string(size) +
                                                 " bytes but only " +
                                                 std::to_string(bytes.size() - body) + " remain");
      }
      if (size % fmt->block_align != 0) {
        throw WavError(ErrorKind::truncated, "data chunk ends mid-frame");
      }
      const std::size_t frames = size / fmt->block_align;
      std::vector<std::vector<Sample16>> ch(fmt->channels, std::vector<Sample16>(frames));
      const std::uint8_t* p = bytes.data() + body;
      for (std::size_t f = 0; f < frames; ++f) {
        for (auto& c : ch) {
          c[f] = static_cast<Sample16>(le16(p));
          p += 2;
        }
      }
      // Anything after the data chunk is ignored.
      return AudioClip(int(fmt->rate), std::move(ch));
    }
    // Unknown chunk: skip body plus pad byte.
    pos = body + size + (size & 1u);
  }
}

std::vector<std::uint8_t> write_wav(const AudioClip& clip) {
  const std::uint16_t channels = std::uint16_t(clip.channels());
  const std::uint32_t rate = std::uint32_t(clip.sample_rate_hz());
  const std::uint16_t block = std::uint16_t(2 * channels);
  const std::uint64_t data_bytes = std::uint64_t(clip.frames()) * block;
  if (data_bytes > 0xffffffffull - 36) {
    throw WavError(ErrorKind::unsupported_layout, "clip too large for a RIFF file");
  }
  std::vector<std::uint8_t> out;
  out.reserve(44 + data_bytes);
  put_tag(out, "RIFF");
  put32(out, std::uint32_t(36 + data_bytes));
  put_tag(out, "WAVE");
  put_tag(out, "fmt ");
  put32(out, 16);
  put16(out, kFormatPcm);
  put16(out, channels);
  put32(out, rate);
  put32(out, rate * block);
  put16(out, block);
  put16(out, 16);
  put_tag(out, "data");
  put32(out, std::uint32_t(data_bytes));
  for (std::size_t f = 0; f < clip.frames(); ++f) {
    for (int c = 0; c < channels; ++c) put16(out, std::uint16_t(clip.channel(c)[f]));
  }
  return out;
}

AudioClip read_wav_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WavError(ErrorKind::io, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw WavError(ErrorKind::io, "read failed: " + path.string());
  return read_wav(bytes);
}

void write_wav_file(const std::filesystem::path& path, const AudioClip& clip) {
  const auto bytes = write_wav(clip);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WavError(ErrorKind::io, "cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!out) throw WavError(ErrorKind::io, "write failed: " + path.string());
}

std::vector<Sample16> select_channel(const AudioClip& clip, ChannelSelect which) {
  const auto left = clip.channel(0);
  switch (which) {
    case ChannelSelect::left:
      return {left.begin(), left.end()};
    case ChannelSelect::right: {
      if (clip.channels() < 2) throw std::invalid_argument("right channel requested from mono clip");
      const auto right = clip.channel(1);
      return {right.begin(), right.end()};
    }
    case ChannelSelect::downmix: {
      if (clip.channels() < 2) return {left.begin(), left.end()};
      std::vector<Sample16> out(clip.frames());
      kernels::active().downmix(left, clip.channel(1), out);
      return out;
    }
  }
  return {};
}

}  // namespace rtdsp::wav
