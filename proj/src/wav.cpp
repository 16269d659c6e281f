// Copyright (c) 2026 mtts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mtts/wav.h"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "mtts/common.h"

namespace mtts {

namespace {

std::uint32_t read_u32(std::string_view bytes, std::size_t off) {
  return static_cast<std::uint8_t>(bytes[off]) |
         (static_cast<std::uint8_t>(bytes[off + 1]) << 8) |
         (static_cast<std::uint8_t>(bytes[off + 2]) << 16) |
         (static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[off + 3])) << 24);
}

std::uint16_t read_u16(std::string_view bytes, std::size_t off) {
  return static_cast<std::uint16_t>(static_cast<std::uint8_t>(bytes[off]) |
                                    (static_cast<std::uint8_t>(bytes[off + 1]) << 8));
}

}  // namespace

WavAudio read_wav(std::string_view bytes) {
  if (bytes.size() < 12 || bytes.substr(0, 4) != "RIFF" ||
      bytes.substr(8, 4) != "WAVE")
    throw DomainError("not a RIFF/WAVE file");

  bool have_fmt = false;
  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t sample_rate = 0;
  std::string_view data;
  bool have_data = false;

  std::size_t off = 12;
  while (off + 8 <= bytes.size()) {
    const std::string_view id = bytes.substr(off, 4);
    const std::uint32_t size = read_u32(bytes, off + 4);
    if (off + 8 + size > bytes.size())
      throw DomainError("truncated WAVE chunk '" + std::string(id) + "'");
    const std::string_view body = bytes.substr(off + 8, size);
    if (id == "fmt ") {
      if (size < 16) throw DomainError("fmt chunk too small");
      format = read_u16(body, 0);
      channels = read_u16(body, 2);
      sample_rate = read_u32(body, 4);
      bits = read_u16(body, 14);
      have_fmt = true;
    } else if (id == "data") {
      data = body;
      have_data = true;
    }
    off += 8 + size + (size & 1);  // chunks are word-aligned
  }

  if (!have_fmt) throw DomainError("missing fmt chunk");
  if (!have_data) throw DomainError("missing data chunk");
  if (format != 1 || bits != 16)
    throw DomainError("only PCM16 WAVE is supported");
  if (channels != 1) throw DomainError("only mono WAVE is supported");
  if (data.size() % 2 != 0) throw DomainError("odd PCM16 data size");

  WavAudio wav;
  wav.sample_rate = static_cast<int>(sample_rate);
  wav.samples.reserve(data.size() / 2);
  for (std::size_t i = 0; i + 1 < data.size(); i += 2) {
    const std::int16_t s = static_cast<std::int16_t>(
        static_cast<std::uint16_t>(static_cast<std::uint8_t>(data[i]) |
                                   (static_cast<std::uint8_t>(data[i + 1]) << 8)));
    wav.samples.push_back(static_cast<double>(s) / 32768.0);
  }
  return wav;
}

WavAudio read_wav_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open WAVE file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_wav(buf.str());
}

}  // namespace mtts
