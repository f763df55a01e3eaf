#ifndef LAZYSTREAMS_IO_HPP
#define LAZYSTREAMS_IO_HPP

#include <cstdio>
#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>

#include "lazystreams/generator.hpp"

namespace lazystreams {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Byte source behind the reader generators. `get` returns nullopt at end
/// of input and throws IoError on read failure. The reader calls `close`
/// exactly once: at end of input, on error, or when it is stopped.
class CharSource {
 public:
  virtual ~CharSource() = default;
  virtual std::optional<char> get() = 0;
  virtual void close() noexcept = 0;
};

/// Opens `path` for reading; throws IoError if it cannot be opened.
std::unique_ptr<CharSource> open_file(const std::filesystem::path& path);

/// Standard input. Closing it only detaches the reader.
std::unique_ptr<CharSource> standard_input();

/// Whitespace-separated tokens. A token spelling a decimal integer that fits
/// in 64 bits becomes Int; anything else becomes a Sym with the raw text.
Generator token_reader(std::unique_ptr<CharSource> source);
Generator token_reader(const std::filesystem::path& path);

/// One Sym per line, without the line terminator ("\n" or "\r\n"). A final
/// line without a terminator is still produced.
Generator line_reader(std::unique_ptr<CharSource> source);
Generator line_reader(const std::filesystem::path& path);

}  // namespace lazystreams

#endif  // LAZYSTREAMS_IO_HPP
