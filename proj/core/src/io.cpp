#include "lazystreams/io.hpp"

#include <cerrno>
#include <charconv>
#include <cstring>
#include <string>

namespace lazystreams {

namespace {

class FileSource final : public CharSource {
 public:
  FileSource(std::FILE* file, std::string name, bool owned) : file_(file), name_(std::move(name)), owned_(owned) {}
  ~FileSource() override { close(); }

  std::optional<char> get() override {
    if (!file_) return std::nullopt;
    const int c = std::fgetc(file_);
    if (c != EOF) return static_cast<char>(c);
    if (std::ferror(file_)) throw IoError("read error on " + name_);
    return std::nullopt;
  }

  void close() noexcept override {
    if (!file_) return;
    if (owned_) std::fclose(file_);
    file_ = nullptr;
  }

 private:
  std::FILE* file_;
  std::string name_;
  bool owned_;
};

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

Value token_value(const std::string& text) {
  std::int64_t v;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec == std::errc() && ptr == end) return Value(v);
  return sym(text);
}

// Owns the byte source and guarantees a single close across exhaustion,
// read errors and stop (which destroys the reader).
class Reader {
 public:
  explicit Reader(std::unique_ptr<CharSource> source) : source_(std::move(source)) {}
  Reader(Reader&&) noexcept = default;
  Reader& operator=(Reader&&) noexcept = default;
  ~Reader() { close(); }

  std::optional<char> get() {
    if (!source_) return std::nullopt;
    try {
      auto c = source_->get();
      if (!c) close();
      return c;
    } catch (...) {
      close();
      throw;
    }
  }

  void close() noexcept {
    if (!source_) return;
    source_->close();
    source_.reset();
  }

 private:
  std::unique_ptr<CharSource> source_;
};

}  // namespace

std::unique_ptr<CharSource> open_file(const std::filesystem::path& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw IoError("cannot open " + path.string() + ": " + std::strerror(errno));
  return std::make_unique<FileSource>(f, path.string(), true);
}

std::unique_ptr<CharSource> standard_input() { return std::make_unique<FileSource>(stdin, "<stdin>", false); }

Generator token_reader(std::unique_ptr<CharSource> source) {
  return make_generator([reader = Reader(std::move(source))]() mutable -> std::optional<Value> {
    std::string text;
    for (;;) {
      auto c = reader.get();
      if (!c) break;
      if (is_blank(*c)) {
        if (!text.empty()) break;
        continue;
      }
      text += *c;
    }
    if (text.empty()) return std::nullopt;
    return token_value(text);
  });
}

Generator token_reader(const std::filesystem::path& path) { return token_reader(open_file(path)); }

Generator line_reader(std::unique_ptr<CharSource> source) {
  return make_generator([reader = Reader(std::move(source))]() mutable -> std::optional<Value> {
    std::string line;
    bool any = false;
    for (;;) {
      auto c = reader.get();
      if (!c) break;
      any = true;
      if (*c == '\n') {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return sym(line);
      }
      line += *c;
    }
    if (!any) return std::nullopt;
    return sym(line);
  });
}

Generator line_reader(const std::filesystem::path& path) { return line_reader(open_file(path)); }

}  // namespace lazystreams
