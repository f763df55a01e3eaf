#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>

#include "lazystreams/combinators.hpp"
#include "lazystreams/io.hpp"
#include "lazystreams/sources.hpp"
#include "test_support.hpp"

namespace lazystreams {
namespace {

using testing::ints;
using testing::syms;

namespace fs = std::filesystem;

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("lazystreams_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             std::to_string(counter++) + ".txt");
    std::ofstream(path_, std::ios::binary) << contents;
  }
  ~TempFile() { fs::remove(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct Stats {
  int closes = 0;
  std::size_t reads = 0;
};

// In-memory source that records reads and closes; can fail after `fail_at` bytes.
class Recording final : public CharSource {
 public:
  Recording(std::string text, std::shared_ptr<Stats> stats, std::size_t fail_at = std::string::npos)
      : text_(std::move(text)), stats_(std::move(stats)), fail_at_(fail_at) {}

  std::optional<char> get() override {
    if (pos_ == fail_at_) throw IoError("injected read failure");
    ++stats_->reads;
    if (pos_ == text_.size()) return std::nullopt;
    return text_[pos_++];
  }

  void close() noexcept override { ++stats_->closes; }

 private:
  std::string text_;
  std::shared_ptr<Stats> stats_;
  std::size_t fail_at_;
  std::size_t pos_ = 0;
};

TEST(TokenReaderTest, TokensFromFile) {
  TempFile f("1 2 foo\n");
  Generator g = token_reader(f.path());
  EXPECT_EQ(g.ask(), Value(1));
  EXPECT_EQ(g.ask(), Value(2));
  EXPECT_EQ(g.ask(), sym("foo"));
  EXPECT_EQ(g.ask(), std::nullopt);
  EXPECT_TRUE(g.is_done());
}

TEST(TokenReaderTest, RawTokensBecomeSymbols) {
  TempFile f("  -7\tHello 12x 3.5\r\n99999999999999999999  ");
  Generator g = token_reader(f.path());
  EXPECT_EQ(testing::texts(drain(g)), (std::vector<std::string>{"-7", "Hello", "12x", "3.5", "99999999999999999999"}));
}

TEST(TokenReaderTest, EmptyFileClosesHandle) {
  TempFile f("");
  Generator g = token_reader(f.path());
  EXPECT_EQ(g.ask(), std::nullopt);

  auto stats = std::make_shared<Stats>();
  Generator h = token_reader(std::make_unique<Recording>("", stats));
  EXPECT_EQ(h.ask(), std::nullopt);
  EXPECT_EQ(stats->closes, 1);
}

TEST(TokenReaderTest, MissingFileFailsAtConstruction) {
  EXPECT_THROW(token_reader(fs::path("/nonexistent/lazystreams/input.txt")), IoError);
  EXPECT_THROW(line_reader(fs::path("/nonexistent/lazystreams/input.txt")), IoError);
}

TEST(IoProperty, CloseOnceOnExhaustion) {
  auto stats = std::make_shared<Stats>();
  {
    Generator g = token_reader(std::make_unique<Recording>("a b c", stats));
    EXPECT_EQ(drain(g).size(), 3u);
    EXPECT_EQ(stats->closes, 1);
    EXPECT_EQ(g.ask(), std::nullopt);
    g.stop();
  }
  EXPECT_EQ(stats->closes, 1);
}

TEST(IoProperty, CloseOnceOnStop) {
  auto stats = std::make_shared<Stats>();
  Generator g = token_reader(std::make_unique<Recording>("1 2 3 4 5 6 7 8", stats));
  Generator first = take(2, std::move(g));
  EXPECT_EQ(drain(first), ints({1, 2}));
  first.stop();
  EXPECT_EQ(stats->closes, 1);
  EXPECT_LT(stats->reads, 6u);
}

TEST(IoProperty, CloseOnceOnError) {
  auto stats = std::make_shared<Stats>();
  Generator g = token_reader(std::make_unique<Recording>("10 20 30", stats, 4));
  EXPECT_EQ(g.ask(), Value(10));
  EXPECT_THROW(g.ask(), IoError);
  EXPECT_EQ(stats->closes, 1);
  EXPECT_EQ(g.ask(), std::nullopt);
  EXPECT_EQ(stats->closes, 1);
}

TEST(IoProperty, CloseOnceRandomized) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    auto stats = std::make_shared<Stats>();
    std::string text;
    for (int k = rng() % 12; k > 0; --k) text += std::to_string(rng() % 100) + (rng() % 2 ? " " : "\n");
    const std::size_t fail_at = rng() % 3 == 0 ? rng() % (text.size() + 1) : std::string::npos;
    {
      Generator g = rng() % 2 ? token_reader(std::make_unique<Recording>(text, stats, fail_at))
                              : line_reader(std::make_unique<Recording>(text, stats, fail_at));
      for (int asks = rng() % 15; asks > 0; --asks) {
        if (rng() % 8 == 0) g.stop();
        try {
          g.ask();
        } catch (const IoError&) {
        }
      }
      EXPECT_LE(stats->closes, 1);
    }
    EXPECT_EQ(stats->closes, 1);
  }
}

TEST(IoProperty, ScanPipelineMatchesEagerFold) {
  std::mt19937 rng(67);
  std::string text;
  std::vector<Value> sums;
  std::int64_t acc = 0;
  for (int i = 0; i < 500; ++i) {
    const std::int64_t x = static_cast<std::int64_t>(rng() % 2001) - 1000;
    text += std::to_string(x) + (i % 10 == 9 ? "\n" : " ");
    acc += x;
    sums.emplace_back(acc);
  }
  TempFile f(text);

  // Oracle from an eager read of the same file.
  std::ifstream in(f.path());
  std::vector<Value> eager;
  std::int64_t total = 0, x;
  while (in >> x) eager.emplace_back(total += x);
  ASSERT_EQ(eager, sums);

  Generator s = scan(fn::plus, Value(0), token_reader(f.path()));
  EXPECT_EQ(drain(s), sums);
}

TEST(LineReaderTest, Lines) {
  TempFile f("a\nb\n");
  Generator g = line_reader(f.path());
  EXPECT_EQ(drain(g), syms({"a", "b"}));
  TempFile unterminated("a");
  Generator h = line_reader(unterminated.path());
  EXPECT_EQ(drain(h), syms({"a"}));
  TempFile crlf("x y\r\n\r\nz\r");
  Generator c = line_reader(crlf.path());
  EXPECT_EQ(testing::texts(drain(c)), (std::vector<std::string>{"x y", "", "z\r"}));
}

TEST(LineReaderTest, StopAfterFirstLineCloses) {
  auto stats = std::make_shared<Stats>();
  Generator g = line_reader(std::make_unique<Recording>("first\nsecond\nthird\n", stats));
  EXPECT_EQ(g.ask(), sym("first"));
  EXPECT_EQ(stats->closes, 0);
  g.stop();
  EXPECT_EQ(stats->closes, 1);
  EXPECT_EQ(stats->reads, 6u);
}

}  // namespace
}  // namespace lazystreams
