#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "walkerpc/corpus.hpp"
#include "walkerpc/error.hpp"
#include "walkerpc/manifest.hpp"

namespace walkerpc {
namespace {

constexpr const char* kFull = R"m(# every key
name = "full"
epsilon = 1
const.C = 3/2
define.w = "C*z"
define.v = "w + 1"
f = "x^2 + v"
xi1 = "0"
xi2 = "1"
xi3 = "0"
domain.x = [-2, 2.5]
domain.y = [0.5, 2]
require_positive = ["y"]
require_nonzero = ["y", "x + 3"]
samples = 16
seed = 7
tol = 1e-8
)m";

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    parse_manifest(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return {0, 0};
}

TEST(Manifest, ParsesEveryKey) {
  const Manifest m = parse_manifest(kFull);
  EXPECT_EQ(m.name, "full");
  EXPECT_EQ(m.epsilon, 1);
  EXPECT_EQ(m.constants.at("C"), Rational(3, 2));
  ASSERT_EQ(m.definitions_text.size(), 2u);
  EXPECT_DOUBLE_EQ(m.f.eval({1.0, 1.0, 2.0}), 1.0 + 3.0 + 1.0);
  EXPECT_DOUBLE_EQ(m.domain.box[Axis::X].lo, -2.0);
  EXPECT_DOUBLE_EQ(m.domain.box[Axis::X].hi, 2.5);
  EXPECT_DOUBLE_EQ(m.domain.box[Axis::Z].lo, -1.0);
  EXPECT_EQ(m.domain.require_positive.size(), 1u);
  EXPECT_EQ(m.domain.require_nonzero.size(), 2u);
  EXPECT_EQ(m.sampling.samples, 16);
  EXPECT_EQ(m.sampling.seed, 7u);
  EXPECT_DOUBLE_EQ(m.sampling.tol, 1e-8);
}

TEST(Manifest, Defaults) {
  const Manifest m = parse_manifest("f = \"x\"\nxi1 = \"0\"\nxi2 = \"1\"\nxi3 = \"0\"\n");
  EXPECT_EQ(m.epsilon, 1);
  EXPECT_EQ(m.sampling.samples, 64);
  EXPECT_EQ(m.sampling.seed, 42u);
  EXPECT_DOUBLE_EQ(m.sampling.tol, 1e-9);
  EXPECT_DOUBLE_EQ(m.domain.box[Axis::Y].lo, -1.0);
}

TEST(Manifest, NegativeEpsilonParses) {
  const Manifest m = parse_manifest("epsilon = -1\nf = \"x\"\nxi1 = \"0\"\nxi2 = \"1\"\nxi3 = \"0\"\n");
  EXPECT_EQ(m.epsilon, -1);
}

TEST(Manifest, ErrorsCarryLineAndColumn) {
  const std::string tail = "xi1 = \"0\"\nxi2 = \"1\"\nxi3 = \"0\"\n";
  EXPECT_EQ(error_position("f = \"x +* y\"\n" + tail), (std::pair<std::size_t, std::size_t>{1, 9}));
  EXPECT_EQ(error_position("\nf = \"x + w\"\n" + tail), (std::pair<std::size_t, std::size_t>{2, 10}));
  EXPECT_EQ(error_position("f = \"x\"\ncolour = 3\n" + tail), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(error_position("f = \"x\"\nf = \"y\"\n" + tail), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(error_position("f = \"x\n" + tail), (std::pair<std::size_t, std::size_t>{1, 6}));
  EXPECT_EQ(error_position("epsilon = 2\nf = \"x\"\n" + tail), (std::pair<std::size_t, std::size_t>{1, 11}));
  EXPECT_EQ(error_position("samples = 1.5\nf = \"x\"\n" + tail), (std::pair<std::size_t, std::size_t>{1, 11}));
  EXPECT_EQ(error_position("domain.x = [1, 0]\nf = \"x\"\n" + tail), (std::pair<std::size_t, std::size_t>{1, 12}));
  EXPECT_EQ(error_position("f = x\n" + tail), (std::pair<std::size_t, std::size_t>{1, 5}));
  EXPECT_EQ(error_position("const.x = 1\nf = \"x\"\n" + tail), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(error_position("f = \"x\" extra\n" + tail), (std::pair<std::size_t, std::size_t>{1, 9}));
}

TEST(Manifest, MissingRequiredKeyPointsPastTheEnd) {
  EXPECT_EQ(error_position("f = \"x\"\nxi1 = \"0\"\nxi2 = \"1\""), (std::pair<std::size_t, std::size_t>{4, 1}));
}

TEST(Manifest, UnboundIdentifierIsReported) {
  try {
    parse_manifest("f = \"k*x\"\nxi1 = \"0\"\nxi2 = \"1\"\nxi3 = \"0\"\n");
    FAIL() << "expected UnboundIdentifierError";
  } catch (const UnboundIdentifierError& e) {
    EXPECT_EQ(e.name(), "k");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 6u);
  }
}

TEST(Manifest, DefinitionsSeeOnlyEarlierDefinitions) {
  EXPECT_THROW(parse_manifest("define.a = \"b\"\ndefine.b = \"1\"\nf = \"a\"\nxi1 = \"0\"\nxi2 = \"1\"\nxi3 = \"0\"\n"),
               UnboundIdentifierError);
}

TEST(Manifest, CanonicalTextRoundTrips) {
  const Manifest m = parse_manifest(kFull);
  const std::string text = to_text(m);
  const Manifest back = parse_manifest(text);
  EXPECT_EQ(to_text(back), text);
  EXPECT_EQ(back.constants, m.constants);
  EXPECT_EQ(back.definitions_text, m.definitions_text);
  EXPECT_EQ(back.require_nonzero_text, m.require_nonzero_text);
  EXPECT_DOUBLE_EQ(back.domain.box[Axis::Y].lo, 0.5);
}

TEST(Manifest, EscapedQuotesRoundTrip) {
  Manifest m = parse_manifest("name = \"a \\\"b\\\" \\\\ c\"\nf = \"x\"\nxi1 = \"0\"\nxi2 = \"1\"\nxi3 = \"0\"\n");
  EXPECT_EQ(m.name, "a \"b\" \\ c");
  EXPECT_EQ(parse_manifest(to_text(m)).name, m.name);
}

TEST(Manifest, LoadsFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "walkerpc_manifest_test.manifest";
  {
    std::ofstream out(path);
    out << kFull;
  }
  EXPECT_EQ(load_manifest(path).name, "full");
  std::filesystem::remove(path);
  EXPECT_THROW(load_manifest(path), InputError);
}

TEST(Corpus, ShipsEightParsableFixtures) {
  ASSERT_EQ(corpus().size(), 8u);
  for (const Fixture& f : corpus()) {
    EXPECT_FALSE(f.description.empty());
    EXPECT_EQ(f.description.find('\n'), std::string::npos);
    EXPECT_EQ(parse_manifest(f.manifest).name, f.name);
  }
  EXPECT_THROW(find_fixture("no-such-fixture"), InputError);
}

}  // namespace
}  // namespace walkerpc
