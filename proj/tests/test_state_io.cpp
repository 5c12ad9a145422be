#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "amech/fixtures.hpp"
#include "amech/random.hpp"
#include "amech/state_io.hpp"
#include "oracle.hpp"

using namespace amech;

namespace {

ParseError::Kind parse_error_kind(const std::string& text, std::size_t* line = nullptr) {
  try {
    parse_config(text);
  } catch (const ParseError& e) {
    if (line) *line = e.line();
    return e.kind();
  }
  FAIL("expected a parse error for: " << text);
  return ParseError::Kind::kMalformed;
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("fixtures embed the shipped files") {
  CHECK(fixture_text("a0") == oracle::read_file(AMECH_SOURCE_DIR "/data/fixtures/config-a0.txt"));
  CHECK(fixture_text("a1") == oracle::read_file(AMECH_SOURCE_DIR "/data/fixtures/config-a1.txt"));
  CHECK(fixture("a0").size() == 81);
  CHECK(fixture("a1").size() == 81);
  CHECK(fixture("a0").particles()[0].vel == Vec2{Residue{14}, Residue{15}});
  CHECK_THROWS_AS(fixture("a2"), std::invalid_argument);
}

TEST_CASE("parse and serialize") {
  const auto a0 = fixture("a0");
  CHECK(parse_config(serialize_config(a0)) == a0);

  const auto empty = parse_config("p=19\n");
  CHECK(empty.empty());
  CHECK(empty.prime() == 19);

  const auto c = parse_config("p=7\r\n# comment\r\n\r\n3 1 2 3 4\r\n-5 0 0 6 6\r\n");
  REQUIRE(c.size() == 2);
  CHECK(c.particles()[0].label == 3);
  CHECK(c.particles()[1].label == -5);
  CHECK(c.particles()[1].vel == Vec2{Residue{6}, Residue{6}});
  CHECK(serialize_config(c) == "p=7\n3 1 2 3 4\n-5 0 0 6 6\n");
}

TEST_CASE("parse errors name their kind and line") {
  using K = ParseError::Kind;
  std::size_t line = 0;
  CHECK(parse_error_kind("p=19\n0 19 0 0 0\n", &line) == K::kOutOfRange);
  CHECK(line == 2);
  CHECK(parse_error_kind("p=19\n0 0 0 0 -1\n") == K::kOutOfRange);
  CHECK(parse_error_kind("p=19\n0 1 1 1 1\n# x\n0 2 2 2 2\n", &line) == K::kDuplicateLabel);
  CHECK(line == 4);
  CHECK(parse_error_kind("p=21\n", &line) == K::kNonPrime);
  CHECK(line == 1);
  CHECK(parse_error_kind("p=1\n") == K::kNonPrime);
  CHECK(parse_error_kind("") == K::kMalformed);
  CHECK(parse_error_kind("q=19\n") == K::kMalformed);
  CHECK(parse_error_kind("p=19 \n") == K::kMalformed);
  CHECK(parse_error_kind("# header must come first\np=19\n") == K::kMalformed);
  CHECK(parse_error_kind("p=19\n0 1 2 3\n", &line) == K::kMalformed);
  CHECK(line == 2);
  CHECK(parse_error_kind("p=19\n0 1 2 3 4 5\n") == K::kMalformed);
  CHECK(parse_error_kind("p=19\n0  1 2 3 4\n") == K::kMalformed);
  CHECK(parse_error_kind("p=19\n0 1 2 3 4 \n") == K::kMalformed);
  CHECK(parse_error_kind("p=19\n0 1 x 3 4\n") == K::kMalformed);
  CHECK(parse_error_kind("p=19\n0\t1 2 3 4\n") == K::kMalformed);

  try {
    parse_config("p=19\n\n0 1 2 3 99\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("serialization round trip on random configurations") {
  Rng rng(77);
  for (int i = 0; i < 50; ++i) {
    const std::uint32_t p = i % 2 ? 5 : 19;
    const auto c = random_configuration(p, static_cast<std::size_t>(rng.below(90)), rng);
    const auto text = serialize_config(c);
    REQUIRE(parse_config(text) == c);
    REQUIRE(serialize_config(parse_config(text)) == text);
  }
}

TEST_CASE("board rendering") {
  const auto panels = oracle::figure1_panels();
  const auto a0 = fixture("a0");
  CHECK(render_board(a0) == panels.at(0));

  std::string dots;
  for (int i = 0; i < 19; ++i) dots += std::string(19, '.') + "\n";
  CHECK(render_board(Configuration(19)) == dots);

  // Row is y, column is x.
  const auto one = render_board(Configuration(5, {Particle{0, {Residue{3}, Residue{1}}, {}}}));
  CHECK(one == ".....\n...1.\n.....\n.....\n.....\n");

  auto stack = [](std::uint32_t k) {
    std::vector<Particle> ps;
    for (std::uint32_t i = 0; i < k; ++i) ps.push_back(Particle{i, {Residue{2}, Residue{0}}, {}});
    return Configuration(19, std::move(ps));
  };
  CHECK(render_board(stack(9)).substr(0, 4) == "..9.");
  CHECK(render_board(stack(10)).substr(0, 4) == "..:.");
  CHECK(render_board(stack(78)).substr(0, 4) == "..~.");
  CHECK_THROWS_AS(render_board(stack(79)), std::range_error);

  Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    const std::uint32_t p = i % 3 ? 19 : 7;
    const auto board = render_board(random_configuration(p, 60, rng));
    std::istringstream in(board);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
      ++lines;
      REQUIRE(line.size() == p);
    }
    REQUIRE(lines == p);
  }
}

TEST_CASE("entropy CSV") {
  CHECK(emit_entropy_csv({}) == "step,entropy_bits\n");
  CHECK(emit_entropy_csv({{0, EntropyBits{1179.87}}}) == "step,entropy_bits\n0,1179.870000\n");
  const std::vector<EntropySample> s{{-2, {1.5}}, {-1, {2.25}}, {0, {3.0}}, {4, {1234.5678901}}};
  const auto csv = emit_entropy_csv(s);
  CHECK(count_lines(csv) == s.size() + 1);
  CHECK(csv.find("-2,1.500000\n") != std::string::npos);
  CHECK(csv.find("4,1234.567890\n") != std::string::npos);
  CHECK_THROWS_AS(emit_entropy_csv({{1, {0}}, {1, {0}}}), std::invalid_argument);
  CHECK_THROWS_AS(emit_entropy_csv({{2, {0}}, {1, {0}}}), std::invalid_argument);
}

TEST_CASE("block count text") {
  const Apparatus a(19);
  const auto m = parse_block_counts(
      "9,9,9,0,0,0,0;9,9,9,0,0,0,0;9,9,9,0,0,0,0;0,0,0,0,0,0,0;0,0,0,0,0,0,0;0,0,0,0,0,0,0;"
      "0,0,0,0,0,0,0",
      a);
  CHECK(m.total() == 81);
  CHECK(m.at(2, 2) == 9);
  CHECK(parse_block_counts(format_block_counts(m), a) == m);

  BlockCounts asym(7);
  asym.at(5, 1) = 3;
  const auto text = format_block_counts(asym);
  CHECK(text.substr(0, 28) == "0 0 0 0 0 0 0\n0 0 0 0 0 3 0\n");
  CHECK(parse_block_counts(text, a) == asym);

  CHECK_THROWS_AS(parse_block_counts("1 2 3", a), std::invalid_argument);
  CHECK_THROWS_AS(parse_block_counts("0 0 0 0 0 0 0;0 0 0 0 0 0;0 0 0 0 0 0 0;0 0 0 0 0 0 0;"
                                     "0 0 0 0 0 0 0;0 0 0 0 0 0 0;0 0 0 0 0 0 0",
                                     a),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_block_counts("-1 0 0 0 0 0 0;0 0 0 0 0 0 0;0 0 0 0 0 0 0;0 0 0 0 0 0 0;"
                                     "0 0 0 0 0 0 0;0 0 0 0 0 0 0;0 0 0 0 0 0 0",
                                     a),
                  std::invalid_argument);
}
