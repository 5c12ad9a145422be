#include "amech/state_io.hpp"

#include <charconv>
#include <cstdio>
#include <unordered_set>

namespace amech {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }
  // A trailing newline does not open another line.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string line_prefix(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

ParseError::ParseError(Kind kind, std::size_t line, const std::string& what)
    : std::runtime_error(line_prefix(line) + what), kind_(kind), line_(line) {}

Configuration parse_config(std::string_view text) {
  using K = ParseError::Kind;
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(K::kMalformed, 1, "missing 'p=<prime>' header");

  std::string_view header = lines[0];
  std::int64_t p = 0;
  if (!header.starts_with("p=") || !parse_int(header.substr(2), p))
    throw ParseError(K::kMalformed, 1, "expected 'p=<prime>' header");
  if (p < 2 || p > FieldContext::kMaxPrime || !is_prime(static_cast<std::uint64_t>(p)))
    throw ParseError(K::kNonPrime, 1, "p=" + std::to_string(p) + " is not a supported prime");

  std::vector<Particle> particles;
  std::unordered_set<std::int64_t> labels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    std::string_view line = lines[i];
    if (line.empty() || line.front() == '#') continue;

    std::int64_t v[5];
    std::size_t n = 0, start = 0;
    bool ok = true;
    while (ok) {
      std::size_t sp = line.find(' ', start);
      std::string_view tok = line.substr(start, sp == std::string_view::npos ? sp : sp - start);
      ok = n < 5 && parse_int(tok, v[n]);
      if (ok) ++n;
      if (sp == std::string_view::npos) break;
      start = sp + 1;
    }
    if (!ok || n != 5)
      throw ParseError(K::kMalformed, lineno, "expected '<label> <x> <y> <vx> <vy>'");

    for (int k = 1; k < 5; ++k)
      if (v[k] < 0 || v[k] >= p)
        throw ParseError(K::kOutOfRange, lineno,
                         "coordinate " + std::to_string(v[k]) + " outside [0, " +
                             std::to_string(p - 1) + "]");
    if (!labels.insert(v[0]).second)
      throw ParseError(K::kDuplicateLabel, lineno, "duplicate label " + std::to_string(v[0]));

    auto r = [](std::int64_t x) { return Residue{static_cast<std::uint32_t>(x)}; };
    particles.push_back(Particle{v[0], {r(v[1]), r(v[2])}, {r(v[3]), r(v[4])}});
  }
  return Configuration(static_cast<std::uint32_t>(p), std::move(particles));
}

std::string serialize_config(const Configuration& c) {
  std::string out = "p=" + std::to_string(c.prime()) + "\n";
  for (const Particle& q : c.particles()) {
    out += std::to_string(q.label);
    for (Residue r : {q.pos.x, q.pos.y, q.vel.x, q.vel.y}) {
      out += ' ';
      out += std::to_string(r.value);
    }
    out += '\n';
  }
  return out;
}

std::string render_board(const Configuration& c) {
  const std::size_t p = c.prime();
  std::vector<std::uint32_t> counts(p * p, 0);
  for (const Particle& q : c.particles()) ++counts[q.pos.y.value * p + q.pos.x.value];

  std::string out;
  out.reserve(p * (p + 1));
  for (std::size_t y = 0; y < p; ++y) {
    for (std::size_t x = 0; x < p; ++x) {
      const std::uint32_t k = counts[y * p + x];
      if (k > '~' - '0')
        throw std::range_error("cell (" + std::to_string(x) + "," + std::to_string(y) +
                               ") holds " + std::to_string(k) + " particles, too many to render");
      out += k == 0 ? '.' : static_cast<char>('0' + k);
    }
    out += '\n';
  }
  return out;
}

std::string emit_entropy_csv(const std::vector<EntropySample>& series) {
  std::string out = "step,entropy_bits\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (i > 0 && series[i].step <= series[i - 1].step)
      throw std::invalid_argument("entropy series steps must be strictly increasing");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%lld,%.6f\n", static_cast<long long>(series[i].step),
                  series[i].entropy.bits);
    out += buf;
  }
  return out;
}

BlockCounts parse_block_counts(std::string_view text, const Apparatus& a) {
  const std::uint32_t g = a.grid_dim();
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::uint64_t> row;
  std::string tok;
  auto flush_tok = [&] {
    if (tok.empty()) return;
    std::int64_t v = 0;
    if (!parse_int(tok, v) || v < 0)
      throw std::invalid_argument("block count '" + tok + "' is not a nonnegative integer");
    row.push_back(static_cast<std::uint64_t>(v));
    tok.clear();
  };
  auto flush_row = [&] {
    flush_tok();
    if (!row.empty()) rows.push_back(std::move(row));
    row.clear();
  };
  for (char ch : text) {
    if (ch == '\n' || ch == ';') flush_row();
    else if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') flush_tok();
    else tok += ch;
  }
  flush_row();

  if (rows.size() != g)
    throw std::invalid_argument("expected " + std::to_string(g) + " block rows, got " +
                                std::to_string(rows.size()));
  BlockCounts m(g);
  for (std::uint32_t by = 0; by < g; ++by) {
    if (rows[by].size() != g)
      throw std::invalid_argument("block row " + std::to_string(by) + " has " +
                                  std::to_string(rows[by].size()) + " entries, expected " +
                                  std::to_string(g));
    for (std::uint32_t bx = 0; bx < g; ++bx) m.at(bx, by) = rows[by][bx];
  }
  return m;
}

std::string format_block_counts(const BlockCounts& m) {
  std::string out;
  for (std::uint32_t by = 0; by < m.grid_dim(); ++by) {
    for (std::uint32_t bx = 0; bx < m.grid_dim(); ++bx) {
      if (bx) out += ' ';
      out += std::to_string(m.at(bx, by));
    }
    out += '\n';
  }
  return out;
}

}  // namespace amech
