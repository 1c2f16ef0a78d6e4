#include "bigramsey/canonical.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "bigramsey/errors.hpp"
#include "bigramsey/hyper.hpp"
#include "bigramsey/order_tree.hpp"
#include "bigramsey/sauer.hpp"

namespace bigramsey {

std::string to_string(Family family) {
  switch (family) {
    case Family::devlin: return "devlin";
    case Family::sauer: return "sauer";
    case Family::hyper: return "hyper";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "devlin") return Family::devlin;
  if (text == "sauer") return Family::sauer;
  if (text == "hyper") return Family::hyper;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

std::string to_string(TieReading reading) {
  return reading == TieReading::literal ? "literal" : "strict";
}

TieReading parse_tie_reading(const std::string& text) {
  if (text == "literal") return TieReading::literal;
  if (text == "strict") return TieReading::strict;
  throw std::invalid_argument("unknown tie reading '" + text + "'");
}

std::string CanonicalCode::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xF]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw MalformedInput("hex code has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw MalformedInput(std::string("non-hex character '") + c + "' in code");
  };
  std::string bytes(hex.size() / 2, '\0');
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    bytes[i] = static_cast<char>(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  }
  return CanonicalCode(std::move(bytes));
}

namespace {

class CodeWriter {
 public:
  explicit CodeWriter(char family) { out_.push_back(family); }

  void section(char tag, std::size_t items) {
    out_.push_back(tag);
    const auto n = static_cast<std::uint32_t>(items);
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<char>((n >> (8 * i)) & 0xFF));
  }
  void u16(std::uint32_t v) {
    if (v > 0xFFFF) throw InvariantViolation("canonical code: component exceeds u16");
    out_.push_back(static_cast<char>(v & 0xFF));
    out_.push_back(static_cast<char>(v >> 8));
  }
  CanonicalCode finish() { return CanonicalCode(std::move(out_)); }

 private:
  std::string out_;
};

class CodeReader {
 public:
  CodeReader(const CanonicalCode& code, char family) : bytes_(code.bytes()) {
    if (bytes_.empty() || bytes_[0] != family) throw MalformedInput("canonical code: wrong family tag");
    pos_ = 1;
  }

  std::size_t section(char tag) {
    need(5);
    if (bytes_[pos_] != tag) throw MalformedInput(std::string("canonical code: expected section ") + tag);
    std::uint32_t n = 0;
    for (int i = 0; i < 4; ++i) n |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes_[pos_ + 1 + i])) << (8 * i);
    pos_ += 5;
    return n;
  }
  std::uint32_t u16() {
    need(2);
    const auto lo = static_cast<unsigned char>(bytes_[pos_]);
    const auto hi = static_cast<unsigned char>(bytes_[pos_ + 1]);
    pos_ += 2;
    return static_cast<std::uint32_t>(lo | hi << 8);
  }
  void finish() const {
    if (pos_ != bytes_.size()) throw MalformedInput("canonical code: trailing bytes");
  }

 private:
  void need(std::size_t k) const {
    if (pos_ + k > bytes_.size()) throw MalformedInput("canonical code: truncated");
  }
  const std::string& bytes_;
  std::size_t pos_ = 0;
};

void write_levels_in_rank_order(CodeWriter& w, char tag, const LinearOrder& leq, const WellPreorder& dense) {
  w.section(tag, leq.size());
  for (std::size_t r = 0; r < leq.size(); ++r) w.u16(dense.level(leq.at(r)));
}

void validate(const DevlinShape& s) {
  if (s.pre.size() != s.leq.size()) throw InvariantViolation("devlin shape: order sizes differ");
  if (!s.pre.is_linear()) throw InvariantViolation("devlin shape: ⪯ is not linear");
  if (!is_compatible_pair(s.leq, s.pre)) throw InvariantViolation("devlin shape: not a compatible pair");
}

void validate(const SauerShape& s) {
  validate(DevlinShape{s.leq, s.pre});
  const auto tree = tree_from_orders(s.leq, s.pre);
  const auto leaves = tree->leaves();
  for (const auto& e : s.edges.items()) {
    for (Element x : e) {
      if (x >= s.size() || !tree->is_leaf(x)) throw InvariantViolation("sauer shape: edge off the leaves");
    }
  }
  if (!graph_compatible(*tree, s.pre, leaves, s.edges)) {
    throw InvariantViolation("sauer shape: graph not compatible with tree");
  }
}

void validate(const HyperShape& s) {
  const auto report = check_hyper_shape(s, TieReading::strict);
  if (!report.ok()) {
    throw InvariantViolation("hyper shape: condition " + std::to_string(report.violations.front().condition) +
                             " fails: " + report.violations.front().detail);
  }
  std::vector<std::uint32_t> levels;
  for (Element e : s.v0) levels.push_back(s.pre.level(e));
  if (!WellPreorder(levels).is_linear()) throw InvariantViolation("hyper shape: ⪯ on V0 is not linear");
}

}  // namespace

CanonicalCode canonical_code_unchecked(const DevlinShape& s) {
  CodeWriter w('D');
  write_levels_in_rank_order(w, 'L', s.leq, s.pre.densified());
  return w.finish();
}

CanonicalCode canonical_code_unchecked(const SauerShape& s) {
  CodeWriter w('S');
  write_levels_in_rank_order(w, 'L', s.leq, s.pre.densified());
  std::vector<Edge> ranked;
  for (const auto& e : s.edges.items()) ranked.push_back({s.leq.rank(e[0]), s.leq.rank(e[1])});
  const EdgeSet sorted(std::move(ranked));
  w.section('E', sorted.size());
  for (const auto& e : sorted.items()) {
    w.u16(e[0]);
    w.u16(e[1]);
  }
  return w.finish();
}

CanonicalCode canonical_code_unchecked(const HyperShape& s) {
  const auto dense = s.pre.densified();
  std::vector<std::uint32_t> pos0(s.universe(), 0), pos1(s.universe(), 0);
  for (std::uint32_t i = 0; i < s.v0.size(); ++i) pos0[s.v0[i]] = i;
  for (std::uint32_t i = 0; i < s.v1.size(); ++i) pos1[s.v1[i]] = i;

  CodeWriter w('H');
  w.section('A', s.v0.size());
  for (Element e : s.v0) w.u16(dense.level(e));
  w.section('B', s.v1.size());
  for (Element e : s.v1) w.u16(dense.level(e));

  const auto triples = s.triples.mapped(pos0);
  w.section('T', triples.size());
  for (const auto& t : triples.items()) {
    for (Element x : t) w.u16(x);
  }
  std::vector<std::array<std::uint32_t, 3>> links;
  for (const auto& l : s.links) links.push_back({pos0[l.leaf], pos0[l.node], pos1[l.vertex]});
  std::sort(links.begin(), links.end());
  w.section('P', links.size());
  for (const auto& l : links) {
    for (auto x : l) w.u16(x);
  }
  return w.finish();
}

CanonicalCode canonical_code(const DevlinShape& s) {
  validate(s);
  return canonical_code_unchecked(s);
}

CanonicalCode canonical_code(const SauerShape& s) {
  validate(s);
  return canonical_code_unchecked(s);
}

CanonicalCode canonical_code(const HyperShape& s) {
  validate(s);
  return canonical_code_unchecked(s);
}

Family family_of(const CanonicalCode& code) {
  if (code.bytes().empty()) throw MalformedInput("empty canonical code");
  switch (code.bytes()[0]) {
    case 'D': return Family::devlin;
    case 'S': return Family::sauer;
    case 'H': return Family::hyper;
    default: throw MalformedInput("unknown canonical code family tag");
  }
}

namespace {

WellPreorder read_levels(CodeReader& r, char tag) {
  const auto m = r.section(tag);
  std::vector<std::uint32_t> levels(m);
  for (auto& l : levels) l = r.u16();
  return WellPreorder(std::move(levels));
}

void check_range(std::uint32_t x, std::size_t bound) {
  if (x >= bound) throw MalformedInput("canonical code: index out of range");
}

}  // namespace

DevlinShape decode_devlin(const CanonicalCode& code) {
  CodeReader r(code, 'D');
  auto pre = read_levels(r, 'L');
  r.finish();
  return {LinearOrder::identity(pre.size()), std::move(pre)};
}

SauerShape decode_sauer(const CanonicalCode& code) {
  CodeReader r(code, 'S');
  auto pre = read_levels(r, 'L');
  const auto k = r.section('E');
  std::vector<Edge> edges(k);
  for (auto& e : edges) {
    e = {r.u16(), r.u16()};
    check_range(e[0], pre.size());
    check_range(e[1], pre.size());
    if (e[0] == e[1]) throw MalformedInput("canonical code: loop edge");
  }
  r.finish();
  const auto n = pre.size();
  return {LinearOrder::identity(n), std::move(pre), EdgeSet(std::move(edges))};
}

HyperShape decode_hyper(const CanonicalCode& code) {
  CodeReader r(code, 'H');
  const auto a = r.section('A');
  std::vector<std::uint32_t> levels(a);
  for (auto& l : levels) l = r.u16();
  const auto b = r.section('B');
  for (std::uint32_t i = 0; i < b; ++i) levels.push_back(r.u16());

  HyperShape s;
  s.pre = WellPreorder(std::move(levels));
  for (Element i = 0; i < a; ++i) s.v0.push_back(i);
  for (Element i = 0; i < b; ++i) s.v1.push_back(a + i);

  std::vector<Triple> triples(r.section('T'));
  for (auto& t : triples) {
    for (auto& x : t) {
      x = r.u16();
      check_range(x, a);
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw MalformedInput("canonical code: degenerate triple");
  }
  s.triples = TripleSet(std::move(triples));
  const auto p = r.section('P');
  for (std::uint32_t i = 0; i < p; ++i) {
    PairLink l{r.u16(), r.u16(), r.u16()};
    check_range(l.leaf, a);
    check_range(l.node, a);
    check_range(l.vertex, b);
    l.vertex += a;
    s.links.push_back(l);
  }
  r.finish();
  return s;
}

DevlinShape normalized(const DevlinShape& s) {
  std::vector<std::uint32_t> levels(s.size());
  for (std::size_t r = 0; r < s.size(); ++r) levels[r] = s.pre.level(s.leq.at(r));
  return {LinearOrder::identity(s.size()), WellPreorder(std::move(levels))};
}

SauerShape normalized(const SauerShape& s) {
  auto d = normalized(DevlinShape{s.leq, s.pre});
  std::vector<Element> image(s.leq.ranks().begin(), s.leq.ranks().end());
  return {std::move(d.leq), std::move(d.pre), s.edges.mapped(image)};
}

HyperShape normalized(const HyperShape& s) {
  std::vector<Element> image(s.universe(), kNoElement);
  Element next = 0;
  for (Element e : s.v0) image[e] = next++;
  for (Element e : s.v1) image[e] = next++;
  HyperShape out;
  std::vector<std::uint32_t> levels(next, 0);
  for (Element e = 0; e < s.universe(); ++e) {
    if (image[e] != kNoElement) levels[image[e]] = s.pre.level(e);
  }
  out.pre = WellPreorder(std::move(levels));
  for (Element i = 0; i < s.v0.size(); ++i) out.v0.push_back(i);
  for (Element i = 0; i < s.v1.size(); ++i) out.v1.push_back(static_cast<Element>(s.v0.size()) + i);
  out.triples = s.triples.mapped(image);
  for (const auto& l : s.links) out.links.push_back({image[l.leaf], image[l.node], image[l.vertex]});
  std::sort(out.links.begin(), out.links.end());
  return out;
}

}  // namespace bigramsey
