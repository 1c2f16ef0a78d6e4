#include "bigramsey/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"

#include "bigramsey/errors.hpp"
#include "bigramsey/order_tree.hpp"

namespace bigramsey {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::size_t parse_index(std::string_view word, std::size_t line_no) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || end != word.data() + word.size()) {
    throw MalformedInput("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                         std::string(word) + "'");
  }
  return value;
}

}  // namespace

Structure parse_structure(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::string> kind;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<Triple> triples;
  std::set<std::vector<std::size_t>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    auto words = split_words(std::string_view(line).substr(0, hash));
    if (words.empty()) continue;
    auto fail = [&](const std::string& what) { throw MalformedInput("line " + std::to_string(line_no) + ": " + what); };
    if (!kind) {
      if (words.size() != 2 || (words[0] != "graph" && words[0] != "hypergraph3")) {
        fail("expected header 'graph n' or 'hypergraph3 n'");
      }
      kind = std::string(words[0]);
      n = parse_index(words[1], line_no);
      if (n == 0) fail("structure needs at least one vertex");
      if (n > 0xFFFF) fail("structure too large");
      continue;
    }
    const std::size_t arity = *kind == "graph" ? 2 : 3;
    if (words.size() != arity) fail("expected " + std::to_string(arity) + " vertex indices");
    std::vector<std::size_t> item;
    for (auto w : words) {
      const auto v = parse_index(w, line_no);
      if (v >= n) fail("vertex " + std::to_string(v) + " out of range");
      item.push_back(v);
    }
    std::sort(item.begin(), item.end());
    if (std::adjacent_find(item.begin(), item.end()) != item.end()) fail("repeated vertex");
    if (!seen.insert(item).second) fail("duplicate " + std::string(arity == 2 ? "edge" : "triple"));
    if (arity == 2) {
      edges.push_back({static_cast<Element>(item[0]), static_cast<Element>(item[1])});
    } else {
      triples.push_back({static_cast<Element>(item[0]), static_cast<Element>(item[1]), static_cast<Element>(item[2])});
    }
  }
  if (!kind) throw MalformedInput("missing header line");
  if (*kind == "graph") return Graph::make(n, EdgeSet(std::move(edges)));
  return Hypergraph3::make(n, TripleSet(std::move(triples)));
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

Structure load_structure(const std::filesystem::path& path) {
  const auto text = read_file(path);
  try {
    return parse_structure(text);
  } catch (const MalformedInput& e) {
    throw MalformedInput(path.string() + ": " + e.what());
  }
}

std::string input_digest(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = kDigits[h & 0xF];
  return out;
}

std::string catalog_to_json(const Catalog& catalog, bool with_shapes) {
  nlohmann::ordered_json j;
  j["family"] = to_string(catalog.family);
  nlohmann::ordered_json params;
  params["n"] = catalog.n;
  if (!catalog.input.empty()) {
    params["input_digest"] = input_digest(catalog.input);
    params["input"] = catalog.input;
  }
  j["parameters"] = params;
  j["count"] = catalog.count.str();
  if (with_shapes && catalog.retained) {
    auto shapes = nlohmann::ordered_json::array();
    for (const auto& c : catalog.codes) shapes.push_back(c.to_hex());
    j["shapes"] = shapes;
  }
  j["tool_version"] = kToolVersion;
  j["settings"] = catalog.settings;
  return j.dump(2) + "\n";
}

Catalog catalog_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("catalog: ") + e.what());
  }
  Catalog c;
  try {
    c.family = parse_family(j.at("family").get<std::string>());
    const auto& params = j.at("parameters");
    c.n = params.at("n").get<std::size_t>();
    if (params.contains("input")) {
      c.input = params["input"].get<std::string>();
      if (params.contains("input_digest") && params["input_digest"].get<std::string>() != input_digest(c.input)) {
        throw MalformedInput("catalog: input digest mismatch");
      }
    }
    const auto count = j.at("count").get<std::string>();
    if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos) {
      throw MalformedInput("catalog: count is not a decimal string");
    }
    c.count = BigInt(count);
    if (j.contains("shapes")) {
      c.retained = true;
      for (const auto& s : j["shapes"]) {
        auto code = CanonicalCode::from_hex(s.get<std::string>());
        if (family_of(code) != c.family) throw MalformedInput("catalog: shape of another family");
        c.codes.push_back(std::move(code));
      }
      std::sort(c.codes.begin(), c.codes.end());
      if (std::adjacent_find(c.codes.begin(), c.codes.end()) != c.codes.end()) {
        throw MalformedInput("catalog: duplicate shape");
      }
      if (c.count != c.codes.size()) throw MalformedInput("catalog: count differs from number of shapes");
    }
    if (j.contains("settings")) c.settings = j["settings"].get<std::map<std::string, std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("catalog: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(std::string("catalog: ") + e.what());
  }
  return c;
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& path, bool with_shapes) {
  write_file(path, catalog_to_json(catalog, with_shapes));
}

Catalog load_catalog(const std::filesystem::path& path) { return catalog_from_json(read_file(path)); }

namespace {

// Writes one tree: nodes at (x offset + ≤ rank, ⪯ level), parent edges solid.
void emit_tree(std::ostringstream& out, const std::vector<Element>& members, const WellPreorder& pre, double x0,
               const std::vector<std::string>& labels) {
  std::vector<std::uint32_t> local;
  for (Element e : members) local.push_back(pre.level(e));
  const WellPreorder sub = WellPreorder(local).densified();
  for (std::size_t i = 0; i < members.size(); ++i) {
    out << "  n" << members[i] << " [label=\"" << labels[members[i]] << "\", pos=\"" << (x0 + static_cast<double>(i))
        << "," << sub.level(static_cast<Element>(i)) << "!\"];\n";
  }
  const auto tree = tree_from_orders(LinearOrder::identity(members.size()), sub);
  if (!tree) return;
  for (Element i = 0; i < members.size(); ++i) {
    if (tree->parent(i) != kNoElement) out << "  n" << members[tree->parent(i)] << " -- n" << members[i] << ";\n";
  }
}

}  // namespace

std::string shape_to_dot(Family family, const CanonicalCode& code, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  out << "  layout=neato;\n  node [shape=circle, fontsize=10, width=0.3, fixedsize=true];\n";
  if (family == Family::devlin || family == Family::sauer) {
    WellPreorder pre;
    EdgeSet edges;
    if (family == Family::devlin) {
      pre = decode_devlin(code).pre;
    } else {
      const auto s = decode_sauer(code);
      pre = s.pre;
      edges = s.edges;
    }
    std::vector<Element> members(pre.size());
    std::vector<std::string> labels(pre.size());
    for (Element e = 0; e < pre.size(); ++e) {
      members[e] = e;
      labels[e] = std::to_string(e);
    }
    emit_tree(out, members, pre, 0, labels);
    for (const auto& e : edges.items()) {
      out << "  n" << e[0] << " -- n" << e[1] << " [style=dashed, color=blue, constraint=false];\n";
    }
  } else {
    const auto s = decode_hyper(code);
    std::vector<std::string> labels(s.universe());
    for (Element e : s.v0) labels[e] = std::to_string(e);
    for (std::size_t i = 0; i < s.v1.size(); ++i) labels[s.v1[i]] = "q" + std::to_string(i);
    for (const auto& l : s.links) labels[l.vertex] = std::to_string(l.leaf) + "," + std::to_string(l.node);
    emit_tree(out, s.v0, s.pre, 0, labels);
    emit_tree(out, s.v1, s.pre, static_cast<double>(s.v0.size()) + 1.0, labels);
    for (const auto& l : s.links) {
      out << "  n" << l.vertex << " -- n" << l.leaf << " [style=dotted];\n";
    }
    std::size_t k = 0;
    for (const auto& t : s.triples.items()) {
      out << "  h" << k << " [shape=point, width=0.08, pos=\"" << (static_cast<double>(k) * 0.5) << ",-1!\"];\n";
      for (Element v : t) out << "  h" << k << " -- n" << v << " [style=dashed, color=blue];\n";
      ++k;
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bigramsey
