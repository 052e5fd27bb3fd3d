#include "obstructionist/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace obstructionist::io {

namespace {

constexpr int kBias = 63;

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(kBias + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(kBias + ((n >> shift) & 63)));
  }
}

int bits_for(std::uint64_t n) {
  int k = 0;
  for (std::uint64_t i = n > 0 ? n - 1 : 0; i > 0; i >>= 1) ++k;
  return k;
}

class BitWriter {
 public:
  void put(std::uint64_t value, int width) {
    for (int i = width - 1; i >= 0; --i) {
      acc_ = static_cast<std::uint8_t>((acc_ << 1) | ((value >> i) & 1u));
      if (++used_ == 6) flush();
    }
  }
  int used() const { return used_; }
  void pad(bool zero_first) {
    if (used_ == 0) return;
    int left = 6 - used_;
    if (zero_first) {
      put(0, 1);
      --left;
    }
    if (left > 0) put((1u << left) - 1, left);
  }
  std::string take() { return std::move(out_); }

 private:
  void flush() {
    out_.push_back(static_cast<char>(kBias + acc_));
    acc_ = 0;
    used_ = 0;
  }
  std::string out_;
  std::uint8_t acc_ = 0;
  int used_ = 0;
};

}  // namespace

std::string to_sparse6(const MultiGraph& g) {
  const std::uint64_t n = g.vertex_count();
  std::string out = ":";
  append_size(out, n);
  const int k = bits_for(n);

  // (larger endpoint, smaller endpoint), one entry per edge
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(g.edge_count());
  for (const Edge& e : g.edges()) pairs.emplace_back(std::max(e.u, e.v), std::min(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());

  BitWriter bits;
  std::uint64_t last = 0;
  for (auto [j, i] : pairs) {
    if (j == last) {
      bits.put(0, 1);
      bits.put(i, k);
    } else {
      bits.put(1, 1);
      if (j > last + 1) {
        bits.put(j, k);
        bits.put(0, 1);
      }
      bits.put(i, k);
      last = j;
    }
  }
  const int remaining = bits.used() == 0 ? 0 : 6 - bits.used();
  const bool special = k < remaining && last + 2 == n && n == (std::uint64_t{1} << k);
  bits.pad(special);
  return out + bits.take();
}

MultiGraph from_sparse6(std::string_view text) {
  constexpr std::string_view kHeader = ">>sparse6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.empty() || text.front() != ':') throw FormatError("sparse6: missing ':' prefix");
  text.remove_prefix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw FormatError("sparse6: truncated size field");
    int c = static_cast<unsigned char>(text[i]) - kBias;
    if (c < 0 || c > 63) throw FormatError("sparse6: byte out of range");
    return c;
  };
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (byte_at(0) < 63) {
    n = static_cast<std::uint64_t>(byte_at(0));
    pos = 1;
  } else if (byte_at(1) < 63) {
    for (int i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_at(i));
    pos = 4;
  } else {
    for (int i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_at(i));
    pos = 8;
  }
  const int k = bits_for(n);
  MultiGraph g(n);

  std::vector<int> bits;
  for (std::size_t i = pos; i < text.size(); ++i) {
    int c = byte_at(i);
    for (int b = 5; b >= 0; --b) bits.push_back((c >> b) & 1);
  }
  std::size_t at = 0;
  std::uint64_t v = 0;
  while (at < bits.size()) {
    const int b = bits[at++];
    if (at + static_cast<std::size_t>(k) > bits.size()) break;
    std::uint64_t x = 0;
    for (int i = 0; i < k; ++i) x = (x << 1) | static_cast<std::uint64_t>(bits[at++]);
    if (b) ++v;
    if (v >= n) break;
    if (x > v) {
      v = x;
    } else {
      g.add_edge(static_cast<VertexId>(x), static_cast<VertexId>(v));
    }
  }
  return g;
}

MultiGraph parse_edge_list(std::string_view text) {
  MultiGraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  auto vertex = [&](const std::string& label) {
    if (auto v = g.find_label(label)) return *v;
    return g.add_vertex(label);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() > 2)
      throw FormatError("edge list line " + std::to_string(line_no) + ": expected at most two labels");
    VertexId a = vertex(tokens[0]);
    if (tokens.size() == 2) g.add_edge(a, vertex(tokens[1]));
  }
  return g;
}

std::string to_edge_list(const MultiGraph& g) {
  std::ostringstream out;
  std::vector<char> touched(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) touched[e.u] = touched[e.v] = 1;
  // isolated vertices get a line of their own
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!touched[v]) out << g.label(v) << '\n';
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

std::string to_dot(const MultiGraph& g, const std::vector<std::vector<DartId>>& faces,
                   std::string_view name) {
  std::vector<std::pair<int, int>> sides(g.edge_count(), {-1, -1});
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (DartId d : faces[f]) {
      auto& s = sides[MultiGraph::edge_of(d)];
      ((d & 1u) ? s.second : s.first) = static_cast<int>(f);
    }
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out << "  v" << v << " [label=\"" << g.label(v) << "\"];\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  v" << g.edge(e).u << " -- v" << g.edge(e).v;
    if (!faces.empty())
      out << " [label=\"f" << sides[e].first << "|f" << sides[e].second << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

MultiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  std::string_view trimmed = text;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\n')) trimmed.remove_prefix(1);
  if (!trimmed.empty() && (trimmed.front() == ':' || trimmed.starts_with(">>sparse6<<"))) {
    auto eol = trimmed.find('\n');
    return from_sparse6(trimmed.substr(0, eol));
  }
  return parse_edge_list(text);
}

std::vector<MultiGraph> read_sparse6_stream(std::istream& in) {
  std::vector<MultiGraph> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    out.push_back(from_sparse6(line));
  }
  return out;
}

}  // namespace obstructionist::io
