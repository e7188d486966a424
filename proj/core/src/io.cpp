#include "tanglekit/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace tk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw InputError("line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                     std::string(tok) + "'");
  return value;
}

}  // namespace

MultiGraph parse_edge_list(std::string_view text) {
  int declared = -1;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  int line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.starts_with("vertices:")) {
      if (declared >= 0 || !pairs.empty())
        throw InputError("line " + std::to_string(line_no) + ": 'vertices:' must be the first entry");
      declared = parse_int(trim(line.substr(9)), line_no);
      continue;
    }
    auto sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos)
      throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
    int u = parse_int(trim(line.substr(0, sp)), line_no);
    int v = parse_int(trim(line.substr(sp)), line_no);
    pairs.emplace_back(u, v);
  }
  std::vector<VertexId> vs;
  if (declared >= 0) {
    for (int i = 0; i < declared; ++i) vs.push_back(i);
  } else {
    for (auto [u, v] : pairs) {
      vs.push_back(u);
      vs.push_back(v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  }
  std::vector<Edge> es;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    es.push_back({static_cast<EdgeId>(i), pairs[i].first, pairs[i].second});
  return MultiGraph(std::move(vs), std::move(es));
}

std::string write_edge_list(const MultiGraph& g) {
  std::ostringstream os;
  int n = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  os << "vertices: " << n << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

MultiGraph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InputError("graph6: empty input");
  std::vector<int> bytes;
  for (char c : text) {
    int b = static_cast<unsigned char>(c) - 63;
    if (b < 0 || b > 63) throw InputError("graph6: invalid character");
    bytes.push_back(b);
  }
  std::size_t pos = 0;
  long long n = 0;
  if (bytes[0] != 63) {
    n = bytes[0];
    pos = 1;
  } else if (bytes.size() > 1 && bytes[1] != 63) {
    if (bytes.size() < 4) throw InputError("graph6: truncated size");
    n = (bytes[1] << 12) | (bytes[2] << 6) | bytes[3];
    pos = 4;
  } else {
    if (bytes.size() < 8) throw InputError("graph6: truncated size");
    for (int i = 2; i < 8; ++i) n = (n << 6) | bytes[i];
    pos = 8;
  }
  std::vector<std::pair<VertexId, VertexId>> pairs;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      std::size_t byte = pos + bit / 6;
      if (byte >= bytes.size()) throw InputError("graph6: truncated adjacency data");
      if ((bytes[byte] >> (5 - bit % 6)) & 1) pairs.emplace_back(i, j);
    }
  return MultiGraph::from_edge_pairs(static_cast<int>(n), pairs);
}

std::string write_graph6(const MultiGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) throw InputError("graph6 cannot represent loops");
    int a = g.vertex_index(e.u), b = g.vertex_index(e.v);
    if (adj[a][b]) throw InputError("graph6 cannot represent parallel edges");
    adj[a][b] = adj[b][a] = 1;
  }
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | adj[i][j];
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MultiGraph read_graph_file(const std::string& path) {
  std::string text = read_text_file(path);
  if (path.ends_with(".g6") || trim(text).starts_with(">>graph6<<")) return parse_graph6(text);
  return parse_edge_list(text);
}

}  // namespace tk
