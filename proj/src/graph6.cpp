#include "gdcage/graph6.hpp"

#include <fstream>

namespace gdcage {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6_encode: graph too large");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(const std::string& text) {
  for (char c : text)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6_decode: character out of range");
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (text.size() < pos + k)
      throw std::invalid_argument("graph6_decode: truncated input");
  };
  need(1);
  int n;
  if (text[pos] == 126) {
    ++pos;
    need(3);
    if (text[pos] == 126)
      throw std::invalid_argument("graph6_decode: order beyond support");
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | (text[pos++] - 63);
  } else {
    n = text[pos++] - 63;
  }
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("graph6_decode: order beyond support");
  const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  const size_t nchars = static_cast<size_t>((nbits + 5) / 6);
  need(nchars);
  if (text.size() != pos + nchars)
    throw std::invalid_argument("graph6_decode: length mismatch");
  Graph g(n);
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int c = text[pos + bit / 6] - 63;
      if ((c >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  if (nbits % 6 != 0) {
    int last = text.back() - 63;
    if (last & ((1 << (6 - nbits % 6)) - 1))
      throw std::invalid_argument("graph6_decode: nonzero padding bits");
  }
  return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

void write_graph6_file(const std::string& path, const std::vector<Graph>& gs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (const Graph& g : gs) out << graph6_encode(g) << '\n';
}

}  // namespace gdcage
