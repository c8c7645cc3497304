#include "treeopt/graph6.hpp"

#include <charconv>
#include <sstream>

#include "treeopt/errors.hpp"

namespace treeopt {

namespace {
constexpr int kBias = 63;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > Graph::kMaxVertices) throw UnsupportedSize("graph6 long form is not supported");
  const int bits = n * (n - 1) / 2;
  std::string out;
  out.reserve(1 + (bits + 5) / 6);
  out.push_back(static_cast<char>(kBias + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte outside [63,126]", i);
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n == 63) throw ParseError("graph6 long form (n > 62) is not supported", 0);
  if (n < 1) throw ParseError("graph6 order must be at least 1", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) throw ParseError("graph6 string truncated", text.size());
  if (text.size() > 1 + body) throw ParseError("trailing bytes after graph6 body", 1 + body);

  std::vector<std::uint64_t> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  if (k % 6 != 0) {
    const int byte = static_cast<unsigned char>(text[body]) - kBias;
    if (byte & ((1 << (6 - k % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", body);
  }
  return Graph::from_rows(std::move(rows));
}

Graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' ||
                                 text[pos] == '\r')) {
      ++pos;
    }
  };
  auto read_int = [&](const char* what) {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError(std::string("expected ") + what, pos);
    const std::size_t at = pos;
    pos = static_cast<std::size_t>(ptr - text.data());
    return std::pair{value, at};
  };
  auto [n, n_at] = read_int("vertex count");
  auto [m, m_at] = read_int("edge count");
  if (n < 1 || n > Graph::kMaxVertices) throw ParseError("vertex count outside 1..62", n_at);
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge count out of range", m_at);
  GraphBuilder b(n);
  for (int e = 0; e < m; ++e) {
    auto [u, u_at] = read_int("edge endpoint");
    auto [v, v_at] = read_int("edge endpoint");
    if (u < 0 || u >= n) throw ParseError("endpoint out of range", u_at);
    if (v < 0 || v >= n || v == u) throw ParseError("endpoint out of range or loop", v_at);
    if (b.has_edge(u, v)) throw ParseError("duplicate edge", u_at);
    b.add_edge(u, v);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing content after edge list", pos);
  return b.build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace treeopt
