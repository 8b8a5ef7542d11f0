#include "forge/io.hpp"

#include <fstream>
#include <sstream>

namespace forge::io {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  std::string next(const char* what) {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return line;
    }
    throw ParseError(line_no + 1, std::string("expected ") + what +
                                      ", found end of input");
  }
};

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long to_int(const std::string& tok, int line_no) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected an integer, found '" + tok + "'");
  }
}

}  // namespace

AcyclicDigraph parse_digraph(std::istream& in) {
  LineReader r{in};
  const auto head = tokens(r.next("acyclic header"));
  if (head.size() != 3 || head[0] != "acyclic")
    throw ParseError(r.line_no, "expected 'acyclic <n> <m>'");
  const int n = static_cast<int>(to_int(head[1], r.line_no));
  const long long m = to_int(head[2], r.line_no);
  std::vector<std::pair<int, int>> edges;
  for (long long e = 0; e < m; ++e) {
    const auto t = tokens(r.next("edge line"));
    if (t.size() != 2) throw ParseError(r.line_no, "expected 'u v'");
    edges.emplace_back(static_cast<int>(to_int(t[0], r.line_no)) - 1,
                       static_cast<int>(to_int(t[1], r.line_no)) - 1);
  }
  try {
    return AcyclicDigraph(n, std::move(edges));
  } catch (const GraphError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(r.line_no, err.what());
  }
}

std::string serialize(const AcyclicDigraph& h) {
  std::ostringstream out;
  out << "acyclic " << h.order() << ' ' << h.num_edges() << '\n';
  for (auto [u, v] : h.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Tournament parse_tournament(std::istream& in) {
  LineReader r{in};
  const auto head = tokens(r.next("tournament header"));
  if (head.size() != 2 || head[0] != "tournament")
    throw ParseError(r.line_no, "expected 'tournament <n>'");
  const int n = static_cast<int>(to_int(head[1], r.line_no));
  Tournament t(n);
  for (int i = 0; i + 1 < n; ++i) {
    const std::string row = r.next("orientation row");
    if (static_cast<int>(row.size()) != n - 1 - i)
      throw ParseError(r.line_no, "row " + std::to_string(i + 1) + " needs " +
                                      std::to_string(n - 1 - i) + " bits");
    for (int j = 0; j < n - 1 - i; ++j) {
      if (row[j] != '0' && row[j] != '1')
        throw ParseError(r.line_no, "orientation bits must be 0 or 1");
      t.set_forward(i, i + 1 + j, row[j] == '1');
    }
  }
  return t;
}

std::string serialize(const Tournament& t) {
  std::ostringstream out;
  out << "tournament " << t.order() << '\n';
  for (int i = 0; i + 1 < t.order(); ++i) {
    for (int j = i + 1; j < t.order(); ++j)
      out << (t.forward(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

ColoredTournament parse_colored_tournament(std::istream& in) {
  LineReader r{in};
  const auto head = tokens(r.next("ktournament header"));
  if (head.size() != 3 || head[0] != "ktournament")
    throw ParseError(r.line_no, "expected 'ktournament <n> <k>'");
  const int n = static_cast<int>(to_int(head[1], r.line_no));
  const int k = static_cast<int>(to_int(head[2], r.line_no));
  ColoredTournament ct(Tournament(n), k);
  for (int i = 0; i + 1 < n; ++i) {
    const auto row = tokens(r.next("bit/color row"));
    if (static_cast<int>(row.size()) != n - 1 - i)
      throw ParseError(r.line_no, "row " + std::to_string(i + 1) + " needs " +
                                      std::to_string(n - 1 - i) + " entries");
    for (int j = 0; j < n - 1 - i; ++j) {
      const std::string& cell = row[j];
      if (cell.size() < 2 || (cell[0] != '0' && cell[0] != '1'))
        throw ParseError(r.line_no, "entries look like '<bit><color>'");
      const int color =
          static_cast<int>(to_int(cell.substr(1), r.line_no));
      if (color < 1 || color > k)
        throw ParseError(r.line_no, "color out of range");
      ct.base().set_forward(i, i + 1 + j, cell[0] == '1');
      ct.set_color(i, i + 1 + j, color);
    }
  }
  return ct;
}

std::string serialize(const ColoredTournament& ct) {
  std::ostringstream out;
  const int n = ct.base().order();
  out << "ktournament " << n << ' ' << ct.colors() << '\n';
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (j > i + 1) out << ' ';
      out << (ct.base().forward(i, j) ? '1' : '0') << ct.color(i, j);
    }
    out << '\n';
  }
  return out.str();
}

OrderedGraph parse_ordered_graph(std::istream& in) {
  LineReader r{in};
  const auto head = tokens(r.next("ordered header"));
  if (head.size() != 3 || head[0] != "ordered")
    throw ParseError(r.line_no, "expected 'ordered <n> <m>'");
  const int n = static_cast<int>(to_int(head[1], r.line_no));
  const long long m = to_int(head[2], r.line_no);
  std::vector<std::pair<int, int>> edges;
  for (long long e = 0; e < m; ++e) {
    const auto t = tokens(r.next("edge line"));
    if (t.size() != 2) throw ParseError(r.line_no, "expected 'u v'");
    edges.emplace_back(static_cast<int>(to_int(t[0], r.line_no)) - 1,
                       static_cast<int>(to_int(t[1], r.line_no)) - 1);
  }
  try {
    return OrderedGraph(n, std::move(edges));
  } catch (const Error& err) {
    throw ParseError(r.line_no, err.what());
  }
}

std::string serialize(const OrderedGraph& g) {
  std::ostringstream out;
  out << "ordered " << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

PrefixLabeling parse_labeling(std::istream& in) {
  LineReader r{in};
  const auto head = tokens(r.next("labeling header"));
  if (head.size() != 2 || head[0] != "labeling")
    throw ParseError(r.line_no, "expected 'labeling <n>'");
  const int n = static_cast<int>(to_int(head[1], r.line_no));
  PrefixLabeling rho;
  rho.label.assign(n, "");
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    const auto t = tokens(r.next("label line"));
    if (t.size() != 2) throw ParseError(r.line_no, "expected '<vertex> <word>'");
    const int v = static_cast<int>(to_int(t[0], r.line_no)) - 1;
    if (v < 0 || v >= n || seen[v])
      throw ParseError(r.line_no, "bad or repeated vertex");
    seen[v] = 1;
    rho.label[v] = t[1] == "-" ? "" : t[1];
  }
  return rho;
}

std::string serialize(const PrefixLabeling& rho, int n) {
  std::ostringstream out;
  out << "labeling " << n << '\n';
  for (int v = 0; v < n; ++v)
    out << v + 1 << ' ' << (rho.label[v].empty() ? "-" : rho.label[v]) << '\n';
  return out.str();
}

Walk parse_walk(std::istream& in) {
  LineReader r{in};
  const auto head = tokens(r.next("walk header"));
  if (head.size() != 2 || head[0] != "walk")
    throw ParseError(r.line_no, "expected 'walk <ell>'");
  const long long ell = to_int(head[1], r.line_no);
  Walk w;
  for (long long i = 0; i < ell; ++i) {
    const auto t = tokens(r.next("run line"));
    if (t.size() != 2) throw ParseError(r.line_no, "expected 'v a'");
    w.runs.emplace_back(static_cast<int>(to_int(t[0], r.line_no)) - 1,
                        static_cast<int>(to_int(t[1], r.line_no)));
  }
  return w;
}

std::string serialize(const Walk& w) {
  std::ostringstream out;
  out << "walk " << w.runs.size() << '\n';
  for (auto [v, a] : w.runs) out << v + 1 << ' ' << a << '\n';
  return out.str();
}

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  return f;
}

}  // namespace

AcyclicDigraph load_digraph(const std::string& path) {
  auto f = open_input(path);
  return parse_digraph(f);
}
Tournament load_tournament(const std::string& path) {
  auto f = open_input(path);
  return parse_tournament(f);
}
ColoredTournament load_colored_tournament(const std::string& path) {
  auto f = open_input(path);
  return parse_colored_tournament(f);
}
OrderedGraph load_ordered_graph(const std::string& path) {
  auto f = open_input(path);
  return parse_ordered_graph(f);
}
PrefixLabeling load_labeling(const std::string& path) {
  auto f = open_input(path);
  return parse_labeling(f);
}
Walk load_walk(const std::string& path) {
  auto f = open_input(path);
  return parse_walk(f);
}

void save(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
}

std::string slurp(const std::string& path) {
  auto f = open_input(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (const char ch : data) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string serialize(const Certificate& cert) {
  std::ostringstream out;
  out << "cert v1 " << cert.kind << '\n';
  for (const auto& [k, v] : cert.fields) out << k << ' ' << v << '\n';
  return out.str();
}

Certificate parse_certificate(std::istream& in) {
  LineReader r{in};
  const auto head = tokens(r.next("certificate header"));
  if (head.size() != 3 || head[0] != "cert" || head[1] != "v1")
    throw ParseError(r.line_no, "expected 'cert v1 <kind>'");
  Certificate cert;
  cert.kind = head[2];
  std::string line;
  while (std::getline(in, line)) {
    ++r.line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == std::string::npos)
      throw ParseError(r.line_no, "expected 'key value'");
    cert.fields.emplace_back(line.substr(0, sp), line.substr(sp + 1));
  }
  return cert;
}

}  // namespace forge::io
