#include "hopfq/loop.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfq/error.hpp"

namespace hopfq {

// ---------------------------------------------------------------- LoopTable

LoopTable::LoopTable(std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  const int n = order();
  if (n == 0) throw Error(ErrorCode::ParseError, "empty table");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw Error(ErrorCode::BadParams, "label count does not match the order");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table_[i].size()) != n) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " has the wrong length", {i});
    }
    for (int j = 0; j < n; ++j) {
      if (table_[i][j] < 0 || table_[i][j] >= n) {
        throw Error(ErrorCode::ParseError, "entry out of range at row " + std::to_string(i), {i, j});
      }
    }
  }

  std::vector<int> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int j = 0; j < n; ++j) {
      const int x = table_[i][j];
      if (seen[x] >= 0) {
        throw Error(ErrorCode::LatinSquareViolation,
                    "row " + std::to_string(i) + " repeats " + std::to_string(x) + " at column " + std::to_string(j),
                    {i, j});
      }
      seen[x] = j;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int i = 0; i < n; ++i) {
      const int x = table_[i][j];
      if (seen[x] >= 0) {
        throw Error(ErrorCode::LatinSquareViolation,
                    "column " + std::to_string(j) + " repeats " + std::to_string(x) + " at row " + std::to_string(i),
                    {i, j});
      }
      seen[x] = i;
    }
  }

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) ok = table_[e][u] == u && table_[u][e] == u;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

  inv_.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (table_[u][v] == identity_) inv_[u] = v;
    }
  }
}

std::string LoopTable::label(int u) const { return labels_.empty() ? std::to_string(u) : labels_[u]; }

// ------------------------------------------------------------- file format

LoopTable parse_loop(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      lines.push_back(line);
    }
  }
  if (lines.empty()) throw Error(ErrorCode::ParseError, "missing order line");

  auto parse_ints = [](const std::string& line, int lineno) {
    std::vector<int> out;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw Error(ErrorCode::ParseError, "bad integer '" + tok + "' on line " + std::to_string(lineno));
      }
      out.push_back(v);
    }
    return out;
  };

  const std::vector<int> header = parse_ints(lines[0], 0);
  if (header.size() != 1 || header[0] <= 0) throw Error(ErrorCode::ParseError, "first line must be the order n > 0");
  const int n = header[0];
  if (static_cast<int>(lines.size()) != n + 1) {
    throw Error(ErrorCode::ParseError,
                "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<int>> table;
  table.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> row = parse_ints(lines[i + 1], i + 1);
    if (static_cast<int>(row.size()) != n) {
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                             " entries, expected " + std::to_string(n));
    }
    table.push_back(std::move(row));
  }
  return LoopTable(std::move(table));
}

LoopTable load_loop(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_loop(buf.str());
}

std::string serialize_loop(const LoopTable& loop) {
  std::string out = std::to_string(loop.order()) + "\n";
  for (const auto& row : loop.table()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j != 0) out += ' ';
      out += std::to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

// ----------------------------------------------------------------- classify

LoopReport classify(const LoopTable& loop) {
  const int n = loop.order();
  auto m = [&](int a, int b) { return loop.mul(a, b); };
  LoopReport r;

  auto fail_pair = [](LoopFlag& f, int u, int v) {
    if (f.holds) f = {false, {u, v}};
  };
  auto fail_triple = [](LoopFlag& f, int u, int v, int w) {
    if (f.holds) f = {false, {u, v, w}};
  };

  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      const int ui = loop.inv(u);
      if (m(ui, m(u, v)) != v || m(m(v, u), ui) != v) fail_pair(r.ip, u, v);
      if (m(u, m(v, u)) != m(m(u, v), u)) fail_pair(r.flexible, u, v);
      if (m(u, v) != m(v, u)) fail_pair(r.commutative, u, v);
      for (int w = 0; w < n; ++w) {
        if (m(u, m(v, m(u, w))) != m(m(m(u, v), u), w)) fail_triple(r.moufang, u, v, w);
        if (m(m(u, v), w) != m(u, m(v, w))) fail_triple(r.associative, u, v, w);
      }
    }
  }
  return r;
}

// ----------------------------------------------------------------- builtins

namespace {

LoopTable cyclic(int n) {
  if (n < 1) throw Error(ErrorCode::BadParams, "cyclic order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return LoopTable(std::move(t));
}

// Permutations of {0,1,2} in lexicographic order; (ab)(x) = a(b(x)).
LoopTable sym3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(perms[i][0]) + std::to_string(perms[i][1]) + std::to_string(perms[i][2]));
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return LoopTable(std::move(t), std::move(labels));
}

LoopTable product(const LoopTable& a, const LoopTable& b) {
  const int na = a.order();
  const int nb = b.order();
  const int n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back("(" + a.label(i / nb) + "," + b.label(i % nb) + ")");
    for (int j = 0; j < n; ++j) t[i][j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  }
  return LoopTable(std::move(t), std::move(labels));
}

// Unit octonions {±1, ±e1..±e7}. Element 2a+s is (-1)^s e_a with e_0 = 1.
// Each oriented Fano triple (a,b,c) gives e_a e_b = e_c and its cyclic shifts;
// the reversed orders pick up a sign. The orientation is the one produced by
// the Cayley-Dickson doubling, which makes the loop Moufang.
LoopTable octonion() {
  constexpr std::array<std::array<int, 3>, 7> kFano{{{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};
  // unit_product[a][b] = (sign, c) with e_a e_b = sign * e_c
  std::array<std::array<std::pair<int, int>, 8>, 8> unit_product{};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      if (a == 0) {
        unit_product[a][b] = {0, b};
      } else if (b == 0) {
        unit_product[a][b] = {0, a};
      } else if (a == b) {
        unit_product[a][b] = {1, 0};
      }
    }
  }
  for (const auto& tr : kFano) {
    for (int k = 0; k < 3; ++k) {
      const int x = tr[k], y = tr[(k + 1) % 3], z = tr[(k + 2) % 3];
      unit_product[x][y] = {0, z};
      unit_product[y][x] = {1, z};
    }
  }
  std::vector<std::vector<int>> t(16, std::vector<int>(16));
  std::vector<std::string> labels;
  for (int i = 0; i < 16; ++i) {
    const int a = i / 2;
    const std::string base = a == 0 ? "1" : "e" + std::to_string(a);
    labels.push_back((i % 2 == 1 ? "-" : "") + base);
    for (int j = 0; j < 16; ++j) {
      const auto [sign, c] = unit_product[a][j / 2];
      t[i][j] = 2 * c + ((sign + i % 2 + j % 2) % 2);
    }
  }
  return LoopTable(std::move(t), std::move(labels));
}

// Chein double M(G,2) = G ∪ Gu, with element i < n standing for g_i and
// n + i for g_i u. Multiplication:
//   g (h)   = gh
//   g (hu)  = (hg) u
//   (gu) h  = (g h^{-1}) u
//   (gu)(hu) = h^{-1} g
LoopTable chein(const LoopTable& g) {
  const int n = g.order();
  std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
  std::vector<std::string> labels;
  for (int i = 0; i < 2 * n; ++i) {
    labels.push_back(i < n ? g.label(i) : g.label(i - n) + "u");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t[i][j] = g.mul(i, j);
      t[i][n + j] = n + g.mul(j, i);
      t[n + i][j] = n + g.mul(i, g.inv(j));
      t[n + i][n + j] = g.mul(g.inv(j), i);
    }
  }
  return LoopTable(std::move(t), std::move(labels));
}

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int_param(const std::string& s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::BadParams, std::string(what) + " expects an integer, got '" + s + "'");
  }
  return v;
}

}  // namespace

LoopTable builtin_loop(std::string_view spec) {
  std::string name;
  std::vector<std::string> args;
  const auto paren = spec.find('(');
  const auto colon = spec.find(':');
  if (paren != std::string_view::npos && (colon == std::string_view::npos || paren < colon)) {
    if (!spec.ends_with(")")) throw Error(ErrorCode::BadParams, "unbalanced parentheses in '" + std::string(spec) + "'");
    name = spec.substr(0, paren);
    args = split_top_level(spec.substr(paren + 1, spec.size() - paren - 2));
  } else if (colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    args = split_top_level(spec.substr(colon + 1));
  } else {
    name = spec;
  }
  auto expect_args = [&](std::size_t k) {
    if (args.size() != k) {
      throw Error(ErrorCode::BadParams, name + " takes " + std::to_string(k) + " argument(s)");
    }
  };

  if (name == "cyclic" || name == "Z") {
    expect_args(1);
    return cyclic(parse_int_param(args[0], "cyclic"));
  }
  if (name == "sym3" || name == "S3") {
    expect_args(0);
    return sym3();
  }
  if (name == "octonion" || name == "O16") {
    expect_args(0);
    return octonion();
  }
  if (name == "product") {
    expect_args(2);
    return product(builtin_loop(args[0]), builtin_loop(args[1]));
  }
  if (name == "chein") {
    expect_args(1);
    return chein(builtin_loop(args[0]));
  }

  if (const char* dir = std::getenv("HOPFQ_BUILTIN_DIR"); dir != nullptr && args.empty()) {
    const std::filesystem::path path = std::filesystem::path(dir) / (name + ".tbl");
    if (std::filesystem::exists(path)) return load_loop(path.string());
  }
  throw Error(ErrorCode::UnknownBuiltin, "unknown builtin loop '" + std::string(spec) + "'");
}

std::vector<std::string> standard_builtins() { return {"cyclic:2", "cyclic:4", "sym3", "chein:sym3", "octonion"}; }

}  // namespace hopfq
