#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfq {

/// A finite loop given by its Cayley table: table[i][j] is the index of the
/// product (element i)(element j).
class LoopTable {
 public:
  /// Validates the Latin-square property and finds the identity.
  /// Throws LatinSquareViolation (witness {row} or {col}) or NoIdentity.
  LoopTable(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

  int order() const noexcept { return static_cast<int>(table_.size()); }
  int identity() const noexcept { return identity_; }
  int mul(int u, int v) const { return table_[u][v]; }
  /// Right inverse: the unique v with uv = e.
  int inv(int u) const { return inv_[u]; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(int u) const;

  friend bool operator==(const LoopTable&, const LoopTable&) = default;

 private:
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  int identity_ = 0;
  std::vector<int> inv_;
};

/// One decided property of a loop. `witness` holds the lexicographically first
/// failing tuple (empty on success).
struct LoopFlag {
  bool holds = true;
  std::vector<int> witness;
};

struct LoopReport {
  LoopFlag latin_square;
  LoopFlag has_identity;
  LoopFlag ip;           // u^{-1}(uv) = v = (vu)u^{-1}; witness (u, v)
  LoopFlag flexible;     // u(vu) = (uv)u; witness (u, v)
  LoopFlag moufang;      // u(v(uw)) = ((uv)u)w; witness (u, v, w)
  LoopFlag commutative;  // witness (u, v)
  LoopFlag associative;  // witness (u, v, w)
};

/// Parses the Cayley-table text format: '#' comment lines, then the order n,
/// then n rows of n whitespace-separated indices in [0, n).
LoopTable parse_loop(std::string_view text);
LoopTable load_loop(const std::string& path);
/// Emits the canonical form: order line, single-space separated rows, trailing newline.
std::string serialize_loop(const LoopTable& loop);

LoopReport classify(const LoopTable& loop);

/// Named loops: cyclic(n), sym3, product(a,b), octonion, chein(base).
/// Colon shorthand is accepted for single arguments ("cyclic:4", "chein:sym3").
/// Names not recognised are looked up as <name>.tbl in $HOPFQ_BUILTIN_DIR.
LoopTable builtin_loop(std::string_view name);

/// Builtins exercised by the acceptance suite.
std::vector<std::string> standard_builtins();

}  // namespace hopfq
