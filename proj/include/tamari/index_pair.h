#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tamari {

enum class Mode { A, B };

enum class Side : int { I = 0, J = 1 };

std::string mode_name(Mode m);
Mode parse_mode(std::string_view s);

/// A node of the bipartite ground graph. Nodes are ordered by value,
/// with the I-copy before the J-copy of the same value.
struct Node {
  int value = 0;
  Side side = Side::I;
  friend auto operator<=>(const Node&, const Node&) = default;
};

struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two finite index sets I and J (the latter written with bars) on a common
/// line or, in mode B, on a cycle of length n+1.
class IndexPair {
 public:
  IndexPair() = default;

  /// Sorts both sets. Mode A requires min(I u J) on the I-side and the
  /// maximum on the J-side. Mode B requires every value in [0, n];
  /// n defaults to the maximum value.
  static IndexPair make(std::vector<int> I, std::vector<int> J, Mode mode = Mode::A,
                        std::optional<int> n = std::nullopt);

  /// Parses "I=0,1,3;J=2,5,8".
  static IndexPair parse(std::string_view text, Mode mode = Mode::A,
                         std::optional<int> n = std::nullopt);

  const std::vector<int>& I() const { return I_; }
  const std::vector<int>& J() const { return J_; }
  int n() const { return n_; }
  Mode mode() const { return mode_; }
  int size() const { return static_cast<int>(I_.size() + J_.size()); }

  bool has_i(int v) const { return v >= 0 && v < (int)pos_i_.size() && pos_i_[v] >= 0; }
  bool has_j(int v) const { return v >= 0 && v < (int)pos_j_.size() && pos_j_[v] >= 0; }
  /// Position of value v inside I (resp. J), or -1.
  int pos_i(int v) const { return has_i(v) ? pos_i_[v] : -1; }
  int pos_j(int v) const { return has_j(v) ? pos_j_[v] : -1; }

  /// Graph vertex id: I-nodes first, then J-nodes.
  int vertex_i(int v) const { return pos_i(v); }
  int vertex_j(int v) const { return static_cast<int>(I_.size()) + pos_j(v); }

  /// All nodes sorted by the total order.
  std::vector<Node> merged() const;

  IndexPair with_mode(Mode m, std::optional<int> n = std::nullopt) const;

  std::string str() const;

  friend bool operator==(const IndexPair& a, const IndexPair& b) {
    return a.mode_ == b.mode_ && a.n_ == b.n_ && a.I_ == b.I_ && a.J_ == b.J_;
  }

 private:
  std::vector<int> I_, J_;
  std::vector<int> pos_i_, pos_j_;
  int n_ = 0;
  Mode mode_ = Mode::A;
};

/// Deletes J-elements preceding min I and I-elements following max J.
/// The result is a mode A pair.
IndexPair normalize(std::vector<int> I, std::vector<int> J);
IndexPair normalize(const IndexPair& p);

/// The pair (c - J, c - I). In mode B, c is the ambient n; in mode A,
/// c = min + max so that the map is an involution on every valid pair.
IndexPair reverse_pair(const IndexPair& p);

}  // namespace tamari
