#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lv {

// Local model of a simple pinch: m hypersurfaces S_1..S_m in a fibre of
// dimension n (linear when m = n + 1), split into the removed part I, the
// part J around which we take the complement and the relative part K.
struct PinchConfig {
  int n = 0;
  int m = 1;
  std::set<int> I, J, K;

  bool linear() const { return m == n + 1; }
  void validate() const;
};

enum class Variant { open, closed };

// Rank of the local homology group in the given degree.  The closed variant
// is computed from the open one with J and K exchanged and the degree
// reflected about n - |I|.
int local_rank(const PinchConfig& cfg, int degree, Variant variant);

// (cfg, degree) -> (cfg with J <-> K, 2(n - |I|) - degree); an involution.
std::pair<PinchConfig, int> dual_config(const PinchConfig& cfg, int degree);

enum class OpKind { delta, boundary, varpi };  // coboundary, partial boundary, intersection

struct Op {
  OpKind kind;
  std::string id;
  int r = 2;  // real codimension of the hypersurface
  bool operator==(const Op&) const = default;
};

using OperatorWord = std::vector<Op>;

// Parses "d1 p2 w3:r=4"; d/δ = coboundary, p/∂ = boundary, w/ϖ = intersection.
OperatorWord parse_word(const std::string& text);
std::string format_word(const OperatorWord& w);

// Graded degree: ∂ lowers by 1, δ raises by r - 1, ϖ lowers by r.
int op_degree(const Op& op);

// Sign picked up by exchanging two adjacent operators a b -> b a.
int exchange_sign(const Op& a, const Op& b);

// Sorts into canonical order (all δ, then ∂, then ϖ; ids ascending within
// each block) and returns the accumulated sign.  Exchanging two operators
// on the same hypersurface is not supported.
std::pair<int, OperatorWord> normalize_word(const OperatorWord& w);

int vanishing_cycle_sign(int size_j);

enum class Transfer { delta_to_boundary, boundary_to_delta };

// <δ_S x, y> = sign * <x, ∂_S y> (delta_to_boundary), or
// <∂_S x, y> = sign * <x, δ_S y> (boundary_to_delta, r = 2 only).
int pairing_transfer_sign(int r, int n, int d, Transfer direction);

int pl_sign(int n);
int partialK_reduction_sign(int n, int size_k);

}  // namespace lv
