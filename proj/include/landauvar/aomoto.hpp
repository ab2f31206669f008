#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "landauvar/hierarchy.hpp"
#include "landauvar/landau.hpp"

namespace lv {

// Index pair (I, J) of a component l_IJ of the Aomoto arrangement, with
// I, J subsets of {0..n} and |I| + |J| = n + 1.  I collects the degenerate
// Q hyperplanes, J the degenerate R hyperplanes.
struct AomotoIndex {
  std::set<int> I, J;
  auto operator<=>(const AomotoIndex&) const = default;
};

// "I0,1/J2"
std::string aomoto_id(const AomotoIndex& ij);
AomotoIndex parse_aomoto_id(const std::string& id);

// All C(2n+2, n+1) components, sorted by (|I|, I, J).  Each is a linear
// simple pinch of type ({Qi : i in I}, {Rj : j in J}) whose determinant
// det(t_IJ) is kept as an opaque symbol.
std::vector<LandauComponent> aomoto_components(int n);

// l_IJ -> l_I'J' iff I' strictly contains I and J' is strictly inside J.
HierarchyRelation aomoto_edges(int n);

struct SymbolWord {
  int sign = 1;
  std::vector<int> sigma, tau;
  // Letters in application order: letters[k-1] = (sigma(0..k-1), tau(k..n)).
  std::vector<AomotoIndex> letters;

  std::vector<std::string> component_word() const;
  // Tensor notation, leftmost letter applied last: "a(0,1|2) (x) a(0|1,2)".
  std::string text() const;
};

// Length-n part of the symbol, one word per (sigma, tau) in S_{n+1}^2,
// sorted by (sigma, tau) lexicographically.  The overall sign is fixed by
// (id, id) -> +1.
std::vector<SymbolWord> aomoto_symbol(int n);

struct ChainValue {
  int sign = 1;
  int n = 0;
  std::string str() const;  // "+(2 pi i)^3"
};

// Maximal iterated variation along the chain of (sigma, tau).  Throws when
// sigma or tau is not a permutation of {0..n}.
ChainValue maximal_chain_value(int n, const std::vector<int>& sigma, const std::vector<int>& tau);

nlohmann::json symbol_to_json(int n, const std::vector<SymbolWord>& words);

}  // namespace lv
