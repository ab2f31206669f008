#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "landauvar/hierarchy.hpp"
#include "landauvar/landau.hpp"

namespace lv {

// Square matrix over Q whose entries may be unknown.  A known zero times an
// unknown is zero; any other product or sum involving an unknown is unknown.
class VarMatrix {
 public:
  using Entry = std::optional<Rational>;

  VarMatrix() = default;
  explicit VarMatrix(std::size_t n);  // all entries known zero
  static VarMatrix identity(std::size_t n);
  static VarMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t size() const { return n_; }
  Entry& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Entry& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool fully_known() const;
  bool is_zero() const;  // every entry known and zero
  std::vector<Entry> column(std::size_t j) const;

  friend VarMatrix operator*(const VarMatrix& a, const VarMatrix& b);
  friend VarMatrix operator+(const VarMatrix& a, const VarMatrix& b);
  friend VarMatrix operator-(const VarMatrix& a, const VarMatrix& b);
  friend bool operator==(const VarMatrix& a, const VarMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Entry> a_;
};

// Exact inverse of a fully known matrix.  Throws when singular.
VarMatrix inverse(const VarMatrix& m);

// Homology basis with one variation matrix per Landau component.  Column j
// of ops[id] is the image of basis[j].
struct VariationModel {
  std::string name;
  int n = 0;
  std::vector<std::string> basis;
  std::vector<LandauComponent> components;
  std::map<std::string, VarMatrix> ops;
  std::map<std::string, std::vector<std::vector<Rational>>> vanishing_cycles;
  std::map<std::string, std::set<std::string>> boundary_K;
  std::map<std::string, std::set<std::string>> coboundary_J;
  std::vector<std::string> conventions;

  std::vector<std::string> component_ids() const;
  const VarMatrix& op(const std::string& id) const;
  std::size_t basis_index(const std::string& label) const;

  void validate() const;
  nlohmann::json to_json() const;
  static VariationModel from_json(const nlohmann::json& j);
};

// Picard-Lefschetz rank-one operator h -> pl_sign(n) <dual, h> nu.
VarMatrix pl_operator(int n, const std::vector<Rational>& vanishing_cycle,
                      const std::vector<Rational>& dual_row);

// Iterated variation; word[0] is applied first.  Throws when an id is
// unknown or when the product depends on unknown entries.
VarMatrix compose(const VariationModel& model, const std::vector<std::string>& word);
// Same product, but unknown entries are allowed to survive.
VarMatrix compose_partial(const VariationModel& model, const std::vector<std::string>& word);

// Smallest k such that every word of length k over `ids` composes to zero,
// or nothing if no k <= cutoff works.
std::optional<int> nilpotency_index(const VariationModel& model, const std::vector<std::string>& ids,
                                    int cutoff = 6);

struct AuditEntry {
  std::vector<std::string> word;
  std::string reason;
};

struct AuditReport {
  std::size_t words_checked = 0;
  std::size_t forced_zero = 0;
  std::vector<AuditEntry> violations;    // oracle says zero, matrix is not
  std::vector<AuditEntry> undetermined;  // oracle says zero, matrix has unknowns
  nlohmann::json to_json() const;
};

// Checks every word up to max_len (in lexicographic order of component
// positions) against the one-sided prediction of the hierarchy.
AuditReport check_against_hierarchy(const VariationModel& model, const HierarchyRelation& rel,
                                    int max_len);

// logarithm, bubble, dilog, massless-triangle.
VariationModel builtin_model(const std::string& name);
std::vector<std::string> builtin_model_names();

std::string format_entry(const VarMatrix::Entry& e);

}  // namespace lv
