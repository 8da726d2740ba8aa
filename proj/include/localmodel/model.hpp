#pragma once

#include "localmodel/alcove.hpp"
#include "localmodel/ideal.hpp"
#include "localmodel/profile.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace localmodel {

/// Chain Λ_0 → Λ_1 → ... → Λ_{m-1} → Λ_0 of free modules of rank n with
/// diagonal transition maps: eps[i][j] = 1 iff φ_i(e_j) = π e_j, else
/// φ_i(e_j) = e_j. Every column has exactly one 1, so the composite is π.
struct GeneralizedModelDatum {
  int m = 0;
  int n = 0;
  int r = 0;
  std::vector<std::vector<std::uint8_t>> eps;

  /// Throws DomainError unless 0 <= r <= n, m >= 1 and every column of eps
  /// sums to 1. Reductions may leave r = 0 or r = n; callers constructing
  /// data directly should also have 0 < r < n.
  void validate() const;

  friend bool operator==(const GeneralizedModelDatum&, const GeneralizedModelDatum&) = default;
};

/// The standard lattice chain: φ_i multiplies e_{i+1} by π.
GeneralizedModelDatum standard_iwahori_datum(int n, int r);

/// Partial chain Λ_{i_0} ⊂ Λ_{i_1} ⊂ ... for 0 <= i_0 < i_1 < ... < n:
/// step k multiplies e_j by π for i_k < j <= i_{k+1} (indices mod n).
GeneralizedModelDatum partial_chain_datum(int n, int r, const std::vector<int>& chain);

/// Chart profile of a minuscule alcove as rows t_0 = t_n, t_1, ..., t_{n-1},
/// matching the steps of standard_iwahori_datum.
TypeProfile chain_profile(const Alcove& a);

/// Rows of chain_profile(τ) at the given chain indices.
TypeProfile partial_chain_profile(int n, int r, const std::vector<int>& chain);

/// Both the column-interval condition and: t_i(j) = 1, t_{i+1}(j) = 0
/// forces eps[i][j] = 1. Throws DomainError on dimension mismatch.
bool check_condition(const TypeProfile& t, const GeneralizedModelDatum& d);

struct Reduction {
  TypeProfile profile;
  GeneralizedModelDatum datum;
  int affine_factor = 0;
  /// Deleted columns, 0-based in the input numbering.
  std::vector<int> deleted;
  /// Input column of each surviving column.
  std::vector<int> kept;
};

/// Deletes the columns that are zero at every step: U ≅ V × A^{rs}.
Reduction reduce_lemma1(const TypeProfile& t, const GeneralizedModelDatum& d);

/// Deletes the columns that are one at every step: U ≅ W × A^{t(n-r)}.
Reduction reduce_lemma2(const TypeProfile& t, const GeneralizedModelDatum& d);

struct TemplateEntry {
  enum class Kind { Free, Zero, One, Pi };
  Kind kind = Kind::Zero;
  int var = -1;

  friend bool operator==(const TemplateEntry&, const TemplateEntry&) = default;
};

/// k×k matrix whose entries are free variables or the constants 0, 1, π.
struct MatrixTemplate {
  int size = 0;
  std::vector<TemplateEntry> entries;  // row-major

  const TemplateEntry& at(int row, int col) const {
    return entries[static_cast<std::size_t>(row * size + col)];
  }
  std::string to_string() const;

  friend bool operator==(const MatrixTemplate&, const MatrixTemplate&) = default;
};

/// U ≅ W × A^{affine_dim} where W is the set of tuples (X_i) in the
/// templates whose cyclic products X_{i-1}⋯X_0 X_{m-1}⋯X_i all equal π.
struct ChartPresentation {
  int m = 0;
  int k = 0;
  std::vector<MatrixTemplate> templates;
  int affine_dim = 0;
  int s = 0;
  int t = 0;
  /// 0-based original columns removed by the first and second reduction.
  std::vector<int> zero_columns;
  std::vector<int> one_columns;
  /// Original column of basis vector ι of Λ_i/F_i, per step.
  std::vector<std::vector<int>> quotient_basis;
  int free_variables = 0;
};

/// Templates for a datum with no column that is one at every step.
ChartPresentation reduce_lemma3(const TypeProfile& t, const GeneralizedModelDatum& d);

/// Both reductions followed by the template construction.
ChartPresentation chart_presentation(const TypeProfile& t, const GeneralizedModelDatum& d);

enum class VariableNaming {
  Matrix,  // x{i}_{row}_{col}
  Column   // a{i}_{row}; requires at most one free column per template
};

/// Entries of all cyclic products minus π·Id. π is variable 0; raw_count is m·k².
PolyIdealSpec equations_from_presentation(const ChartPresentation& p, VariableNaming naming = VariableNaming::Matrix);

/// Chart around the τ alcove of the standard Iwahori local model.
PolyIdealSpec equations_U_tau(int n, int r);

struct ParahoricEquations {
  PolyIdealSpec ideal;
  int affine_dim = 0;
  int q = 0;
};

/// Chart of the two-step parahoric model: entries of AB - π and BA - π for
/// generic q×q matrices, q = min(κ, r) after reducing r and κ to at most n/2.
ParahoricEquations equations_parahoric_pair(int n, int r, int kappa);

enum class Target { Pi, Zero };

/// m generic k×k matrices b{i}_{row}_{col} with all cyclic products equal to
/// π (π is variable 0) or to zero (no π variable).
PolyIdealSpec equations_generic_tuple(int m, int k, Target target);

/// Entrywise complement; row sums become n - r.
TypeProfile dualize(const TypeProfile& t);

struct UnramifiedFactor {
  int n = 0;
  int r = 0;
  /// r ∈ {0, n}: the factor is a point.
  bool trivial = false;

  friend bool operator==(const UnramifiedFactor&, const UnramifiedFactor&) = default;
};

/// One standard local model (n, r_φ) per embedding φ.
std::vector<UnramifiedFactor> decompose_unramified(int d, const std::vector<int>& ranks, int n);

} // namespace localmodel
