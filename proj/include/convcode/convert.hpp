#pragma once

// Convertible codes: plans that turn t1 initial codewords into t2 final
// codewords while keeping some symbols in place (unchanged), reading as few
// others as possible, and writing the rest.
//
// Index conventions used throughout: initial codes are 0..t1-1, positions are
// zero-based, and the written symbols of final code j are addressed as code
// t1 + j. Documents on disk use the same pairs shifted to one-based.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "convcode/bounds.hpp"
#include "convcode/grs.hpp"
#include "convcode/matrix.hpp"

namespace convcode {

struct SymbolId {
  std::size_t code = 0;
  std::size_t position = 0;
  friend auto operator<=>(const SymbolId&, const SymbolId&) = default;
};

/// Which symbols a plan keeps, reads and writes; enough to count access cost.
struct AccessLayout {
  std::vector<std::size_t> initial_lengths;
  std::vector<std::size_t> final_lengths;
  // unchanged[i][j] / read[i][j]: positions of initial code i used for final j.
  std::vector<std::vector<IndexSet>> unchanged;
  std::vector<std::vector<IndexSet>> read;
};

enum class Role { unchanged, read, retired, written };
const char* role_name(Role role);

struct TraceEntry {
  SymbolId symbol;
  Role role = Role::retired;
  bool read = false;                      // accessed by a conversion function
  std::optional<std::size_t> final_code;  // destination for unchanged / written symbols
};

struct AccessReport {
  std::vector<std::size_t> per_initial_reads;  // |union_j R_{i,j}|
  std::size_t rho_r = 0;
  std::size_t rho_w = 0;
  std::size_t rho = 0;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> read_bound;
  std::optional<bool> optimal;
  std::optional<bool> stable;
  std::vector<TraceEntry> trace;
};

/// Raw counts and device trace; bound-related fields are left empty.
AccessReport access_report(const AccessLayout& layout);

struct StructureCheck {
  bool ok = true;
  std::string diagnostic;  // first violated condition when !ok
  explicit operator bool() const { return ok; }
};

// ---------------------------------------------------------------------------
// Merge regime (t2 = 1)

/// Final codeword layout: unchanged symbols of code 0, code 1, ... in plan
/// order, followed by the written symbols.
struct MergePlan {
  ConvertParams params;
  std::vector<ExtGrsSpec> initial;
  ExtGrsSpec final_code;
  std::vector<std::size_t> s;       // codes whose reads avoid their unchanged set
  std::vector<IndexSet> unchanged;  // U_i, positions of initial code i
  std::vector<IndexSet> read;       // R_i
  // For i in s: parity check of C_i punctured to punctured_positions[i]
  // (sorted U_i u R_i). For i not in s: the final-code block on U_i.
  std::vector<IndexSet> punctured_positions;
  std::vector<std::optional<Matrix>> punctured_checks;
  std::vector<std::optional<Matrix>> unchanged_blocks;
  Matrix written_block;  // final parity check restricted to the written positions

  const Field& field() const { return final_code.field; }
  std::size_t written_count() const;
  /// Final-code positions holding the unchanged symbols of code i.
  IndexSet final_positions_of(std::size_t i) const;
  IndexSet written_positions() const;
  AccessLayout layout() const;
  /// Shape and range checks, disjointness, and |U_i| <= k_i. Throws UsageError.
  void check_well_formed() const;
};

MergePlan build_merge(const ConvertParams& params, const Field& field);

struct MergeResult {
  Word final_word;
  AccessReport report;
};

/// Throws CorruptionError if an input is not a codeword of its initial code.
MergeResult merge_convert(const MergePlan& plan, const std::vector<Word>& inputs);
AccessReport access_report(const MergePlan& plan);
StructureCheck verify_optimal_structure(const MergePlan& plan);

// ---------------------------------------------------------------------------
// Split regime (t1 = 1)

/// Final codeword j is (unchanged symbols U_j, written symbols).
struct SplitPlan {
  ConvertParams params;
  ExtGrsSpec initial;
  std::vector<ExtGrsSpec> finals;
  std::vector<IndexSet> unchanged;  // U_j, pairwise disjoint positions of the initial code
  std::optional<std::size_t> privileged;
  IndexSet extra_reads;             // V: read-only positions feeding the privileged final
  IndexSet punctured_positions;     // sorted (union_j U_j) u V
  std::optional<Matrix> punctured_check;

  const Field& field() const { return initial.field; }
  /// Positions of the initial code read to produce final j.
  IndexSet reads_for(std::size_t j) const;
  AccessLayout layout() const;
  void check_well_formed() const;
};

SplitPlan build_split(const ConvertParams& params, const Field& field);

struct SplitResult {
  std::vector<Word> final_words;
  AccessReport report;
};

SplitResult split_convert(const SplitPlan& plan, const Word& input);
AccessReport access_report(const SplitPlan& plan);
StructureCheck verify_split_structure(const SplitPlan& plan);

// ---------------------------------------------------------------------------
// Hand-specified plans with arbitrary t1, t2 and explicit linear conversion maps.

struct GeneralFinal {
  CodeParams params;
  std::vector<IndexSet> unchanged;  // per initial code
  std::vector<IndexSet> read;       // per initial code
  std::vector<SymbolId> layout;     // codeword order; written symbols are (t1 + j, p)
  /// Rows follow the read symbols (code 0's list, then code 1's, ...);
  /// columns are the written symbols. written = reads * sigma.
  Matrix sigma;

  std::size_t written_count() const;
};

struct GeneralPlan {
  Field field;
  std::vector<ExtGrsSpec> initial;
  std::vector<GeneralFinal> finals;

  ConvertParams params() const;
  AccessLayout layout() const;
  void check_well_formed() const;
};

struct GeneralResult {
  std::vector<Word> final_words;
  AccessReport report;
};

GeneralResult general_convert(const GeneralPlan& plan, const std::vector<Word>& inputs);
AccessReport access_report(const GeneralPlan& plan);
StructureCheck verify_general_structure(const GeneralPlan& plan);

}  // namespace convcode
