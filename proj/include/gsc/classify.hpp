#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "gsc/pattern.hpp"

namespace gsc {

/// The six pattern families.
enum class PatternType { V, H, D1, D2, C1, C2 };

inline constexpr std::array<PatternType, 6> kAllTypes{PatternType::V,  PatternType::H,  PatternType::D1,
                                                      PatternType::D2, PatternType::C1, PatternType::C2};
/// The four cutting families a carpet needs two of.
inline constexpr std::array<PatternType, 4> kCuttingTypes{PatternType::V, PatternType::H, PatternType::D1,
                                                          PatternType::D2};

std::string_view to_string(PatternType t);

struct TypeSet {
  bool V = false;
  bool H = false;
  bool D1 = false;
  bool D2 = false;
  bool C1 = false;
  bool C2 = false;

  bool has(PatternType t) const;
  void set(PatternType t, bool value);
  bool empty() const { return !(V || H || D1 || D2 || C1 || C2); }
  friend bool operator==(const TypeSet&, const TypeSet&) = default;
};

/// Builds a TypeSet from a list of members, e.g. {V, C1, C2}.
TypeSet make_types(std::initializer_list<PatternType> members);

/// Witness for V or H: a component meeting two opposite sides at close indices.
struct CuttingWitness {
  int component = 0;
  int first = 0;   // i1 (V: top row column) or j1 (H: left column row)
  int second = 0;  // i2 (V: bottom row column) or j2 (H: right column row)
};

/// Witness for D1 or D2.
struct DiagonalWitness {
  int which_case = 1;   // 1: one component holds both corners; 2: two corner-hugging components
  int component1 = 0;   // K (case 1) or K1 (case 2)
  int component2 = 0;   // K again (case 1) or K2 (case 2)
  int j1 = 0, j2 = 0;   // case 2 only
  int i1 = 0, i2 = 0;   // case 2 only
};

/// Witness for C1 or C2: the black corner cells on that diagonal.
struct CornerWitness {
  std::vector<PatternCell> corners;
};

struct Classification {
  TypeSet types;
  /// Corner-adjacency components of the complement, ordered by smallest cell.
  std::vector<std::vector<PatternCell>> components;
  std::optional<CuttingWitness> v, h;
  std::optional<DiagonalWitness> d1, d2;
  std::optional<CornerWitness> c1, c2;
};

struct ClassifyOptions {
  /// Require K1 != K2 in the two-component diagonal case.
  bool distinct_diagonal_components = false;
};

Classification classify(const Pattern& p, const ClassifyOptions& options = {});

/// Shorthand for classify(p).types.
TypeSet types_of(const Pattern& p, const ClassifyOptions& options = {});

}  // namespace gsc
