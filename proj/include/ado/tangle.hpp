#pragma once

#include <string>
#include <vector>

#include "ado/cyc.hpp"

namespace ado {

// One layer of a layered (1,1)-tangle diagram, read bottom to top.
enum class LayerKind {
  CrossPos,  // positive crossing at positions (i, i+1)
  CrossNeg,  // negative crossing at positions (i, i+1)
  CapEv,     // cap (evaluation), consumes (down, up) at (i, i+1)
  CapEvStar, // cap (starred evaluation), consumes (up, down)
  CupCoev,   // cup (coevaluation), creates (up, down) at (i, i+1)
  CupCoevStar// cup (starred coevaluation), creates (down, up)
};

struct Layer {
  LayerKind kind;
  int pos;  // 1-based strand position of the left leg
};

struct TangleProgram {
  std::string name;
  std::vector<Layer> layers;
};

// Results of structural validation: strand/arc/component combinatorics.
struct TangleInfo {
  int crossings = 0;
  int positive_crossings = 0;
  int negative_crossings = 0;
  int closed_curves = 0;    // disjoint simple closed curves U
  int arcs = 0;             // m = 2C + U + 1
  int components = 0;       // n (open component is component 1)
  // for each crossing layer (in order): sign and the two component indices
  // (1-based) of the strands passing through it
  struct CrossingRecord {
    int sign;
    int comp_under_left;   // component at position i (bottom-left)
    int comp_under_right;  // component at position i+1 (bottom-right)
  };
  std::vector<CrossingRecord> crossing_components;
};

struct LinkingData {
  std::vector<std::vector<long>> matrix;  // n x n; diagonal = writhes
};

struct TangleError {
  int line;  // 1-based line in the DSL text (0 if structural, not positional)
  std::string message;
};

// Parse the line-oriented DSL:
//   tangle <name>
//   cross+ I | cross- I | cap-ev I | cap-ev* I | cup-coev I | cup-coev* I
// with '#' comments; positions are 1-based. Throws std::invalid_argument
// carrying "line L: ..." on syntax errors.
TangleProgram parse_tangle(const std::string& text);

// Validate the TYPE invariants (widths, orientations, single open strand)
// and compute diagram combinatorics. Returns diagnostics; empty means ok.
// info (optional) is filled when validation succeeds.
std::vector<TangleError> validate(const TangleProgram& p, TangleInfo* info = nullptr);

// Linking matrix and per-component writhes; requires a valid program.
LinkingData linking_data(const TangleProgram& p);

// Built-in programs: "unknot", "3_1", "4_1", "5_2".
TangleProgram builtin_tangle(const std::string& name);

std::string tangle_to_string(const TangleProgram& p);

}  // namespace ado
