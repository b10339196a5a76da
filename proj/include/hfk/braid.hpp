#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hfk {

// A word in the braid group on `strands` strands. Letter +i is sigma_i and -i
// its inverse, 1 <= i < strands. Strand positions run 1..strands from the
// outermost strand (which carries the basepoint) to the one nearest the axis.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  std::string to_string() const;  // "b=3; 1 -2 1 -2"
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Number of components of the closure.
int closure_components(int strands, const std::vector<int>& letters);

// Checks letter range and that the closure is a knot.
BraidWord make_braid(int strands, std::vector<int> letters);

// Accepts "b=<int>; <signed ints>" (the "b=" prefix and ';' are optional when
// the strand count is the first token). Throws MalformedWord or NotAKnot.
BraidWord parse_braid(std::string_view text);

// One horizontal slice of the diagram. A layer either holds one crossing
// between positions `crossing` and `crossing + 1` plus a bivalent vertex on
// every other strand, or (crossing == 0) only bivalent vertices.
struct Layer {
  int crossing = 0;
  int sign = 0;  // +1 / -1 for a crossing, 0 for an all-bivalent layer
  bool is_identity() const noexcept { return crossing == 0; }
  friend bool operator==(const Layer&, const Layer&) = default;
};

// Closed braid cut into layers with labeled edges. Layer boundaries are
// numbered 0..L (L = number of layers); the edge crossing boundary k at
// position p is labeled k*b + p - 1, except on the top boundary, where
// position 1 is the edge n = L*b entering the basepoint and every other
// position re-uses its bottom label. Edge 0 leaves the basepoint.
class LayeredBraidDiagram {
 public:
  LayeredBraidDiagram() = default;
  LayeredBraidDiagram(int strands, std::vector<Layer> layers);

  int strands() const noexcept { return strands_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  int num_layers() const noexcept { return static_cast<int>(layers_.size()); }
  // Largest edge label n; variables are x_0..x_n.
  int max_label() const noexcept { return num_layers() * strands_; }
  std::size_t num_vars() const noexcept { return static_cast<std::size_t>(max_label()) + 1; }
  int edge_label(int boundary, int position) const;

  // Layers that carry a crossing, in order; the cube index runs over these.
  const std::vector<int>& crossing_layers() const noexcept { return crossing_layers_; }
  int num_crossings() const noexcept { return static_cast<int>(crossing_layers_.size()); }
  int num_negative() const noexcept;
  int num_bivalent() const noexcept;

  // Text dump: one line per layer, then the edge table.
  std::string dump() const;

  friend bool operator==(const LayeredBraidDiagram&, const LayeredBraidDiagram&) = default;

 private:
  int strands_ = 0;
  std::vector<Layer> layers_;
  std::vector<int> crossing_layers_;
};

LayeredBraidDiagram build_layered_diagram(const BraidWord& w);
// Inserts an all-bivalent layer before layer `at` (at == num_layers appends).
LayeredBraidDiagram insert_bivalent_layer(const LayeredBraidDiagram& d, int at);

struct MarkovMove {
  enum class Kind {
    Conjugate,          // rotate the word left by `position` letters
    StabilizePositive,  // append sigma_b on a new strand
    StabilizeNegative,  // append sigma_b^-1 on a new strand
    Destabilize,        // drop a final +-sigma_{b-1} and the last strand
    Reid2Insert,        // insert (g, -g) before `position`
    Reid2Remove,        // remove a cancelling pair starting at `position`
    Reid3,              // (i, i+1, i) <-> (i+1, i, i+1) starting at `position`
  };
  Kind kind = Kind::Conjugate;
  int generator = 1;  // signed; used by Reid2Insert
  int position = 0;

  std::string to_string() const;
};

// Throws InapplicableMove when the move does not fit the word.
BraidWord apply_markov(const BraidWord& w, const MarkovMove& mv);

// All moves applicable to w that keep the word length below `max_letters`
// and the strand count at most `max_strands`.
std::vector<MarkovMove> applicable_moves(const BraidWord& w, int max_letters, int max_strands);

}  // namespace hfk
