#pragma once

#include <utility>
#include <vector>

#include "tf/tableau.hpp"

namespace tf {

/// Record of one slide: where the empty box started, every position it
/// visited, and the outside corner it vacated.
struct SlideTrace {
    Cell start;
    std::vector<Cell> path;
    Cell vacated;
};

/// Inside corners of the skew shape (boxes of inner with neither the box
/// below nor the box to the right in inner).
std::vector<Cell> inside_corners(const Partition& outer, const Partition& inner);

/// Positions that can be appended to p while keeping a Young diagram.
std::vector<Cell> addable_cells(const Partition& p);

/// One forward slide from an inside corner.  On ties the entry below moves.
std::pair<SkewTableau, SlideTrace> slide(const SkewTableau& t, Cell corner);

/// Inverse slide into an addable cell of the outer shape; the empty box
/// travels up/left and settles on an addable cell of the inner shape.
SkewTableau reverse_slide(const SkewTableau& t, Cell cell);

/// Slide until no inside corner remains.  The result does not depend on the
/// corner order.
SkewTableau rectify(const SkewTableau& t);

/// Empty the 1-boxes, decrement, rectify, and refill the vacated horizontal
/// strip with s.  Requires a straight shape with entries in 1..s.
SkewTableau demote(const SkewTableau& t, int s);

/// Constructive inverse of demote: delete the s-boxes, reverse-rectify into
/// the vacated strip, increment, and fill the freed row-1 prefix with 1s.
SkewTableau promote(const SkewTableau& t, int s);

/// Schutzenberger involution via the recorded shape chain of iterated
/// demotions.  Reverses the content over 1..s.
SkewTableau evacuate(const SkewTableau& t, int s);

}  // namespace tf
