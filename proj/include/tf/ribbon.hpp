#pragma once

#include <string>
#include <vector>

#include "tf/partition.hpp"
#include "tf/tableau.hpp"

namespace tf {

/// Connected r-cell skew shape with no 2x2 block, as a sorted cell set.
struct Ribbon {
    std::vector<Cell> cells;
    int height() const;
    friend auto operator<=>(const Ribbon&, const Ribbon&) = default;
};

/// Tiling of a Young diagram by r-ribbons.
struct RibbonTiling {
    std::vector<Ribbon> ribbons;
    friend auto operator<=>(const RibbonTiling&, const RibbonTiling&) = default;
};

/// Tiling with one entry per ribbon.  Ribbons are kept sorted by (entry,
/// first cell) so equal tableaux compare equal.
struct RibbonTableau {
    RibbonTiling tiling;
    std::vector<int> entries;
    int spin_parity() const;  // parity of sum of (height - 1)
    std::string str() const;  // debug dump: "[(r,c)(r,c)]=e;..."
    friend auto operator<=>(const RibbonTableau&, const RibbonTableau&) = default;
};

/// Every tiling of the diagram of `shape` by r-ribbons, deduplicated.
std::vector<RibbonTiling> enumerate_tilings(const Partition& shape, int r);

/// All semistandard r-ribbon tableaux of the given shape and content: the
/// sub-diagrams of entries <= i form a partition chain, and within one
/// entry's layer no two ribbons share a column.  Requires an empty r-core and
/// r * |content| = |shape|.
std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& shape, int r,
                                                     const Composition& content);

/// Columnwise bottom-to-top word of a domino tableau; a horizontal domino is
/// read once, in its left column.
Word domino_reading_word(const RibbonTableau& d);

/// Domino tableaux of the given shape and content whose reading word is
/// Yamanouchi.  Requires an empty 2-core.
std::vector<RibbonTableau> enumerate_yamanouchi_domino(const Partition& shape,
                                                       const Composition& content);

}  // namespace tf
