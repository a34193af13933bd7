#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tf/tableau.hpp"

namespace tf {

/// Subset of the raising/lowering indices 1..s-1 of an alphabet of size s.
struct CrystalIndexSet {
    int s = 0;
    std::vector<int> indices;

    /// All of 1..s-1.
    static CrystalIndexSet full(int s);
    /// Union over blocks k = 0..n-1 of {km+1, ..., (k+1)m-1} inside s = m*n.
    static CrystalIndexSet blocks(int m, int n);
};

/// Raising operator: replace an i+1 by i in the rightmost column where the
/// suffix statistic h_{i,j} is maximal and positive; nullopt if it vanishes.
std::optional<SkewTableau> apply_e(const SkewTableau& t, int i);

/// Lowering operator: replace an i by i+1 in the leftmost column where the
/// prefix statistic k_{i,j} is maximal and positive; nullopt if it vanishes.
std::optional<SkewTableau> apply_f(const SkewTableau& t, int i);

/// (eps, phi): how many times e_i resp. f_i applies before vanishing.
std::pair<int, int> string_lengths(const SkewTableau& t, int i);

/// True iff e_i vanishes at t for every i in the index set.
bool is_highest_weight(const SkewTableau& t, const CrystalIndexSet& s);

/// Straight-shape subtableaux cut out of a tableau with entries in 1..m*n:
/// block k collects the entries km+1..(k+1)m reduced into 1..m; blocks past
/// the first are rectified.
struct SplitTuple {
    std::vector<SkewTableau> blocks;
};
SplitTuple split_blocks(const SkewTableau& t, int m, int n);

/// Connected component of t in the edge set {e_i, f_i : i in s}, by
/// breadth-first search; returned as an ordered set for determinism.
std::set<SkewTableau> component_of(const SkewTableau& t, const CrystalIndexSet& s);

}  // namespace tf
