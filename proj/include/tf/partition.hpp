#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "tf/checked.hpp"

namespace tf {

/// 1-based box coordinates in a Young diagram (English orientation: row 1 on
/// top, columns grow to the right).
struct Cell {
    int row = 0;
    int col = 0;
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of nonnegative integers, kept in canonical form
/// (no trailing zeros).  Contexts that fix a declared part count (m parts,
/// m*n parts) pass the count alongside; see is_rectangular and the verify
/// module.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Text form "3,2,1"; the empty partition is "-".
    static Partition parse(std::string_view text);
    std::string str() const;

    int rows() const { return static_cast<int>(parts_.size()); }
    /// 1-based part access; rows beyond the last positive part read as 0.
    int part(int i) const
    {
        return (i >= 1 && i <= rows()) ? parts_[i - 1] : 0;
    }
    long long weight() const;
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Sequence of nonnegative integers whose length is significant.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    static Composition parse(std::string_view text);
    std::string str() const;

    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;  // 1-based
    long long weight() const;
    const std::vector<int>& parts() const { return parts_; }

    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& p);

/// Sum of (i-1) * p_i over the positive parts.
long long v_stat(const Partition& p);

/// True iff inner_i <= outer_i for every positive part of inner.
bool contains(const Partition& outer, const Partition& inner);

/// True iff no column of outer/inner holds two cells.  Requires containment.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);

/// Partition left once no r-ribbon can be removed while staying a Young
/// diagram.  Independent of removal order.
Partition r_core(const Partition& p, int r);

/// The r-quotient (one partition per abacus runner, residues ascending).
/// Requires an empty r-core.
std::vector<Partition> r_quotient(const Partition& p, int r);

/// (-1)^(sum of (height-1)) over any r-ribbon tiling of p; the value does not
/// depend on the tiling.  Requires an empty r-core.
int r_sign(const Partition& p, int r);

/// All positive parts equal and exactly declared_parts of them.
bool is_rectangular(const Partition& p, int declared_parts);

/// All partitions of n, optionally bounded in part count and largest part.
/// Listed in descending lexicographic order.
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of(int n, int max_parts);
std::vector<Partition> partitions_of(int n, int max_parts, int max_part);

/// All sub-partitions of outer (every inner with contains(outer, inner)).
std::vector<Partition> subpartitions_of(const Partition& outer);

/// All compositions of n with exactly `length` nonnegative parts, in
/// lexicographic order.
std::vector<Composition> compositions_of(int n, int length);

namespace detail {
/// Beta numbers p_i + (slots - i) for i = 1..slots; slots >= rows(p).
std::vector<long long> beta_numbers(const Partition& p, int slots);
/// Abacus quotient without the empty-core requirement (building block for
/// r_quotient and the weight bookkeeping identity).
std::vector<Partition> abacus_quotient(const Partition& p, int r);
}  // namespace detail

}  // namespace tf
