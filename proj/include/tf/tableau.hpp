#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tf/partition.hpp"

namespace tf {

using Word = std::vector<int>;

/// Semistandard filling of a skew diagram outer/inner.  A straight shape is
/// the special case of an empty inner partition.  Construction validates the
/// shape bookkeeping only; semistandardness is a predicate so that slide
/// algorithms can pass through intermediate states.
class SkewTableau {
public:
    SkewTableau() = default;
    /// rows[i] holds the entries of row i+1 left to right, starting at column
    /// inner.part(i+1) + 1.
    SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows);

    /// Text form: rows joined by "/", entries comma-separated, inner cells
    /// written as "." — e.g. ".,1/1,2" for shape (2,2)/(1).  Empty is "-".
    static SkewTableau parse(std::string_view text);
    std::string str() const;

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    bool straight() const { return inner_.empty(); }
    long long cells() const { return outer_.weight() - inner_.weight(); }
    bool empty_shape() const { return cells() == 0; }

    bool has_cell(int row, int col) const
    {
        return row >= 1 && col > inner_.part(row) && col <= outer_.part(row);
    }
    int entry(int row, int col) const;
    void set_entry(int row, int col, int v);

    int max_entry() const;
    bool is_semistandard() const;
    /// Cells in row-major order.
    std::vector<Cell> cell_list() const;

    friend auto operator<=>(const SkewTableau&, const SkewTableau&) = default;

private:
    Partition outer_;
    Partition inner_;
    std::vector<std::vector<int>> rows_;
};

/// Column reading: columns left to right, each read bottom to top.
Word reading_word(const SkewTableau& t);

/// Multiplicity vector of 1..alphabet_size; entries above the alphabet are an
/// error.
Composition content(const SkewTableau& t, int alphabet_size);

/// Yamanouchi (anti=false): every suffix of w has at least as many i as i+1,
/// for each pair lo <= i < hi.  anti=true flips the comparison.  Vacuous when
/// lo == hi.
bool is_yamanouchi(const Word& w, int lo, int hi, bool anti);

/// All semistandard fillings of outer/inner with the given content, filled
/// row-major with the smallest legal entry first (so the output order is
/// lexicographic and stable).
std::vector<SkewTableau> enumerate_ssyt(const Partition& outer, const Partition& inner,
                                        const Composition& content);

/// Callback form of the enumeration, plus a counting shortcut.
void for_each_ssyt(const Partition& outer, const Partition& inner, const Composition& content,
                   const std::function<void(const SkewTableau&)>& fn);
long long count_ssyt(const Partition& outer, const Partition& inner, const Composition& content);

/// Subsequence whose reading words are Yamanouchi over the full alphabet
/// 1..max entry.
std::vector<SkewTableau> lr_filter(const std::vector<SkewTableau>& ts);

}  // namespace tf
