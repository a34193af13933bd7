#include "tf/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace tf {

SkewTableau::SkewTableau(Partition outer, Partition inner, std::vector<std::vector<int>> rows)
    : outer_(std::move(outer)), inner_(std::move(inner)), rows_(std::move(rows))
{
    if (!contains(outer_, inner_))
        throw std::invalid_argument("SkewTableau: inner not contained in outer");
    if (static_cast<int>(rows_.size()) != outer_.rows())
        throw std::invalid_argument("SkewTableau: row count mismatch");
    for (int r = 1; r <= outer_.rows(); ++r) {
        int want = outer_.part(r) - inner_.part(r);
        if (static_cast<int>(rows_[r - 1].size()) != want)
            throw std::invalid_argument("SkewTableau: row length mismatch");
        for (int v : rows_[r - 1])
            if (v < 1)
                throw std::invalid_argument("SkewTableau: entries must be positive");
    }
}

int SkewTableau::entry(int row, int col) const
{
    if (!has_cell(row, col))
        throw std::out_of_range("SkewTableau::entry: no such cell");
    return rows_[row - 1][col - 1 - inner_.part(row)];
}

void SkewTableau::set_entry(int row, int col, int v)
{
    if (!has_cell(row, col))
        throw std::out_of_range("SkewTableau::set_entry: no such cell");
    rows_[row - 1][col - 1 - inner_.part(row)] = v;
}

int SkewTableau::max_entry() const
{
    int m = 0;
    for (const auto& row : rows_)
        for (int v : row)
            m = std::max(m, v);
    return m;
}

bool SkewTableau::is_semistandard() const
{
    for (int r = 1; r <= outer_.rows(); ++r) {
        for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) {
            if (has_cell(r, c + 1) && entry(r, c) > entry(r, c + 1))
                return false;
            if (has_cell(r + 1, c) && entry(r, c) >= entry(r + 1, c))
                return false;
        }
    }
    return true;
}

std::vector<Cell> SkewTableau::cell_list() const
{
    std::vector<Cell> out;
    for (int r = 1; r <= outer_.rows(); ++r)
        for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c)
            out.push_back({r, c});
    return out;
}

SkewTableau SkewTableau::parse(std::string_view text)
{
    if (text.empty() || text == "-")
        return SkewTableau();
    std::vector<int> outer_parts, inner_parts;
    std::vector<std::vector<int>> rows;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find('/', pos);
        std::string_view rowtext =
            text.substr(pos, next == std::string_view::npos ? next : next - pos);
        int dots = 0;
        std::vector<int> entries;
        size_t tpos = 0;
        bool entry_seen = false;
        while (tpos <= rowtext.size()) {
            size_t tnext = rowtext.find(',', tpos);
            std::string_view tok =
                rowtext.substr(tpos, tnext == std::string_view::npos ? tnext : tnext - tpos);
            if (tok == ".") {
                if (entry_seen)
                    throw ParseError("tableau row: '.' after an entry");
                ++dots;
            } else {
                int v = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
                if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 1)
                    throw ParseError("tableau row: bad entry '" + std::string(tok) + "'");
                entries.push_back(v);
                entry_seen = true;
            }
            if (tnext == std::string_view::npos)
                break;
            tpos = tnext + 1;
        }
        outer_parts.push_back(dots + static_cast<int>(entries.size()));
        inner_parts.push_back(dots);
        rows.push_back(std::move(entries));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    try {
        Partition outer(outer_parts);
        // Trailing all-dot rows would make inner exceed outer's row count.
        while (rows.size() > static_cast<size_t>(outer.rows())) {
            if (!rows.back().empty())
                throw ParseError("tableau text: malformed trailing row");
            rows.pop_back();
            inner_parts.pop_back();
        }
        Partition inner(inner_parts);
        return SkewTableau(outer, inner, std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("tableau text: ") + e.what());
    }
}

std::string SkewTableau::str() const
{
    if (outer_.empty())
        return "-";
    std::string out;
    for (int r = 1; r <= outer_.rows(); ++r) {
        if (r > 1)
            out += '/';
        bool first = true;
        for (int c = 1; c <= outer_.part(r); ++c) {
            if (!first)
                out += ',';
            first = false;
            if (c <= inner_.part(r))
                out += '.';
            else
                out += std::to_string(entry(r, c));
        }
    }
    return out;
}

Word reading_word(const SkewTableau& t)
{
    Word w;
    int maxcol = t.outer().part(1);
    for (int c = 1; c <= maxcol; ++c)
        for (int r = t.outer().rows(); r >= 1; --r)
            if (t.has_cell(r, c))
                w.push_back(t.entry(r, c));
    return w;
}

Composition content(const SkewTableau& t, int alphabet_size)
{
    if (alphabet_size < 0)
        throw std::invalid_argument("content: negative alphabet size");
    std::vector<int> counts(alphabet_size, 0);
    for (const Cell& c : t.cell_list()) {
        int v = t.entry(c.row, c.col);
        if (v > alphabet_size)
            throw std::invalid_argument("content: entry exceeds alphabet size");
        ++counts[v - 1];
    }
    return Composition(std::move(counts));
}

bool is_yamanouchi(const Word& w, int lo, int hi, bool anti)
{
    if (lo < 1 || lo > hi)
        throw std::invalid_argument("is_yamanouchi: need 1 <= lo <= hi");
    // Yamanouchi: suffixes never hold more i+1 than i (the raising operator
    // e_i vanishes).  Anti: prefixes never hold more i than i+1 (f_i
    // vanishes).  The two scans are mirror images, not complements.
    for (int i = lo; i < hi; ++i) {
        int count_i = 0, count_next = 0;
        if (anti) {
            for (auto it = w.begin(); it != w.end(); ++it) {
                if (*it == i)
                    ++count_i;
                else if (*it == i + 1)
                    ++count_next;
                if (count_i > count_next)
                    return false;
            }
        } else {
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                if (*it == i)
                    ++count_i;
                else if (*it == i + 1)
                    ++count_next;
                if (count_i < count_next)
                    return false;
            }
        }
    }
    return true;
}

namespace {

struct SsytSearch {
    const Partition& outer;
    const Partition& inner;
    std::vector<int> quota;
    std::vector<Cell> cells;
    std::vector<std::vector<int>> grid;  // grid[r-1][c-1], 0 = absent
    const std::function<void(const SkewTableau&)>& fn;

    void emit()
    {
        std::vector<std::vector<int>> rows(outer.rows());
        for (int r = 1; r <= outer.rows(); ++r)
            for (int c = inner.part(r) + 1; c <= outer.part(r); ++c)
                rows[r - 1].push_back(grid[r - 1][c - 1]);
        fn(SkewTableau(outer, inner, std::move(rows)));
    }

    void fill(size_t idx)
    {
        if (idx == cells.size()) {
            emit();
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 1 && c - 1 > inner.part(r) && c - 1 <= outer.part(r))
            lo = std::max(lo, grid[r - 1][c - 2]);
        if (r > 1 && c > inner.part(r - 1) && c <= outer.part(r - 1))
            lo = std::max(lo, grid[r - 2][c - 1] + 1);
        for (int v = lo; v <= static_cast<int>(quota.size()); ++v) {
            if (quota[v - 1] == 0)
                continue;
            --quota[v - 1];
            grid[r - 1][c - 1] = v;
            fill(idx + 1);
            grid[r - 1][c - 1] = 0;
            ++quota[v - 1];
        }
    }
};

}  // namespace

void for_each_ssyt(const Partition& outer, const Partition& inner, const Composition& content,
                   const std::function<void(const SkewTableau&)>& fn)
{
    if (!contains(outer, inner))
        throw std::invalid_argument("enumerate_ssyt: inner not contained in outer");
    if (outer.weight() - inner.weight() != content.weight())
        throw std::invalid_argument("enumerate_ssyt: weight mismatch");
    std::vector<Cell> cells;
    for (int r = 1; r <= outer.rows(); ++r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c)
            cells.push_back({r, c});
    SsytSearch search{outer, inner, content.parts(), std::move(cells),
                      std::vector<std::vector<int>>(
                          outer.rows(), std::vector<int>(outer.part(1), 0)),
                      fn};
    search.fill(0);
}

std::vector<SkewTableau> enumerate_ssyt(const Partition& outer, const Partition& inner,
                                        const Composition& content)
{
    std::vector<SkewTableau> out;
    for_each_ssyt(outer, inner, content, [&](const SkewTableau& t) { out.push_back(t); });
    return out;
}

long long count_ssyt(const Partition& outer, const Partition& inner, const Composition& content)
{
    long long n = 0;
    for_each_ssyt(outer, inner, content, [&](const SkewTableau&) { ++n; });
    return n;
}

std::vector<SkewTableau> lr_filter(const std::vector<SkewTableau>& ts)
{
    std::vector<SkewTableau> out;
    for (const auto& t : ts) {
        Word w = reading_word(t);
        int top = std::max(t.max_entry(), 1);
        if (is_yamanouchi(w, 1, top, false))
            out.push_back(t);
    }
    return out;
}

}  // namespace tf
