#include "tf/ribbon.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tf {

int Ribbon::height() const
{
    if (cells.empty())
        return 0;
    int lo = cells.front().row, hi = cells.front().row;
    for (const Cell& c : cells) {
        lo = std::min(lo, c.row);
        hi = std::max(hi, c.row);
    }
    return hi - lo + 1;
}

int RibbonTableau::spin_parity() const
{
    int parity = 0;
    for (const Ribbon& r : tiling.ribbons)
        parity ^= (r.height() - 1) & 1;
    return parity;
}

std::string RibbonTableau::str() const
{
    std::string out;
    for (size_t i = 0; i < tiling.ribbons.size(); ++i) {
        if (i)
            out += ';';
        out += '[';
        for (const Cell& c : tiling.ribbons[i].cells)
            out += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
        out += "]=" + std::to_string(entries[i]);
    }
    return out.empty() ? "-" : out;
}

namespace {

// Border ribbons removable from nu while staying a Young diagram, as
// (smaller shape, removed cells) pairs.  Bead moves b -> b-r on the abacus.
std::vector<std::pair<Partition, Ribbon>> removable_ribbons(const Partition& nu, int r)
{
    std::vector<std::pair<Partition, Ribbon>> out;
    int slots = nu.rows() + 1;
    auto beta = detail::beta_numbers(nu, slots);
    std::set<long long> beads(beta.begin(), beta.end());
    for (long long b : beta) {
        if (b < r || beads.count(b - r))
            continue;
        std::set<long long> moved = beads;
        moved.erase(b);
        moved.insert(b - r);
        std::vector<long long> sorted(moved.rbegin(), moved.rend());
        std::vector<int> parts;
        for (int i = 1; i <= slots; ++i)
            parts.push_back(static_cast<int>(sorted[i - 1] - (slots - i)));
        Partition smaller{std::move(parts)};
        Ribbon ribbon;
        for (int row = 1; row <= nu.rows(); ++row)
            for (int col = smaller.part(row) + 1; col <= nu.part(row); ++col)
                ribbon.cells.push_back({row, col});
        out.emplace_back(std::move(smaller), std::move(ribbon));
    }
    return out;
}

bool columns_disjoint(const Ribbon& a, const std::vector<Ribbon>& chosen)
{
    for (const Cell& c : a.cells)
        for (const Ribbon& other : chosen)
            for (const Cell& d : other.cells)
                if (c.col == d.col)
                    return false;
    return true;
}

// One layer: all ways to peel `count` ribbons off nu with pairwise disjoint
// column sets.  Different peel orders can reach the same layer, so the
// results are deduplicated.
using Layer = std::pair<Partition, std::vector<Ribbon>>;

void peel_layer(const Partition& nu, int r, int count, std::vector<Ribbon>& chosen,
                std::set<Layer>& out)
{
    if (count == 0) {
        std::vector<Ribbon> sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        out.insert({nu, std::move(sorted)});
        return;
    }
    for (auto& [smaller, ribbon] : removable_ribbons(nu, r)) {
        if (!columns_disjoint(ribbon, chosen))
            continue;
        chosen.push_back(ribbon);
        peel_layer(smaller, r, count - 1, chosen, out);
        chosen.pop_back();
    }
}

void build_tableaux(const Partition& nu, int r, const Composition& content, int entry,
                    std::vector<std::pair<int, Ribbon>>& acc, std::vector<RibbonTableau>& out)
{
    if (entry == 0) {
        if (!nu.empty())
            return;
        // Canonical order: by entry, then by cell set.
        std::vector<std::pair<int, Ribbon>> sorted = acc;
        std::sort(sorted.begin(), sorted.end());
        RibbonTableau t;
        for (auto& [e, ribbon] : sorted) {
            t.tiling.ribbons.push_back(std::move(ribbon));
            t.entries.push_back(e);
        }
        out.push_back(std::move(t));
        return;
    }
    std::set<Layer> layers;
    std::vector<Ribbon> chosen;
    peel_layer(nu, r, content.part(entry), chosen, layers);
    for (const Layer& layer : layers) {
        for (const Ribbon& ribbon : layer.second)
            acc.emplace_back(entry, ribbon);
        build_tableaux(layer.first, r, content, entry - 1, acc, out);
        acc.resize(acc.size() - layer.second.size());
    }
}

}  // namespace

std::vector<RibbonTiling> enumerate_tilings(const Partition& shape, int r)
{
    if (r < 1)
        throw std::invalid_argument("enumerate_tilings: r must be positive");
    if (shape.weight() % r != 0)
        return {};
    std::set<std::vector<Ribbon>> seen;
    std::vector<Ribbon> chosen;
    // DFS over peel orders; the set collapses orderings of one tiling.
    auto rec = [&](auto&& self, const Partition& nu) -> void {
        if (nu.empty()) {
            std::vector<Ribbon> sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            seen.insert(std::move(sorted));
            return;
        }
        for (auto& [smaller, ribbon] : removable_ribbons(nu, r)) {
            chosen.push_back(ribbon);
            self(self, smaller);
            chosen.pop_back();
        }
    };
    rec(rec, shape);
    std::vector<RibbonTiling> out;
    for (const auto& ribbons : seen)
        out.push_back(RibbonTiling{ribbons});
    return out;
}

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& shape, int r,
                                                     const Composition& content)
{
    if (r < 1)
        throw std::invalid_argument("enumerate_ribbon_tableaux: r must be positive");
    if (!r_core(shape, r).empty())
        throw std::invalid_argument("enumerate_ribbon_tableaux: nonempty r-core");
    if (content.weight() * r != shape.weight())
        throw std::invalid_argument("enumerate_ribbon_tableaux: weight mismatch");
    std::vector<RibbonTableau> out;
    std::vector<std::pair<int, Ribbon>> acc;
    build_tableaux(shape, r, content, content.length(), acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

Word domino_reading_word(const RibbonTableau& d)
{
    struct Event {
        int col, row, entry;
    };
    std::vector<Event> events;
    for (size_t i = 0; i < d.tiling.ribbons.size(); ++i) {
        const Ribbon& rb = d.tiling.ribbons[i];
        if (rb.cells.size() != 2)
            throw std::invalid_argument("domino_reading_word: not a domino tableau");
        const Cell &a = rb.cells[0], &b = rb.cells[1];
        if (a.row == b.row)  // horizontal: read in the left column
            events.push_back({std::min(a.col, b.col), a.row, d.entries[i]});
        else  // vertical: read at the bottom cell
            events.push_back({a.col, std::max(a.row, b.row), d.entries[i]});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.col != b.col)
            return a.col < b.col;
        return a.row > b.row;
    });
    Word w;
    for (const Event& e : events)
        w.push_back(e.entry);
    return w;
}

std::vector<RibbonTableau> enumerate_yamanouchi_domino(const Partition& shape,
                                                       const Composition& content)
{
    if (!r_core(shape, 2).empty())
        throw std::invalid_argument("enumerate_yamanouchi_domino: nonempty 2-core");
    std::vector<RibbonTableau> out;
    int top = std::max(content.length(), 1);
    for (auto& d : enumerate_ribbon_tableaux(shape, 2, content))
        if (is_yamanouchi(domino_reading_word(d), 1, top, false))
            out.push_back(std::move(d));
    return out;
}

}  // namespace tf
