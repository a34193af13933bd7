#include "tf/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tf {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

int parse_int(std::string_view tok)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad integer token '" + std::string(tok) + "'");
    return v;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
}

Partition Partition::parse(std::string_view text)
{
    if (text.empty() || text == "-")
        return Partition();
    std::vector<int> parts;
    for (auto tok : split(text, ',')) {
        int v = parse_int(tok);
        if (v <= 0)
            throw ParseError("partition parts must be positive in text form");
        parts.push_back(v);
    }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw ParseError("partition text not weakly decreasing");
    return Partition(std::move(parts));
}

std::string Partition::str() const
{
    if (parts_.empty())
        return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

long long Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int v : parts_)
        if (v < 0)
            throw std::invalid_argument("composition parts must be nonnegative");
}

Composition Composition::parse(std::string_view text)
{
    if (text.empty() || text == "-")
        return Composition();
    std::vector<int> parts;
    for (auto tok : split(text, ',')) {
        int v = parse_int(tok);
        if (v < 0)
            throw ParseError("composition parts must be nonnegative");
        parts.push_back(v);
    }
    return Composition(std::move(parts));
}

std::string Composition::str() const
{
    if (parts_.empty())
        return "-";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Composition::part(int i) const
{
    if (i < 1 || i > length())
        throw std::out_of_range("composition part index");
    return parts_[i - 1];
}

long long Composition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out;
    for (int i = 1; i <= p.part(1); ++i) {
        int count = 0;
        for (int v : p.parts())
            if (v >= i)
                ++count;
        out.push_back(count);
    }
    return Partition(std::move(out));
}

long long v_stat(const Partition& p)
{
    long long sum = 0;
    for (int i = 1; i <= p.rows(); ++i)
        sum += static_cast<long long>(i - 1) * p.part(i);
    return sum;
}

bool contains(const Partition& outer, const Partition& inner)
{
    for (int i = 1; i <= inner.rows(); ++i)
        if (inner.part(i) > outer.part(i))
            return false;
    return true;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner)
{
    if (!contains(outer, inner))
        throw std::invalid_argument("is_horizontal_strip: inner not contained in outer");
    for (int i = 1; i <= outer.rows(); ++i)
        if (outer.part(i + 1) > inner.part(i))
            return false;
    return true;
}

namespace detail {

std::vector<long long> beta_numbers(const Partition& p, int slots)
{
    if (slots < p.rows())
        throw std::invalid_argument("beta_numbers: too few slots");
    std::vector<long long> beta(slots);
    for (int i = 1; i <= slots; ++i)
        beta[i - 1] = p.part(i) + (slots - i);
    return beta;
}

std::vector<Partition> abacus_quotient(const Partition& p, int r)
{
    int slots = ((p.rows() + r - 1) / r) * r;
    if (slots == 0)
        slots = r;
    auto beta = beta_numbers(p, slots);
    std::vector<Partition> out;
    for (int runner = 0; runner < r; ++runner) {
        std::vector<long long> levels;
        for (long long b : beta)
            if (b % r == runner)
                levels.push_back(b / r);
        std::sort(levels.rbegin(), levels.rend());
        std::vector<int> parts;
        int k = static_cast<int>(levels.size());
        for (int i = 0; i < k; ++i)
            parts.push_back(static_cast<int>(levels[i] - (k - 1 - i)));
        out.emplace_back(std::move(parts));
    }
    return out;
}

}  // namespace detail

Partition r_core(const Partition& p, int r)
{
    if (r < 1)
        throw std::invalid_argument("r_core: r must be positive");
    int slots = ((p.rows() + r - 1) / r) * r;
    if (slots == 0)
        slots = r;
    auto beta = detail::beta_numbers(p, slots);
    // Slide every bead as far down its runner as it goes.
    std::vector<int> count(r, 0);
    for (long long b : beta)
        ++count[b % r];
    std::vector<long long> packed;
    for (int runner = 0; runner < r; ++runner)
        for (int level = 0; level < count[runner]; ++level)
            packed.push_back(static_cast<long long>(level) * r + runner);
    std::sort(packed.rbegin(), packed.rend());
    std::vector<int> parts;
    for (int i = 1; i <= slots; ++i)
        parts.push_back(static_cast<int>(packed[i - 1] - (slots - i)));
    return Partition(std::move(parts));
}

std::vector<Partition> r_quotient(const Partition& p, int r)
{
    if (r < 1)
        throw std::invalid_argument("r_quotient: r must be positive");
    if (!r_core(p, r).empty())
        throw std::invalid_argument("r_quotient: nonempty r-core");
    return detail::abacus_quotient(p, r);
}

int r_sign(const Partition& p, int r)
{
    if (r < 1)
        throw std::invalid_argument("r_sign: r must be positive");
    if (!r_core(p, r).empty())
        throw std::invalid_argument("r_sign: nonempty r-core");
    int slots = ((p.rows() + r - 1) / r) * r;
    if (slots == 0)
        slots = r;
    auto beta = detail::beta_numbers(p, slots);
    std::set<long long> beads(beta.begin(), beta.end());
    // Peel one ribbon per step: move a bead down r slots.  The ribbon height
    // minus one equals the number of beads passed over.
    long long parity = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (long long b : beads) {
            if (b >= r && !beads.count(b - r)) {
                auto lo = beads.upper_bound(b - r);
                auto hi = beads.lower_bound(b);
                parity += std::distance(lo, hi);
                beads.erase(b);
                beads.insert(b - r);
                moved = true;
                break;
            }
        }
    }
    return parity % 2 == 0 ? 1 : -1;
}

bool is_rectangular(const Partition& p, int declared_parts)
{
    if (p.rows() != declared_parts || p.empty())
        return false;
    return p.part(1) == p.part(p.rows());
}

namespace {

void gen_partitions(int n, int max_parts, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (max_parts == 0)
        return;
    for (int first = std::min(n, max_part); first >= 1; --first) {
        acc.push_back(first);
        gen_partitions(n - first, max_parts - 1, first, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts, int max_part)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, max_parts, max_part, acc, out);
    return out;
}

std::vector<Partition> partitions_of(int n, int max_parts)
{
    return partitions_of(n, max_parts, n);
}

std::vector<Partition> partitions_of(int n)
{
    return partitions_of(n, n, n);
}

namespace {

void gen_subpartitions(const Partition& outer, int row, int prev, std::vector<int>& acc,
                       std::vector<Partition>& out)
{
    if (row > outer.rows()) {
        out.push_back(Partition(acc));
        return;
    }
    for (int v = std::min(prev, outer.part(row)); v >= 0; --v) {
        acc.push_back(v);
        gen_subpartitions(outer, row + 1, v, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> subpartitions_of(const Partition& outer)
{
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_subpartitions(outer, 1, outer.part(1), acc, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

void gen_compositions(int n, int length, std::vector<int>& acc, std::vector<Composition>& out)
{
    if (length == 0) {
        if (n == 0)
            out.push_back(Composition(acc));
        return;
    }
    for (int v = 0; v <= n; ++v) {
        acc.push_back(v);
        gen_compositions(n - v, length - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions_of(int n, int length)
{
    if (n < 0 || length < 0)
        throw std::invalid_argument("compositions_of: negative arguments");
    std::vector<Composition> out;
    std::vector<int> acc;
    gen_compositions(n, length, acc, out);
    return out;
}

}  // namespace tf
