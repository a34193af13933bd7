#include "tf/symfunc.hpp"

#include <stdexcept>

#include "tf/tableau.hpp"

namespace tf {

SchurExpansion SchurExpansion::schur(const Partition& p)
{
    SchurExpansion f;
    f.add_term(p, 1);
    return f;
}

void SchurExpansion::add_term(const Partition& p, ZZ coeff)
{
    if (coeff == ZZ(0))
        return;
    if (degree_ < 0)
        degree_ = p.weight();
    else if (degree_ != p.weight())
        throw std::invalid_argument("SchurExpansion: mixed degrees");
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == ZZ(0))
        terms_.erase(it);
    if (terms_.empty())
        degree_ = -1;
}

ZZ SchurExpansion::coefficient(const Partition& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? ZZ(0) : it->second;
}

std::string SchurExpansion::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty())
            out += ' ';
        long long c = it->second.value();
        out += (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c) + "*[";
        const auto& parts = it->first.parts();
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts[i]);
        }
        out += ']';
    }
    return out;
}

ZZ inner_product(const SchurExpansion& f, const SchurExpansion& g)
{
    ZZ sum = 0;
    for (const auto& [p, c] : f.terms())
        sum += c * g.coefficient(p);
    return sum;
}

ZZ lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lam)
{
    if (!contains(lam, mu) || lam.weight() != mu.weight() + nu.weight())
        return 0;
    auto witnesses = lr_filter(enumerate_ssyt(lam, mu, Composition(nu.parts())));
    return static_cast<long long>(witnesses.size());
}

SchurExpansion schur_product(const SchurExpansion& f, const SchurExpansion& g)
{
    SchurExpansion out;
    if (f.is_zero() || g.is_zero())
        return out;
    int total = static_cast<int>(f.degree() + g.degree());
    for (const auto& [mu, cf] : f.terms()) {
        for (const auto& [nu, cg] : g.terms()) {
            for (const auto& lam : partitions_of(total)) {
                if (!contains(lam, mu))
                    continue;
                ZZ c = lr_coefficient(mu, nu, lam);
                if (c != ZZ(0))
                    out.add_term(lam, cf * cg * c);
            }
        }
    }
    return out;
}

ZZ kostka(const Partition& lam, const Composition& content)
{
    if (lam.weight() != content.weight())
        return 0;
    return count_ssyt(lam, Partition(), content);
}

namespace {

// Dominance test for equal-weight partitions: every prefix sum of a at least
// matches that of b.
bool dominates(const Partition& a, const Partition& b)
{
    long long sa = 0, sb = 0;
    int rows = std::max(a.rows(), b.rows());
    for (int i = 1; i <= rows; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb)
            return false;
    }
    return true;
}

}  // namespace

DominantPoly schur_dominant(const Partition& lam, int nvars)
{
    DominantPoly out;
    for (const auto& nu : partitions_of(static_cast<int>(lam.weight()), nvars)) {
        if (!dominates(lam, nu))
            continue;
        ZZ k = kostka(lam, Composition(nu.parts()));
        if (k != ZZ(0))
            out.emplace(nu, k);
    }
    return out;
}

SchurExpansion expand_dominant(DominantPoly poly, int nvars)
{
    SchurExpansion out;
    while (!poly.empty()) {
        auto lead = std::prev(poly.end());  // lexicographically largest key
        Partition nu = lead->first;
        ZZ c = lead->second;
        out.add_term(nu, c);
        for (const auto& [rho, k] : schur_dominant(nu, nvars)) {
            auto it = poly.find(rho);
            ZZ next = (it == poly.end() ? ZZ(0) : it->second) - c * k;
            if (it != poly.end())
                poly.erase(it);
            if (next != ZZ(0))
                poly.emplace(rho, next);
        }
    }
    return out;
}

SchurExpansion plethysm_power(int k, const SchurExpansion& f)
{
    if (k < 1)
        throw std::invalid_argument("plethysm_power: k must be positive");
    if (k == 1 || f.is_zero())
        return f;
    int nvars = static_cast<int>(k * f.degree());
    DominantPoly substituted;
    for (const auto& [lam, c] : f.terms()) {
        for (const auto& [nu, kost] : schur_dominant(lam, nvars)) {
            // x_i -> x_i^k scales every exponent vector by k.
            std::vector<int> scaled;
            for (int part : nu.parts())
                scaled.push_back(part * k);
            Partition key{std::move(scaled)};
            auto it = substituted.find(key);
            ZZ next = (it == substituted.end() ? ZZ(0) : it->second) + c * kost;
            if (it != substituted.end())
                substituted.erase(it);
            if (next != ZZ(0))
                substituted.emplace(key, next);
        }
    }
    return expand_dominant(std::move(substituted), nvars);
}

SchurExpansion phi_adjoint(int k, const Partition& lam)
{
    if (k < 1)
        throw std::invalid_argument("phi_adjoint: k must be positive");
    if (!r_core(lam, k).empty())
        return SchurExpansion();
    SchurExpansion out = SchurExpansion::schur(Partition());
    for (const auto& q : r_quotient(lam, k))
        out = schur_product(out, SchurExpansion::schur(q));
    SchurExpansion signed_out;
    ZZ sign = r_sign(lam, k);
    for (const auto& [p, c] : out.terms())
        signed_out.add_term(p, sign * c);
    return signed_out;
}

ZZ plethysm_coefficient(int n, int d, const Partition& mu, const Partition& lam)
{
    if (n < 1 || d < 1 || n % d != 0)
        throw std::invalid_argument("plethysm_coefficient: d must divide n");
    if (n * mu.weight() != lam.weight())
        throw std::invalid_argument("plethysm_coefficient: weight mismatch");
    SchurExpansion base = plethysm_power(n / d, SchurExpansion::schur(mu));
    SchurExpansion power = base;
    for (int i = 1; i < d; ++i)
        power = schur_product(power, base);
    return power.coefficient(lam);
}

}  // namespace tf
