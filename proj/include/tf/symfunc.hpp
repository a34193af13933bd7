#pragma once

#include <map>
#include <string>

#include "tf/checked.hpp"
#include "tf/partition.hpp"

namespace tf {

/// Integer linear combination of Schur functions of one common degree.
/// Coefficients are overflow-checked; zero coefficients are never stored.
class SchurExpansion {
public:
    SchurExpansion() = default;
    static SchurExpansion schur(const Partition& p);

    void add_term(const Partition& p, ZZ coeff);
    ZZ coefficient(const Partition& p) const;
    const std::map<Partition, ZZ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Common weight of the keys; -1 while empty.
    long long degree() const { return degree_; }

    /// "+1*[4] -1*[3,1] +1*[2,2]", keys in descending lexicographic order;
    /// the zero expansion prints as "0".
    std::string str() const;

    friend auto operator<=>(const SchurExpansion&, const SchurExpansion&) = default;

private:
    std::map<Partition, ZZ> terms_;
    long long degree_ = -1;
};

/// Sum over common keys of the coefficient products.  Expansions of unequal
/// degree are orthogonal, so the result is then 0.
ZZ inner_product(const SchurExpansion& f, const SchurExpansion& g);

/// Littlewood-Richardson coefficient <s_mu s_nu, s_lam>: the number of
/// semistandard skew tableaux of shape lam/mu and content nu with Yamanouchi
/// reading word; 0 when the shapes make that impossible.
ZZ lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lam);

/// Bilinear extension of s_mu * s_nu = sum of c^lam_{mu,nu} s_lam.
SchurExpansion schur_product(const SchurExpansion& f, const SchurExpansion& g);

/// p_k composed with f: substitute x_i -> x_i^k in a monomial realization in
/// k*degree variables and re-expand on the Schur basis.
SchurExpansion plethysm_power(int k, const SchurExpansion& f);

/// Adjoint of p_k composition: the k-sign times the product of the Schur
/// functions of the k-quotient when the k-core of lam is empty, zero
/// otherwise.
SchurExpansion phi_adjoint(int k, const Partition& lam);

/// <p_{n/d}^d composed with s_mu, s_lam>; requires d | n and n|mu| = |lam|.
ZZ plethysm_coefficient(int n, int d, const Partition& mu, const Partition& lam);

/// Number of semistandard tableaux of shape lam and the given content.
ZZ kostka(const Partition& lam, const Composition& content);

/// Symmetric polynomial tracked by its dominant monomials (exponent vectors
/// that are partitions).  Faithful for symmetric functions, and enough for
/// the leading-term re-expansion used by plethysm_power.
using DominantPoly = std::map<Partition, ZZ>;

/// Dominant monomials of the Schur polynomial of lam in nvars variables.
DominantPoly schur_dominant(const Partition& lam, int nvars);

/// Inverse of Schur realization by repeated subtraction of the
/// lexicographically leading term.
SchurExpansion expand_dominant(DominantPoly poly, int nvars);

}  // namespace tf
