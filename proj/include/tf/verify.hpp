#pragma once

#include <string>
#include <vector>

#include "tf/partition.hpp"
#include "tf/tableau.hpp"

namespace tf {

/// Outcome of one theorem instance: both sides, the sign that was used, and
/// whether they agree.  `skipped` marks inputs the harness refuses to guess
/// about (rectangles padded with zero parts).
struct VerificationReport {
    std::string theorem;
    Partition lam;
    Partition mu;
    int m = 0;
    int n = 0;
    int d = 0;  // promotion-power exponent, or ell for corprom
    bool uses_ell = false;
    long long lhs = 0;
    long long rhs = 0;
    int sign = 1;
    bool sign_indeterminate = false;  // both sides vanished
    bool skipped = false;
    std::string note;
    bool pass = false;

    std::string json() const;
    std::string tsv() const;
    static std::string tsv_header();
};

/// Content (mu_m, ..., mu_1, mu_1, ..., mu_m) of length 2m.
Composition mu_bar_mu(const Partition& mu, int m);
/// Content (mu_1, ..., mu_m) repeated n times.
Composition mu_power(const Partition& mu, int m, int n);

/// Tableaux of shape lam and content mu_bar_mu whose word is anti-Yamanouchi
/// in {1..m} and Yamanouchi in {m+1..2m}.
std::vector<SkewTableau> enumerate_eytab(const Partition& lam, const Partition& mu, int m);

/// Tableaux of shape lam and content mu^n whose word is Yamanouchi in every
/// block {km+1..(k+1)m}.
std::vector<SkewTableau> enumerate_pytab(const Partition& lam, const Partition& mu, int m,
                                         int n);

/// Fixed points of evacuation over EYTab (restricted) or all of
/// Tab(lam, mu_bar_mu); evacuation must map the restricted set into itself.
long long evac_fixed_count(const Partition& lam, const Partition& mu, int m, bool restricted);

/// Fixed points of j^d with j = pr^m over PYTab (restricted) or all of
/// Tab(lam, mu^n); lam must be rectangular with exactly m*n parts.
long long prom_fixed_count(const Partition& lam, const Partition& mu, int m, int n, int d,
                           bool restricted);

VerificationReport check_mainevac(const Partition& lam, const Partition& mu, int m);
VerificationReport check_mainprom(const Partition& lam, const Partition& mu, int m, int n,
                                  int d);
VerificationReport check_corprom(const Partition& lam, const Partition& mu, int m, int n,
                                 int ell);
VerificationReport check_stembridge(const Partition& lam, const Partition& mu, int m);
VerificationReport check_rhoades(const Partition& lam, const Partition& mu, int m, int n,
                                 int d);

/// Declarative sweep bounds; instances are generated from these rather than
/// from hard-coded loops.
struct SweepBounds {
    int max_weight = 6;
    std::vector<int> ms = {1, 2};
    std::vector<int> ns = {2, 3};
    int threads = 1;
};

/// Run the named theorem sweep ("mainevac", "mainprom", "corprom",
/// "stembridge", "rhoades", or "all") within the bounds.  Reports come back
/// in deterministic instance order regardless of thread count.
std::vector<VerificationReport> run_sweep(const std::string& theorem, const SweepBounds& bounds);

/// Sweep-level sign check: every non-skipped instance with a nonzero right
/// side must carry a strictly positive signed coefficient.
bool sign_sweep_consistent(const std::vector<VerificationReport>& reports);

}  // namespace tf
