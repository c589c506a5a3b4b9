#pragma once

// Executable forms of the conductor theorems.  Failures are reported as
// records with witnesses rather than thrown: a failing check points at
// corrupted input.

#include <cstdint>
#include <string>
#include <vector>

#include "pcond/gendec.hpp"
#include "pcond/isometry.hpp"

namespace pcond {

struct CheckRecord {
    std::string character;
    std::string lhs;
    std::string rhs;
    std::string witness;
    bool pass = true;
};

struct VerificationReport {
    std::string check_name;
    std::string group;
    std::int64_t prime = 0;
    /// "checked" or "not-applicable"
    std::string status = "checked";
    std::string note;
    std::vector<CheckRecord> records;

    bool pass() const;
};

/// c(psi)_p against the p-part of the conductor of all d^u_{psi,phi}.
CheckRecord check_gendec_conductor(const GendecMatrix& gm, const ClassFunction& psi, const std::string& label);

/// c(psi)_p against max over (u, phi) of c(d^u_{psi,phi}); the witness is the
/// first maximizing (u, phi) in section order with d nonzero.
CheckRecord check_max_entry(const GendecMatrix& gm, const ClassFunction& psi, const std::string& label);

/// For each projective Psi_phi of chi's block: non-ordinary gendec rows of chi
/// and chi + Psi_phi agree, and c(chi + Psi_phi)_p = c(chi)_p.
CheckRecord check_projective_invariance(const GendecMatrix& gm, int chi);

/// Res^G_H chi.  Throws InvariantError when a (generalised) character does
/// not restrict to one, which means the fusion map is wrong.
ClassFunction restrict(const ClassFunction& chi, const SubgroupEmbedding& emb);

/// check_gendec_conductor on every irreducible, then on `samples` random generalised
/// characters per block with coordinates in [-3, 3].
VerificationReport gendec_conductor_report(const GendecMatrix& gm, std::uint64_t seed, int samples = 200);
VerificationReport max_entry_report(const GendecMatrix& gm);
VerificationReport projective_report(const GendecMatrix& gm);
/// Second Main theorem, round-trip, entry fields and orthogonality.
VerificationReport gendec_report(const GendecMatrix& gm);

/// Restriction suite for every subgroup embedding carrying data at p:
/// monotonicity c(Res chi)_p <= c(chi)_p and c(1_C Res chi)_p <= c(Res chi)_p;
/// for TI subgroups c(chi)_p = c(Res chi)_p = c(1_C Res chi)_p on the
/// corresponded blocks; the centralizer criterion when a maximizing u has
/// C_G(u) inside H; and for cyclic defect the bijection gamma with signs such
/// that 1_C Res chi - delta gamma(chi) is projective, checked for perfection
/// and c(gamma(chi))_p = c(chi)_p.
VerificationReport check_restriction_props(const GendecMatrix& gm);

}  // namespace pcond
