#pragma once

// Generalised decomposition numbers d^u_{chi,phi}, defined by
//   chi(us) = sum_{phi in IBr(C_G(u))} d^u_{chi,phi} phi(s),  s in C_G(u)_{p'},
// computed both by Brauer reciprocity and by an exact linear solve.

#include <cstdint>
#include <string>
#include <vector>

#include "pcond/blocks.hpp"
#include "pcond/tables.hpp"

namespace pcond {

/// chi(us) for each p-regular class s of C_G(u), in the order of the
/// centralizer's regular_classes.
std::vector<CycloNum> section_values(const CharTable& group, int chi, const SectionData& sec);

/// d^u_{chi,phi} = (1/|C_G(u)|) sum_{s regular} |s| chi(us) Psi_phi(s^-1).
std::vector<CycloNum> gendec_reciprocity(const CharTable& group, int chi, const SectionData& sec);

/// Solves chi(us) = sum_phi d_phi phi(s) exactly.  Throws InvariantError if the
/// Brauer table of the centralizer is singular.
std::vector<CycloNum> gendec_solve(const CharTable& group, int chi, const SectionData& sec);

struct GendecSection {
    int u_class = 0;
    std::int64_t u_order = 1;
    /// points into GendecMatrix::prime
    const SectionData* data = nullptr;
    /// rows = Irr(G), columns = IBr(C_G(u))
    Matrix<CycloNum> d;
};

struct GendecMatrix {
    std::int64_t p = 2;
    DatasetPtr dataset;
    std::shared_ptr<const PrimeData> prime;
    std::vector<GendecSection> sections;

    int num_irr() const { return dataset->table->num_irr(); }
    /// Entries for the generalised character with the given Irr-coordinates,
    /// one vector per section.
    std::vector<std::vector<CycloNum>> row(const std::vector<std::int64_t>& coords) const;
};

/// Both methods for every section; throws InvariantError when they disagree.
GendecMatrix gendec_all(const DatasetPtr& ds, std::int64_t p);

struct GendecViolation {
    std::string check;
    int chi = 0;
    int u_class = 0;
    int phi = 0;
    std::string detail;
};

/// d^u_{chi,phi} = 0 unless chi lies in the Brauer correspondent of phi's block
/// of C_G(u), and whenever |u| exceeds the defect group order of chi's block.
std::vector<GendecViolation> check_second_main(const GendecMatrix& gm, const std::vector<Block>& blocks);

/// sum_phi d^u_{chi,phi} phi(s) = chi(us) on every section.
std::vector<GendecViolation> check_round_trip(const GendecMatrix& gm);

/// Entries are algebraic integers in Q(zeta_|u|), and d^1 = D.
std::vector<GendecViolation> check_entries(const GendecMatrix& gm);

/// sum_chi d^u_{chi,phi} conj(d^u_{chi,psi}) = Cartan matrix of C_G(u), with
/// conj = galois(., -1).
std::vector<GendecViolation> check_orthogonality(const GendecMatrix& gm);

}  // namespace pcond
