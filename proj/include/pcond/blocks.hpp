#pragma once

// p-blocks from central characters, projective indecomposable characters,
// Cartan matrices and block components of generalised characters.

#include <cstdint>
#include <vector>

#include "pcond/tables.hpp"

namespace pcond {

struct Block {
    int id = 0;
    std::vector<int> irr;
    std::vector<int> ibr;
    int defect = 0;
};

/// omega_chi(c) = |c| chi(c) / chi(1) for every class c.
std::vector<CycloNum> central_character(const CharTable& table, int chi);

/// Blocks as residue classes of central characters modulo a prime above p,
/// numbered by (defect descending, least Irr index).  Brauer characters are
/// attached through D.  Throws InvariantError if the result differs from the
/// ingested labels in bd.
std::vector<Block> partition_blocks(const CharTable& table, const BrauerData& bd);

/// Blocks read off the ingested labels, without the residue computation.
std::vector<Block> blocks_from_labels(const CharTable& table, const BrauerData& bd);

/// Psi_phi = sum_chi D[chi][phi] chi, one per Brauer character.  Throws
/// InvariantError if some Psi_phi does not vanish on a p-singular class.
std::vector<ClassFunction> projective_characters(const TablePtr& table, const BrauerData& bd);

/// D^T D.
IntMatrix cartan_matrix(const BrauerData& bd);

/// The part of psi supported on Irr(b).  psi must be a generalised character
/// (std::invalid_argument otherwise).
ClassFunction block_component(const ClassFunction& psi, const Block& b);

}  // namespace pcond
