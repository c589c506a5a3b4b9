#pragma once

// Perfect isometries between blocks: Gram check, Broue's integrality and
// separation conditions, exhaustive search over signed bijections, and the
// conductor / L^0 preservation conclusions.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcond/blocks.hpp"
#include "pcond/tables.hpp"

namespace pcond {

struct BlockRef {
    std::string group;
    TablePtr table;
    BrauerPtr brauer;
    Block block;

    std::int64_t p() const { return brauer->p; }
    int size() const { return static_cast<int>(block.irr.size()); }
};

/// Block `id` of ds at p (ids as numbered by partition_blocks).
BlockRef block_ref(const GroupDataset& ds, std::int64_t p, int id);
/// Block `id` of a subgroup at p.
BlockRef block_ref(const SubgroupEmbedding& emb, std::int64_t p, int id);

struct IsometryCandidate {
    BlockRef source;
    BlockRef target;
    /// matrix[i][j] = multiplicity of target.block.irr[i] in Phi(source.block.irr[j])
    IntMatrix matrix;
    /// set for signed bijections: Phi(chi_j) = signs[j] * chi'_{permutation[j]}
    std::vector<int> permutation;
    std::vector<int> signs;

    static IsometryCandidate signed_bijection(BlockRef source, BlockRef target, std::vector<int> permutation,
                                              std::vector<int> signs);
    bool is_signed_bijection() const { return !permutation.empty(); }
    /// Phi(chi_j) as a class function on the target table.
    ClassFunction image(int j) const;
};

/// <Phi a, Phi b> = <a, b> on Irr(B), i.e. M^T M = I.  Throws
/// std::invalid_argument on a size mismatch.
bool check_isometry(const IsometryCandidate& cand);

struct PerfectionReport {
    bool is_isometry = false;
    bool integrality_ok = false;
    bool separation_ok = false;
    bool conductor_preserved = false;
    bool l0_preserved = false;
    std::vector<std::string> witnesses;

    bool perfect() const { return is_isometry && integrality_ok && separation_ok; }
};

/// mu(g,g') = sum_j chi_j(g) Phi(chi_j)(g') on all class pairs:
/// mu/|C_G(g)| and mu/|C_G'(g')| lie in the p-local ring O (equivalently mu is
/// divisible by the p-parts of both centralizer orders), and mu = 0 when
/// exactly one of g, g' is p-regular.  Also fills the two preservation flags.
PerfectionReport check_perfection(const IsometryCandidate& cand);

struct ConductorCheck {
    bool ok = true;
    std::vector<std::string> witnesses;
};

/// c(chi)_p = c(Phi(chi))_p for every chi in the source block.
ConductorCheck check_conductor_preservation(const IsometryCandidate& cand, std::int64_t p);

/// Z-basis (Irr(B)-coordinates) of the generalised characters of B vanishing
/// on p-regular classes.
IntMatrix l0_basis(const BlockRef& b);

/// Phi maps L^0(B) into L^0(B').
bool check_l0_preservation(const IsometryCandidate& cand, std::int64_t p);

class SearchRefused : public std::runtime_error {
public:
    SearchRefused(std::int64_t candidates, int size, int bound)
        : std::runtime_error("refusing to enumerate " + std::to_string(candidates) + " signed bijections (" +
                             std::to_string(size) + " characters, bound " + std::to_string(bound) + ")"),
          candidates_(candidates) {}
    std::int64_t candidates() const noexcept { return candidates_; }

private:
    std::int64_t candidates_;
};

struct SearchOptions {
    int bound = 6;
    int jobs = 0;  // 0: hardware concurrency
};

/// All perfect signed bijections, in lexicographic (permutation, signs) order
/// with sign +1 before -1.  Throws std::invalid_argument when the blocks have
/// different sizes and SearchRefused above the bound.
std::vector<IsometryCandidate> search_perfect_isometries(const BlockRef& a, const BlockRef& b,
                                                         const SearchOptions& opts = {});
/// Number of signed bijections examined by a search of size n.
std::int64_t search_space(int n);

/// JSON certificate {source:{group,prime,block}, target:{...}, permutation, signs}.
std::string certificate_json(const IsometryCandidate& cand);

struct Certificate {
    std::string source_group, target_group;
    std::int64_t source_prime = 0, target_prime = 0;
    int source_block = 0, target_block = 0;
    std::vector<int> permutation, signs;
};

/// Throws SchemaError on malformed input.
Certificate parse_certificate(const std::string& text);

}  // namespace pcond
