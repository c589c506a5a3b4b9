#pragma once

// Group datasets: ordinary character tables with class metadata and power
// maps, per-prime Brauer data, p-sections and subgroup embeddings, plus
// class-function arithmetic and character conductors.
//
// Everything is ingested from JSON (see load_dataset) and immutable after
// loading; tables are shared through std::shared_ptr<const CharTable>.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcond/cyclo.hpp"
#include "pcond/linalg.hpp"

namespace pcond {

struct ClassData {
    std::string name;
    std::int64_t size = 1;
    std::int64_t element_order = 1;
    /// prime q -> class of g^q
    std::map<std::int64_t, int> power_maps;
};

class CharTable {
public:
    std::string group_name;
    std::int64_t group_order = 1;
    /// Ambient root-of-unity order N; every value lies in Q(zeta_N).
    std::int64_t exponent = 1;
    std::vector<ClassData> classes;
    /// rows = Irr(G), columns = classes
    Matrix<CycloNum> irreducibles;

    int num_classes() const { return static_cast<int>(classes.size()); }
    int num_irr() const { return static_cast<int>(irreducibles.size()); }
    std::int64_t class_size(int c) const { return classes.at(c).size; }
    std::int64_t element_order(int c) const { return classes.at(c).element_order; }
    std::int64_t centralizer_order(int c) const { return group_order / classes.at(c).size; }
    static constexpr int identity_class() { return 0; }
    const CycloNum& value(int chi, int c) const { return irreducibles.at(chi).at(c); }
    std::int64_t degree(int chi) const;
    bool is_p_regular(int c, std::int64_t p) const { return element_order(c) % p != 0; }
    bool is_p_element(int c, std::int64_t p) const;

    /// Class of g^k (k >= 0) for g in class c, composing the prime power maps
    /// of the prime factors of k mod element_order.  Primes without an
    /// ingested power map (those coprime to the group exponent) are resolved
    /// by matching the Galois-twisted column.
    int power_class(int c, std::int64_t k) const;
    /// Class of g^-1.
    int inverse_class(int c) const { return power_class(c, element_order(c) - 1); }

    /// (u, s) with g = us = su, u of p-power order and s p-regular.
    std::pair<int, int> p_decompose(int c, std::int64_t p) const;

    /// Checks class sizes, power maps, both orthogonality relations and the
    /// degree column; throws InvariantError naming the failing identity.
    void validate() const;

private:
    int galois_class(int c, std::int64_t k) const;
};

using TablePtr = std::shared_ptr<const CharTable>;

/// A K-valued class function on one table.  When the function lies in
/// ZIrr(G) its integer Irr-coordinates are computed at construction.
class ClassFunction {
public:
    ClassFunction(TablePtr table, std::vector<CycloNum> values);
    static ClassFunction irreducible(TablePtr table, int chi);
    static ClassFunction from_coordinates(TablePtr table, std::vector<std::int64_t> coords);
    static ClassFunction zero(TablePtr table);

    const CharTable& table() const { return *table_; }
    const TablePtr& table_ptr() const { return table_; }
    const std::vector<CycloNum>& values() const { return values_; }
    const CycloNum& operator[](int c) const { return values_.at(c); }
    /// Integer Irr-coordinates when this is a generalised character.
    const std::optional<std::vector<std::int64_t>>& coordinates() const { return coords_; }
    bool is_virtual_character() const { return coords_.has_value(); }
    bool is_character() const;

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator*(std::int64_t k, const ClassFunction& a);
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.table_ == b.table_ && a.values_ == b.values_;
    }

private:
    ClassFunction(TablePtr table, std::vector<CycloNum> values, std::optional<std::vector<std::int64_t>> coords)
        : table_(std::move(table)), values_(std::move(values)), coords_(std::move(coords)) {}

    TablePtr table_;
    std::vector<CycloNum> values_;
    std::optional<std::vector<std::int64_t>> coords_;
};

/// (1/|G|) sum_c |c| a(c) conj(b(c)).  Throws std::invalid_argument when the
/// functions live on different tables.
CycloNum inner_product(const ClassFunction& a, const ClassFunction& b);

/// Conductor of the value set of chi, or its p-part when p is given.
std::int64_t char_conductor(const ClassFunction& chi, std::optional<std::int64_t> p = std::nullopt);

// ---------------------------------------------------------------------------
// Brauer data, sections, subgroups

struct BrauerData {
    std::int64_t p = 2;
    /// classes of p'-order, in table order
    std::vector<int> regular_classes;
    /// rows = IBr(G), columns = regular_classes
    Matrix<CycloNum> ibr;
    /// rows = Irr(G), columns = IBr(G)
    IntMatrix decomposition;
    std::vector<int> block_of_irr;
    std::vector<int> block_of_ibr;

    int num_ibr() const { return static_cast<int>(ibr.size()); }
    int num_blocks() const;

    /// Trivial data for a prime not dividing the group order: every class is
    /// regular, IBr = Irr, D = identity and every character is its own block.
    static BrauerData coprime(const CharTable& table, std::int64_t p);

    /// Shape checks plus the Brauer consistency identity
    /// chi(s) = sum_phi D[chi][phi] phi(s) and full row rank of ibr.
    void validate(const CharTable& table) const;
};

using BrauerPtr = std::shared_ptr<const BrauerData>;

/// The p-section of a p-element u: C_G(u) with its Brauer data at p, the
/// fusion of C_G(u)-classes into G, and multiplication by u on C_G(u)-classes.
struct SectionData {
    int u_class = 0;
    TablePtr centralizer;
    BrauerPtr centralizer_brauer;
    std::vector<int> fusion;
    int u_in_centralizer = 0;
    std::vector<int> u_times;
    /// block of C_G(u) -> Brauer-correspondent block of G
    std::map<int, int> correspondent_block;

    void validate(const CharTable& group, std::int64_t p) const;
};

struct PrimeData {
    BrauerPtr brauer;
    /// one entry per p-element class of G (identity included), ordered by class
    std::vector<SectionData> sections;
};

struct SubgroupPrimeData {
    BrauerPtr brauer;
    /// the Sylow p-subgroup P lies in H and P meets its G-conjugates outside H trivially
    bool ti = false;
    bool cyclic_defect = false;
    /// p-element classes u of G having a representative with C_G(u) <= H
    std::vector<int> centralizer_classes;
    /// block of G -> Brauer-correspondent block of H (full-defect blocks)
    std::map<int, int> correspondent_block;
};

struct SubgroupEmbedding {
    std::string name;
    TablePtr subgroup;
    TablePtr group;
    /// subgroup class -> group class
    std::vector<int> fusion;
    std::map<std::int64_t, SubgroupPrimeData> primes;

    /// Identity embedding of a table into itself.
    static SubgroupEmbedding identity(TablePtr table);
    void validate() const;
};

class GroupDataset {
public:
    std::string source;
    TablePtr table;
    std::int64_t ambient_order = 1;
    std::map<std::int64_t, PrimeData> primes;
    std::vector<SubgroupEmbedding> subgroups;

    const std::string& name() const { return table->group_name; }
    /// Primes dividing the group order.
    std::vector<std::int64_t> relevant_primes() const;
    /// Ingested data for p, or the coprime data (identity section only) when
    /// p does not divide |G|.  Throws std::out_of_range otherwise.
    PrimeData prime_data(std::int64_t p) const;
};

using DatasetPtr = std::shared_ptr<const GroupDataset>;

/// Parses, canonicalizes and validates a dataset file.  Throws SchemaError
/// (with a field path) or InvariantError.
DatasetPtr load_dataset(const std::filesystem::path& path);
/// Same from an in-memory JSON document; `origin` labels error messages.
DatasetPtr parse_dataset(const std::string& json_text, const std::string& origin = "<memory>");

struct ManifestSubgroup {
    std::string name;
    std::vector<std::int64_t> primes;
    /// primes at which the embedding is flagged TI
    std::vector<std::int64_t> ti;
};

/// One line of a corpus manifest.
struct ManifestEntry {
    std::string group;
    std::filesystem::path file;
    std::vector<std::int64_t> primes;
    std::vector<ManifestSubgroup> subgroups;
};

/// Reads <dir>/manifest.json; file paths are resolved against dir.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& dir);

}  // namespace pcond
