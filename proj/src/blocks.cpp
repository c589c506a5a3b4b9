#include "pcond/blocks.hpp"

#include <algorithm>
#include <map>

#include "pcond/errors.hpp"
#include "pcond/numtheory.hpp"
#include "pcond/residue.hpp"

namespace pcond {

std::vector<CycloNum> central_character(const CharTable& table, int chi) {
    const CycloNum inv_deg(Rational(1, table.degree(chi)));
    std::vector<CycloNum> w(table.num_classes());
    for (int c = 0; c < table.num_classes(); ++c) {
        w[c] = CycloNum(table.class_size(c)) * table.value(chi, c) * inv_deg;
        if (!w[c].is_algebraic_integer())
            throw InvariantError(table.group_name + ": central character of irreducible " + std::to_string(chi) +
                                 " is not integral at class " + table.classes[c].name);
    }
    return w;
}

namespace {

int block_defect(const CharTable& table, const std::vector<int>& irr, std::int64_t p) {
    int m = nt::valuation(table.group_order, p);
    for (int chi : irr) m = std::min(m, nt::valuation(table.degree(chi), p));
    return nt::valuation(table.group_order, p) - m;
}

// Orders groups of Irr indices by (defect descending, least index) and
// attaches Brauer characters through nonzero columns of D.
std::vector<Block> finish(const CharTable& table, const BrauerData& bd, std::vector<std::vector<int>> groups) {
    std::vector<Block> blocks;
    for (auto& g : groups) {
        Block b;
        std::sort(g.begin(), g.end());
        b.irr = g;
        b.defect = block_defect(table, g, bd.p);
        blocks.push_back(std::move(b));
    }
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        return a.defect != b.defect ? a.defect > b.defect : a.irr.front() < b.irr.front();
    });
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Block& b = blocks[i];
        b.id = static_cast<int>(i);
        for (int phi = 0; phi < bd.num_ibr(); ++phi)
            for (int chi : b.irr)
                if (bd.decomposition[chi][phi] != 0) {
                    b.ibr.push_back(phi);
                    break;
                }
    }
    return blocks;
}

}  // namespace

std::vector<Block> blocks_from_labels(const CharTable& table, const BrauerData& bd) {
    std::vector<std::vector<int>> groups(bd.num_blocks());
    for (int chi = 0; chi < table.num_irr(); ++chi) groups.at(bd.block_of_irr[chi]).push_back(chi);
    auto blocks = finish(table, bd, groups);
    // finish() renumbers; the ingested numbering must already be canonical
    for (const Block& b : blocks)
        if (bd.block_of_irr[b.irr.front()] != b.id)
            throw InvariantError(table.group_name + " p=" + std::to_string(bd.p) +
                                 ": block labels are not ordered by (defect, least character)");
    return blocks;
}

std::vector<Block> partition_blocks(const CharTable& table, const BrauerData& bd) {
    const ResidueMap rm = ResidueMap::build(table.exponent, bd.p);
    std::map<std::vector<std::vector<int>>, std::vector<int>> classes;
    std::vector<std::vector<std::vector<int>>> keys;
    for (int chi = 0; chi < table.num_irr(); ++chi) {
        std::vector<std::vector<int>> key;
        for (const CycloNum& w : central_character(table, chi)) key.push_back(rm.reduce(w).coords);
        classes[key].push_back(chi);
    }
    std::vector<std::vector<int>> groups;
    for (auto& [key, members] : classes) groups.push_back(members);
    auto blocks = finish(table, bd, groups);

    const std::string where = table.group_name + " p=" + std::to_string(bd.p) + ": ";
    if (blocks.front().irr.front() != 0) throw InvariantError(where + "principal block misses the trivial character");
    for (const Block& b : blocks) {
        for (int chi : b.irr)
            if (bd.block_of_irr[chi] != b.id)
                throw InvariantError(where + "irreducible " + std::to_string(chi) + " lies in residue block " +
                                     std::to_string(b.id) + " but is labelled " + std::to_string(bd.block_of_irr[chi]));
        for (int phi : b.ibr)
            if (bd.block_of_ibr[phi] != b.id)
                throw InvariantError(where + "Brauer character " + std::to_string(phi) + " lies in residue block " +
                                     std::to_string(b.id) + " but is labelled " + std::to_string(bd.block_of_ibr[phi]));
    }
    if (static_cast<int>(blocks.size()) != bd.num_blocks())
        throw InvariantError(where + "residue partition has " + std::to_string(blocks.size()) + " blocks, labels have " +
                             std::to_string(bd.num_blocks()));
    return blocks;
}

std::vector<ClassFunction> projective_characters(const TablePtr& table, const BrauerData& bd) {
    std::vector<ClassFunction> out;
    for (int phi = 0; phi < bd.num_ibr(); ++phi) {
        std::vector<std::int64_t> coords(table->num_irr());
        for (int chi = 0; chi < table->num_irr(); ++chi) coords[chi] = bd.decomposition[chi][phi];
        ClassFunction psi = ClassFunction::from_coordinates(table, std::move(coords));
        for (int c = 0; c < table->num_classes(); ++c)
            if (!table->is_p_regular(c, bd.p) && !psi[c].is_zero())
                throw InvariantError(table->group_name + " p=" + std::to_string(bd.p) + ": projective character " +
                                     std::to_string(phi) + " does not vanish at class " + table->classes[c].name);
        out.push_back(std::move(psi));
    }
    return out;
}

IntMatrix cartan_matrix(const BrauerData& bd) {
    const int n = bd.num_ibr();
    IntMatrix c(n, std::vector<std::int64_t>(n, 0));
    for (const auto& row : bd.decomposition)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[i][j] += row[i] * row[j];
    return c;
}

ClassFunction block_component(const ClassFunction& psi, const Block& b) {
    if (!psi.coordinates()) throw std::invalid_argument("block_component: not a generalised character");
    std::vector<std::int64_t> coords(psi.coordinates()->size(), 0);
    for (int chi : b.irr) coords.at(chi) = (*psi.coordinates())[chi];
    return ClassFunction::from_coordinates(psi.table_ptr(), std::move(coords));
}

}  // namespace pcond
