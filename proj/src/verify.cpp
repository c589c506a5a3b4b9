#include "pcond/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "pcond/errors.hpp"
#include "pcond/linalg.hpp"

namespace pcond {

bool VerificationReport::pass() const {
    return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

namespace {

std::string chi_label(const CharTable& t, int chi) {
    return "chi" + std::to_string(chi) + " (deg " + std::to_string(t.degree(chi)) + ")";
}

std::string coords_text(const std::vector<std::int64_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

const std::vector<std::int64_t>& coords_of(const ClassFunction& psi) {
    if (!psi.coordinates()) throw std::invalid_argument("not a generalised character");
    return *psi.coordinates();
}

std::uint64_t name_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

}  // namespace

CheckRecord check_gendec_conductor(const GendecMatrix& gm, const ClassFunction& psi, const std::string& label) {
    const auto rows = gm.row(coords_of(psi));
    std::vector<CycloNum> all;
    for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
    CheckRecord rec;
    rec.character = label;
    const auto lhs = char_conductor(psi, gm.p);
    const auto rhs = conductor_p(all, gm.p);
    rec.lhs = std::to_string(lhs);
    rec.rhs = std::to_string(rhs);
    rec.pass = lhs == rhs;
    return rec;
}

CheckRecord check_max_entry(const GendecMatrix& gm, const ClassFunction& psi, const std::string& label) {
    const auto rows = gm.row(coords_of(psi));
    const CharTable& g = *gm.dataset->table;
    std::int64_t best = 0;
    std::string witness;
    for (std::size_t s = 0; s < rows.size(); ++s)
        for (std::size_t phi = 0; phi < rows[s].size(); ++phi) {
            const CycloNum& d = rows[s][phi];
            const std::int64_t c = conductor(d);
            if (c > best || (c == best && witness.empty() && !d.is_zero())) {
                best = c;
                witness = d.is_zero() ? "" : "u=" + g.classes[gm.sections[s].u_class].name + " phi=" + std::to_string(phi);
            }
        }
    if (witness.empty()) witness = "u=" + g.classes[0].name + " phi=0";
    CheckRecord rec;
    rec.character = label;
    const auto lhs = char_conductor(psi, gm.p);
    rec.lhs = std::to_string(lhs);
    rec.rhs = std::to_string(best);
    rec.witness = witness;
    rec.pass = lhs == best;
    return rec;
}

CheckRecord check_projective_invariance(const GendecMatrix& gm, int chi) {
    const auto& table = gm.dataset->table;
    const BrauerData& bd = *gm.prime->brauer;
    const auto projectives = projective_characters(table, bd);
    const auto x = ClassFunction::irreducible(table, chi);
    const auto rows = gm.row(coords_of(x));
    const auto cx = char_conductor(x, gm.p);
    CheckRecord rec;
    rec.character = chi_label(*table, chi);
    rec.lhs = std::to_string(cx);
    std::int64_t worst = cx;
    for (int phi = 0; phi < bd.num_ibr(); ++phi) {
        if (bd.block_of_ibr[phi] != bd.block_of_irr[chi]) continue;
        const auto y = x + projectives[phi];
        const auto rows_y = gm.row(coords_of(y));
        for (std::size_t s = 1; s < rows.size(); ++s)
            if (rows[s] != rows_y[s]) {
                rec.pass = false;
                rec.witness += "gendec changes at u=" + table->classes[gm.sections[s].u_class].name + " adding Psi" +
                               std::to_string(phi) + "; ";
            }
        const auto cy = char_conductor(y, gm.p);
        if (cy != cx) {
            rec.pass = false;
            worst = cy;
            rec.witness += "c_p changes adding Psi" + std::to_string(phi) + "; ";
        }
    }
    rec.rhs = std::to_string(worst);
    return rec;
}

ClassFunction restrict(const ClassFunction& chi, const SubgroupEmbedding& emb) {
    if (chi.table_ptr() != emb.group) throw std::invalid_argument("restrict: character of another group");
    std::vector<CycloNum> v;
    for (int f : emb.fusion) v.push_back(chi[f]);
    ClassFunction res(emb.subgroup, std::move(v));
    if (chi.is_virtual_character() && !res.is_virtual_character())
        throw InvariantError("restriction to " + emb.name + " has non-integral coordinates");
    if (chi.is_character() && !res.is_character())
        throw InvariantError("restriction to " + emb.name + " of a character is not a character");
    return res;
}

VerificationReport gendec_conductor_report(const GendecMatrix& gm, std::uint64_t seed, int samples) {
    VerificationReport rep;
    rep.check_name = "gendec-conductor";
    rep.group = gm.dataset->name();
    rep.prime = gm.p;
    const auto& table = gm.dataset->table;
    for (int chi = 0; chi < table->num_irr(); ++chi)
        rep.records.push_back(check_gendec_conductor(gm, ClassFunction::irreducible(table, chi), chi_label(*table, chi)));
    std::seed_seq sseq{seed, static_cast<std::uint64_t>(gm.p), name_hash(rep.group)};
    std::mt19937_64 rng(sseq);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const Block& b : blocks_from_labels(*table, *gm.prime->brauer)) {
        for (int k = 0; k < samples; ++k) {
            std::vector<std::int64_t> coords(table->num_irr(), 0);
            for (int chi : b.irr) coords[chi] = coef(rng);
            auto rec = check_gendec_conductor(gm, ClassFunction::from_coordinates(table, coords),
                                      "random B" + std::to_string(b.id) + " #" + std::to_string(k));
            rec.witness = coords_text(coords);
            rep.records.push_back(std::move(rec));
        }
    }
    return rep;
}

VerificationReport max_entry_report(const GendecMatrix& gm) {
    VerificationReport rep;
    rep.check_name = "max-entry";
    rep.group = gm.dataset->name();
    rep.prime = gm.p;
    const auto& table = gm.dataset->table;
    for (int chi = 0; chi < table->num_irr(); ++chi)
        rep.records.push_back(check_max_entry(gm, ClassFunction::irreducible(table, chi), chi_label(*table, chi)));
    return rep;
}

VerificationReport projective_report(const GendecMatrix& gm) {
    VerificationReport rep;
    rep.check_name = "projective-invariance";
    rep.group = gm.dataset->name();
    rep.prime = gm.p;
    for (int chi = 0; chi < gm.num_irr(); ++chi) rep.records.push_back(check_projective_invariance(gm, chi));
    return rep;
}

VerificationReport gendec_report(const GendecMatrix& gm) {
    VerificationReport rep;
    rep.check_name = "gendec";
    rep.group = gm.dataset->name();
    rep.prime = gm.p;
    const CharTable& t = *gm.dataset->table;
    const auto blocks = partition_blocks(t, *gm.prime->brauer);
    struct Part {
        const char* name;
        std::vector<GendecViolation> v;
    };
    std::vector<Part> parts{{"second-main", check_second_main(gm, blocks)},
                            {"round-trip", check_round_trip(gm)},
                            {"entries", check_entries(gm)},
                            {"orthogonality", check_orthogonality(gm)}};
    for (auto& part : parts) {
        CheckRecord rec;
        rec.character = part.name;
        rec.lhs = std::to_string(part.v.size());
        rec.rhs = "0";
        rec.pass = part.v.empty();
        for (const auto& v : part.v) {
            rec.witness += v.check + " chi=" + std::to_string(v.chi) + " u=" + t.classes[v.u_class].name +
                           " phi=" + std::to_string(v.phi) + ": " + v.detail + "; ";
        }
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

namespace {

// All (theta, delta), theta indexing Irr(C), with x - delta*theta in Pr(C);
// x in Irr(H)-coordinates.
std::vector<std::pair<int, int>> gamma_options(const BlockRef& c, const std::vector<std::int64_t>& x) {
    const BrauerData& bd = *c.brauer;
    IntMatrix dc(c.block.irr.size(), std::vector<std::int64_t>(c.block.ibr.size()));
    for (std::size_t i = 0; i < c.block.irr.size(); ++i)
        for (std::size_t j = 0; j < c.block.ibr.size(); ++j) dc[i][j] = bd.decomposition[c.block.irr[i]][c.block.ibr[j]];
    std::vector<std::pair<int, int>> out;
    for (std::size_t t = 0; t < c.block.irr.size(); ++t)
        for (int s : {1, -1}) {
            std::vector<Rational> rhs;
            for (std::size_t i = 0; i < c.block.irr.size(); ++i)
                rhs.emplace_back(x[c.block.irr[i]] - (i == t ? s : 0));
            auto y = linalg::solve_full_column_rank(dc, rhs);
            if (y && std::all_of(y->begin(), y->end(), [](const Rational& q) { return q.get_den() == 1; }))
                out.emplace_back(static_cast<int>(t), s);
        }
    return out;
}

// First choice (in option order) that is a bijection and a perfect isometry.
bool choose_gamma(const BlockRef& b, const BlockRef& c, const std::vector<std::vector<std::pair<int, int>>>& options,
                  std::vector<int>& perm, std::vector<int>& signs, std::vector<bool>& used) {
    const std::size_t j = perm.size();
    if (j == options.size()) {
        auto cand = IsometryCandidate::signed_bijection(b, c, perm, signs);
        return check_perfection(cand).perfect();
    }
    for (const auto& [t, s] : options[j]) {
        if (used[t]) continue;
        used[t] = true;
        perm.push_back(t);
        signs.push_back(s);
        if (choose_gamma(b, c, options, perm, signs, used)) return true;
        perm.pop_back();
        signs.pop_back();
        used[t] = false;
    }
    return false;
}

}  // namespace

VerificationReport check_restriction_props(const GendecMatrix& gm) {
    VerificationReport rep;
    rep.check_name = "restriction";
    rep.group = gm.dataset->name();
    rep.prime = gm.p;
    const GroupDataset& ds = *gm.dataset;
    const auto& table = ds.table;
    const std::int64_t p = gm.p;
    const auto gblocks = blocks_from_labels(*table, *gm.prime->brauer);
    bool any = false;

    for (const SubgroupEmbedding& emb : ds.subgroups) {
        auto it = emb.primes.find(p);
        if (it == emb.primes.end()) continue;
        any = true;
        const SubgroupPrimeData& spd = it->second;
        const auto hblocks = blocks_from_labels(*emb.subgroup, *spd.brauer);
        const std::string tag = "H=" + emb.name + " ";
        const std::set<int> cent(spd.centralizer_classes.begin(), spd.centralizer_classes.end());

        for (int chi = 0; chi < table->num_irr(); ++chi) {
            const auto x = ClassFunction::irreducible(table, chi);
            const auto res = restrict(x, emb);
            const auto c = char_conductor(x, p), r = char_conductor(res, p);
            CheckRecord rec;
            rec.character = tag + chi_label(*table, chi);
            rec.lhs = std::to_string(c);
            std::string rhs = std::to_string(r);
            std::vector<std::string> fails;
            if (r > c) fails.push_back("c(Res)_p exceeds c_p");

            const int b = gm.prime->brauer->block_of_irr[chi];
            auto cb = spd.correspondent_block.find(b);
            if (cb != spd.correspondent_block.end()) {
                const auto trunc = block_component(res, hblocks.at(cb->second));
                const auto rc = char_conductor(trunc, p);
                rhs += "," + std::to_string(rc);
                if (rc > r) fails.push_back("c(1_C Res)_p exceeds c(Res)_p");
                if (c == rc && c != r) fails.push_back("truncated restriction criterion");
                if (spd.ti && !(c == r && r == rc)) fails.push_back("TI equality");
            }
            // centralizer criterion: a maximizing u with C_G(u) inside H
            const auto rows = gm.row(*x.coordinates());
            for (std::size_t s = 0; s < rows.size(); ++s) {
                const int u = gm.sections[s].u_class;
                if (!cent.count(u)) continue;
                bool maximizes = false;
                for (const auto& d : rows[s]) maximizes = maximizes || conductor_p(std::span(&d, 1), p) == c;
                if (!maximizes) continue;
                rec.witness = "u=" + table->classes[u].name + " has C_G(u) in H";
                if (c != r) fails.push_back("centralizer criterion at u=" + table->classes[u].name);
                break;
            }
            rec.rhs = rhs;
            rec.pass = fails.empty();
            for (const auto& f : fails) rec.witness += (rec.witness.empty() ? "" : "; ") + f;
            rep.records.push_back(std::move(rec));
        }

        if (!spd.cyclic_defect) continue;
        for (const auto& [gb, hb] : spd.correspondent_block) {
            const BlockRef bref = block_ref(ds, p, gb);
            const BlockRef cref = block_ref(emb, p, hb);
            if (bref.block.defect == 0) continue;
            CheckRecord rec;
            rec.character = tag + "gamma B" + std::to_string(gb) + "->C" + std::to_string(hb);
            std::string fails;
            std::vector<std::vector<std::pair<int, int>>> options;
            for (int chi : bref.block.irr) {
                const auto res = restrict(ClassFunction::irreducible(table, chi), emb);
                options.push_back(gamma_options(cref, *block_component(res, cref.block).coordinates()));
                if (options.back().empty()) fails += "no gamma for chi" + std::to_string(chi) + "; ";
            }
            rec.lhs = std::to_string(bref.size());
            rec.rhs = std::to_string(cref.size());
            std::vector<int> perm, signs;
            std::vector<bool> used(cref.size());
            if (bref.size() != cref.size()) {
                fails += "blocks have different sizes; ";
            } else if (fails.empty() && !choose_gamma(bref, cref, options, perm, signs, used)) {
                fails += "no choice of gamma is a perfect isometry; ";
            } else if (fails.empty()) {
                auto cand = IsometryCandidate::signed_bijection(bref, cref, perm, signs);
                auto cc = check_conductor_preservation(cand, p);
                if (!cc.ok) fails += "c(gamma(chi))_p differs from c(chi)_p; ";
                rec.witness = "perm " + coords_text(std::vector<std::int64_t>(perm.begin(), perm.end())) + " signs " +
                              coords_text(std::vector<std::int64_t>(signs.begin(), signs.end()));
            }
            rec.pass = fails.empty();
            if (!fails.empty()) rec.witness += (rec.witness.empty() ? "" : " ") + fails;
            rep.records.push_back(std::move(rec));
        }
    }
    if (!any) {
        rep.status = "not-applicable";
        rep.note = "no subgroup data at p=" + std::to_string(p);
    }
    return rep;
}

}  // namespace pcond
