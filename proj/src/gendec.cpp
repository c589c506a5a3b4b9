#include "pcond/gendec.hpp"

#include "pcond/errors.hpp"
#include "pcond/linalg.hpp"
#include "pcond/numtheory.hpp"

namespace pcond {

std::vector<CycloNum> section_values(const CharTable& group, int chi, const SectionData& sec) {
    std::vector<CycloNum> v;
    for (int s : sec.centralizer_brauer->regular_classes) {
        if (s >= static_cast<int>(sec.u_times.size())) throw std::out_of_range("section_values: missing u_times entry");
        const int us = sec.u_times[s];
        if (us >= static_cast<int>(sec.fusion.size())) throw std::out_of_range("section_values: missing fusion entry");
        v.push_back(group.value(chi, sec.fusion[us]));
    }
    return v;
}

std::vector<CycloNum> gendec_reciprocity(const CharTable& group, int chi, const SectionData& sec) {
    const CharTable& c = *sec.centralizer;
    const BrauerData& bd = *sec.centralizer_brauer;
    const auto psi = projective_characters(sec.centralizer, bd);
    const auto vals = section_values(group, chi, sec);
    const CycloNum scale(Rational(1, c.group_order));
    std::vector<CycloNum> d(bd.num_ibr());
    for (int phi = 0; phi < bd.num_ibr(); ++phi) {
        CycloNum sum;
        for (std::size_t j = 0; j < bd.regular_classes.size(); ++j) {
            const int s = bd.regular_classes[j];
            sum += CycloNum(c.class_size(s)) * vals[j] * psi[phi][c.inverse_class(s)];
        }
        d[phi] = sum * scale;
    }
    return d;
}

std::vector<CycloNum> gendec_solve(const CharTable& group, int chi, const SectionData& sec) {
    const BrauerData& bd = *sec.centralizer_brauer;
    const std::size_t n = bd.regular_classes.size();
    Matrix<CycloNum> a(n, std::vector<CycloNum>(bd.num_ibr()));
    for (std::size_t j = 0; j < n; ++j)
        for (int phi = 0; phi < bd.num_ibr(); ++phi) a[j][phi] = bd.ibr[phi][j];
    auto x = linalg::solve(a, section_values(group, chi, sec));
    if (!x)
        throw InvariantError(sec.centralizer->group_name + ": singular Brauer table in section " +
                             group.classes[sec.u_class].name);
    return *x;
}

std::vector<std::vector<CycloNum>> GendecMatrix::row(const std::vector<std::int64_t>& coords) const {
    std::vector<std::vector<CycloNum>> out;
    for (const auto& sec : sections) {
        std::vector<CycloNum> r(sec.d.empty() ? 0 : sec.d.front().size());
        for (std::size_t chi = 0; chi < coords.size(); ++chi) {
            if (coords[chi] == 0) continue;
            const CycloNum k(coords[chi]);
            for (std::size_t phi = 0; phi < r.size(); ++phi) r[phi] += k * sec.d[chi][phi];
        }
        out.push_back(std::move(r));
    }
    return out;
}

GendecMatrix gendec_all(const DatasetPtr& ds, std::int64_t p) {
    GendecMatrix gm;
    gm.p = p;
    gm.dataset = ds;
    gm.prime = std::make_shared<const PrimeData>(ds->prime_data(p));
    const CharTable& g = *ds->table;
    for (const SectionData& sec : gm.prime->sections) {
        GendecSection gs;
        gs.u_class = sec.u_class;
        gs.u_order = g.element_order(sec.u_class);
        for (int chi = 0; chi < g.num_irr(); ++chi) {
            auto r = gendec_reciprocity(g, chi, sec);
            auto s = gendec_solve(g, chi, sec);
            if (r != s)
                throw InvariantError(g.group_name + " p=" + std::to_string(p) + ": reciprocity and linear solve disagree for irreducible " +
                                     std::to_string(chi) + " in section " + g.classes[sec.u_class].name);
            gs.d.push_back(std::move(r));
        }
        gs.data = &sec;
        gm.sections.push_back(std::move(gs));
    }
    return gm;
}

namespace {

std::string entry_text(const CycloNum& x) { return "d = " + x.to_string(); }

}  // namespace

std::vector<GendecViolation> check_second_main(const GendecMatrix& gm, const std::vector<Block>& blocks) {
    std::vector<GendecViolation> out;
    const CharTable& g = *gm.dataset->table;
    std::vector<int> block_of(g.num_irr());
    std::vector<int> defect(g.num_irr());
    for (const Block& b : blocks)
        for (int chi : b.irr) {
            block_of[chi] = b.id;
            defect[chi] = b.defect;
        }
    for (const auto& sec : gm.sections) {
        const BrauerData& cb = *sec.data->centralizer_brauer;
        for (int chi = 0; chi < g.num_irr(); ++chi) {
            const bool too_big = sec.u_order > nt::ipow(gm.p, defect[chi]);
            for (int phi = 0; phi < cb.num_ibr(); ++phi) {
                const CycloNum& d = sec.d[chi][phi];
                if (d.is_zero()) continue;
                const int want = sec.data->correspondent_block.at(cb.block_of_ibr[phi]);
                if (want != block_of[chi])
                    out.push_back({"second-main", chi, sec.u_class, phi,
                                   entry_text(d) + " but the correspondent block is " + std::to_string(want)});
                if (too_big)
                    out.push_back({"defect-group", chi, sec.u_class, phi,
                                   entry_text(d) + " but |u| exceeds the defect group order"});
            }
        }
    }
    return out;
}

std::vector<GendecViolation> check_round_trip(const GendecMatrix& gm) {
    std::vector<GendecViolation> out;
    const CharTable& g = *gm.dataset->table;
    for (const auto& sec : gm.sections) {
        const BrauerData& cb = *sec.data->centralizer_brauer;
        for (int chi = 0; chi < g.num_irr(); ++chi) {
            const auto vals = section_values(g, chi, *sec.data);
            for (std::size_t j = 0; j < vals.size(); ++j) {
                CycloNum s;
                for (int phi = 0; phi < cb.num_ibr(); ++phi) s += sec.d[chi][phi] * cb.ibr[phi][j];
                if (s != vals[j])
                    out.push_back({"round-trip", chi, sec.u_class, -1,
                                   "at centralizer class " + sec.data->centralizer->classes[cb.regular_classes[j]].name});
            }
        }
    }
    return out;
}

std::vector<GendecViolation> check_entries(const GendecMatrix& gm) {
    std::vector<GendecViolation> out;
    const BrauerData& bd = *gm.prime->brauer;
    for (const auto& sec : gm.sections) {
        for (int chi = 0; chi < gm.num_irr(); ++chi) {
            for (std::size_t phi = 0; phi < sec.d[chi].size(); ++phi) {
                const CycloNum& d = sec.d[chi][phi];
                const int iphi = static_cast<int>(phi);
                if (!d.is_algebraic_integer()) out.push_back({"integrality", chi, sec.u_class, iphi, entry_text(d)});
                if (sec.u_order % conductor(d) != 0)
                    out.push_back({"field", chi, sec.u_class, iphi, entry_text(d) + " not in Q(zeta_|u|)"});
                if (sec.u_class == 0 && d != CycloNum(bd.decomposition[chi][phi]))
                    out.push_back({"ordinary", chi, 0, iphi, entry_text(d) + " differs from D"});
            }
        }
    }
    return out;
}

std::vector<GendecViolation> check_orthogonality(const GendecMatrix& gm) {
    std::vector<GendecViolation> out;
    for (const auto& sec : gm.sections) {
        const IntMatrix c = cartan_matrix(*sec.data->centralizer_brauer);
        const int n = static_cast<int>(c.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CycloNum s;
                for (int chi = 0; chi < gm.num_irr(); ++chi) s += sec.d[chi][a] * sec.d[chi][b].conj();
                if (s != CycloNum(c[a][b]))
                    out.push_back({"orthogonality", -1, sec.u_class, a,
                                   "column pair (" + std::to_string(a) + "," + std::to_string(b) + ") gives " + s.to_string() +
                                       ", Cartan entry " + std::to_string(c[a][b])});
            }
    }
    return out;
}

}  // namespace pcond
