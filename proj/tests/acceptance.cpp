// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pcond/blocks.hpp"
#include "pcond/gendec.hpp"
#include "pcond/isometry.hpp"
#include "pcond/residue.hpp"
#include "pcond/tables.hpp"
#include "pcond/verify.hpp"

using namespace pcond;

namespace {

struct Entry {
    DatasetPtr ds;
    std::int64_t p;
    GendecMatrix gm;
};

std::vector<Entry> corpus;

const Entry& entry(const std::string& group, std::int64_t p) {
    for (const auto& e : corpus)
        if (e.ds->name() == group && e.p == p) return e;
    throw std::runtime_error("no corpus entry " + group + " p=" + std::to_string(p));
}

// Returns the detail text; throws std::runtime_error with the reason on failure.
using Criterion = std::function<std::string()>;

void require(bool ok, const std::string& why) {
    if (!ok) throw std::runtime_error(why);
}

std::string where(const Entry& e) { return e.ds->name() + " p=" + std::to_string(e.p); }

std::string first_failure(const VerificationReport& r) {
    for (const auto& x : r.records)
        if (!x.pass) return r.check_name + " " + r.group + " p=" + std::to_string(r.prime) + " " + x.character + ": " + x.lhs +
                            " vs " + x.rhs + " " + x.witness;
    return r.check_name + " " + r.group;
}

std::string gendec_conductor_suite() {
    std::size_t irr = 0, sampled = 0;
    for (const auto& e : corpus) {
        const auto& t = e.ds->table;
        for (int chi = 0; chi < t->num_irr(); ++chi) {
            auto rec = check_gendec_conductor(e.gm, ClassFunction::irreducible(t, chi), "chi" + std::to_string(chi));
            require(rec.pass, where(e) + " chi" + std::to_string(chi) + ": " + rec.lhs + " vs " + rec.rhs);
            ++irr;
        }
        auto rep = gendec_conductor_report(e.gm, 0, 200);
        require(rep.pass(), first_failure(rep));
        const auto blocks = partition_blocks(*t, *e.gm.prime->brauer);
        require(rep.records.size() == t->num_irr() + 200 * blocks.size(), where(e) + ": unexpected sample count");
        sampled += rep.records.size() - t->num_irr();
    }
    return std::to_string(irr) + " irreducibles, " + std::to_string(sampled) + " random generalised characters";
}

std::string max_entry_suite() {
    std::size_t n = 0;
    for (const auto& e : corpus) {
        auto rep = max_entry_report(e.gm);
        require(rep.pass(), first_failure(rep));
        for (const auto& r : rep.records) require(!r.witness.empty(), where(e) + " " + r.character + ": no witness");
        n += rep.records.size();
    }
    return std::to_string(n) + " characters, witness recorded for each";
}

std::string method_equivalence() {
    std::size_t entries = 0;
    for (const auto& e : corpus) {
        const auto& t = *e.ds->table;
        for (const auto& sec : e.gm.prime->sections) {
            for (int chi = 0; chi < t.num_irr(); ++chi) {
                auto a = gendec_reciprocity(t, chi, sec), b = gendec_solve(t, chi, sec);
                require(a == b, where(e) + " u=" + t.classes[sec.u_class].name + " chi" + std::to_string(chi));
                entries += a.size();
                if (sec.u_class == 0) {
                    const auto& d = e.gm.prime->brauer->decomposition[chi];
                    for (std::size_t j = 0; j < d.size(); ++j)
                        require(a[j] == CycloNum(d[j]), where(e) + ": d^1 differs from D");
                }
            }
        }
    }
    return std::to_string(entries) + " entries agree; d^1 = D everywhere";
}

std::string round_trip() {
    std::size_t values = 0;
    for (const auto& e : corpus) {
        const auto& t = *e.ds->table;
        for (std::size_t k = 0; k < e.gm.sections.size(); ++k) {
            const auto& sec = *e.gm.sections[k].data;
            const auto& ibr = sec.centralizer_brauer->ibr;
            for (int chi = 0; chi < t.num_irr(); ++chi) {
                const auto want = section_values(t, chi, sec);
                const auto& d = e.gm.sections[k].d[chi];
                for (std::size_t s = 0; s < want.size(); ++s) {
                    CycloNum sum;
                    for (std::size_t j = 0; j < d.size(); ++j) sum += d[j] * ibr[j][s];
                    require(sum == want[s], where(e) + " chi" + std::to_string(chi) + " section " +
                                                t.classes[sec.u_class].name);
                    ++values;
                }
            }
        }
    }
    return std::to_string(values) + " values chi(us) reproduced";
}

bool zero_row(const Entry& e, const std::string& u, int chi) {
    for (const auto& s : e.gm.sections)
        if (e.ds->table->classes[s.u_class].name == u)
            return std::all_of(s.d[chi].begin(), s.d[chi].end(), [](const CycloNum& x) { return x.is_zero(); });
    throw std::runtime_error("no section " + u);
}

int degree_index(const CharTable& t, std::int64_t deg) {
    for (int i = 0; i < t.num_irr(); ++i)
        if (t.degree(i) == deg) return i;
    throw std::runtime_error("no character of degree " + std::to_string(deg));
}

std::string second_main() {
    std::size_t checked = 0;
    for (const auto& e : corpus) {
        auto v = check_second_main(e.gm, partition_blocks(*e.ds->table, *e.gm.prime->brauer));
        require(v.empty(), where(e) + ": " + (v.empty() ? "" : v.front().detail));
        ++checked;
    }
    const auto& s3 = entry("S3", 2);
    require(zero_row(s3, "2a", degree_index(*s3.ds->table, 2)), "S3 p=2: d^2a of the degree-2 character");
    const auto& a5 = entry("A5", 5);
    require(zero_row(a5, "5a", degree_index(*a5.ds->table, 5)), "A5 p=5: d^5a of the degree-5 character");
    return std::to_string(checked) + " (group, prime) pairs, 0 violations";
}

std::string block_partition() {
    for (const auto& e : corpus) {
        const auto& t = *e.ds->table;
        auto residue = partition_blocks(t, *e.gm.prime->brauer);
        auto labels = blocks_from_labels(t, *e.gm.prime->brauer);
        require(residue.size() == labels.size(), where(e) + ": block count");
        for (std::size_t b = 0; b < residue.size(); ++b)
            require(residue[b].irr == labels[b].irr && residue[b].ibr == labels[b].ibr &&
                        residue[b].defect == labels[b].defect,
                    where(e) + ": block " + std::to_string(b));
    }
    const auto& t3 = *entry("S3", 3).ds->table;
    require(partition_blocks(t3, *entry("S3", 3).gm.prime->brauer).size() == 1, "S3 p=3 is not one block");
    require(partition_blocks(t3, *entry("S3", 2).gm.prime->brauer).size() == 2, "S3 p=2 is not two blocks");
    const auto& a5 = entry("A5", 5);
    auto b = partition_blocks(*a5.ds->table, *a5.gm.prime->brauer);
    require(b.size() == 2 && b[0].irr.size() == 4 && b[0].defect == 1 && b[1].irr.size() == 1 && b[1].defect == 0,
            "A5 p=5 block structure");
    require(std::find(b[0].irr.begin(), b[0].irr.end(), 0) != b[0].irr.end(), "A5 p=5 principal block");
    return std::to_string(corpus.size()) + " partitions match labels; S3 1/2 blocks, A5 p=5 defect-1 x4 + defect-0";
}

std::string projective() {
    std::size_t n = 0;
    for (const auto& e : corpus) {
        auto rep = projective_report(e.gm);
        require(rep.pass(), first_failure(rep));
        n += rep.records.size();
    }
    return std::to_string(n) + " characters invariant under every projective";
}

std::string perfect_isometry() {
    const auto& a5 = entry("A5", 5);
    const auto& d10 = entry("D10", 5);
    const auto a = block_ref(*a5.ds, 5, 0), b = block_ref(*d10.ds, 5, 0);
    require(a.size() == 4 && b.size() == 4, "principal 5-blocks should have 4 characters");
    const auto t0 = std::chrono::steady_clock::now();
    const auto found = search_perfect_isometries(a, b);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require(!found.empty(), "no perfect isometry found");
    for (const auto& c : found) {
        require(check_isometry(c), "candidate is not an isometry");
        require(check_perfection(c).perfect(), "candidate is not perfect");
        require(check_conductor_preservation(c, 5).ok, "conductors not preserved");
        require(check_l0_preservation(c, 5), "L0 not preserved");
    }
    require(secs < 5.0, "search took " + std::to_string(secs) + " s");
    std::ostringstream os;
    os << found.size() << " of " << search_space(4) << " candidates perfect, all preserve c_5 and L0; "
       << std::fixed << std::setprecision(3) << secs << " s";
    return os.str();
}

std::string restriction() {
    const auto& e = entry("A5", 5);
    const auto& subs = e.ds->subgroups;
    auto it = std::find_if(subs.begin(), subs.end(), [](const SubgroupEmbedding& s) { return s.name == "D10"; });
    require(it != subs.end(), "A5 has no D10 embedding");
    const auto& emb = *it;
    const auto& sp = emb.primes.at(5);
    require(sp.ti, "D10 is not flagged TI at 5");
    const auto principal = block_ref(*e.ds, 5, 0);
    const auto c = block_ref(emb, 5, sp.correspondent_block.at(0));
    std::vector<std::pair<std::int64_t, std::int64_t>> by_degree;
    for (int chi : principal.block.irr) {
        const auto x = ClassFunction::irreducible(e.ds->table, chi);
        const auto res = restrict(x, emb);
        const auto cx = char_conductor(x, 5), cr = char_conductor(res, 5),
                   cc = char_conductor(block_component(res, c.block), 5);
        require(cx == cr && cr == cc, "chi" + std::to_string(chi) + ": " + std::to_string(cx) + "," + std::to_string(cr) +
                                          "," + std::to_string(cc));
        by_degree.emplace_back(e.ds->table->degree(chi), cx);
    }
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<std::pair<std::int64_t, std::int64_t>> want{{1, 1}, {3, 5}, {3, 5}, {4, 1}};
    require(by_degree == want, "degree/value pattern differs from 1,5,5,1");
    auto rep = check_restriction_props(e.gm);
    require(rep.pass(), first_failure(rep));
    return "c_5 = c_5(Res) = c_5(1_C Res) = 1,5,5,1 on degrees 1,3,3,4";
}

std::string arithmetic() {
    std::mt19937_64 rng(20240);
    const std::vector<std::int64_t> orders{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 15, 16, 18, 20, 24, 30};
    const std::vector<std::int64_t> ambient{12, 20, 24, 30, 60};
    std::vector<ResidueMap> maps;
    for (auto n : ambient)
        for (auto p : nt::prime_factors(n)) maps.push_back(ResidueMap::build(n, p));
    std::vector<std::int64_t> divisors_60 = nt::divisors(60);
    const int iterations = 10000;
    for (int it = 0; it < iterations; ++it) {
        auto raw = oracle::random_raw(rng, orders);
        CycloNum x = parse_cyclo(oracle::to_expr(raw));
        require(std::abs(oracle::eval(x) - oracle::eval(raw)) < 1e-9, "value changed by normalization: " + x.to_string());
        require(parse_cyclo(x.to_string()) == x, "round-trip: " + x.to_string());
        const auto c = conductor(x);
        require(c % 4 != 2, "conductor 2 mod 4: " + x.to_string());
        if (it % 10 == 0) require(c == oracle::numeric_conductor({raw}), "conductor vs numeric: " + x.to_string());

        const auto& m = maps[it % maps.size()];
        std::vector<std::int64_t> divs;
        for (auto d : divisors_60)
            if (m.ambient_order() % d == 0) divs.push_back(d);
        CycloNum a = parse_cyclo(oracle::to_expr(oracle::random_raw(rng, divs, 4, true)));
        CycloNum b = parse_cyclo(oracle::to_expr(oracle::random_raw(rng, divs, 4, true)));
        require(m.reduce(a + b) == m.add(m.reduce(a), m.reduce(b)), "reduce(a+b)");
        require(m.reduce(a * b) == m.mul(m.reduce(a), m.reduce(b)), "reduce(ab)");
    }
    return std::to_string(iterations) + " seeded iterations (round-trip, conductor, reduce)";
}

}  // namespace

int main() {
    try {
        for (const auto& m : read_manifest(PCOND_DATA_DIR)) {
            auto ds = load_dataset(m.file);
            for (auto p : m.primes) corpus.push_back({ds, p, gendec_all(ds, p)});
        }
    } catch (const std::exception& e) {
        std::cout << "corpus failed to load: " << e.what() << '\n';
        return 2;
    }

    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"gendec conductor suite", gendec_conductor_suite},
        {"maximizing (u, phi) suite", max_entry_suite},
        {"reciprocity = linear solve", method_equivalence},
        {"round-trip", round_trip},
        {"second main theorem vanishing", second_main},
        {"block partition", block_partition},
        {"projective invariance", projective},
        {"perfect isometry A5/D10", perfect_isometry},
        {"restriction A5/D10 at 5", restriction},
        {"arithmetic core", arithmetic},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = true;
        try {
            detail = criteria[i].second();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        failed += !ok;
        std::cout << "criterion " << std::setw(2) << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << " (" << detail << ")" << std::endl;
    }
    return failed ? 1 : 0;
}
