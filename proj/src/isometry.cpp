#include "pcond/isometry.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "pcond/errors.hpp"
#include "pcond/linalg.hpp"
#include "pcond/numtheory.hpp"

namespace pcond {

namespace {

BlockRef make_ref(std::string group, TablePtr table, BrauerPtr brauer, int id) {
    auto blocks = blocks_from_labels(*table, *brauer);
    if (id < 0 || id >= static_cast<int>(blocks.size()))
        throw std::out_of_range(group + " p=" + std::to_string(brauer->p) + " has no block " + std::to_string(id));
    return BlockRef{std::move(group), std::move(table), std::move(brauer), blocks[id]};
}

// mu / n is an algebraic integer; callers pass p-parts of centralizer orders,
// since the condition lives in the p-local ring O
bool divisible(const CycloNum& mu, std::int64_t n) {
    for (const auto& [e, c] : mu.terms())
        if (c.get_den() != 1 || c.get_num() % n != 0) return false;
    return true;
}

std::string pair_label(const CharTable& g, int a, const CharTable& h, int b) {
    return "(" + g.group_name + ":" + g.classes[a].name + ", " + h.group_name + ":" + h.classes[b].name + ")";
}

}  // namespace

BlockRef block_ref(const GroupDataset& ds, std::int64_t p, int id) {
    return make_ref(ds.name(), ds.table, ds.prime_data(p).brauer, id);
}

BlockRef block_ref(const SubgroupEmbedding& emb, std::int64_t p, int id) {
    auto it = emb.primes.find(p);
    if (it == emb.primes.end()) throw std::out_of_range(emb.name + " has no data at p=" + std::to_string(p));
    return make_ref(emb.name, emb.subgroup, it->second.brauer, id);
}

IsometryCandidate IsometryCandidate::signed_bijection(BlockRef source, BlockRef target, std::vector<int> permutation,
                                                      std::vector<int> signs) {
    const int n = source.size();
    if (target.size() != n || static_cast<int>(permutation.size()) != n || static_cast<int>(signs.size()) != n)
        throw std::invalid_argument("signed_bijection: size mismatch");
    IsometryCandidate c;
    c.matrix.assign(n, std::vector<std::int64_t>(n, 0));
    for (int j = 0; j < n; ++j) {
        if (permutation[j] < 0 || permutation[j] >= n) throw std::invalid_argument("signed_bijection: bad permutation");
        if (signs[j] != 1 && signs[j] != -1) throw std::invalid_argument("signed_bijection: signs must be +-1");
        c.matrix[permutation[j]][j] = signs[j];
    }
    std::vector<int> sorted(permutation);
    std::sort(sorted.begin(), sorted.end());
    for (int j = 0; j < n; ++j)
        if (sorted[j] != j) throw std::invalid_argument("signed_bijection: not a permutation");
    c.source = std::move(source);
    c.target = std::move(target);
    c.permutation = std::move(permutation);
    c.signs = std::move(signs);
    return c;
}

ClassFunction IsometryCandidate::image(int j) const {
    std::vector<std::int64_t> coords(target.table->num_irr(), 0);
    for (std::size_t i = 0; i < matrix.size(); ++i) coords[target.block.irr[i]] = matrix[i].at(j);
    return ClassFunction::from_coordinates(target.table, std::move(coords));
}

bool check_isometry(const IsometryCandidate& cand) {
    const std::size_t n = cand.source.block.irr.size();
    if (cand.target.block.irr.size() != n || cand.matrix.size() != n)
        throw std::invalid_argument("check_isometry: size mismatch");
    for (const auto& row : cand.matrix)
        if (row.size() != n) throw std::invalid_argument("check_isometry: matrix is not square");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < n; ++i) s += cand.matrix[i][a] * cand.matrix[i][b];
            if (s != (a == b ? 1 : 0)) return false;
        }
    return true;
}

ConductorCheck check_conductor_preservation(const IsometryCandidate& cand, std::int64_t p) {
    ConductorCheck out;
    for (int j = 0; j < cand.source.size(); ++j) {
        const int chi = cand.source.block.irr[j];
        const auto a = char_conductor(ClassFunction::irreducible(cand.source.table, chi), p);
        const auto b = char_conductor(cand.image(j), p);
        if (a != b) {
            out.ok = false;
            out.witnesses.push_back("irreducible " + std::to_string(chi) + " of " + cand.source.group + ": c_p " +
                                    std::to_string(a) + " but image has c_p " + std::to_string(b));
        }
    }
    return out;
}

IntMatrix l0_basis(const BlockRef& b) {
    const BrauerData& bd = *b.brauer;
    const auto& irr = b.block.irr;
    const auto& ibr = b.block.ibr;
    IntMatrix a(ibr.size(), std::vector<std::int64_t>(irr.size()));
    for (std::size_t r = 0; r < ibr.size(); ++r)
        for (std::size_t c = 0; c < irr.size(); ++c) a[r][c] = bd.decomposition[irr[c]][ibr[r]];
    IntMatrix basis = linalg::integer_kernel(a, irr.size());
    if (basis.size() != irr.size() - ibr.size())
        throw InvariantError(b.group + ": L^0 has rank " + std::to_string(basis.size()) + ", expected " +
                             std::to_string(irr.size() - ibr.size()));
    // evaluation cross-check
    for (const auto& v : basis) {
        std::vector<std::int64_t> coords(b.table->num_irr(), 0);
        for (std::size_t c = 0; c < irr.size(); ++c) coords[irr[c]] = v[c];
        auto f = ClassFunction::from_coordinates(b.table, coords);
        for (int s : bd.regular_classes)
            if (!f[s].is_zero()) throw InvariantError(b.group + ": L^0 basis element does not vanish on p-regular classes");
    }
    return basis;
}

bool check_l0_preservation(const IsometryCandidate& cand, std::int64_t p) {
    const CharTable& t = *cand.target.table;
    for (const auto& v : l0_basis(cand.source)) {
        std::vector<CycloNum> vals(t.num_classes());
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] == 0) continue;
            const auto img = cand.image(static_cast<int>(j));
            for (int c = 0; c < t.num_classes(); ++c) vals[c] += CycloNum(v[j]) * img[c];
        }
        for (int c = 0; c < t.num_classes(); ++c)
            if (t.is_p_regular(c, p) && !vals[c].is_zero()) return false;
    }
    return true;
}

PerfectionReport check_perfection(const IsometryCandidate& cand) {
    PerfectionReport r;
    r.is_isometry = check_isometry(cand);
    if (!r.is_isometry) r.witnesses.push_back("not an isometry");
    const CharTable& g = *cand.source.table;
    const CharTable& h = *cand.target.table;
    const std::int64_t p = cand.source.p();
    std::vector<ClassFunction> images;
    for (int j = 0; j < cand.source.size(); ++j) images.push_back(cand.image(j));
    r.integrality_ok = r.separation_ok = true;
    for (int a = 0; a < g.num_classes(); ++a)
        for (int b = 0; b < h.num_classes(); ++b) {
            CycloNum mu;
            for (int j = 0; j < cand.source.size(); ++j) mu += g.value(cand.source.block.irr[j], a) * images[j][b];
            if (g.is_p_regular(a, p) != h.is_p_regular(b, p) && !mu.is_zero()) {
                r.separation_ok = false;
                r.witnesses.push_back("separation fails at " + pair_label(g, a, h, b));
            }
            if (!divisible(mu, nt::p_part(g.centralizer_order(a), p)) || !divisible(mu, nt::p_part(h.centralizer_order(b), p))) {
                r.integrality_ok = false;
                r.witnesses.push_back("integrality fails at " + pair_label(g, a, h, b));
            }
        }
    const auto cc = check_conductor_preservation(cand, p);
    r.conductor_preserved = cc.ok;
    r.witnesses.insert(r.witnesses.end(), cc.witnesses.begin(), cc.witnesses.end());
    r.l0_preserved = check_l0_preservation(cand, p);
    if (!r.l0_preserved) r.witnesses.push_back("L^0 not preserved");
    return r;
}

std::int64_t search_space(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f << n;
}

std::vector<IsometryCandidate> search_perfect_isometries(const BlockRef& a, const BlockRef& b, const SearchOptions& opts) {
    const int n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("blocks have " + std::to_string(n) + " and " + std::to_string(b.size()) +
                                    " irreducible characters");
    if (n > opts.bound) throw SearchRefused(search_space(n), n, opts.bound);
    if (a.p() != b.p()) throw std::invalid_argument("blocks belong to different primes");
    const CharTable& g = *a.table;
    const CharTable& h = *b.table;
    const std::int64_t p = a.p();

    struct Pair {
        bool separated;  // exactly one side p-regular
        std::int64_t modulus;
    };
    std::vector<Pair> pairs;
    for (int x = 0; x < g.num_classes(); ++x)
        for (int y = 0; y < h.num_classes(); ++y)
            pairs.push_back({g.is_p_regular(x, p) != h.is_p_regular(y, p), std::max(nt::p_part(g.centralizer_order(x), p), nt::p_part(h.centralizer_order(y), p))});
    const std::size_t np = pairs.size();
    // prod[j][i][pair] = chi_j(x) chi'_i(y)
    std::vector<std::vector<std::vector<CycloNum>>> prod(n, std::vector<std::vector<CycloNum>>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            auto& v = prod[j][i];
            v.reserve(np);
            for (int x = 0; x < g.num_classes(); ++x)
                for (int y = 0; y < h.num_classes(); ++y) v.push_back(g.value(a.block.irr[j], x) * h.value(b.block.irr[i], y));
        }
    // separated pairs first: they reject most candidates cheaply
    std::vector<std::size_t> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::stable_partition(order.begin(), order.end(), [&](std::size_t k) { return pairs[k].separated; });

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    const std::uint32_t nsigns = 1u << n;
    auto sign_of = [n](std::uint32_t mask, int j) { return (mask >> (n - 1 - j)) & 1u ? -1 : 1; };
    auto passes = [&](const std::vector<int>& pi, std::uint32_t mask) {
        for (std::size_t k : order) {
            CycloNum mu;
            for (int j = 0; j < n; ++j) {
                const CycloNum& t = prod[j][pi[j]][k];
                if (sign_of(mask, j) > 0)
                    mu += t;
                else
                    mu -= t;
            }
            if (pairs[k].separated ? !mu.is_zero() : !divisible(mu, pairs[k].modulus)) return false;
        }
        return true;
    };

    std::vector<std::vector<std::uint32_t>> hits(perms.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < perms.size();)
            for (std::uint32_t m = 0; m < nsigns; ++m)
                if (passes(perms[k], m)) hits[k].push_back(m);
    };
    unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs) : std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(perms.size()));
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    std::vector<IsometryCandidate> out;
    for (std::size_t k = 0; k < perms.size(); ++k)
        for (std::uint32_t m : hits[k]) {
            std::vector<int> signs(n);
            for (int j = 0; j < n; ++j) signs[j] = sign_of(m, j);
            out.push_back(IsometryCandidate::signed_bijection(a, b, perms[k], std::move(signs)));
        }
    return out;
}

std::string certificate_json(const IsometryCandidate& cand) {
    if (!cand.is_signed_bijection()) throw std::invalid_argument("certificates describe signed bijections only");
    nlohmann::ordered_json j;
    j["source"] = {{"group", cand.source.group}, {"prime", cand.source.p()}, {"block", cand.source.block.id}};
    j["target"] = {{"group", cand.target.group}, {"prime", cand.target.p()}, {"block", cand.target.block.id}};
    j["permutation"] = cand.permutation;
    j["signs"] = cand.signs;
    return j.dump();
}

Certificate parse_certificate(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("certificate", std::string("invalid JSON: ") + e.what());
    }
    Certificate c;
    auto side = [&](const char* key, std::string& group, std::int64_t& prime, int& block) {
        if (!j.contains(key) || !j[key].is_object()) throw SchemaError(key, "missing field");
        const auto& s = j[key];
        if (!s.contains("group") || !s["group"].is_string()) throw SchemaError(std::string(key) + ".group", "expected a string");
        if (!s.contains("prime") || !s["prime"].is_number_integer()) throw SchemaError(std::string(key) + ".prime", "expected an integer");
        if (!s.contains("block") || !s["block"].is_number_integer()) throw SchemaError(std::string(key) + ".block", "expected an integer");
        group = s["group"].get<std::string>();
        prime = s["prime"].get<std::int64_t>();
        block = s["block"].get<int>();
    };
    side("source", c.source_group, c.source_prime, c.source_block);
    side("target", c.target_group, c.target_prime, c.target_block);
    for (const char* key : {"permutation", "signs"}) {
        if (!j.contains(key) || !j[key].is_array()) throw SchemaError(key, "expected an array");
        for (std::size_t i = 0; i < j[key].size(); ++i)
            if (!j[key][i].is_number_integer())
                throw SchemaError(std::string(key) + "[" + std::to_string(i) + "]", "expected an integer");
    }
    c.permutation = j["permutation"].get<std::vector<int>>();
    c.signs = j["signs"].get<std::vector<int>>();
    if (c.permutation.size() != c.signs.size()) throw SchemaError("signs", "length differs from permutation");
    return c;
}

}  // namespace pcond
