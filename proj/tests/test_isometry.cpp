#include <doctest.h>

#include <chrono>

#include "pcond/errors.hpp"
#include "pcond/isometry.hpp"

using namespace pcond;

namespace {

DatasetPtr load(const std::string& file) { return load_dataset(std::string(PCOND_DATA_DIR) + "/" + file); }

IsometryCandidate identity(const BlockRef& b) {
    std::vector<int> perm(b.size()), signs(b.size(), 1);
    for (int i = 0; i < b.size(); ++i) perm[i] = i;
    return IsometryCandidate::signed_bijection(b, b, perm, signs);
}

// Oracle: mu straight from the definition; membership in O tested by
// multiplying by the p'-part of the centralizer order.
bool direct_perfect(const IsometryCandidate& c) {
    const CharTable& g = *c.source.table;
    const CharTable& h = *c.target.table;
    for (int a = 0; a < g.num_classes(); ++a)
        for (int b = 0; b < h.num_classes(); ++b) {
            CycloNum mu;
            for (int j = 0; j < c.source.size(); ++j)
                mu += CycloNum(c.signs[j]) * g.value(c.source.block.irr[j], a) *
                      h.value(c.target.block.irr[c.permutation[j]], b);
            if (g.is_p_regular(a, c.source.p()) != h.is_p_regular(b, c.source.p()) && !mu.is_zero()) return false;
            const std::int64_t p = c.source.p();
            for (std::int64_t n : {g.centralizer_order(a), h.centralizer_order(b)}) {
                std::int64_t unit = n;
                while (unit % p == 0) unit /= p;
                Rational r(unit, n);
                r.canonicalize();
                if (!(mu * CycloNum(r)).is_algebraic_integer()) return false;
            }
        }
    return true;
}

}  // namespace

TEST_CASE("check_isometry") {
    auto d10 = load("D10.json");
    auto b = block_ref(*d10, 5, 0);
    REQUIRE(b.size() == 4);
    CHECK(check_isometry(identity(b)));
    auto flip = IsometryCandidate::signed_bijection(b, b, {0, 1, 2, 3}, {1, -1, 1, 1});
    CHECK(check_isometry(flip));
    IsometryCandidate rep = identity(b);
    rep.matrix = {{1, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    rep.permutation.clear();
    CHECK_FALSE(check_isometry(rep));
    rep.matrix.pop_back();
    CHECK_THROWS_AS(check_isometry(rep), std::invalid_argument);
}

TEST_CASE("identity on the principal 5-block of D10 is perfect") {
    auto d10 = load("D10.json");
    auto r = check_perfection(identity(block_ref(*d10, 5, 0)));
    CHECK(r.perfect());
    CHECK(r.conductor_preserved);
    CHECK(r.l0_preserved);
    // mu(1,1) = sum chi(1)^2 is divisible by |G| on both sides
    CycloNum mu;
    for (int chi = 0; chi < 4; ++chi) mu += CycloNum(d10->table->degree(chi) * d10->table->degree(chi));
    CHECK(mu == CycloNum(10));
}

TEST_CASE("A5 and D10 principal 5-blocks") {
    auto a5 = load("A5.json");
    auto d10 = load("D10.json");
    auto a = block_ref(*a5, 5, 0), b = block_ref(*d10, 5, 0);
    CHECK(search_space(4) == 384);
    auto t0 = std::chrono::steady_clock::now();
    auto found = search_perfect_isometries(a, b);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 5.0);
    REQUIRE_FALSE(found.empty());
    for (const auto& c : found) {
        CHECK(check_isometry(c));
        auto r = check_perfection(c);
        CHECK(r.perfect());
        CHECK(r.conductor_preserved);
        CHECK(r.l0_preserved);
        CHECK(check_conductor_preservation(c, 5).ok);
        CHECK(check_l0_preservation(c, 5));
    }
    // exhaustive oracle: direct evaluation of every one of the 384 candidates
    std::vector<int> perm{0, 1, 2, 3};
    std::size_t count = 0;
    do
        for (int m = 0; m < 16; ++m) {
            std::vector<int> s(4);
            for (int j = 0; j < 4; ++j) s[j] = (m >> (3 - j)) & 1 ? -1 : 1;
            auto c = IsometryCandidate::signed_bijection(a, b, perm, s);
            bool perfect = direct_perfect(c);
            count += perfect;
            CHECK(check_perfection(c).perfect() == perfect);
        }
    while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == found.size());
    // deterministic regardless of thread count
    auto one = search_perfect_isometries(a, b, {6, 1});
    REQUIRE(one.size() == found.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].permutation == found[i].permutation);
        CHECK(one[i].signs == found[i].signs);
    }
}

TEST_CASE("rejected candidates") {
    auto a5 = load("A5.json");
    auto d10 = load("D10.json");
    auto a = block_ref(*a5, 5, 0), b = block_ref(*d10, 5, 0);
    // trivial -> trivial, degree-4 (conductor 1) -> a 2-dim (conductor 5): not conductor preserving
    int two_dim = -1;
    for (int i = 0; i < 4; ++i)
        if (d10->table->degree(b.block.irr[i]) == 2) two_dim = i;
    REQUIRE(two_dim >= 0);
    std::vector<int> perm{0, 1, 2, 3};
    std::swap(perm[3], perm[two_dim]);
    auto c = IsometryCandidate::signed_bijection(a, b, perm, {1, 1, 1, 1});
    auto cc = check_conductor_preservation(c, 5);
    CHECK_FALSE(cc.ok);
    CHECK_FALSE(cc.witnesses.empty());
    CHECK_FALSE(check_perfection(c).perfect());
    // all signs negated on everything but the trivial character breaks separation
    auto bad = IsometryCandidate::signed_bijection(a, b, {0, 1, 2, 3}, {1, 1, 1, -1});
    auto r = check_perfection(bad);
    CHECK_FALSE(r.perfect());
}

TEST_CASE("search: self search and refusals") {
    auto s4 = load("S4.json");
    auto b = block_ref(*s4, 3, 0);
    auto self = search_perfect_isometries(b, b);
    bool has_identity = false;
    for (const auto& c : self) {
        bool id = c.signs == std::vector<int>(b.size(), 1);
        for (int j = 0; j < b.size(); ++j) id = id && c.permutation[j] == j;
        has_identity = has_identity || id;
    }
    CHECK(has_identity);
    // composition of self-isometries stays perfect
    for (const auto& x : self)
        for (const auto& y : self) {
            std::vector<int> perm(b.size()), signs(b.size());
            for (int j = 0; j < b.size(); ++j) {
                perm[j] = y.permutation[x.permutation[j]];
                signs[j] = x.signs[j] * y.signs[x.permutation[j]];
            }
            CHECK(check_perfection(IsometryCandidate::signed_bijection(b, b, perm, signs)).perfect());
        }
    auto a5 = load("A5.json");
    CHECK_THROWS_AS(search_perfect_isometries(block_ref(*a5, 5, 0), block_ref(*a5, 5, 1)), std::invalid_argument);
    try {
        search_perfect_isometries(b, b, {2, 0});
        FAIL("expected refusal");
    } catch (const SearchRefused& e) {
        CHECK(e.candidates() == search_space(b.size()));
    }
}

TEST_CASE("l0 basis") {
    auto s3 = load("S3.json");
    auto b = block_ref(*s3, 3, 0);
    auto basis = l0_basis(b);
    REQUIRE(basis.size() == 1);
    // D = [[1,0],[0,1],[1,1]]: kernel of D^T is spanned by (1,1,-1) up to sign
    auto v = basis[0];
    if (v[0] < 0)
        for (auto& x : v) x = -x;
    CHECK(v == std::vector<std::int64_t>{1, 1, -1});
}

TEST_CASE("certificates round-trip") {
    auto a5 = load("A5.json");
    auto d10 = load("D10.json");
    auto found = search_perfect_isometries(block_ref(*a5, 5, 0), block_ref(*d10, 5, 0));
    REQUIRE_FALSE(found.empty());
    auto text = certificate_json(found[0]);
    auto c = parse_certificate(text);
    CHECK(c.source_group == "A5");
    CHECK(c.target_group == "D10");
    CHECK(c.source_prime == 5);
    CHECK(c.permutation == found[0].permutation);
    CHECK(c.signs == found[0].signs);
    CHECK_THROWS_AS(parse_certificate("{\"source\":1}"), SchemaError);
    CHECK_THROWS_AS(parse_certificate("nope"), SchemaError);
}
