#include <doctest.h>

#include "pcond/errors.hpp"
#include "pcond/verify.hpp"

using namespace pcond;

namespace {

DatasetPtr load(const std::string& file) { return load_dataset(std::string(PCOND_DATA_DIR) + "/" + file); }

int faithful_c4(const CharTable& t) {
    for (int chi = 0; chi < t.num_irr(); ++chi)
        for (int c = 0; c < t.num_classes(); ++c)
            if (t.element_order(c) == 4 && t.value(chi, c).order() == 4 && chi != 0) return chi;
    return -1;
}

}  // namespace

TEST_CASE("gendec conductor examples") {
    auto c4 = load("C4.json");
    auto gm = gendec_all(c4, 2);
    int chi = faithful_c4(*c4->table);
    REQUIRE(chi >= 0);
    auto r = check_gendec_conductor(gm, ClassFunction::irreducible(c4->table, chi), "faithful");
    CHECK(r.lhs == "4");
    CHECK(r.rhs == "4");
    CHECK(r.pass);
    auto s3 = load("S3.json");
    auto r3 = check_gendec_conductor(gendec_all(s3, 3), ClassFunction::irreducible(s3->table, 2), "2");
    CHECK(r3.lhs == "1");
    CHECK(r3.pass);
    auto a5 = load("A5.json");
    auto r5 = check_gendec_conductor(gendec_all(a5, 5), ClassFunction::irreducible(a5->table, 1), "3");
    CHECK(r5.lhs == "5");
    CHECK(r5.rhs == "5");
}

TEST_CASE("max entry witnesses") {
    auto a5 = load("A5.json");
    auto gm = gendec_all(a5, 5);
    auto r = check_max_entry(gm, ClassFunction::irreducible(a5->table, 1), "3");
    CHECK(r.pass);
    CHECK(r.rhs == "5");
    CHECK(r.witness == "u=5a phi=0");
    auto triv = check_max_entry(gm, ClassFunction::irreducible(a5->table, 0), "1");
    CHECK(triv.rhs == "1");
    CHECK(triv.witness == "u=1a phi=0");
    auto c4 = load("C4.json");
    auto g4 = gendec_all(c4, 2);
    auto rc = check_max_entry(g4, ClassFunction::irreducible(c4->table, faithful_c4(*c4->table)), "f");
    CHECK(rc.rhs == "4");
    CHECK(rc.witness.find("phi=0") != std::string::npos);
    CHECK(rc.witness.find("u=1a") == std::string::npos);
}

TEST_CASE("projective invariance examples") {
    auto s3 = load("S3.json");
    auto r = check_projective_invariance(gendec_all(s3, 2), 2);
    CHECK(r.pass);
    CHECK(r.lhs == "1");
    auto a5 = load("A5.json");
    CHECK(check_projective_invariance(gendec_all(a5, 7), 1).pass);
}

TEST_CASE("restrict") {
    auto a5 = load("A5.json");
    const SubgroupEmbedding* d10 = nullptr;
    for (const auto& e : a5->subgroups)
        if (e.name == "D10") d10 = &e;
    REQUIRE(d10);
    auto res = restrict(ClassFunction::irreducible(a5->table, 1), *d10);
    REQUIRE(res.is_character());
    std::vector<std::int64_t> degrees;
    for (int i = 0; i < d10->subgroup->num_irr(); ++i)
        for (int k = 0; k < (*res.coordinates())[i]; ++k) degrees.push_back(d10->subgroup->degree(i));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<std::int64_t>{1, 2});
    CHECK(restrict(ClassFunction::irreducible(a5->table, 0), *d10) == ClassFunction::irreducible(d10->subgroup, 0));
    auto id = SubgroupEmbedding::identity(a5->table);
    auto chi = ClassFunction::irreducible(a5->table, 3);
    CHECK(restrict(chi, id) == chi);
    SubgroupEmbedding bad = *d10;
    std::swap(bad.fusion[1], bad.fusion[2]);
    CHECK_THROWS_AS(restrict(ClassFunction::irreducible(a5->table, 1), bad), InvariantError);
}

TEST_CASE("restriction suite on A5 at p=5") {
    auto a5 = load("A5.json");
    auto rep = check_restriction_props(gendec_all(a5, 5));
    CHECK(rep.status == "checked");
    CHECK(rep.pass());
    std::vector<std::string> want{"1,1", "5,5", "5,5", "1,1"};
    int seen = 0;
    for (const auto& r : rep.records) {
        MESSAGE(r.character << " " << r.lhs << " " << r.rhs << " " << r.witness);
        for (int chi = 0; chi < 4; ++chi)
            if (r.character == "H=D10 chi" + std::to_string(chi) + " (deg " + std::to_string(a5->table->degree(chi)) + ")") {
                CHECK(r.lhs + "," + r.rhs == want[chi] + "," + want[chi].substr(0, want[chi].find(',')));
                ++seen;
            }
        if (r.character.find("chi4") != std::string::npos) CHECK(r.lhs == "1");
    }
    CHECK(seen == 4);
}

TEST_CASE("reports over the corpus") {
    for (const auto& e : read_manifest(PCOND_DATA_DIR)) {
        auto ds = load_dataset(e.file);
        for (std::int64_t p : e.primes) {
            CAPTURE(e.group);
            CAPTURE(p);
            auto gm = gendec_all(ds, p);
            auto t1 = gendec_conductor_report(gm, 0, 20);
            CHECK(t1.pass());
            CHECK(max_entry_report(gm).pass());
            CHECK(projective_report(gm).pass());
            CHECK(gendec_report(gm).pass());
            auto rr = check_restriction_props(gm);
            for (const auto& r : rr.records)
                if (!r.pass) MESSAGE(r.character << " " << r.witness);
            CHECK(rr.pass());
        }
    }
}

TEST_CASE("reports are deterministic in the seed") {
    auto gm = gendec_all(load("S4.json"), 2);
    auto a = gendec_conductor_report(gm, 7, 10), b = gendec_conductor_report(gm, 7, 10), c = gendec_conductor_report(gm, 8, 10);
    REQUIRE(a.records.size() == b.records.size());
    bool differs = false;
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].witness == b.records[i].witness);
        differs = differs || a.records[i].witness != c.records[i].witness;
    }
    CHECK(differs);
}
