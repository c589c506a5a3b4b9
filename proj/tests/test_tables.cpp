#include <doctest.h>

#include <complex>

#include "oracles.hpp"
#include "pcond/errors.hpp"
#include "pcond/tables.hpp"

using namespace pcond;

namespace {

DatasetPtr load(const std::string& file) { return load_dataset(std::string(PCOND_DATA_DIR) + "/" + file); }

int class_named(const CharTable& t, const std::string& name) {
    for (int c = 0; c < t.num_classes(); ++c)
        if (t.classes[c].name == name) return c;
    FAIL("no class " << name);
    return -1;
}

const char* kS3 = R"({"format":1,"name":"S3","order":6,"exponent":6,
 "classes":[{"name":"1a","size":1,"order":1,"powermaps":{"2":0,"3":0}},
            {"name":"2a","size":3,"order":2,"powermaps":{"2":0,"3":1}},
            {"name":"3a","size":2,"order":3,"powermaps":{"2":2,"3":0}}],
 "irreducibles":[["1","1","1"],["1","-1","1"],["2","0","-1"]],
 "primes":{}})";

std::string s3_without(const std::string& what, const std::string& with) {
    std::string s = kS3;
    auto pos = s.find(what);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, what.size(), with);
}

}  // namespace

TEST_CASE("load: S3 and A5") {
    auto s3 = load("S3.json");
    CHECK(s3->table->num_classes() == 3);
    CHECK(s3->table->num_irr() == 3);
    auto a5 = load("A5.json");
    CHECK(a5->table->num_classes() == 5);
    CHECK(a5->table->num_irr() == 5);
    CHECK(a5->table->exponent == 30);
    CHECK(a5->relevant_primes() == std::vector<std::int64_t>{2, 3, 5});
}

TEST_CASE("load: every corpus file validates") {
    auto manifest = read_manifest(PCOND_DATA_DIR);
    CHECK(manifest.size() == 10);
    for (const auto& e : manifest) {
        CAPTURE(e.group);
        DatasetPtr ds;
        REQUIRE_NOTHROW(ds = load_dataset(e.file));
        CHECK(ds->name() == e.group);
        CHECK(ds->relevant_primes() == e.primes);
    }
}

TEST_CASE("load: structured errors") {
    try {
        parse_dataset(s3_without(R"("powermaps":{"2":0,"3":1})", R"("pm":{})"));
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "classes[1].powermaps");
        CHECK(std::string(e.what()).find("2a") != std::string::npos);
    }
    try {
        parse_dataset(s3_without(R"(["2","0","-1"])", R"(["2","0","E(3"])"));
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "irreducibles[2][2]");
    }
    try {
        parse_dataset(s3_without(R"(["2","0","-1"])", R"(["2","0","1"])"));
        FAIL("expected InvariantError");
    } catch (const InvariantError& e) {
        CHECK(std::string(e.what()).find("row orthogonality rows 0,2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_dataset(s3_without(R"("size":3)", R"("size":2)")), InvariantError);
    CHECK_THROWS_AS(parse_dataset(s3_without(R"("format":1)", R"("format":2)")), SchemaError);
    CHECK_THROWS_AS(parse_dataset("{"), SchemaError);
    try {
        parse_dataset(kS3);
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(e.path() == "primes.2");
    }
}

TEST_CASE("power_class") {
    auto s3 = load("S3.json")->table;
    for (int c = 0; c < s3->num_classes(); ++c) CHECK(s3->power_class(c, 1) == c);
    CHECK(s3->power_class(class_named(*s3, "3a"), 2) == class_named(*s3, "3a"));
    CHECK(s3->power_class(class_named(*s3, "3a"), 3) == 0);
    auto c4 = load("C4.json")->table;
    int gen = -1;
    for (int c = 0; c < 4; ++c)
        if (c4->element_order(c) == 4) gen = c;
    REQUIRE(gen >= 0);
    CHECK(c4->element_order(c4->power_class(gen, 2)) == 2);
    CHECK(c4->power_class(gen, 3) != gen);
    CHECK(c4->element_order(c4->power_class(gen, 3)) == 4);
    // 7 does not divide the exponent of A5; zeta_5 -> zeta_5^7 = zeta_5^2 swaps 5a and 5b
    auto a5 = load("A5.json")->table;
    CHECK(a5->power_class(class_named(*a5, "5a"), 7) == class_named(*a5, "5b"));
    CHECK(a5->power_class(class_named(*a5, "5a"), 11) == class_named(*a5, "5a"));
}

TEST_CASE("p_decompose") {
    auto sl = load("SL2_3.json")->table;
    for (int c = 0; c < sl->num_classes(); ++c) {
        if (sl->element_order(c) != 6) continue;
        auto [u, s] = sl->p_decompose(c, 2);
        CHECK(sl->element_order(u) == 2);
        CHECK(sl->class_size(u) == 1);
        CHECK(sl->element_order(s) == 3);
    }
    auto a5 = load("A5.json")->table;
    for (int c = 0; c < a5->num_classes(); ++c) {
        for (std::int64_t p : {2, 3, 5}) {
            auto [u, s] = a5->p_decompose(c, p);
            if (a5->is_p_regular(c, p)) {
                CHECK(u == 0);
                CHECK(s == c);
            } else {
                CHECK(u == c);
                CHECK(s == 0);
            }
            CHECK(a5->p_decompose(u, p) == std::pair<int, int>{u, 0});
        }
    }
}

TEST_CASE("inner products") {
    for (const auto& e : read_manifest(PCOND_DATA_DIR)) {
        auto t = load_dataset(e.file)->table;
        for (int i = 0; i < t->num_irr(); ++i) {
            auto chi = ClassFunction::irreducible(t, i);
            CHECK(inner_product(chi, chi) == CycloNum(1));
        }
    }
    auto s3 = load("S3.json")->table;
    auto triv = ClassFunction::irreducible(s3, 0), sign = ClassFunction::irreducible(s3, 1);
    CHECK(inner_product(triv, sign) == CycloNum(0));
    ClassFunction reg(s3, {CycloNum(6), CycloNum(0), CycloNum(0)});
    REQUIRE(reg.coordinates());
    CHECK(*reg.coordinates() == std::vector<std::int64_t>{1, 1, 2});
    CHECK(reg.is_character());
    for (int i = 0; i < 3; ++i)
        CHECK(inner_product(reg, ClassFunction::irreducible(s3, i)) == CycloNum(s3->degree(i)));
    CHECK(reg == ClassFunction::from_coordinates(s3, {1, 1, 2}));
    CHECK(triv - sign == ClassFunction(s3, {CycloNum(0), CycloNum(2), CycloNum(0)}));
    ClassFunction half(s3, {CycloNum(Rational(1, 2)), CycloNum(0), CycloNum(0)});
    CHECK_FALSE(half.is_virtual_character());
    auto c4 = load("C4.json")->table;
    CHECK_THROWS_AS(inner_product(triv, ClassFunction::irreducible(c4, 0)), std::invalid_argument);
}

TEST_CASE("char_conductor") {
    auto s3 = load("S3.json")->table;
    CHECK(char_conductor(ClassFunction::irreducible(s3, 2)) == 1);
    auto c4 = load("C4.json")->table;
    bool found = false;
    for (int i = 0; i < 4; ++i) {
        auto chi = ClassFunction::irreducible(c4, i);
        // faithful: the value at an order-4 class is a primitive 4th root of unity (numeric oracle)
        bool faithful = false;
        for (int c = 0; c < 4; ++c)
            if (c4->element_order(c) == 4) faithful = std::abs(std::abs(oracle::eval(chi[c]).imag()) - 1) < 1e-12;
        if (!faithful) continue;
        found = true;
        CHECK(char_conductor(chi) == 4);
        CHECK(char_conductor(chi, 2) == 4);
    }
    CHECK(found);
    auto a5 = load("A5.json")->table;
    auto chi3 = ClassFunction::irreducible(a5, 1);
    REQUIRE(a5->degree(1) == 3);
    CHECK(char_conductor(chi3) == 5);
    CHECK(char_conductor(chi3, 5) == 5);
    CHECK(char_conductor(chi3, 2) == 1);
}

TEST_CASE("properties over the corpus") {
    for (const auto& e : read_manifest(PCOND_DATA_DIR)) {
        auto t = load_dataset(e.file)->table;
        CAPTURE(e.group);
        for (int i = 0; i < t->num_irr(); ++i)
            CHECK(t->exponent % char_conductor(ClassFunction::irreducible(t, i)) == 0);
        // Galois closure of Irr: twisting values and permuting classes gives a row again
        for (std::int64_t k = 1; k < t->exponent; ++k) {
            if (std::gcd(k, t->exponent) != 1) continue;
            for (int i = 0; i < t->num_irr(); ++i) {
                std::vector<CycloNum> tw(t->num_classes());
                for (int c = 0; c < t->num_classes(); ++c) tw[c] = t->value(i, t->power_class(c, k));
                bool is_row = false;
                for (int j = 0; j < t->num_irr() && !is_row; ++j) is_row = tw == t->irreducibles[j];
                CHECK(is_row);
                for (int c = 0; c < t->num_classes(); ++c) CHECK(tw[c] == t->value(i, c).galois(k));
            }
        }
    }
}
