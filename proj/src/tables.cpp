#include "pcond/tables.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pcond/errors.hpp"
#include "pcond/numtheory.hpp"

namespace pcond {

namespace {

std::string class_label(const CharTable& t, int c) {
    return t.group_name + " class " + t.classes[c].name;
}

}  // namespace

// ---------------------------------------------------------------------------
// CharTable

std::int64_t CharTable::degree(int chi) const {
    const Rational d = value(chi, identity_class()).rational();
    return d.get_num().get_si();
}

bool CharTable::is_p_element(int c, std::int64_t p) const {
    std::int64_t m = element_order(c);
    while (m % p == 0) m /= p;
    return m == 1;
}

int CharTable::galois_class(int c, std::int64_t k) const {
    for (int d = 0; d < num_classes(); ++d) {
        if (element_order(d) != element_order(c)) continue;
        bool match = true;
        for (int chi = 0; chi < num_irr() && match; ++chi) match = value(chi, d) == value(chi, c).galois(k);
        if (match) return d;
    }
    throw InvariantError("no Galois image of " + class_label(*this, c) + " under k=" + std::to_string(k));
}

int CharTable::power_class(int c, std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("power_class: negative exponent");
    std::int64_t e = k % element_order(c);
    if (e == 0) return identity_class();
    for (std::int64_t q : nt::prime_factors(e)) {
        for (std::int64_t m = e; m % q == 0; m /= q) {
            const auto& pm = classes[c].power_maps;
            auto it = pm.find(q);
            if (it != pm.end())
                c = it->second;
            else if (element_order(c) % q != 0)
                c = galois_class(c, q);
            else
                throw InvariantError("missing " + std::to_string(q) + "-power map for " + class_label(*this, c));
        }
    }
    return c;
}

std::pair<int, int> CharTable::p_decompose(int c, std::int64_t p) const {
    const std::int64_t m = element_order(c);
    const std::int64_t pa = nt::p_part(m, p), mp = m / pa;
    // e = 1 mod p^a, e = 0 mod m'; e' = 0 mod p^a, e' = 1 mod m'
    const std::int64_t e = mp * nt::inverse_mod(mp, pa) % m;
    const std::int64_t e2 = pa * nt::inverse_mod(pa, mp) % m;
    const int u = pa == 1 ? identity_class() : power_class(c, e == 0 ? m : e);
    const int s = mp == 1 ? identity_class() : power_class(c, e2 == 0 ? m : e2);
    return {u, s};
}

void CharTable::validate() const {
    const std::string& g = group_name;
    const int n = num_classes();
    if (n == 0) throw InvariantError(g + ": empty class list");
    if (num_irr() != n) throw InvariantError(g + ": number of irreducibles differs from number of classes");
    if (classes[0].size != 1 || classes[0].element_order != 1)
        throw InvariantError(g + ": class 0 is not the identity class");
    std::int64_t total = 0;
    for (const auto& cd : classes) {
        if (cd.size < 1 || group_order % cd.size != 0)
            throw InvariantError(g + ": size of class " + cd.name + " does not divide the group order");
        if (cd.element_order < 1 || exponent % cd.element_order != 0)
            throw InvariantError(g + ": order of class " + cd.name + " does not divide the exponent");
        total += cd.size;
    }
    if (total != group_order) throw InvariantError(g + ": class sizes sum to " + std::to_string(total));
    for (int c = 0; c < n; ++c) {
        const auto& cd = classes[c];
        for (std::int64_t q : nt::prime_factors(exponent))
            if (!cd.power_maps.count(q))
                throw InvariantError(g + ": class " + cd.name + " has no " + std::to_string(q) + "-power map");
        for (const auto& [q, img] : cd.power_maps) {
            if (img < 0 || img >= n)
                throw InvariantError(g + ": " + std::to_string(q) + "-power map of class " + cd.name + " out of range");
            const std::int64_t want = cd.element_order / std::gcd(cd.element_order, q);
            if (classes[img].element_order != want)
                throw InvariantError(g + ": " + std::to_string(q) + "-power map of class " + cd.name +
                                     " has the wrong element order");
        }
    }
    for (int chi = 0; chi < n; ++chi) {
        if (static_cast<int>(irreducibles[chi].size()) != n)
            throw InvariantError(g + ": row " + std::to_string(chi) + " has the wrong length");
        const CycloNum& d = value(chi, 0);
        if (!d.is_integer() || d.rational() <= 0)
            throw InvariantError(g + ": degree of irreducible " + std::to_string(chi) + " is not a positive integer");
        for (int c = 0; c < n; ++c) {
            if (exponent % value(chi, c).order() != 0)
                throw InvariantError(g + ": value at row " + std::to_string(chi) + " class " + classes[c].name +
                                     " lies outside Q(zeta_" + std::to_string(exponent) + ")");
            if (!value(chi, c).is_algebraic_integer())
                throw InvariantError(g + ": value at row " + std::to_string(chi) + " class " + classes[c].name +
                                     " is not an algebraic integer");
        }
    }
    std::vector<std::vector<CycloNum>> conj(n, std::vector<CycloNum>(n));
    for (int chi = 0; chi < n; ++chi)
        for (int c = 0; c < n; ++c) conj[chi][c] = value(chi, c).conj();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            CycloNum s;
            for (int c = 0; c < n; ++c) s += CycloNum(classes[c].size) * value(i, c) * conj[j][c];
            if (s != CycloNum(i == j ? group_order : 0))
                throw InvariantError(g + ": row orthogonality rows " + std::to_string(i) + "," + std::to_string(j));
        }
    }
    for (int c = 0; c < n; ++c) {
        for (int d = c; d < n; ++d) {
            CycloNum s;
            for (int chi = 0; chi < n; ++chi) s += value(chi, c) * conj[chi][d];
            if (s != CycloNum(c == d ? centralizer_order(c) : 0))
                throw InvariantError(g + ": column orthogonality columns " + classes[c].name + "," + classes[d].name);
        }
    }
}

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(TablePtr table, std::vector<CycloNum> values)
    : table_(std::move(table)), values_(std::move(values)) {
    const CharTable& t = *table_;
    if (static_cast<int>(values_.size()) != t.num_classes())
        throw std::invalid_argument("ClassFunction: wrong number of values");
    std::vector<std::int64_t> coords(t.num_irr());
    for (int chi = 0; chi < t.num_irr(); ++chi) {
        CycloNum s;
        for (int c = 0; c < t.num_classes(); ++c)
            s += CycloNum(t.class_size(c)) * values_[c] * t.value(chi, c).conj();
        s = s * CycloNum(Rational(1, t.group_order));
        if (!s.is_integer() || !s.rational().get_num().fits_slong_p()) return;
        coords[chi] = s.rational().get_num().get_si();
    }
    coords_ = std::move(coords);
}

ClassFunction ClassFunction::irreducible(TablePtr table, int chi) {
    std::vector<std::int64_t> coords(table->num_irr());
    coords.at(chi) = 1;
    std::vector<CycloNum> values = table->irreducibles.at(chi);
    return ClassFunction(std::move(table), std::move(values), std::move(coords));
}

ClassFunction ClassFunction::from_coordinates(TablePtr table, std::vector<std::int64_t> coords) {
    if (static_cast<int>(coords.size()) != table->num_irr())
        throw std::invalid_argument("from_coordinates: wrong number of coordinates");
    std::vector<CycloNum> values(table->num_classes());
    for (int chi = 0; chi < table->num_irr(); ++chi) {
        if (coords[chi] == 0) continue;
        const CycloNum k(coords[chi]);
        for (int c = 0; c < table->num_classes(); ++c) values[c] += k * table->value(chi, c);
    }
    return ClassFunction(std::move(table), std::move(values), std::move(coords));
}

ClassFunction ClassFunction::zero(TablePtr table) {
    std::vector<std::int64_t> coords(table->num_irr());
    return from_coordinates(std::move(table), std::move(coords));
}

bool ClassFunction::is_character() const {
    return coords_ && std::all_of(coords_->begin(), coords_->end(), [](std::int64_t x) { return x >= 0; });
}

namespace {

void require_same_table(const ClassFunction& a, const ClassFunction& b) {
    if (a.table_ptr() != b.table_ptr()) throw std::invalid_argument("class functions live on different tables");
}

ClassFunction combine(const ClassFunction& a, const ClassFunction& b, std::int64_t sign) {
    require_same_table(a, b);
    if (a.coordinates() && b.coordinates()) {
        std::vector<std::int64_t> coords(*a.coordinates());
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += sign * (*b.coordinates())[i];
        return ClassFunction::from_coordinates(a.table_ptr(), std::move(coords));
    }
    std::vector<CycloNum> v(a.values());
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += CycloNum(sign) * b.values()[c];
    return ClassFunction(a.table_ptr(), std::move(v));
}

}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) { return combine(a, b, 1); }
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) { return combine(a, b, -1); }

ClassFunction operator*(std::int64_t k, const ClassFunction& a) {
    if (a.coordinates()) {
        std::vector<std::int64_t> coords(*a.coordinates());
        for (auto& x : coords) x *= k;
        return ClassFunction::from_coordinates(a.table_ptr(), std::move(coords));
    }
    std::vector<CycloNum> v(a.values());
    for (auto& x : v) x = CycloNum(k) * x;
    return ClassFunction(a.table_ptr(), std::move(v));
}

CycloNum inner_product(const ClassFunction& a, const ClassFunction& b) {
    require_same_table(a, b);
    const CharTable& t = a.table();
    CycloNum s;
    for (int c = 0; c < t.num_classes(); ++c) s += CycloNum(t.class_size(c)) * a[c] * b[c].conj();
    return s * CycloNum(Rational(1, t.group_order));
}

std::int64_t char_conductor(const ClassFunction& chi, std::optional<std::int64_t> p) {
    if (p) return conductor_p(chi.values(), *p);
    return conductor(chi.values());
}

// ---------------------------------------------------------------------------
// Brauer data

int BrauerData::num_blocks() const {
    int m = -1;
    for (int b : block_of_irr) m = std::max(m, b);
    return m + 1;
}

BrauerData BrauerData::coprime(const CharTable& table, std::int64_t p) {
    BrauerData bd;
    bd.p = p;
    const int n = table.num_classes();
    bd.regular_classes.resize(n);
    std::iota(bd.regular_classes.begin(), bd.regular_classes.end(), 0);
    bd.ibr = table.irreducibles;
    bd.decomposition.assign(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) bd.decomposition[i][i] = 1;
    bd.block_of_irr = bd.regular_classes;
    bd.block_of_ibr = bd.regular_classes;
    return bd;
}

void BrauerData::validate(const CharTable& table) const {
    const std::string where = table.group_name + " p=" + std::to_string(p) + ": ";
    std::vector<int> want;
    for (int c = 0; c < table.num_classes(); ++c)
        if (table.is_p_regular(c, p)) want.push_back(c);
    if (regular_classes != want) throw InvariantError(where + "regular_classes are not the p-regular classes");
    const int nb = num_ibr(), nr = static_cast<int>(regular_classes.size());
    if (nb != nr) throw InvariantError(where + "number of Brauer characters differs from number of p-regular classes");
    for (const auto& row : ibr)
        if (static_cast<int>(row.size()) != nr) throw InvariantError(where + "ibr row has the wrong length");
    if (static_cast<int>(decomposition.size()) != table.num_irr())
        throw InvariantError(where + "decomposition matrix has the wrong number of rows");
    for (const auto& row : decomposition) {
        if (static_cast<int>(row.size()) != nb) throw InvariantError(where + "decomposition row has the wrong length");
        for (auto x : row)
            if (x < 0) throw InvariantError(where + "negative decomposition number");
    }
    if (static_cast<int>(block_of_irr.size()) != table.num_irr() || static_cast<int>(block_of_ibr.size()) != nb)
        throw InvariantError(where + "block label lists have the wrong length");
    const int blocks = num_blocks();
    std::vector<bool> seen_irr(blocks), seen_ibr(blocks);
    for (int b : block_of_irr) {
        if (b < 0) throw InvariantError(where + "negative block label");
        seen_irr[b] = true;
    }
    for (int b : block_of_ibr) {
        if (b < 0 || b >= blocks) throw InvariantError(where + "Brauer block label out of range");
        seen_ibr[b] = true;
    }
    for (int b = 0; b < blocks; ++b)
        if (!seen_irr[b] || !seen_ibr[b]) throw InvariantError(where + "block " + std::to_string(b) + " is empty");
    for (int chi = 0; chi < table.num_irr(); ++chi)
        for (int phi = 0; phi < nb; ++phi)
            if (decomposition[chi][phi] != 0 && block_of_irr[chi] != block_of_ibr[phi])
                throw InvariantError(where + "decomposition links irreducible " + std::to_string(chi) +
                                     " to Brauer character " + std::to_string(phi) + " of another block");
    for (int chi = 0; chi < table.num_irr(); ++chi) {
        for (int j = 0; j < nr; ++j) {
            CycloNum s;
            for (int phi = 0; phi < nb; ++phi)
                if (decomposition[chi][phi] != 0) s += CycloNum(decomposition[chi][phi]) * ibr[phi][j];
            if (s != table.value(chi, regular_classes[j]))
                throw InvariantError(where + "Brauer consistency fails for irreducible " + std::to_string(chi) +
                                     " at class " + table.classes[regular_classes[j]].name);
        }
    }
    if (linalg::rank(ibr) != static_cast<std::size_t>(nb))
        throw InvariantError(where + "Brauer character table is not of full rank");
}

// ---------------------------------------------------------------------------
// sections and subgroups

void SectionData::validate(const CharTable& group, std::int64_t p) const {
    const std::string where =
        group.group_name + " p=" + std::to_string(p) + " section " + group.classes.at(u_class).name + ": ";
    const CharTable& c = *centralizer;
    if (!group.is_p_element(u_class, p)) throw InvariantError(where + "u is not a p-element");
    if (c.group_order != group.centralizer_order(u_class))
        throw InvariantError(where + "centralizer order differs from |G|/|class|");
    if (group.exponent % c.exponent != 0) throw InvariantError(where + "centralizer exponent does not divide N");
    const int n = c.num_classes();
    if (static_cast<int>(fusion.size()) != n || static_cast<int>(u_times.size()) != n)
        throw InvariantError(where + "fusion/u_times have the wrong length");
    for (int s = 0; s < n; ++s) {
        if (fusion[s] < 0 || fusion[s] >= group.num_classes()) throw InvariantError(where + "fusion out of range");
        if (group.element_order(fusion[s]) != c.element_order(s))
            throw InvariantError(where + "fusion does not preserve element orders");
        if (u_times[s] < 0 || u_times[s] >= n) throw InvariantError(where + "u_times out of range");
    }
    if (fusion[0] != 0) throw InvariantError(where + "fusion of the identity is not the identity");
    if (u_in_centralizer < 0 || u_in_centralizer >= n || c.class_size(u_in_centralizer) != 1)
        throw InvariantError(where + "u_in_centralizer is not a central class");
    if (fusion[u_in_centralizer] != u_class) throw InvariantError(where + "fusion(u_in_centralizer) != u_class");
    const std::int64_t ou = group.element_order(u_class);
    std::set<int> images;
    for (int s = 0; s < n; ++s) {
        if (!c.is_p_regular(s, p)) continue;
        if (c.element_order(u_times[s]) != ou * c.element_order(s))
            throw InvariantError(where + "u_times breaks order arithmetic at class " + c.classes[s].name);
        if (!images.insert(u_times[s]).second) throw InvariantError(where + "u_times is not injective");
    }
    centralizer_brauer->validate(c);
    for (const auto& [cb, gb] : correspondent_block)
        if (cb < 0 || cb >= centralizer_brauer->num_blocks() || gb < 0)
            throw InvariantError(where + "correspondent_block out of range");
    for (int b = 0; b < centralizer_brauer->num_blocks(); ++b)
        if (!correspondent_block.count(b))
            throw InvariantError(where + "no correspondent for centralizer block " + std::to_string(b));
}

SubgroupEmbedding SubgroupEmbedding::identity(TablePtr table) {
    SubgroupEmbedding e;
    e.name = table->group_name;
    e.fusion.resize(table->num_classes());
    std::iota(e.fusion.begin(), e.fusion.end(), 0);
    e.subgroup = table;
    e.group = std::move(table);
    return e;
}

void SubgroupEmbedding::validate() const {
    const CharTable& h = *subgroup;
    const CharTable& g = *group;
    const std::string where = g.group_name + " subgroup " + name + ": ";
    if (g.group_order % h.group_order != 0) throw InvariantError(where + "|H| does not divide |G|");
    if (static_cast<int>(fusion.size()) != h.num_classes()) throw InvariantError(where + "fusion has the wrong length");
    std::vector<std::int64_t> covered(g.num_classes());
    for (int c = 0; c < h.num_classes(); ++c) {
        const int f = fusion[c];
        if (f < 0 || f >= g.num_classes()) throw InvariantError(where + "fusion out of range");
        if (g.element_order(f) != h.element_order(c))
            throw InvariantError(where + "fusion does not preserve element orders at class " + h.classes[c].name);
        if (g.centralizer_order(f) % h.centralizer_order(c) != 0)
            throw InvariantError(where + "centralizer orders incompatible at class " + h.classes[c].name);
        covered[f] += h.class_size(c);
    }
    if (fusion[0] != 0) throw InvariantError(where + "fusion of the identity is not the identity");
    for (int f = 0; f < g.num_classes(); ++f)
        if (covered[f] > g.class_size(f)) throw InvariantError(where + "H meets class " + g.classes[f].name + " too often");
    for (const auto& [p, pd] : primes) {
        pd.brauer->validate(h);
        for (int u : pd.centralizer_classes)
            if (u < 0 || u >= g.num_classes() || !g.is_p_element(u, p))
                throw InvariantError(where + "centralizer_classes entry is not a p-element class");
        for (const auto& [gb, hb] : pd.correspondent_block)
            if (gb < 0 || hb < 0 || hb >= pd.brauer->num_blocks())
                throw InvariantError(where + "correspondent_block out of range");
    }
}

std::vector<std::int64_t> GroupDataset::relevant_primes() const { return nt::prime_factors(table->group_order); }

PrimeData GroupDataset::prime_data(std::int64_t p) const {
    auto it = primes.find(p);
    if (it != primes.end()) return it->second;
    if (!nt::is_prime(p) || table->group_order % p == 0)
        throw std::out_of_range(name() + ": no data for p=" + std::to_string(p));
    PrimeData pd;
    pd.brauer = std::make_shared<const BrauerData>(BrauerData::coprime(*table, p));
    SectionData sec;
    sec.u_class = 0;
    sec.centralizer = table;
    sec.centralizer_brauer = pd.brauer;
    sec.fusion.resize(table->num_classes());
    std::iota(sec.fusion.begin(), sec.fusion.end(), 0);
    sec.u_times = sec.fusion;
    for (int b = 0; b < pd.brauer->num_blocks(); ++b) sec.correspondent_block[b] = b;
    pd.sections.push_back(std::move(sec));
    return pd;
}

// ---------------------------------------------------------------------------
// JSON ingestion

namespace {

using nlohmann::json;

// A JSON value together with its field path for error messages.
struct Node {
    const json* jp;
    std::string path;

    Node(const json& j, std::string p) : jp(&j), path(std::move(p)) {}
    const json& j() const { return *jp; }

    Node at(const std::string& key) const {
        if (!j().is_object()) throw SchemaError(path, "expected an object");
        auto it = j().find(key);
        if (it == j().end()) throw SchemaError(join(key), "missing field");
        return Node(*it, join(key));
    }
    bool has(const std::string& key) const { return j().is_object() && j().contains(key); }
    Node at(std::size_t i) const { return Node(j().at(i), path + "[" + std::to_string(i) + "]"); }
    std::string join(const std::string& key) const { return path.empty() ? key : path + "." + key; }

    std::size_t array_size() const {
        if (!j().is_array()) throw SchemaError(path, "expected an array");
        return j().size();
    }
    std::int64_t integer() const {
        if (!j().is_number_integer()) throw SchemaError(path, "expected an integer");
        return j().get<std::int64_t>();
    }
    std::int64_t positive() const {
        std::int64_t v = integer();
        if (v < 1) throw SchemaError(path, "expected a positive integer");
        return v;
    }
    int index(std::int64_t bound) const {
        std::int64_t v = integer();
        if (v < 0 || v >= bound)
            throw SchemaError(path, "index " + std::to_string(v) + " out of range [0," + std::to_string(bound) + ")");
        return static_cast<int>(v);
    }
    std::string string() const {
        if (!j().is_string()) throw SchemaError(path, "expected a string");
        return j().get<std::string>();
    }
    bool boolean() const {
        if (!j().is_boolean()) throw SchemaError(path, "expected a boolean");
        return j().get<bool>();
    }
    CycloNum cyclo() const {
        try {
            return parse_cyclo(string());
        } catch (const ParseError& e) {
            throw SchemaError(path, e.what());
        }
    }
    std::vector<int> indices(std::int64_t bound) const {
        std::vector<int> out(array_size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i).index(bound);
        return out;
    }
    std::vector<std::int64_t> integers() const {
        std::vector<std::int64_t> out(array_size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i).integer();
        return out;
    }
    Matrix<CycloNum> cyclo_matrix(std::size_t cols) const {
        Matrix<CycloNum> m(array_size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            Node row = at(i);
            if (row.array_size() != cols)
                throw SchemaError(row.path, "expected " + std::to_string(cols) + " entries");
            for (std::size_t k = 0; k < cols; ++k) m[i].push_back(row.at(k).cyclo());
        }
        return m;
    }
    // object with decimal-integer keys
    std::vector<std::pair<std::int64_t, Node>> int_keyed() const {
        if (!j().is_object()) throw SchemaError(path, "expected an object");
        std::vector<std::pair<std::int64_t, Node>> out;
        for (auto it = j().begin(); it != j().end(); ++it) {
            std::int64_t k = 0;
            std::size_t used = 0;
            try {
                k = std::stoll(it.key(), &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != it.key().size()) throw SchemaError(join(it.key()), "key is not an integer");
            out.emplace_back(k, Node(it.value(), join(it.key())));
        }
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }
};

TablePtr parse_table(const Node& n) {
    auto t = std::make_shared<CharTable>();
    t->group_name = n.at("name").string();
    t->group_order = n.at("order").positive();
    t->exponent = n.at("exponent").positive();
    Node cls = n.at("classes");
    const std::size_t k = cls.array_size();
    if (k == 0) throw SchemaError(cls.path, "empty class list");
    for (std::size_t i = 0; i < k; ++i) {
        Node c = cls.at(i);
        ClassData cd;
        cd.name = c.has("name") ? c.at("name").string() : "";
        cd.size = c.at("size").positive();
        cd.element_order = c.at("order").positive();
        if (!c.has("powermaps"))
            throw SchemaError(c.join("powermaps"), "missing power maps for class " + (cd.name.empty() ? std::to_string(i) : cd.name));
        for (const auto& [q, img] : c.at("powermaps").int_keyed()) {
            if (!nt::is_prime(q)) throw SchemaError(img.path, "power map key is not a prime");
            cd.power_maps[q] = img.index(static_cast<std::int64_t>(k));
        }
        t->classes.push_back(std::move(cd));
    }
    Node irr = n.at("irreducibles");
    t->irreducibles = irr.cyclo_matrix(k);
    t->validate();
    return t;
}

BrauerPtr parse_brauer(const Node& n, const CharTable& table, std::int64_t p) {
    auto bd = std::make_shared<BrauerData>();
    bd->p = p;
    bd->regular_classes = n.at("regular_classes").indices(table.num_classes());
    bd->ibr = n.at("ibr").cyclo_matrix(bd->regular_classes.size());
    Node d = n.at("decomposition");
    for (std::size_t i = 0; i < d.array_size(); ++i) bd->decomposition.push_back(d.at(i).integers());
    const auto nirr = static_cast<std::int64_t>(table.num_irr());
    for (std::int64_t b : n.at("block_of_irr").indices(nirr)) bd->block_of_irr.push_back(static_cast<int>(b));
    for (std::int64_t b : n.at("block_of_ibr").indices(nirr)) bd->block_of_ibr.push_back(static_cast<int>(b));
    bd->validate(table);
    return bd;
}

std::map<int, int> parse_block_map(const Node& n) {
    std::map<int, int> m;
    for (const auto& [k, v] : n.int_keyed()) m[static_cast<int>(k)] = static_cast<int>(v.integer());
    return m;
}

void require_divides(const CharTable& t, std::int64_t ambient, const std::string& path) {
    if (ambient % t.exponent != 0)
        throw SchemaError(path, "exponent " + std::to_string(t.exponent) + " does not divide the ambient order " +
                                    std::to_string(ambient));
}

}  // namespace

DatasetPtr parse_dataset(const std::string& json_text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(origin, std::string("invalid JSON: ") + e.what());
    }
    Node root(doc, "");
    if (!doc.is_object()) throw SchemaError(origin, "top level is not an object");
    if (root.at("format").integer() != 1) throw SchemaError("format", "unsupported format version");

    auto ds = std::make_shared<GroupDataset>();
    ds->source = origin;
    ds->table = parse_table(root);
    const CharTable& g = *ds->table;
    ds->ambient_order = g.exponent;

    Node primes = root.at("primes");
    for (const auto& [p, pn] : primes.int_keyed()) {
        if (!nt::is_prime(p)) throw SchemaError(pn.path, "key is not a prime");
        if (g.group_order % p != 0) throw SchemaError(pn.path, "prime does not divide the group order");
        PrimeData pd;
        pd.brauer = parse_brauer(pn, g, p);
        Node secs = pn.at("sections");
        for (std::size_t i = 0; i < secs.array_size(); ++i) {
            Node s = secs.at(i);
            SectionData sec;
            sec.u_class = s.at("u_class").index(g.num_classes());
            if (!s.has("centralizer")) {
                if (sec.u_class != 0) throw SchemaError(s.join("centralizer"), "missing field");
                sec.centralizer = ds->table;
                sec.centralizer_brauer = pd.brauer;
                sec.fusion.resize(g.num_classes());
                std::iota(sec.fusion.begin(), sec.fusion.end(), 0);
                sec.u_times = sec.fusion;
                for (int b = 0; b < pd.brauer->num_blocks(); ++b) sec.correspondent_block[b] = b;
            } else {
                Node cn = s.at("centralizer");
                sec.centralizer = parse_table(cn);
                require_divides(*sec.centralizer, ds->ambient_order, cn.path);
                Node cp = cn.at("primes");
                if (!cp.has(std::to_string(p))) throw SchemaError(cp.join(std::to_string(p)), "missing field");
                sec.centralizer_brauer = parse_brauer(cp.at(std::to_string(p)), *sec.centralizer, p);
                const auto nc = static_cast<std::int64_t>(sec.centralizer->num_classes());
                sec.fusion = s.at("fusion").indices(g.num_classes());
                sec.u_in_centralizer = s.at("u_in_centralizer").index(nc);
                sec.u_times = s.at("u_times").indices(nc);
                sec.correspondent_block = parse_block_map(s.at("correspondent_block"));
            }
            sec.validate(g, p);
            for (const auto& [cb, gb] : sec.correspondent_block)
                if (gb >= pd.brauer->num_blocks())
                    throw InvariantError(g.group_name + " p=" + std::to_string(p) + ": correspondent block " +
                                         std::to_string(gb) + " does not exist");
            pd.sections.push_back(std::move(sec));
        }
        std::vector<int> want, got;
        for (int c = 0; c < g.num_classes(); ++c)
            if (g.is_p_element(c, p)) want.push_back(c);
        for (const auto& sec : pd.sections) got.push_back(sec.u_class);
        if (want != got) throw SchemaError(secs.path, "sections must list every p-element class once, in class order");
        ds->primes[p] = std::move(pd);
    }
    for (std::int64_t p : ds->relevant_primes())
        if (!ds->primes.count(p)) throw SchemaError(primes.join(std::to_string(p)), "missing data for a prime dividing the group order");

    if (root.has("subgroups")) {
        Node subs = root.at("subgroups");
        for (std::size_t i = 0; i < subs.array_size(); ++i) {
            Node sn = subs.at(i);
            SubgroupEmbedding emb;
            emb.name = sn.at("name").string();
            emb.group = ds->table;
            emb.subgroup = parse_table(sn.at("table"));
            require_divides(*emb.subgroup, ds->ambient_order, sn.join("table"));
            emb.fusion = sn.at("fusion").indices(g.num_classes());
            if (sn.has("primes")) {
                for (const auto& [p, pn] : sn.at("primes").int_keyed()) {
                    if (!nt::is_prime(p) || !ds->primes.count(p)) throw SchemaError(pn.path, "unknown prime");
                    SubgroupPrimeData spd;
                    spd.brauer = parse_brauer(pn, *emb.subgroup, p);
                    spd.ti = pn.has("ti") && pn.at("ti").boolean();
                    spd.cyclic_defect = pn.has("cyclic_defect") && pn.at("cyclic_defect").boolean();
                    if (pn.has("centralizer_classes"))
                        spd.centralizer_classes = pn.at("centralizer_classes").indices(g.num_classes());
                    if (pn.has("correspondent_block")) spd.correspondent_block = parse_block_map(pn.at("correspondent_block"));
                    for (const auto& [gb, hb] : spd.correspondent_block)
                        if (gb >= ds->primes.at(p).brauer->num_blocks())
                            throw SchemaError(pn.join("correspondent_block"), "block of G out of range");
                    emb.primes[p] = std::move(spd);
                }
            }
            emb.validate();
            ds->subgroups.push_back(std::move(emb));
        }
    }
    return ds;
}

DatasetPtr load_dataset(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path.string(), "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dataset(buf.str(), path.string());
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& dir) {
    const auto path = dir / "manifest.json";
    std::ifstream in(path);
    if (!in) throw SchemaError(path.string(), "cannot open manifest");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path.string(), std::string("invalid JSON: ") + e.what());
    }
    Node root(doc, "");
    if (root.at("format").integer() != 1) throw SchemaError("format", "unsupported format version");
    std::vector<ManifestEntry> out;
    Node groups = root.at("groups");
    for (std::size_t i = 0; i < groups.array_size(); ++i) {
        Node g = groups.at(i);
        ManifestEntry e;
        e.group = g.at("group").string();
        e.file = dir / g.at("file").string();
        e.primes = g.at("primes").integers();
        if (g.has("subgroups")) {
            Node subs = g.at("subgroups");
            for (std::size_t k = 0; k < subs.array_size(); ++k) {
                Node s = subs.at(k);
                ManifestSubgroup ms;
                ms.name = s.at("name").string();
                ms.primes = s.at("primes").integers();
                if (s.has("ti")) ms.ti = s.at("ti").integers();
                e.subgroups.push_back(std::move(ms));
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace pcond
