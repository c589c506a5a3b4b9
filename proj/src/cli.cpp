#include "pcond/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "pcond/blocks.hpp"
#include "pcond/errors.hpp"
#include "pcond/gendec.hpp"
#include "pcond/isometry.hpp"
#include "pcond/tables.hpp"
#include "pcond/verify.hpp"

namespace pcond::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

const char* const kSynopsis =
    "usage: pcond <validate|conductors|gendec|blocks|verify|isometry-search|isometry-check|restrict-check>\n"
    "             [--corpus DIR] [--group NAME] [--prime P] [--json|--csv] [--jobs N] [subcommand options]\n"
    "Run with --help for more information.\n";

const std::vector<std::string> kChecks = {"gendec-conductor", "max-entry", "projective-invariance", "gendec", "restriction"};

struct Options {
    std::string corpus = "data";
    std::string group;
    std::optional<std::int64_t> prime;
    bool json = false;
    bool csv = false;
    bool all = false;
    std::uint64_t seed = 0;
    int samples = 200;
    int bound = 6;
    int jobs = 0;
    std::vector<std::string> files;
    std::vector<std::string> checks;
    std::string target;
    std::optional<std::int64_t> target_prime;
    int block = 0;
    int target_block = 0;

    Format format() const { return json ? Format::json : csv ? Format::csv : Format::text; }
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// Buffers one text line and writes it without trailing blanks.
class Line {
public:
    explicit Line(std::ostream& out) : out_(out) { buf_ << std::left; }
    ~Line() {
        auto s = buf_.str();
        s.erase(s.find_last_not_of(' ') + 1);
        out_ << s << '\n';
    }
    template <class T>
    Line& operator<<(const T& v) {
        buf_ << v;
        return *this;
    }
    Line& operator<<(decltype(std::setw(0)) w) {
        buf_ << w;
        return *this;
    }

private:
    std::ostream& out_;
    std::ostringstream buf_;
};

template <class T>
std::string list_text(const std::vector<T>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

class Corpus {
public:
    explicit Corpus(std::filesystem::path dir) : dir_(std::move(dir)), entries_(read_manifest(dir_)) {}

    const std::vector<ManifestEntry>& entries() const { return entries_; }

    const ManifestEntry& entry(const std::string& group) const {
        for (const auto& e : entries_)
            if (e.group == group) return e;
        throw UsageError("unknown group '" + group + "' in corpus " + dir_.string());
    }

    DatasetPtr load(const std::string& group) {
        auto it = cache_.find(group);
        if (it != cache_.end()) return it->second;
        auto ds = load_dataset(entry(group).file);
        if (ds->name() != group)
            throw SchemaError(entry(group).file.string(), "group name '" + ds->name() + "' differs from manifest");
        return cache_[group] = ds;
    }

private:
    std::filesystem::path dir_;
    std::vector<ManifestEntry> entries_;
    std::map<std::string, DatasetPtr> cache_;
};

std::string require_group(const Options& o) {
    if (o.group.empty()) throw UsageError("--group is required");
    return o.group;
}

std::vector<std::int64_t> primes_for(const Options& o, const GroupDataset& ds) {
    if (o.prime) return {*o.prime};
    return ds.relevant_primes();
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<std::pair<std::string, std::filesystem::path>> todo;
    std::optional<Corpus> corpus;
    if (!o.files.empty()) {
        for (const auto& f : o.files) todo.emplace_back("", f);
    } else {
        corpus.emplace(o.corpus);
        for (const auto& e : corpus->entries())
            if (o.group.empty() || e.group == o.group) todo.emplace_back(e.group, e.file);
        if (!o.group.empty() && todo.empty()) corpus->entry(o.group);
    }
    json results = json::array();
    int failed = 0;
    for (const auto& [group, file] : todo) {
        std::string error;
        std::string name = group;
        try {
            auto ds = load_dataset(file);
            name = ds->name();
            if (!group.empty()) {
                const auto& e = corpus->entry(group);
                if (ds->name() != group) throw SchemaError(file.string(), "group name '" + ds->name() + "' differs from manifest");
                if (ds->relevant_primes() != e.primes)
                    throw SchemaError(file.string(), "manifest primes " + list_text(e.primes) +
                                                         " differ from the primes dividing |G|");
                for (const auto& ms : e.subgroups) {
                    auto sub = std::find_if(ds->subgroups.begin(), ds->subgroups.end(),
                                            [&](const SubgroupEmbedding& s) { return s.name == ms.name; });
                    if (sub == ds->subgroups.end())
                        throw SchemaError(file.string(), "manifest subgroup '" + ms.name + "' missing");
                    for (auto p : ms.primes) {
                        auto pd = sub->primes.find(p);
                        if (pd == sub->primes.end())
                            throw SchemaError(file.string(), "subgroup " + ms.name + " has no data at p=" + std::to_string(p));
                        bool flagged = std::find(ms.ti.begin(), ms.ti.end(), p) != ms.ti.end();
                        if (flagged != pd->second.ti)
                            throw SchemaError(file.string(), "subgroup " + ms.name + " TI flag at p=" + std::to_string(p) +
                                                                 " differs from manifest");
                    }
                }
            }
            for (auto p : ds->relevant_primes()) partition_blocks(*ds->table, *ds->prime_data(p).brauer);
        } catch (const std::exception& e) {
            error = e.what();
        }
        if (!error.empty()) ++failed;
        switch (o.format()) {
            case Format::json:
                results.push_back({{"group", name}, {"file", file.string()}, {"ok", error.empty()}, {"error", error}});
                break;
            case Format::csv:
                if (results.empty()) out << "group,file,ok,error\n";
                results.push_back(nullptr);
                out << csv_field(name) << ',' << csv_field(file.string()) << ',' << (error.empty() ? "true" : "false")
                    << ',' << csv_field(error) << '\n';
                break;
            case Format::text:
                if (error.empty())
                    out << "ok     " << name << "  " << file.string() << '\n';
                else
                    err << "error  " << file.string() << ": " << error << '\n';
        }
    }
    if (o.format() == Format::json) out << results.dump(1) << '\n';
    return failed ? kDataError : kOk;
}

// ---------------------------------------------------------------------------
// conductors

int cmd_conductors(const Options& o, std::ostream& out) {
    const auto group = require_group(o);
    Corpus corpus(o.corpus);
    auto ds = corpus.load(group);
    const auto& t = ds->table;
    auto primes = primes_for(o, *ds);
    json rows = json::array();
    if (o.format() == Format::csv) {
        out << "group,chi,degree,conductor";
        for (auto p : primes) out << ",c_" << p;
        out << '\n';
    } else if (o.format() == Format::text) {
        out << t->group_name << '\n';
        Line line(out);
        line << std::setw(6) << "chi" << std::setw(8) << "degree" << std::setw(6) << "c";
        for (auto p : primes) line << std::setw(6) << ("c_" + std::to_string(p));
    }
    for (int i = 0; i < t->num_irr(); ++i) {
        auto chi = ClassFunction::irreducible(t, i);
        auto c = char_conductor(chi);
        std::vector<std::int64_t> parts;
        for (auto p : primes) parts.push_back(char_conductor(chi, p));
        switch (o.format()) {
            case Format::json: {
                json row = {{"chi", i}, {"degree", t->degree(i)}, {"conductor", c}};
                json pp = json::object();
                for (std::size_t k = 0; k < primes.size(); ++k) pp[std::to_string(primes[k])] = parts[k];
                row["p_parts"] = pp;
                rows.push_back(row);
                break;
            }
            case Format::csv:
                out << t->group_name << ',' << i << ',' << t->degree(i) << ',' << c;
                for (auto v : parts) out << ',' << v;
                out << '\n';
                break;
            case Format::text: {
                Line line(out);
                line << std::setw(6) << i << std::setw(8) << t->degree(i) << std::setw(6) << c;
                for (auto v : parts) line << std::setw(6) << v;
            }
        }
    }
    if (o.format() == Format::json) out << json{{"group", t->group_name}, {"characters", rows}}.dump(1) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// gendec

std::int64_t require_prime(const Options& o) {
    if (!o.prime) throw UsageError("--prime is required");
    if (*o.prime < 2) throw UsageError("--prime must be a prime");
    for (std::int64_t d = 2; d * d <= *o.prime; ++d)
        if (*o.prime % d == 0) throw UsageError("--prime must be a prime");
    return *o.prime;
}

int cmd_gendec(const Options& o, std::ostream& out) {
    const auto group = require_group(o);
    const auto p = require_prime(o);
    Corpus corpus(o.corpus);
    auto ds = corpus.load(group);
    auto gm = gendec_all(ds, p);
    const auto& t = *ds->table;
    json secs = json::array();
    if (o.format() == Format::csv) out << "group,prime,u,chi,phi,value\n";
    if (o.format() == Format::text) out << t.group_name << " p=" << p << '\n';
    for (const auto& s : gm.sections) {
        const auto& uname = t.classes[s.u_class].name;
        switch (o.format()) {
            case Format::json: {
                json d = json::array();
                for (const auto& row : s.d) {
                    json r = json::array();
                    for (const auto& x : row) r.push_back(x.to_string());
                    d.push_back(r);
                }
                secs.push_back({{"u", uname},
                                {"order", s.u_order},
                                {"centralizer", s.data->centralizer->group_name},
                                {"d", d}});
                break;
            }
            case Format::csv:
                for (std::size_t i = 0; i < s.d.size(); ++i)
                    for (std::size_t j = 0; j < s.d[i].size(); ++j)
                        out << t.group_name << ',' << p << ',' << uname << ',' << i << ',' << j << ','
                            << csv_field(s.d[i][j].to_string()) << '\n';
                break;
            case Format::text: {
                out << "\nu=" << uname << "  |u|=" << s.u_order << "  C_G(u)=" << s.data->centralizer->group_name
                    << "  IBr: " << s.data->centralizer_brauer->num_ibr() << '\n';
                std::size_t width = 4;
                for (const auto& row : s.d)
                    for (const auto& x : row) width = std::max(width, x.to_string().size() + 2);
                for (std::size_t i = 0; i < s.d.size(); ++i) {
                    Line line(out);
                    line << std::setw(6) << ("chi" + std::to_string(i));
                    for (const auto& x : s.d[i]) line << std::setw(static_cast<int>(width)) << x.to_string();
                }
            }
        }
    }
    if (o.format() == Format::json) out << json{{"group", t.group_name}, {"prime", p}, {"sections", secs}}.dump(1) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// blocks

int cmd_blocks(const Options& o, std::ostream& out) {
    const auto group = require_group(o);
    if (o.prime) require_prime(o);
    Corpus corpus(o.corpus);
    auto ds = corpus.load(group);
    const auto& t = *ds->table;
    json all = json::array();
    if (o.format() == Format::csv) out << "group,prime,block,defect,irr,ibr\n";
    for (auto p : primes_for(o, *ds)) {
        const auto pd = ds->prime_data(p);
        const auto blocks = partition_blocks(t, *pd.brauer);
        if (o.format() == Format::text) out << t.group_name << " p=" << p << ": " << blocks.size() << " blocks\n";
        json bj = json::array();
        for (const auto& b : blocks) {
            switch (o.format()) {
                case Format::json:
                    bj.push_back({{"id", b.id}, {"defect", b.defect}, {"irr", b.irr}, {"ibr", b.ibr}});
                    break;
                case Format::csv:
                    out << t.group_name << ',' << p << ',' << b.id << ',' << b.defect << ',' << csv_field(list_text(b.irr))
                        << ',' << csv_field(list_text(b.ibr)) << '\n';
                    break;
                case Format::text:
                    out << "  B" << b.id << "  defect " << b.defect << "  irr " << list_text(b.irr) << "  ibr "
                        << list_text(b.ibr) << '\n';
            }
        }
        all.push_back({{"prime", p}, {"blocks", bj}});
    }
    if (o.format() == Format::json) out << json{{"group", t.group_name}, {"primes", all}}.dump(1) << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// verify / restrict-check

std::vector<VerificationReport> run_checks(const DatasetPtr& ds, std::int64_t p, const std::vector<std::string>& checks,
                                           const Options& o) {
    auto gm = gendec_all(ds, p);
    std::vector<VerificationReport> out;
    for (const auto& c : checks) {
        if (c == "gendec-conductor")
            out.push_back(gendec_conductor_report(gm, o.seed, o.samples));
        else if (c == "max-entry")
            out.push_back(max_entry_report(gm));
        else if (c == "projective-invariance")
            out.push_back(projective_report(gm));
        else if (c == "gendec")
            out.push_back(gendec_report(gm));
        else if (c == "restriction")
            out.push_back(check_restriction_props(gm));
    }
    return out;
}

json report_json(const VerificationReport& r) {
    json recs = json::array();
    for (const auto& x : r.records)
        recs.push_back({{"character", x.character},
                        {"lhs", x.lhs},
                        {"rhs", x.rhs},
                        {"witness", x.witness},
                        {"pass", x.pass}});
    return {{"check", r.check_name}, {"group", r.group}, {"prime", r.prime}, {"status", r.status},
            {"note", r.note},        {"pass", r.pass()}, {"records", recs}};
}

int print_reports(const std::vector<VerificationReport>& reports, const Options& o, bool detail, std::ostream& out) {
    int failed = 0;
    for (const auto& r : reports) failed += !r.pass();
    switch (o.format()) {
        case Format::json: {
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            out << json{{"seed", o.seed}, {"pass", failed == 0}, {"reports", arr}}.dump(1) << '\n';
            break;
        }
        case Format::csv:
            out << "group,prime,check,status,pass,records,failed\n";
            for (const auto& r : reports) {
                auto bad = std::count_if(r.records.begin(), r.records.end(), [](const CheckRecord& x) { return !x.pass; });
                out << csv_field(r.group) << ',' << r.prime << ',' << r.check_name << ',' << r.status << ','
                    << (r.pass() ? "true" : "false") << ',' << r.records.size() << ',' << bad << '\n';
            }
            break;
        case Format::text:
            for (const auto& r : reports) {
                out << std::left << std::setw(9) << r.group << std::setw(5) << ("p=" + std::to_string(r.prime))
                    << std::setw(23) << r.check_name;
                if (r.status != "checked") {
                    out << "n/a   " << r.note << '\n';
                    continue;
                }
                out << (r.pass() ? "pass  " : "FAIL  ") << r.records.size() << " records\n";
                for (const auto& x : r.records) {
                    if (x.pass && !detail) continue;
                    out << "    " << (x.pass ? "ok   " : "FAIL ") << x.character << ": " << x.lhs << " | " << x.rhs;
                    if (!x.witness.empty()) out << "  [" << x.witness << "]";
                    out << '\n';
                }
            }
            out << "summary: " << reports.size() << " reports, " << failed << " failed\n";
    }
    return failed ? kCheckFailed : kOk;
}

int run_suite(const Options& o, const std::vector<std::string>& checks, bool detail, std::ostream& out) {
    if (o.group.empty() && !o.all) throw UsageError("give --group NAME or --all");
    if (o.prime) require_prime(o);
    Corpus corpus(o.corpus);
    std::vector<std::pair<DatasetPtr, std::int64_t>> tasks;
    for (const auto& e : corpus.entries()) {
        if (!o.group.empty() && e.group != o.group) continue;
        auto ds = corpus.load(e.group);
        if (o.prime && o.group.empty() && std::find(e.primes.begin(), e.primes.end(), *o.prime) == e.primes.end())
            continue;
        for (auto p : primes_for(o, *ds)) tasks.emplace_back(ds, p);
    }
    if (!o.group.empty() && tasks.empty()) corpus.entry(o.group);

    std::vector<std::vector<VerificationReport>> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < tasks.size();) {
            try {
                results[i] = run_checks(tasks[i].first, tasks[i].second, checks, o);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned n = o.jobs > 0 ? static_cast<unsigned>(o.jobs) : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<VerificationReport> flat;
    for (auto& r : results)
        for (auto& x : r) flat.push_back(std::move(x));
    return print_reports(flat, o, detail, out);
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::vector<std::string> checks = o.checks.empty() ? kChecks : o.checks;
    return run_suite(o, checks, false, out);
}

int cmd_restrict(const Options& o, std::ostream& out) { return run_suite(o, {"restriction"}, true, out); }

// ---------------------------------------------------------------------------
// isometry-search / isometry-check

json cert_object(const IsometryCandidate& c) { return json::parse(certificate_json(c)); }

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    const auto group = require_group(o);
    const auto p = require_prime(o);
    Corpus corpus(o.corpus);
    auto src = corpus.load(group);
    auto dst = corpus.load(o.target);
    const auto q = o.target_prime.value_or(p);
    const auto a = block_ref(*src, p, o.block);
    const auto b = block_ref(*dst, q, o.target_block);
    if (a.size() != b.size())
        throw UsageError("blocks have " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " characters");
    std::vector<IsometryCandidate> found;
    try {
        found = search_perfect_isometries(a, b, SearchOptions{o.bound, o.jobs});
    } catch (const SearchRefused& e) {
        err << "refused: " << e.what() << '\n';
        return kUsageError;
    }
    bool ok = !found.empty();
    std::vector<std::pair<bool, bool>> flags;
    for (const auto& c : found) {
        bool cp = check_conductor_preservation(c, p).ok && check_conductor_preservation(c, q).ok;
        bool l0 = check_l0_preservation(c, p);
        ok = ok && cp && l0 && check_isometry(c);
        flags.emplace_back(cp, l0);
    }
    const auto total = search_space(a.size());
    switch (o.format()) {
        case Format::json: {
            json arr = json::array();
            for (std::size_t i = 0; i < found.size(); ++i) {
                auto c = cert_object(found[i]);
                c["conductor_preserved"] = flags[i].first;
                c["l0_preserved"] = flags[i].second;
                arr.push_back(c);
            }
            out << json{{"candidates", total}, {"found", found.size()}, {"isometries", arr}}.dump(1) << '\n';
            break;
        }
        case Format::csv:
            out << "index,permutation,signs,conductor_preserved,l0_preserved\n";
            for (std::size_t i = 0; i < found.size(); ++i)
                out << i << ',' << csv_field(list_text(found[i].permutation)) << ','
                    << csv_field(list_text(found[i].signs)) << ',' << (flags[i].first ? "true" : "false") << ','
                    << (flags[i].second ? "true" : "false") << '\n';
            break;
        case Format::text:
            out << a.group << " p=" << p << " B" << o.block << " -> " << b.group << " p=" << q << " B" << o.target_block
                << ": " << found.size() << " perfect isometries among " << total << " signed bijections\n";
            for (std::size_t i = 0; i < found.size(); ++i)
                out << "  perm " << list_text(found[i].permutation) << "  signs " << list_text(found[i].signs)
                    << "  conductors " << (flags[i].first ? "ok" : "FAIL") << "  L0 " << (flags[i].second ? "ok" : "FAIL")
                    << '\n';
    }
    return ok ? kOk : kCheckFailed;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int cmd_check(const Options& o, std::ostream& out) {
    if (o.files.empty()) throw UsageError("give at least one certificate file");
    Corpus corpus(o.corpus);
    json arr = json::array();
    bool all_ok = true;
    if (o.format() == Format::csv) out << "certificate,isometry,integrality,separation,conductor,l0,perfect\n";
    for (const auto& f : o.files) {
        const auto cert = parse_certificate(read_file(f));
        const auto a = block_ref(*corpus.load(cert.source_group), cert.source_prime, cert.source_block);
        const auto b = block_ref(*corpus.load(cert.target_group), cert.target_prime, cert.target_block);
        IsometryCandidate cand = [&] {
            try {
                return IsometryCandidate::signed_bijection(a, b, cert.permutation, cert.signs);
            } catch (const std::invalid_argument& e) {
                throw SchemaError(f, e.what());
            }
        }();
        auto rep = check_perfection(cand);
        auto cc = check_conductor_preservation(cand, cert.source_prime);
        bool l0 = check_l0_preservation(cand, cert.source_prime);
        bool ok = rep.perfect() && cc.ok && l0;
        all_ok = all_ok && ok;
        std::vector<std::string> wit = rep.witnesses;
        wit.insert(wit.end(), cc.witnesses.begin(), cc.witnesses.end());
        auto yn = [](bool v) { return v ? "ok" : "FAIL"; };
        switch (o.format()) {
            case Format::json:
                arr.push_back({{"certificate", f},
                               {"isometry", rep.is_isometry},
                               {"integrality", rep.integrality_ok},
                               {"separation", rep.separation_ok},
                               {"conductor_preserved", cc.ok},
                               {"l0_preserved", l0},
                               {"perfect", rep.perfect()},
                               {"witnesses", wit}});
                break;
            case Format::csv:
                out << csv_field(f) << ',' << rep.is_isometry << ',' << rep.integrality_ok << ',' << rep.separation_ok
                    << ',' << cc.ok << ',' << l0 << ',' << rep.perfect() << '\n';
                break;
            case Format::text:
                out << f << ": " << a.group << " B" << cert.source_block << " -> " << b.group << " B"
                    << cert.target_block << "  isometry " << yn(rep.is_isometry) << "  integrality "
                    << yn(rep.integrality_ok) << "  separation " << yn(rep.separation_ok) << "  conductors " << yn(cc.ok)
                    << "  L0 " << yn(l0) << "  => " << (rep.perfect() ? "perfect" : "not perfect") << '\n';
                for (const auto& w : wit) out << "    " << w << '\n';
        }
    }
    if (o.format() == Format::json) out << arr.dump(1) << '\n';
    return all_ok ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conductors of characters, generalised decomposition numbers and perfect isometries", "pcond"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;
    app.add_option("--corpus", o.corpus, "corpus directory holding manifest.json")->capture_default_str();
    app.add_option("--group", o.group, "group name from the manifest");
    app.add_option("--prime", o.prime, "prime p");
    auto* fj = app.add_flag("--json", o.json, "JSON output");
    auto* fc = app.add_flag("--csv", o.csv, "CSV output");
    fj->excludes(fc);
    app.add_option("--jobs", o.jobs, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

    auto* validate = app.add_subcommand("validate", "load and validate datasets");
    validate->add_option("files", o.files, "dataset files (default: the whole corpus)");
    auto* conductors = app.add_subcommand("conductors", "c(chi) and its p-parts per irreducible");
    auto* gendec = app.add_subcommand("gendec", "generalised decomposition matrix per p-section");
    auto* blocks = app.add_subcommand("blocks", "p-blocks from central characters");
    auto* verify = app.add_subcommand("verify", "conductor theorem suite");
    verify->add_flag("--all", o.all, "every group and prime in the corpus");
    verify->add_option("--seed", o.seed, "seed for random generalised characters")->capture_default_str();
    verify->add_option("--samples", o.samples, "random generalised characters per block")->capture_default_str();
    verify->add_option("--check", o.checks, "restrict to these checks")->check(CLI::IsMember(kChecks));
    auto* search = app.add_subcommand("isometry-search", "all perfect signed bijections between two blocks");
    search->add_option("--block", o.block, "source block id")->capture_default_str();
    search->add_option("--target", o.target, "target group")->required();
    search->add_option("--target-prime", o.target_prime, "target prime (default: --prime)");
    search->add_option("--target-block", o.target_block, "target block id")->capture_default_str();
    search->add_option("--bound", o.bound, "largest block size searched")->capture_default_str();
    auto* check = app.add_subcommand("isometry-check", "verify isometry certificates");
    check->add_option("certificates", o.files, "certificate files")->required();
    auto* restrict_cmd = app.add_subcommand("restrict-check", "restriction to subgroups");
    restrict_cmd->add_flag("--all", o.all, "every group and prime in the corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kUsageError;
    }

    try {
        if (validate->parsed()) return cmd_validate(o, out, err);
        if (conductors->parsed()) return cmd_conductors(o, out);
        if (gendec->parsed()) return cmd_gendec(o, out);
        if (blocks->parsed()) return cmd_blocks(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (search->parsed()) return cmd_search(o, out, err);
        if (check->parsed()) return cmd_check(o, out);
        if (restrict_cmd->parsed()) return cmd_restrict(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n' << kSynopsis;
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"pcond"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pcond::cli
