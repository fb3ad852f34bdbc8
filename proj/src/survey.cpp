#include "altan/survey.hpp"

#include <algorithm>
#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "json.hpp"

#include "altan/exact_linalg.hpp"
#include "altan/kernel.hpp"

namespace altan {

const char* const kSurveyCodeVersion = "altan-survey-v1";

Family family_from_string(const std::string& name) {
    if (name == "benzenoid") return Family::benzenoid;
    if (name == "catafused") return Family::catafused;
    if (name == "convex") return Family::convex;
    if (name == "ingested") return Family::ingested;
    throw Error("unknown family \"" + name + "\" (benzenoid, catafused, convex, ingested)");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::benzenoid: return "benzenoid";
        case Family::catafused: return "catafused";
        case Family::convex: return "convex";
        case Family::ingested: return "ingested";
    }
    return "?";
}

TableFormat table_format_from_string(const std::string& name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "markdown" || name == "md") return TableFormat::markdown;
    if (name == "json") return TableFormat::json;
    throw Error("unknown table format \"" + name + "\" (csv, markdown, json)");
}

long long SurveyTable::total() const {
    long long t = 0;
    for (const auto& [size, row] : cells)
        for (const auto& [cell, count] : row) t += count;
    return t;
}

namespace {

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

SurveyRecord survey_patch(const PlanarPatch& patch, const std::string& family,
                          const std::string& id, bool no_shortcut) {
    SurveyRecord r;
    r.family = family;
    r.id = id;

    for (int i = 0; i < static_cast<int>(patch.faces.size()); ++i) {
        if (i == patch.outer) continue;
        switch (patch.faces[i].size()) {
            case 5: ++r.pi; break;
            case 6: ++r.eps; break;
            case 7: ++r.sigma; break;
            default: break;
        }
    }

    AttachmentSet H = natural_attachment_set(patch);
    r.h = H.h();
    r.h_even = (r.h % 2 == 0);

    BoundaryProfile prof = boundary_profile(patch);
    r.bay = prof.b;

    AltanPair pair = make_altan_pair(patch.graph, H);
    r.parent_nullity = nullity(patch.graph);
    if (!r.h_even && !no_shortcut) {
        r.altan_nullity = r.parent_nullity; // odd attachments preserve nullity
        r.shortcut = true;
    } else {
        r.altan_nullity = nullity(altan(pair).graph);
    }
    r.excess = r.altan_nullity - r.parent_nullity;

    if (r.h_even) {
        if (r.excess < 0 || r.excess > 2)
            throw TheoremViolation("survey_patch: instance " + id + " has excess " +
                                   std::to_string(r.excess) + " with even h=" +
                                   std::to_string(r.h));
    } else if (r.excess != 0) {
        throw TheoremViolation("survey_patch: instance " + id + " has nonzero excess " +
                               std::to_string(r.excess) + " with odd h=" + std::to_string(r.h));
    }

    if (is_bipartite(patch.graph)) {
        int n2 = 0, n3b = 0;
        for (int d : prof.code) (d == 2 ? n2 : n3b)++;
        int n3 = 0;
        for (int v = 0; v < patch.graph.n; ++v)
            if (patch.graph.degree(v) == 3) ++n3;
        const int n3i = n3 - n3b;
        const int par = r.h % 2;
        bool ok = (r.h == n2) && (static_cast<int>(prof.code.size()) % 2 == 0) &&
                  (n3 % 2 == 0) && (n3i % 2 == par) && (n3b % 2 == par) &&
                  (patch.graph.n % 2 == par) && (r.parent_nullity % 2 == par);
        if (!ok)
            throw TheoremViolation("survey_patch: parity chain broken for bipartite instance " +
                                   id);
    }
    return r;
}

namespace {

struct WorkerShared {
    std::mutex mutex;
    std::condition_variable can_push, can_pop;
    std::deque<std::vector<Polyhex>> queue;
    bool closed = false;
    size_t limit = 64;
    std::exception_ptr failure;

    void push(std::vector<Polyhex>&& batch) {
        std::unique_lock<std::mutex> lock(mutex);
        can_push.wait(lock, [&] { return queue.size() < limit || failure; });
        if (failure) return;
        queue.push_back(std::move(batch));
        can_pop.notify_one();
    }
    bool pop(std::vector<Polyhex>& out) {
        std::unique_lock<std::mutex> lock(mutex);
        can_pop.wait(lock, [&] { return !queue.empty() || closed || failure; });
        if (failure || queue.empty()) return false;
        out = std::move(queue.front());
        queue.pop_front();
        can_push.notify_one();
        return true;
    }
    void close() {
        std::lock_guard<std::mutex> lock(mutex);
        closed = true;
        can_pop.notify_all();
    }
    void fail(std::exception_ptr e) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!failure) failure = e;
        can_pop.notify_all();
        can_push.notify_all();
    }
};

struct Partial {
    std::map<SizeKey, std::map<CellKey, long long>> cells;
    std::vector<SurveyRecord> records;
};

void process_polyhex(const Polyhex& hex, const std::string& family, const SurveyOptions& opt,
                     const std::function<bool(const SurveyRecord&)>& record_filter,
                     Partial& out) {
    PlanarPatch patch = to_patch(hex);
    std::string id = boundary_edge_code(patch);
    SurveyRecord r = survey_patch(patch, family, id, opt.no_shortcut);

    if (r.h_even && opt.stability_percent > 0 &&
        fnv1a(id) % 100 < static_cast<uint64_t>(opt.stability_percent)) {
        AltanPair pair = make_altan_pair(patch.graph, natural_attachment_set(patch));
        if (!verify_iterated_stability(pair, 2))
            throw TheoremViolation("survey: iterated altan changed nullity for " + id);
    }

    out.cells[{r.pi, r.sigma, r.eps}][{r.parent_nullity, r.altan_nullity, r.h_even}]++;
    if (opt.collect_records || (record_filter && record_filter(r)))
        out.records.push_back(std::move(r));
}

void merge_partial(SurveyTable& table, Partial&& part) {
    for (auto& [size, row] : part.cells)
        for (auto& [cell, count] : row) table.cells[size][cell] += count;
    for (auto& r : part.records) table.records.push_back(std::move(r));
}

void survey_stream(Family family, int eps, const SurveyOptions& opt,
                   const std::function<bool(const SurveyRecord&)>& record_filter,
                   SurveyTable& table) {
    const std::string fam = family_name(family);
    const int workers = std::max(1, opt.workers);

    auto enumerate = [&](const std::function<void(const Polyhex&)>& visit) {
        if (family == Family::benzenoid)
            enumerate_benzenoids(eps, visit, opt.cap);
        else
            enumerate_catafused(eps, visit, opt.cap);
    };

    if (workers == 1) {
        Partial part;
        enumerate([&](const Polyhex& hex) { process_polyhex(hex, fam, opt, record_filter, part); });
        merge_partial(table, std::move(part));
        return;
    }

    WorkerShared shared;
    std::vector<Partial> partials(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                std::vector<Polyhex> batch;
                while (shared.pop(batch))
                    for (const Polyhex& hex : batch)
                        process_polyhex(hex, fam, opt, record_filter, partials[w]);
            } catch (...) {
                shared.fail(std::current_exception());
            }
        });
    }

    const size_t kBatch = 128;
    try {
        std::vector<Polyhex> batch;
        batch.reserve(kBatch);
        enumerate([&](const Polyhex& hex) {
            batch.push_back(hex);
            if (batch.size() == kBatch) {
                shared.push(std::move(batch));
                batch.clear();
                batch.reserve(kBatch);
            }
        });
        if (!batch.empty()) shared.push(std::move(batch));
    } catch (...) {
        shared.fail(std::current_exception());
    }
    shared.close();
    for (auto& t : pool) t.join();
    if (shared.failure) std::rethrow_exception(shared.failure);

    for (auto& part : partials) merge_partial(table, std::move(part));
}

SurveySlice slice_of(const SurveyTable& table) {
    SurveySlice slice;
    slice.cells = table.cells;
    for (const auto& r : table.records)
        if (r.excess > 0) slice.notable.push_back(r);
    return slice;
}

} // namespace

SurveyTable run_survey(Family family, int eps_min, int eps_max, const SurveyOptions& opt,
                       const std::function<bool(const SurveyRecord&)>& record_filter) {
    if (family == Family::ingested)
        throw Error("run_survey: ingested families go through run_survey_ingested");
    if (eps_min < 1 || eps_max < eps_min) throw Error("run_survey: bad eps range");

    SurveyTable table;
    table.family = family_name(family);

    if (family == Family::convex) {
        auto all = enumerate_convex(eps_max);
        Partial part;
        for (const auto& [hex, spec] : all) {
            if (hex.size() < eps_min) continue;
            process_polyhex(hex, table.family, opt, record_filter, part);
        }
        merge_partial(table, std::move(part));
    } else {
        // Caching applies to whole eps slices. A cached slice can rebuild
        // counts and excess>0 records; if per-instance records of every
        // instance are wanted, the cache is bypassed.
        for (int eps = eps_min; eps <= eps_max; ++eps) {
            bool cacheable = !opt.cache_dir.empty() && !opt.collect_records && !record_filter;
            if (cacheable) {
                std::optional<SurveySlice> cached;
                try {
                    cached = cache_load(opt.cache_dir, table.family, eps);
                } catch (const CacheCorrupt&) {
                    cached.reset(); // auto-invalidated; recompute below
                }
                if (cached) {
                    for (auto& [size, row] : cached->cells)
                        for (auto& [cell, count] : row) table.cells[size][cell] += count;
                    continue;
                }
            }
            SurveyTable one;
            one.family = table.family;
            survey_stream(family, eps, opt, record_filter, one);
            if (cacheable) cache_store(opt.cache_dir, table.family, eps, slice_of(one));
            for (auto& [size, row] : one.cells)
                for (auto& [cell, count] : row) table.cells[size][cell] += count;
            for (auto& r : one.records) table.records.push_back(std::move(r));
        }
    }

    if (table.cells.empty())
        throw Error("run_survey: family \"" + table.family + "\" produced no instances");
    std::sort(table.records.begin(), table.records.end(),
              [](const SurveyRecord& a, const SurveyRecord& b) {
                  return std::tie(a.eps, a.pi, a.sigma, a.id) < std::tie(b.eps, b.pi, b.sigma, b.id);
              });
    return table;
}

SurveyTable run_survey_ingested(const std::vector<PlanarPatch>& patches,
                                const SurveyOptions& opt) {
    if (patches.empty()) throw Error("run_survey_ingested: no patches to survey");
    SurveyTable table;
    table.family = "ingested";
    Partial part;
    for (size_t i = 0; i < patches.size(); ++i) {
        SurveyRecord r = survey_patch(patches[i], table.family,
                                      "record:" + std::to_string(i + 1), opt.no_shortcut);
        part.cells[{r.pi, r.sigma, r.eps}][{r.parent_nullity, r.altan_nullity, r.h_even}]++;
        if (opt.collect_records) part.records.push_back(std::move(r));
    }
    merge_partial(table, std::move(part));
    return table;
}

std::vector<SurveyRecord> find_extremal(Family family, const ExtremalQuery& query, int eps_max,
                                        const SurveyOptions& opt) {
    if (!query.excess && !query.jump) throw Error("find_extremal: empty query");
    auto matches = [&](const SurveyRecord& r) {
        if (query.excess && r.excess != *query.excess) return false;
        if (query.jump && (r.parent_nullity != query.jump->first ||
                           r.altan_nullity != query.jump->second))
            return false;
        return true;
    };
    for (int eps = 1; eps <= eps_max; ++eps) {
        SurveyOptions local = opt;
        local.cache_dir.clear(); // record filter needs the full stream
        SurveyTable t = run_survey(family, eps, eps, local, matches);
        if (!t.records.empty()) return t.records;
    }
    return {};
}

namespace {

nlohmann::json record_to_json(const SurveyRecord& r) {
    return nlohmann::json{{"family", r.family},
                          {"id", r.id},
                          {"pi", r.pi},
                          {"sigma", r.sigma},
                          {"eps", r.eps},
                          {"h", r.h},
                          {"h_even", r.h_even},
                          {"parent_nullity", r.parent_nullity},
                          {"altan_nullity", r.altan_nullity},
                          {"excess", r.excess},
                          {"bay", r.bay},
                          {"shortcut", r.shortcut}};
}

SurveyRecord record_from_json(const nlohmann::json& j) {
    SurveyRecord r;
    r.family = j.at("family").get<std::string>();
    r.id = j.at("id").get<std::string>();
    r.pi = j.at("pi").get<int>();
    r.sigma = j.at("sigma").get<int>();
    r.eps = j.at("eps").get<int>();
    r.h = j.at("h").get<int>();
    r.h_even = j.at("h_even").get<bool>();
    r.parent_nullity = j.at("parent_nullity").get<int>();
    r.altan_nullity = j.at("altan_nullity").get<int>();
    r.excess = j.at("excess").get<int>();
    r.bay = j.at("bay").get<int>();
    r.shortcut = j.at("shortcut").get<bool>();
    return r;
}

nlohmann::json cells_to_json(const std::map<SizeKey, std::map<CellKey, long long>>& cells) {
    auto rows = nlohmann::json::array();
    for (const auto& [size, row] : cells) {
        nlohmann::json jr;
        jr["pi"] = size.pi;
        jr["sigma"] = size.sigma;
        jr["eps"] = size.eps;
        auto jcells = nlohmann::json::array();
        for (const auto& [cell, count] : row)
            jcells.push_back({{"parent", cell.parent},
                              {"altan", cell.alt},
                              {"h_even", cell.h_even},
                              {"count", count}});
        jr["cells"] = jcells;
        rows.push_back(jr);
    }
    return rows;
}

std::map<SizeKey, std::map<CellKey, long long>> cells_from_json(const nlohmann::json& rows) {
    std::map<SizeKey, std::map<CellKey, long long>> cells;
    for (const auto& jr : rows) {
        SizeKey size{jr.at("pi").get<int>(), jr.at("sigma").get<int>(), jr.at("eps").get<int>()};
        for (const auto& jc : jr.at("cells")) {
            CellKey cell{jc.at("parent").get<int>(), jc.at("altan").get<int>(),
                         jc.at("h_even").get<bool>()};
            cells[size][cell] = jc.at("count").get<long long>();
        }
    }
    return cells;
}

std::vector<CellKey> ordered_columns(const SurveyTable& t) {
    std::set<CellKey> keys;
    for (const auto& [size, row] : t.cells)
        for (const auto& [cell, count] : row) keys.insert(cell);
    std::vector<CellKey> cols(keys.begin(), keys.end());
    std::sort(cols.begin(), cols.end(), [](const CellKey& a, const CellKey& b) {
        if (a.h_even != b.h_even) return a.h_even > b.h_even; // even columns first
        if (a.parent != b.parent) return a.parent < b.parent;
        return a.alt < b.alt;
    });
    return cols;
}

} // namespace

std::string emit_table(const SurveyTable& t, TableFormat format) {
    if (t.cells.empty()) throw Error("emit_table: empty table");
    std::ostringstream os;
    switch (format) {
        case TableFormat::csv: {
            os << "family,pi,sigma,eps,parent_nullity,altan_nullity,h_parity,count\n";
            for (const auto& [size, row] : t.cells)
                for (const auto& [cell, count] : row)
                    os << t.family << ',' << size.pi << ',' << size.sigma << ',' << size.eps
                       << ',' << cell.parent << ',' << cell.alt << ','
                       << (cell.h_even ? "even" : "odd") << ',' << count << '\n';
            break;
        }
        case TableFormat::markdown: {
            bool show_pi = false, show_sigma = false;
            for (const auto& [size, row] : t.cells) {
                if (size.pi) show_pi = true;
                if (size.sigma) show_sigma = true;
            }
            auto cols = ordered_columns(t);
            os << '|';
            if (show_pi) os << " pi |";
            if (show_sigma) os << " sigma |";
            os << " eps |";
            for (const auto& c : cols) {
                os << ' ' << c.parent << "->" << c.alt;
                if (!c.h_even) os << " (odd h)";
                os << " |";
            }
            os << " total |\n|";
            int ncols = 1 + (show_pi ? 1 : 0) + (show_sigma ? 1 : 0) +
                        static_cast<int>(cols.size()) + 1;
            for (int i = 0; i < ncols; ++i) os << " --- |";
            os << '\n';
            for (const auto& [size, row] : t.cells) {
                os << '|';
                if (show_pi) os << ' ' << size.pi << " |";
                if (show_sigma) os << ' ' << size.sigma << " |";
                os << ' ' << size.eps << " |";
                long long total = 0;
                for (const auto& c : cols) {
                    auto it = row.find(c);
                    long long count = (it == row.end()) ? 0 : it->second;
                    total += count;
                    if (count)
                        os << ' ' << count << " |";
                    else
                        os << "  |";
                }
                os << ' ' << total << " |\n";
            }
            break;
        }
        case TableFormat::json: {
            nlohmann::json j;
            j["family"] = t.family;
            j["rows"] = cells_to_json(t.cells);
            if (!t.records.empty()) {
                auto recs = nlohmann::json::array();
                for (const auto& r : t.records) recs.push_back(record_to_json(r));
                j["records"] = recs;
            }
            os << j.dump(2) << '\n';
            break;
        }
    }
    return os.str();
}

SurveyTable table_from_json(const std::string& text) {
    SurveyTable t;
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        t.family = j.at("family").get<std::string>();
        t.cells = cells_from_json(j.at("rows"));
        if (j.contains("records"))
            for (const auto& jr : j.at("records")) t.records.push_back(record_from_json(jr));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("table_from_json: ") + e.what());
    }
    return t;
}

namespace {

std::string cache_path(const std::string& dir, const std::string& family, int eps,
                       const std::string& version) {
    return dir + "/" + family + "-eps" + std::to_string(eps) + "-" + version + ".json";
}

} // namespace

std::optional<SurveySlice> cache_load(const std::string& dir, const std::string& family, int eps,
                                      const std::string& code_version) {
    std::ifstream in(cache_path(dir, family, eps, code_version));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw CacheCorrupt(std::string("cache_load: unparsable cache file: ") + e.what());
    }
    try {
        if (j.at("version").get<std::string>() != code_version)
            return std::nullopt; // stale code hash is a miss, not corruption
        std::string payload = j.at("payload").dump();
        if (fnv1a(payload) != j.at("checksum").get<uint64_t>())
            throw CacheCorrupt("cache_load: checksum mismatch");
        if (!j.at("complete").get<bool>())
            throw CacheCorrupt("cache_load: incomplete slice");
        SurveySlice slice;
        slice.cells = cells_from_json(j.at("payload").at("rows"));
        for (const auto& jr : j.at("payload").at("notable"))
            slice.notable.push_back(record_from_json(jr));
        return slice;
    } catch (const nlohmann::json::exception& e) {
        throw CacheCorrupt(std::string("cache_load: missing field: ") + e.what());
    }
}

void cache_store(const std::string& dir, const std::string& family, int eps,
                 const SurveySlice& slice, const std::string& code_version) {
    nlohmann::json payload;
    payload["rows"] = cells_to_json(slice.cells);
    auto notable = nlohmann::json::array();
    for (const auto& r : slice.notable) notable.push_back(record_to_json(r));
    payload["notable"] = notable;

    nlohmann::json j;
    j["version"] = code_version;
    j["family"] = family;
    j["eps"] = eps;
    j["payload"] = payload;
    j["checksum"] = fnv1a(payload.dump());
    j["complete"] = true;

    std::string path = cache_path(dir, family, eps, code_version);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw Error("cache_store: cannot write " + tmp);
        out << j.dump();
    }
    std::rename(tmp.c_str(), path.c_str());
}

} // namespace altan
