#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "altan/patch.hpp"
#include "altan/polyhex.hpp"

namespace altan {

enum class Family { benzenoid, catafused, convex, ingested };

Family family_from_string(const std::string& name);
std::string family_name(Family f);

struct SurveyOptions {
    int workers = 1;
    bool no_shortcut = false;     // recompute altan nullity even for odd h
    std::string cache_dir;        // empty disables caching
    int cap = kDefaultEnumerationCap;
    int stability_percent = 1;    // sampling rate for iterated-stability spot checks
    bool collect_records = false; // keep one record per instance in the table
};

struct SurveyRecord {
    std::string family;
    std::string id; // canonical boundary-edge code for lattice families
    int pi = 0, sigma = 0, eps = 0; // pentagon / heptagon / hexagon counts
    int h = 0;
    bool h_even = false;
    int parent_nullity = 0;
    int altan_nullity = 0;
    int excess = 0;
    int bay = -1;
    bool shortcut = false; // altan nullity inferred via the odd-h theorem
};

struct SizeKey {
    int pi = 0, sigma = 0, eps = 0;
    auto operator<=>(const SizeKey&) const = default;
};

struct CellKey {
    int parent = 0;
    int alt = 0;
    bool h_even = true;
    auto operator<=>(const CellKey&) const = default;
};

struct SurveyTable {
    std::string family;
    std::map<SizeKey, std::map<CellKey, long long>> cells;
    std::vector<SurveyRecord> records; // populated when collect_records or a filter is given
    long long total() const;
};

// Full instance pipeline for one patch: attachment, nullities (odd-h
// shortcut unless disabled), bay number, plus the theorem window and the
// bipartite parity chain; violations throw TheoremViolation.
SurveyRecord survey_patch(const PlanarPatch& patch, const std::string& family,
                          const std::string& id, bool no_shortcut);

// Aggregates a generated family over eps_min..eps_max. Deterministic for
// every worker count: counts merge commutatively and records are sorted.
// An optional record filter keeps matching records without keeping all.
SurveyTable run_survey(Family family, int eps_min, int eps_max, const SurveyOptions& opt = {},
                       const std::function<bool(const SurveyRecord&)>& record_filter = nullptr);

SurveyTable run_survey_ingested(const std::vector<PlanarPatch>& patches,
                                const SurveyOptions& opt = {});

struct ExtremalQuery {
    std::optional<int> excess;                // e.g. excess == 2
    std::optional<std::pair<int, int>> jump;  // parent -> altan nullity pair
};

// Scans sizes upward and returns all matches at the first size with any,
// sorted by id.
std::vector<SurveyRecord> find_extremal(Family family, const ExtremalQuery& query, int eps_max,
                                        const SurveyOptions& opt = {});

enum class TableFormat { csv, markdown, json };
TableFormat table_format_from_string(const std::string& name);

std::string emit_table(const SurveyTable& t, TableFormat format);
SurveyTable table_from_json(const std::string& text);

// Survey cache: one JSON file per (family, eps, code version) holding the
// aggregated cells, the excess > 0 records, and an FNV-1a checksum.
// Loading is all-or-nothing; damaged files throw CacheCorrupt.
extern const char* const kSurveyCodeVersion;

struct SurveySlice {
    std::map<SizeKey, std::map<CellKey, long long>> cells;
    std::vector<SurveyRecord> notable; // records with excess > 0
};

std::optional<SurveySlice> cache_load(const std::string& dir, const std::string& family, int eps,
                                      const std::string& code_version = kSurveyCodeVersion);
void cache_store(const std::string& dir, const std::string& family, int eps,
                 const SurveySlice& slice, const std::string& code_version = kSurveyCodeVersion);

} // namespace altan
