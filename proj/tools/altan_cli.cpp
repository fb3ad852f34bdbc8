#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "altan/exact_linalg.hpp"
#include "altan/graph.hpp"
#include "altan/kernel.hpp"
#include "altan/patch.hpp"
#include "altan/planar_code.hpp"
#include "altan/polyhex.hpp"
#include "altan/survey.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw altan::Error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw altan::Error("cannot write " + output);
    out << text;
}

std::string resolved_cache_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("ALTAN_CACHE_DIR")) return env;
    return {};
}

altan::IngestResult ingest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw altan::Error("cannot open " + path);
    return altan::read_planar_code(in);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"altan constructions, exact nullities and benzenoid surveys"};
    app.require_subcommand(1);

    std::string family = "benzenoid", format, input, out_path, cache_dir, jump;
    int eps = 6, eps_min = 1, eps_max = 10, workers = 1, cap = altan::kDefaultEnumerationCap;
    int k = 1, kmax = 0, excess = -1;
    bool no_shortcut = false, with_records = false, with_kernel = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--workers", workers, "worker threads");
        cmd->add_option("--cache-dir", cache_dir,
                        "survey cache directory (or env ALTAN_CACHE_DIR)");
        cmd->add_flag("--no-shortcut", no_shortcut, "always recompute odd-h altan nullities");
        cmd->add_option("--cap", cap, "enumeration size cap");
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output", out_path, "write to a file instead of stdout");
    };

    auto* survey = app.add_subcommand("survey", "aggregate nullity jumps over a family");
    survey->add_option("--family", family, "benzenoid|catafused|convex|ingested");
    survey->add_option("--eps", eps, "largest size (hexagon count)");
    survey->add_option("--eps-min", eps_min, "smallest size");
    survey->add_option("--format", format, "csv|markdown|json")->default_val("markdown");
    survey->add_option("--input", input, "planar_code file for --family ingested");
    survey->add_flag("--records", with_records, "include per-instance records (json)");
    add_common(survey);
    add_output(survey);

    auto* extremal = app.add_subcommand("extremal", "smallest instances matching a predicate");
    extremal->add_option("--family", family, "benzenoid|catafused|convex");
    extremal->add_option("--excess", excess, "required excess nullity");
    extremal->add_option("--jump", jump, "required parent:altan nullity pair, e.g. 2:4");
    extremal->add_option("--eps-max", eps_max, "largest size to scan");
    add_common(extremal);
    add_output(extremal);

    auto* altan_cmd = app.add_subcommand("altan", "altan of a JSON graph with attachment");
    altan_cmd->add_option("--input", input, "graph JSON file")->required();
    altan_cmd->add_option("--k", k, "number of altan iterations");
    altan_cmd->add_option("--format", format, "json|dot")->default_val("json");
    add_output(altan_cmd);

    auto* nullity_cmd = app.add_subcommand("nullity", "exact adjacency nullity of a JSON graph");
    nullity_cmd->add_option("--input", input, "graph JSON file")->required();
    nullity_cmd->add_flag("--kernel", with_kernel, "also print an integer kernel basis");
    nullity_cmd->add_option("--format", format, "text|json")->default_val("text");
    add_output(nullity_cmd);

    auto* verify = app.add_subcommand("verify", "check the theorem suite over a family");
    verify->add_option("--family", family, "benzenoid|catafused|convex|ingested");
    verify->add_option("--eps", eps, "largest size");
    verify->add_option("--eps-min", eps_min, "smallest size");
    verify->add_option("--kmax", kmax, "also check iterated stability up to k");
    verify->add_option("--input", input, "planar_code file for --family ingested");
    add_common(verify);

    auto* ingest = app.add_subcommand("ingest", "read a planar_code file");
    ingest->add_option("--input", input, "planar_code file")->required();
    ingest->add_option("--format", format, "summary|bec|json")->default_val("summary");
    add_output(ingest);

    CLI11_PARSE(app, argc, argv);

    try {
        altan::SurveyOptions opt;
        opt.workers = workers;
        opt.no_shortcut = no_shortcut;
        opt.cache_dir = resolved_cache_dir(cache_dir);
        opt.cap = cap;

        if (survey->parsed()) {
            opt.collect_records = with_records;
            altan::SurveyTable table;
            if (survey->count("--input") && !survey->count("--family")) family = "ingested";
            if (family == "ingested") {
                if (input.empty()) throw altan::Error("survey: --family ingested needs --input");
                auto loaded = ingest_file(input);
                if (loaded.skipped)
                    std::cerr << "skipped " << loaded.skipped << " invalid records\n";
                opt.collect_records = with_records;
                table = altan::run_survey_ingested(loaded.patches, opt);
            } else {
                table = altan::run_survey(altan::family_from_string(family), eps_min, eps, opt);
            }
            emit(altan::emit_table(table, altan::table_format_from_string(format)), out_path);
        } else if (extremal->parsed()) {
            altan::ExtremalQuery query;
            if (excess >= 0) query.excess = excess;
            if (!jump.empty()) {
                auto colon = jump.find(':');
                if (colon == std::string::npos)
                    throw altan::Error("extremal: --jump expects parent:altan");
                query.jump = {std::stoi(jump.substr(0, colon)), std::stoi(jump.substr(colon + 1))};
            }
            auto records = altan::find_extremal(altan::family_from_string(family), query,
                                                eps_max, opt);
            altan::SurveyTable t;
            t.family = family;
            t.records = records;
            if (records.empty()) {
                std::cout << "no matching instance up to eps " << eps_max << "\n";
                return 1;
            }
            for (auto& r : records) t.cells[{r.pi, r.sigma, r.eps}][{r.parent_nullity, r.altan_nullity, r.h_even}]++;
            emit(altan::emit_table(t, altan::TableFormat::json), out_path);
        } else if (altan_cmd->parsed()) {
            altan::GraphDocument doc = altan::graph_from_json(slurp(input));
            if (!doc.attachment) throw altan::Error("altan: input JSON lacks an attachment");
            altan::AltanPair pair = altan::make_altan_pair(doc.graph, *doc.attachment);
            pair.level = doc.level;
            altan::AltanPair result = altan::iterated_altan(pair, k);
            if (format == "dot") {
                std::vector<std::string> labels(result.graph.n);
                for (int v = 0; v < result.graph.n; ++v) {
                    if (v >= result.y_range.first && v < result.y_range.second)
                        labels[v] = "y" + std::to_string(v - result.y_range.first + 1);
                    else if (v >= result.x_range.first && v < result.x_range.second)
                        labels[v] = "x" + std::to_string(v - result.x_range.first + 1);
                    else
                        labels[v] = std::to_string(v);
                }
                emit(altan::to_dot(result.graph, &labels), out_path);
            } else {
                emit(altan::to_json({result.graph, result.attachment, result.level}) + "\n",
                     out_path);
            }
        } else if (nullity_cmd->parsed()) {
            altan::GraphDocument doc = altan::graph_from_json(slurp(input));
            int eta = altan::nullity(doc.graph);
            std::ostringstream os;
            if (format == "json") {
                os << "{\n  \"nullity\": " << eta;
                if (with_kernel) {
                    auto basis = altan::kernel_basis(altan::adjacency_matrix(doc.graph));
                    os << ",\n  \"kernel\": [";
                    for (size_t i = 0; i < basis.size(); ++i) {
                        os << (i ? ", [" : "[");
                        for (size_t j = 0; j < basis[i].size(); ++j)
                            os << (j ? ", \"" : "\"") << basis[i][j].get_str() << "\"";
                        os << "]";
                    }
                    os << "]";
                }
                os << "\n}\n";
            } else {
                os << "nullity " << eta << "\n";
                if (with_kernel) {
                    auto basis = altan::kernel_basis(altan::adjacency_matrix(doc.graph));
                    for (const auto& v : basis) {
                        for (size_t j = 0; j < v.size(); ++j)
                            os << (j ? " " : "") << v[j].get_str();
                        os << "\n";
                    }
                }
            }
            emit(os.str(), out_path);
        } else if (verify->parsed()) {
            if (verify->count("--input") && !verify->count("--family")) family = "ingested";
            long long checked = 0;
            auto check_patch = [&](const altan::PlanarPatch& patch, const std::string& id) {
                altan::SurveyRecord r = altan::survey_patch(patch, family, id, true);
                altan::PlanarPatch alt = altan::altan_of_patch(patch);
                altan::FaceCensus census = altan::face_census(patch, alt);
                altan::BoundaryProfile prof = altan::boundary_profile(patch);
                if (census.parent_all_hexagons) {
                    long long f5 =
                        census.f_tilde.count(5) ? census.f_tilde.at(5) : 0;
                    if (prof.n22 != 6 + prof.b || f5 != prof.n22)
                        throw altan::IdentityViolation("verify: pentagon strip count mismatch at " +
                                                       id);
                }
                altan::AltanPair pair =
                    altan::make_altan_pair(patch.graph, altan::natural_attachment_set(patch));
                if (r.h_even) altan::special_vector(altan::altan(pair));
                if (kmax >= 2 && !altan::verify_iterated_stability(pair, kmax))
                    throw altan::TheoremViolation("verify: iterated nullity drifted at " + id);
                ++checked;
            };
            if (family == "ingested") {
                if (input.empty()) throw altan::Error("verify: --family ingested needs --input");
                auto loaded = ingest_file(input);
                for (size_t i = 0; i < loaded.patches.size(); ++i)
                    check_patch(loaded.patches[i], "record:" + std::to_string(i + 1));
            } else if (family == "convex") {
                for (const auto& [hex, spec] : altan::enumerate_convex(eps)) {
                    if (hex.size() < eps_min) continue;
                    altan::PlanarPatch patch = altan::to_patch(hex);
                    check_patch(patch, altan::boundary_edge_code(patch));
                }
            } else {
                auto visit = [&](const altan::Polyhex& hex) {
                    altan::PlanarPatch patch = altan::to_patch(hex);
                    check_patch(patch, altan::boundary_edge_code(patch));
                };
                for (int e = eps_min; e <= eps; ++e) {
                    if (family == "benzenoid")
                        altan::enumerate_benzenoids(e, visit, cap);
                    else
                        altan::enumerate_catafused(e, visit, cap);
                }
            }
            std::cout << "verified " << checked << " instances, 0 violations\n";
        } else if (ingest->parsed()) {
            auto loaded = ingest_file(input);
            std::ostringstream os;
            if (format == "bec") {
                for (const auto& p : loaded.patches) os << altan::boundary_edge_code(p) << "\n";
            } else if (format == "json") {
                altan::SurveyOptions o;
                o.collect_records = true;
                altan::SurveyTable t = altan::run_survey_ingested(loaded.patches, o);
                os << altan::emit_table(t, altan::TableFormat::json);
            } else {
                os << "patches " << loaded.patches.size() << "\nskipped " << loaded.skipped
                   << "\n";
                for (const auto& w : loaded.warnings) os << "warning: " << w << "\n";
            }
            emit(os.str(), out_path);
        }
    } catch (const altan::TheoremViolation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 2;
    } catch (const altan::IdentityViolation& e) {
        std::cerr << "identity violation: " << e.what() << "\n";
        return 2;
    } catch (const altan::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
